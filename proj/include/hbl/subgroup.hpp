#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "hbl/group.hpp"

namespace hbl {

// Subgroup of a finitely generated abelian group. For a finite ambient group
// the canonical representation is the sorted list of dense element ids; in
// every case the subgroup also carries the canonical (Hermite) basis of its
// lift to Z^n, which includes the ambient relation lattice.
class Subgroup {
 public:
  static Subgroup trivial(const FgAbGroup& ambient);
  static Subgroup whole(const FgAbGroup& ambient);
  // Finite ambient: sorted dense ids, must be closed (checked lazily by
  // callers/tests, not here).
  static Subgroup from_ids(FgAbGroup ambient, std::vector<std::uint32_t> ids);
  // Any ambient: rows generate the lift lattice (ambient relations are
  // adjoined automatically).
  static Subgroup from_lift_rows(FgAbGroup ambient, const IntMat& rows);

  const FgAbGroup& ambient() const { return ambient_; }
  bool finite_listed() const { return !ambient_.free_rank(); }
  const std::vector<std::uint32_t>& element_ids() const;
  std::vector<GroupElement> elements() const;

  // 0 means infinite.
  const Int& order() const { return order_; }
  bool is_finite() const { return order_ != 0; }
  bool is_trivial() const { return order_ == 1; }

  std::size_t rank() const;
  const IntMat& lift() const { return lift_hnf_; }

  bool contains(const GroupElement& x) const;
  bool contains_subgroup(const Subgroup& other) const;

  // Deterministic small generating set (possibly empty for the trivial
  // subgroup).
  std::vector<GroupElement> generators() const;

  bool operator==(const Subgroup& o) const;
  bool operator!=(const Subgroup& o) const { return !(*this == o); }

 private:
  FgAbGroup ambient_;
  std::vector<std::uint32_t> elems_;  // finite ambient only; sorted
  IntMat lift_hnf_;
  Int order_ = 1;
};

// Ordering used for witness tie-breaking and canonical lattice listings:
// smaller order first, then lexicographic canonical form.
bool canonical_less(const Subgroup& a, const Subgroup& b);

Subgroup generate(const FgAbGroup& ambient, const std::vector<GroupElement>& gens);
Subgroup kernel(const Homomorphism& phi);
Subgroup image(const Homomorphism& phi);
Subgroup image_subgroup(const Homomorphism& phi, const Subgroup& h);
std::pair<Subgroup, Subgroup> sum_and_intersection(const Subgroup& h1, const Subgroup& h2);
// Full preimage {x : phi(x) in h}, h a subgroup of the codomain.
Subgroup preimage_subgroup(const Homomorphism& phi, const Subgroup& h);
// Elements of finite order.
Subgroup torsion_subgroup(const FgAbGroup& g);

struct Transversal {
  Subgroup subgroup;
  std::vector<GroupElement> representatives;  // one per coset
};
// Requires finite index; representatives are deterministic (lexicographically
// least per coset for finite ambients, lattice-reduced lifts otherwise).
Transversal coset_representatives(const Subgroup& sub);

struct QuotientGroup {
  FgAbGroup group;
  Homomorphism projection;  // ambient -> group
  IntMat lift;              // group coords -> ambient coords, section of projection
};
QuotientGroup quotient_group(const Subgroup& sub);

// Abstract invariant-factor presentation of a subgroup together with the
// embedding back into the ambient group.
struct SubgroupPresentation {
  FgAbGroup group;
  Homomorphism embedding;  // group -> ambient; image is the subgroup
  IntMat gen_matrix;       // ambient dim x t, columns are the generators used
  IntMat gen_projection;   // t -> group coords
};
SubgroupPresentation present_subgroup(const Subgroup& sub);
// Coordinates in the presentation of an ambient element lying in the subgroup.
GroupElement subgroup_coordinates(const SubgroupPresentation& pres,
                                  const GroupElement& x);

std::map<Int, FinAbGroup> primary_decomposition(const FinAbGroup& g);

struct SubgroupLattice {
  FgAbGroup ambient;
  std::vector<Subgroup> subgroups;  // complete, sorted by canonical_less

  std::vector<std::pair<std::size_t, std::size_t>> inclusion_pairs() const;
  const Subgroup& trivial() const { return subgroups.front(); }
  const Subgroup& full() const { return subgroups.back(); }
};

inline constexpr std::int64_t kDefaultMaxOrder = 4096;

// Complete subgroup lattice of a finite group, enumerated per p-primary
// component by breadth-first closure and recombined across primes.
SubgroupLattice enumerate_subgroups(const FinAbGroup& g,
                                    const Int& max_order = kDefaultMaxOrder);

// Independent enumeration used as a test oracle: breadth-first closure over
// the whole group (no primary splitting), seeded with all subgroups generated
// by at most two elements and extended to a fixpoint.
std::vector<std::vector<std::uint32_t>> enumerate_subgroups_oracle(const DenseGroup& dense);

// Test oracle for very small groups: scan all 2^|G| subsets for closure.
std::size_t count_subgroups_bruteforce(const DenseGroup& dense);

}  // namespace hbl
