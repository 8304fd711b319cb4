#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hbl/errors.hpp"
#include "hbl/intmat.hpp"
#include "hbl/numbers.hpp"

namespace hbl {

// Finite abelian group in invariant-factor form: Z_{d_1} x ... x Z_{d_k}
// with 2 <= d_1 | d_2 | ... | d_k. The empty product is the trivial group.
class FinAbGroup {
 public:
  FinAbGroup() : order_(1) {}
  // Accepts any list of moduli >= 1; unit factors are dropped. The remaining
  // chain must already satisfy the divisibility condition (use
  // normalize_presentation for arbitrary cyclic-product input).
  explicit FinAbGroup(std::vector<Int> moduli);

  const std::vector<Int>& moduli() const { return moduli_; }
  const Int& order() const { return order_; }
  bool trivial() const { return moduli_.empty(); }
  std::size_t num_generators() const { return moduli_.size(); }

  bool operator==(const FinAbGroup& o) const { return moduli_ == o.moduli_; }
  bool operator!=(const FinAbGroup& o) const { return !(*this == o); }

  std::string describe() const;  // e.g. "Z2 x Z4", "0"

 private:
  std::vector<Int> moduli_;
  Int order_;
};

// Finitely generated abelian group: Z^free_rank x (torsion part).
// Element coordinates list the free coordinates first.
class FgAbGroup {
 public:
  FgAbGroup() : free_rank_(0) {}
  FgAbGroup(std::size_t free_rank, FinAbGroup torsion)
      : free_rank_(free_rank), torsion_(std::move(torsion)) {}
  // A finite group is a finitely generated group with free rank zero.
  FgAbGroup(FinAbGroup torsion) : free_rank_(0), torsion_(std::move(torsion)) {}

  std::size_t free_rank() const { return free_rank_; }
  const FinAbGroup& torsion() const { return torsion_; }
  bool is_finite() const { return free_rank_ == 0; }
  bool trivial() const { return free_rank_ == 0 && torsion_.trivial(); }
  const Int& order() const;  // throws unless finite

  std::size_t dim() const { return free_rank_ + torsion_.num_generators(); }
  // 0 for a free coordinate, else the modulus of the torsion coordinate.
  Int coord_modulus(std::size_t i) const;
  // Diagonal relation matrix (dim x #torsion): column for each torsion
  // generator g_i holding d_i * e_i.
  IntMat relation_columns() const;

  bool operator==(const FgAbGroup& o) const {
    return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
  }
  bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

  std::string describe() const;  // e.g. "Z^2 x Z2 x Z4"

 private:
  std::size_t free_rank_;
  FinAbGroup torsion_;
};

struct GroupElement {
  FgAbGroup group;
  std::vector<Int> coords;  // torsion coordinates reduced into [0, d_i)

  bool operator==(const GroupElement& o) const {
    return group == o.group && coords == o.coords;
  }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
};

GroupElement identity_element(const FgAbGroup& g);
// Reduces torsion coordinates; coords.size() must equal g.dim().
GroupElement make_element(const FgAbGroup& g, std::vector<Int> coords);
GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupElement& a);
bool is_identity(const GroupElement& a);

// Homomorphism between finitely generated abelian groups, given by an
// integer matrix taking domain generator coordinates to codomain generator
// coordinates (rows = codomain dim, cols = domain dim). Well-definedness
// (d_i * column_i vanishing in the codomain for every finite-order domain
// generator) is checked at construction.
class Homomorphism {
 public:
  Homomorphism(FgAbGroup domain, FgAbGroup codomain, IntMat matrix);

  static Homomorphism identity(const FgAbGroup& g);
  static Homomorphism zero(const FgAbGroup& domain, const FgAbGroup& codomain);

  const FgAbGroup& domain() const { return domain_; }
  const FgAbGroup& codomain() const { return codomain_; }
  const IntMat& matrix() const { return matrix_; }

  GroupElement apply(const GroupElement& x) const;
  GroupElement operator()(const GroupElement& x) const { return apply(x); }

  bool operator==(const Homomorphism& o) const {
    return domain_ == o.domain_ && codomain_ == o.codomain_ && matrix_ == o.matrix_;
  }

 private:
  FgAbGroup domain_, codomain_;
  IntMat matrix_;
};

// g after f (domains must chain).
Homomorphism compose(const Homomorphism& g, const Homomorphism& f);

// Normalization of an arbitrary cyclic-product presentation
// Z^free x Z_{m_1} x ... x Z_{m_t} (any m_i >= 1, no divisibility required)
// into invariant-factor form, together with the coordinate change.
struct NormalizedPresentation {
  FgAbGroup group;
  IntMat to_normal;    // raw coords -> normal coords
  IntMat from_normal;  // normal coords -> raw coords (section of to_normal)
};
NormalizedPresentation normalize_presentation(std::size_t free_rank,
                                              const std::vector<Int>& moduli);

// Presentation of Z^n modulo the column lattice of rels, in invariant-factor
// form, with the projection matrix and an integer section of it.
struct QuotientPresentation {
  FgAbGroup group;
  IntMat projection;  // n -> group coords
  IntMat lift;        // group coords -> n; projection*lift == I modulo relations
};
QuotientPresentation present_quotient(std::size_t n, const IntMat& rels);

// Solve phi(x) = target for x, working modulo the codomain relations.
// Returns a coordinate vector in the domain, or nullopt if target is not in
// the image.
std::optional<std::vector<Int>> preimage(const Homomorphism& phi,
                                         const GroupElement& target);

// Dense element-indexed view of a finite group, used by the enumeration and
// oracle machinery. Element ids are mixed-radix encodings of coordinate
// tuples with the first coordinate most significant, so increasing id order
// is lexicographic order on coordinates.
class DenseGroup {
 public:
  explicit DenseGroup(const FinAbGroup& g, const Int& max_order = Int(1) << 31);

  const FinAbGroup& group() const { return group_; }
  std::uint32_t order() const { return order_; }

  std::uint32_t encode(const std::vector<Int>& coords) const;
  std::vector<Int> decode(std::uint32_t id) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;

 private:
  FinAbGroup group_;
  std::vector<std::int64_t> moduli_;
  std::uint32_t order_;
};

// phi(id) for every element of the (finite) domain.
std::vector<std::uint32_t> hom_table(const Homomorphism& phi, const DenseGroup& dom,
                                     const DenseGroup& cod);

}  // namespace hbl
