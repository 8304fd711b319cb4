#include "hbl/group.hpp"

#include <algorithm>
#include <numeric>

namespace hbl {

FinAbGroup::FinAbGroup(std::vector<Int> moduli) {
  for (auto& d : moduli) {
    if (d < 1)
      throw Error("FinAbGroup: moduli must be >= 1");
    if (d > 1)
      moduli_.push_back(std::move(d));
  }
  for (std::size_t i = 0; i + 1 < moduli_.size(); ++i)
    if (moduli_[i + 1] % moduli_[i] != 0)
      throw Error(
          "FinAbGroup: moduli are not an invariant-factor chain; "
          "normalize_presentation converts arbitrary cyclic products");
  order_ = 1;
  for (const auto& d : moduli_)
    order_ *= d;
}

std::string FinAbGroup::describe() const {
  if (moduli_.empty())
    return "0";
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i)
      s += " x ";
    s += "Z" + moduli_[i].str();
  }
  return s;
}

const Int& FgAbGroup::order() const {
  if (free_rank_ != 0)
    throw Error("order(): group is infinite");
  return torsion_.order();
}

Int FgAbGroup::coord_modulus(std::size_t i) const {
  if (i < free_rank_)
    return 0;
  return torsion_.moduli()[i - free_rank_];
}

IntMat FgAbGroup::relation_columns() const {
  IntMat r(dim(), torsion_.num_generators());
  for (std::size_t j = 0; j < torsion_.num_generators(); ++j)
    r.at(free_rank_ + j, j) = torsion_.moduli()[j];
  return r;
}

std::string FgAbGroup::describe() const {
  if (trivial())
    return "0";
  std::string s;
  if (free_rank_ == 1)
    s = "Z";
  else if (free_rank_ > 1)
    s = "Z^" + std::to_string(free_rank_);
  if (!torsion_.trivial()) {
    if (!s.empty())
      s += " x ";
    s += torsion_.describe();
  }
  return s;
}

GroupElement identity_element(const FgAbGroup& g) {
  return GroupElement{g, std::vector<Int>(g.dim())};
}

GroupElement make_element(const FgAbGroup& g, std::vector<Int> coords) {
  if (coords.size() != g.dim())
    throw Error("make_element: coordinate count mismatch");
  for (std::size_t i = g.free_rank(); i < coords.size(); ++i)
    coords[i] = pos_mod(coords[i], g.coord_modulus(i));
  return GroupElement{g, std::move(coords)};
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
  if (a.group != b.group)
    throw DomainMismatch("add: elements of different groups");
  std::vector<Int> c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coords[i] + b.coords[i];
  return make_element(a.group, std::move(c));
}

GroupElement neg(const GroupElement& a) {
  std::vector<Int> c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = -a.coords[i];
  return make_element(a.group, std::move(c));
}

bool is_identity(const GroupElement& a) {
  return std::all_of(a.coords.begin(), a.coords.end(),
                     [](const Int& x) { return x == 0; });
}

Homomorphism::Homomorphism(FgAbGroup domain, FgAbGroup codomain, IntMat matrix)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      matrix_(std::move(matrix)) {
  if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim())
    throw Error("Homomorphism: matrix shape does not match groups");
  for (std::size_t i = 0; i < domain_.dim(); ++i) {
    Int di = domain_.coord_modulus(i);
    if (di == 0)
      continue;  // free generator imposes no condition
    for (std::size_t r = 0; r < codomain_.dim(); ++r) {
      Int er = codomain_.coord_modulus(r);
      Int v = di * matrix_.at(r, i);
      bool ok = (er == 0) ? (v == 0) : (v % er == 0);
      if (!ok)
        throw InvalidHomomorphism(
            i, "matrix does not define a homomorphism: generator " +
                   std::to_string(i) + " of order " + di.str() +
                   " maps to an element of incompatible order");
    }
  }
}

Homomorphism Homomorphism::identity(const FgAbGroup& g) {
  return Homomorphism(g, g, IntMat::identity(g.dim()));
}

Homomorphism Homomorphism::zero(const FgAbGroup& domain, const FgAbGroup& codomain) {
  return Homomorphism(domain, codomain, IntMat(codomain.dim(), domain.dim()));
}

GroupElement Homomorphism::apply(const GroupElement& x) const {
  if (x.group != domain_)
    throw DomainMismatch("apply: element not in the domain");
  return make_element(codomain_, mat_vec(matrix_, x.coords));
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (f.codomain() != g.domain())
    throw DomainMismatch("compose: codomain/domain mismatch");
  return Homomorphism(f.domain(), g.codomain(), mat_mul(g.matrix(), f.matrix()));
}

QuotientPresentation present_quotient(std::size_t n, const IntMat& rels) {
  if (rels.rows() != n)
    throw Error("present_quotient: relation rows must equal n");
  SmithForm s = smith_normal_form(rels);
  // Modulus of transformed coordinate i (0 = free).
  std::vector<Int> mods(n);
  for (std::size_t i = 0; i < n; ++i)
    mods[i] = (i < rels.cols()) ? s.d.at(i, i) : Int(0);

  std::vector<std::size_t> keep_free, keep_tors;
  for (std::size_t i = 0; i < n; ++i) {
    if (mods[i] == 0)
      keep_free.push_back(i);
    else if (mods[i] > 1)
      keep_tors.push_back(i);
  }
  std::vector<Int> tors_moduli;
  tors_moduli.reserve(keep_tors.size());
  for (auto i : keep_tors)
    tors_moduli.push_back(mods[i]);
  FgAbGroup q(keep_free.size(), FinAbGroup(tors_moduli));

  std::vector<std::size_t> kept = keep_free;
  kept.insert(kept.end(), keep_tors.begin(), keep_tors.end());
  IntMat proj(kept.size(), n), lift(n, kept.size());
  for (std::size_t r = 0; r < kept.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      proj.at(r, j) = s.u.at(kept[r], j);
      lift.at(j, r) = s.u_inv.at(j, kept[r]);
    }
  return QuotientPresentation{std::move(q), std::move(proj), std::move(lift)};
}

NormalizedPresentation normalize_presentation(std::size_t free_rank,
                                              const std::vector<Int>& moduli) {
  for (const auto& m : moduli)
    if (m < 1)
      throw Error("normalize_presentation: moduli must be >= 1");
  std::size_t n = free_rank + moduli.size();
  IntMat rels(n, moduli.size());
  for (std::size_t j = 0; j < moduli.size(); ++j)
    rels.at(free_rank + j, j) = moduli[j];
  QuotientPresentation q = present_quotient(n, rels);
  return NormalizedPresentation{q.group, std::move(q.projection), std::move(q.lift)};
}

std::optional<std::vector<Int>> preimage(const Homomorphism& phi,
                                         const GroupElement& target) {
  if (target.group != phi.codomain())
    throw DomainMismatch("preimage: target not in the codomain");
  IntMat a = hstack(phi.matrix(), phi.codomain().relation_columns());
  auto sol = solve_linear(a, target.coords);
  if (!sol)
    return std::nullopt;
  sol->resize(phi.domain().dim());
  return sol;
}

DenseGroup::DenseGroup(const FinAbGroup& g, const Int& max_order) : group_(g) {
  if (g.order() > max_order)
    throw CapExceeded(g.order(), "group order " + g.order().str() +
                                     " exceeds the cap " + max_order.str());
  moduli_.reserve(g.num_generators());
  for (const auto& d : g.moduli())
    moduli_.push_back(d.convert_to<std::int64_t>());
  order_ = static_cast<std::uint32_t>(g.order().convert_to<std::int64_t>());
}

std::uint32_t DenseGroup::encode(const std::vector<Int>& coords) const {
  if (coords.size() != moduli_.size())
    throw Error("DenseGroup::encode: coordinate count mismatch");
  std::int64_t id = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t c = coords[i].convert_to<std::int64_t>();
    id = id * moduli_[i] + c;
  }
  return static_cast<std::uint32_t>(id);
}

std::vector<Int> DenseGroup::decode(std::uint32_t id) const {
  std::vector<Int> coords(moduli_.size());
  std::int64_t x = id;
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    coords[i] = Int(x % moduli_[i]);
    x /= moduli_[i];
  }
  return coords;
}

std::uint32_t DenseGroup::add(std::uint32_t a, std::uint32_t b) const {
  std::int64_t xa = a, xb = b, id = 0;
  // digits from most significant; reconstruct in one pass
  std::int64_t place = order_;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    place /= moduli_[i];
    std::int64_t da = xa / place, db = xb / place;
    xa %= place;
    xb %= place;
    id = id * moduli_[i] + (da + db) % moduli_[i];
  }
  return static_cast<std::uint32_t>(id);
}

std::uint32_t DenseGroup::neg(std::uint32_t a) const {
  std::int64_t xa = a, id = 0;
  std::int64_t place = order_;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    place /= moduli_[i];
    std::int64_t da = xa / place;
    xa %= place;
    id = id * moduli_[i] + (moduli_[i] - da) % moduli_[i];
  }
  return static_cast<std::uint32_t>(id);
}

std::vector<std::uint32_t> hom_table(const Homomorphism& phi, const DenseGroup& dom,
                                     const DenseGroup& cod) {
  if (FgAbGroup(dom.group()) != phi.domain() || FgAbGroup(cod.group()) != phi.codomain())
    throw DomainMismatch("hom_table: dense groups do not match the map");
  std::vector<std::uint32_t> table(dom.order());
  FgAbGroup codg(cod.group());
  for (std::uint32_t id = 0; id < dom.order(); ++id) {
    GroupElement y = make_element(codg, mat_vec(phi.matrix(), dom.decode(id)));
    table[id] = cod.encode(y.coords);
  }
  return table;
}

}  // namespace hbl
