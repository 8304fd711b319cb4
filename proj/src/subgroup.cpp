#include "hbl/subgroup.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>

namespace hbl {

namespace {

// <S, g> for a closed sorted set S: the union of the translates S + k*g.
std::vector<std::uint32_t> adjoin_closed(const DenseGroup& dense,
                                         const std::vector<std::uint32_t>& closed,
                                         std::uint32_t g) {
  std::vector<char> member(dense.order(), 0);
  for (auto e : closed)
    member[e] = 1;
  if (member[g])
    return closed;
  std::vector<std::uint32_t> result = closed;
  std::uint32_t cur = g;
  while (!member[cur]) {
    for (auto e : closed)
      result.push_back(dense.add(e, cur));
    cur = dense.add(cur, g);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::uint32_t> closure_of(const DenseGroup& dense,
                                      const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint32_t> closed{0};
  for (auto g : gens)
    closed = adjoin_closed(dense, closed, g);
  return closed;
}

std::vector<std::uint32_t> greedy_generators(const DenseGroup& dense,
                                             const std::vector<std::uint32_t>& ids) {
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> closed{0};
  for (auto id : ids) {
    if (std::binary_search(closed.begin(), closed.end(), id))
      continue;
    gens.push_back(id);
    closed = adjoin_closed(dense, closed, id);
    if (closed.size() == ids.size())
      break;
  }
  return gens;
}

IntMat relation_rows(const FgAbGroup& g) { return transpose(g.relation_columns()); }

// Rows holding the (reduced) coordinates of the given dense ids.
IntMat rows_from_ids(const FgAbGroup& ambient, const DenseGroup& dense,
                     const std::vector<std::uint32_t>& ids) {
  IntMat rows(ids.size(), ambient.dim());
  for (std::size_t r = 0; r < ids.size(); ++r) {
    auto coords = dense.decode(ids[r]);
    for (std::size_t j = 0; j < coords.size(); ++j)
      rows.at(r, j) = coords[j];
  }
  return rows;
}

}  // namespace

Subgroup Subgroup::from_ids(FgAbGroup ambient, std::vector<std::uint32_t> ids) {
  if (!ambient.is_finite())
    throw Error("Subgroup::from_ids: ambient group must be finite");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  Subgroup s;
  s.ambient_ = std::move(ambient);
  DenseGroup dense(s.ambient_.torsion());
  auto gens = greedy_generators(dense, ids);
  s.lift_hnf_ = hermite_rows(
      vstack(rows_from_ids(s.ambient_, dense, gens), relation_rows(s.ambient_)));
  s.elems_ = std::move(ids);
  s.order_ = static_cast<std::int64_t>(s.elems_.size());
  return s;
}

Subgroup Subgroup::from_lift_rows(FgAbGroup ambient, const IntMat& rows) {
  if (rows.cols() != ambient.dim() && rows.rows() != 0)
    throw Error("Subgroup::from_lift_rows: row width mismatch");
  IntMat padded = rows.rows() == 0 ? IntMat(0, ambient.dim()) : rows;
  IntMat lift = hermite_rows(vstack(padded, relation_rows(ambient)));

  if (ambient.is_finite()) {
    DenseGroup dense(ambient.torsion());
    std::vector<std::uint32_t> gens;
    for (std::size_t r = 0; r < lift.rows(); ++r) {
      GroupElement e = make_element(ambient, lift.row(r));
      if (!is_identity(e))
        gens.push_back(dense.encode(e.coords));
    }
    return from_ids(std::move(ambient), closure_of(dense, gens));
  }

  Subgroup s;
  s.ambient_ = std::move(ambient);
  s.lift_hnf_ = std::move(lift);

  // Order: finite iff the lift has the same rank as the relation lattice;
  // then the order is the index of the relation lattice in the lift.
  std::size_t k = s.ambient_.torsion().num_generators();
  std::size_t t = s.lift_hnf_.rows();
  assert(t >= k);
  if (t > k) {
    s.order_ = 0;
  } else {
    IntMat rels = s.ambient_.relation_columns();
    IntMat basis_t = transpose(s.lift_hnf_);  // dim x t
    IntMat c(t, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto sol = solve_linear(basis_t, rels.col(j));
      if (!sol)
        throw Error("internal: relation lattice not inside subgroup lift");
      for (std::size_t i = 0; i < t; ++i)
        c.at(i, j) = (*sol)[i];
    }
    SmithForm sf = smith_normal_form(c);
    Int idx = 1;
    for (std::size_t i = 0; i < std::min(c.rows(), c.cols()); ++i)
      idx *= sf.d.at(i, i);
    s.order_ = boost::multiprecision::abs(idx);
    if (s.order_ == 0)
      throw Error("internal: degenerate index computation");
  }
  return s;
}

Subgroup Subgroup::trivial(const FgAbGroup& ambient) {
  if (ambient.is_finite())
    return from_ids(ambient, {0});
  return from_lift_rows(ambient, IntMat(0, ambient.dim()));
}

Subgroup Subgroup::whole(const FgAbGroup& ambient) {
  if (ambient.is_finite()) {
    DenseGroup dense(ambient.torsion());
    std::vector<std::uint32_t> ids(dense.order());
    for (std::uint32_t i = 0; i < dense.order(); ++i)
      ids[i] = i;
    return from_ids(ambient, std::move(ids));
  }
  return from_lift_rows(ambient, IntMat::identity(ambient.dim()));
}

const std::vector<std::uint32_t>& Subgroup::element_ids() const {
  if (!finite_listed())
    throw Error("element_ids: subgroup of an infinite group");
  return elems_;
}

std::vector<GroupElement> Subgroup::elements() const {
  if (!finite_listed())
    throw Error("elements: subgroup of an infinite group has no element list");
  DenseGroup dense(ambient_.torsion());
  std::vector<GroupElement> out;
  out.reserve(elems_.size());
  for (auto id : elems_)
    out.push_back(make_element(ambient_, dense.decode(id)));
  return out;
}

std::size_t Subgroup::rank() const {
  return lift_hnf_.rows() - ambient_.torsion().num_generators();
}

bool Subgroup::contains(const GroupElement& x) const {
  if (x.group != ambient_)
    throw DomainMismatch("contains: element of a different group");
  if (finite_listed()) {
    DenseGroup dense(ambient_.torsion());
    return std::binary_search(elems_.begin(), elems_.end(), dense.encode(x.coords));
  }
  return in_row_lattice(lift_hnf_, x.coords);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  if (other.ambient_ != ambient_)
    throw DomainMismatch("contains_subgroup: different ambient groups");
  if (finite_listed())
    return std::includes(elems_.begin(), elems_.end(), other.elems_.begin(),
                         other.elems_.end());
  for (std::size_t r = 0; r < other.lift_hnf_.rows(); ++r)
    if (!in_row_lattice(lift_hnf_, other.lift_hnf_.row(r)))
      return false;
  return true;
}

std::vector<GroupElement> Subgroup::generators() const {
  std::vector<GroupElement> out;
  if (finite_listed()) {
    DenseGroup dense(ambient_.torsion());
    for (auto id : greedy_generators(dense, elems_))
      out.push_back(make_element(ambient_, dense.decode(id)));
    return out;
  }
  for (std::size_t r = 0; r < lift_hnf_.rows(); ++r) {
    GroupElement e = make_element(ambient_, lift_hnf_.row(r));
    if (!is_identity(e))
      out.push_back(std::move(e));
  }
  return out;
}

bool Subgroup::operator==(const Subgroup& o) const {
  if (ambient_ != o.ambient_)
    return false;
  if (finite_listed())
    return elems_ == o.elems_;
  return lift_hnf_ == o.lift_hnf_;
}

bool canonical_less(const Subgroup& a, const Subgroup& b) {
  bool fa = a.is_finite(), fb = b.is_finite();
  if (fa != fb)
    return fa;  // finite before infinite
  if (fa && a.order() != b.order())
    return a.order() < b.order();
  if (!fa && a.rank() != b.rank())
    return a.rank() < b.rank();
  if (a.finite_listed() && b.finite_listed())
    return a.element_ids() < b.element_ids();
  return a.lift() < b.lift();
}

Subgroup generate(const FgAbGroup& ambient, const std::vector<GroupElement>& gens) {
  for (const auto& g : gens)
    if (g.group != ambient)
      throw DomainMismatch("generate: generator outside the ambient group");
  if (ambient.is_finite()) {
    DenseGroup dense(ambient.torsion());
    std::vector<std::uint32_t> ids;
    ids.reserve(gens.size());
    for (const auto& g : gens)
      ids.push_back(dense.encode(g.coords));
    return Subgroup::from_ids(ambient, closure_of(dense, ids));
  }
  IntMat rows(gens.size(), ambient.dim());
  for (std::size_t r = 0; r < gens.size(); ++r)
    for (std::size_t j = 0; j < ambient.dim(); ++j)
      rows.at(r, j) = gens[r].coords[j];
  return Subgroup::from_lift_rows(ambient, rows);
}

Subgroup kernel(const Homomorphism& phi) {
  const FgAbGroup& dom = phi.domain();
  if (dom.is_finite()) {
    DenseGroup dd(dom.torsion());
    DenseGroup dc(phi.codomain().is_finite() ? phi.codomain().torsion() : FinAbGroup{});
    std::vector<std::uint32_t> ids;
    if (phi.codomain().is_finite()) {
      auto table = hom_table(phi, dd, dc);
      for (std::uint32_t id = 0; id < dd.order(); ++id)
        if (table[id] == 0)
          ids.push_back(id);
    } else {
      for (std::uint32_t id = 0; id < dd.order(); ++id)
        if (is_identity(phi.apply(make_element(dom, dd.decode(id)))))
          ids.push_back(id);
    }
    return Subgroup::from_ids(dom, std::move(ids));
  }
  IntMat a = hstack(phi.matrix(), phi.codomain().relation_columns());
  IntMat k = kernel_columns(a);
  IntMat rows(k.cols(), dom.dim());
  for (std::size_t c = 0; c < k.cols(); ++c)
    for (std::size_t i = 0; i < dom.dim(); ++i)
      rows.at(c, i) = k.at(i, c);
  return Subgroup::from_lift_rows(dom, rows);
}

Subgroup image_subgroup(const Homomorphism& phi, const Subgroup& h) {
  if (h.ambient() != phi.domain())
    throw DomainMismatch("image_subgroup: subgroup not in the domain");
  const FgAbGroup& cod = phi.codomain();
  if (phi.domain().is_finite() && cod.is_finite()) {
    DenseGroup dd(phi.domain().torsion()), dc(cod.torsion());
    auto table = hom_table(phi, dd, dc);
    std::vector<std::uint32_t> ids;
    ids.reserve(h.element_ids().size());
    for (auto id : h.element_ids())
      ids.push_back(table[id]);
    return Subgroup::from_ids(cod, std::move(ids));
  }
  IntMat rows = mat_mul(h.lift(), transpose(phi.matrix()));
  return Subgroup::from_lift_rows(cod, rows);
}

Subgroup image(const Homomorphism& phi) {
  return image_subgroup(phi, Subgroup::whole(phi.domain()));
}

std::pair<Subgroup, Subgroup> sum_and_intersection(const Subgroup& h1,
                                                   const Subgroup& h2) {
  if (h1.ambient() != h2.ambient())
    throw DomainMismatch("sum_and_intersection: different ambient groups");
  const FgAbGroup& g = h1.ambient();
  if (g.is_finite()) {
    DenseGroup dense(g.torsion());
    std::vector<std::uint32_t> cur = h1.element_ids();
    for (const auto& e : h2.generators())
      cur = adjoin_closed(dense, cur, dense.encode(e.coords));
    Subgroup sum = Subgroup::from_ids(g, std::move(cur));
    std::vector<std::uint32_t> inter;
    std::set_intersection(h1.element_ids().begin(), h1.element_ids().end(),
                          h2.element_ids().begin(), h2.element_ids().end(),
                          std::back_inserter(inter));
    return {std::move(sum), Subgroup::from_ids(g, std::move(inter))};
  }
  Subgroup sum = Subgroup::from_lift_rows(g, vstack(h1.lift(), h2.lift()));
  // x in both lattices: x = A^T u = B^T v -> kernel of [A^T | -B^T].
  IntMat at = transpose(h1.lift()), bt = transpose(h2.lift());
  IntMat neg_bt = bt;
  for (std::size_t i = 0; i < neg_bt.rows(); ++i)
    for (std::size_t j = 0; j < neg_bt.cols(); ++j)
      neg_bt.at(i, j) = -neg_bt.at(i, j);
  IntMat k = kernel_columns(hstack(at, neg_bt));
  IntMat urows(k.cols(), at.cols());
  for (std::size_t c = 0; c < k.cols(); ++c)
    for (std::size_t i = 0; i < at.cols(); ++i)
      urows.at(c, i) = k.at(i, c);
  IntMat inter_rows = mat_mul(urows, h1.lift());
  return {std::move(sum), Subgroup::from_lift_rows(g, inter_rows)};
}

Subgroup preimage_subgroup(const Homomorphism& phi, const Subgroup& h) {
  if (h.ambient() != phi.codomain())
    throw DomainMismatch("preimage_subgroup: subgroup not in the codomain");
  const FgAbGroup& dom = phi.domain();
  if (dom.is_finite() && phi.codomain().is_finite()) {
    DenseGroup dd(dom.torsion()), dc(phi.codomain().torsion());
    auto table = hom_table(phi, dd, dc);
    std::vector<std::uint32_t> ids;
    for (std::uint32_t id = 0; id < dd.order(); ++id)
      if (std::binary_search(h.element_ids().begin(), h.element_ids().end(),
                             table[id]))
        ids.push_back(id);
    return Subgroup::from_ids(dom, std::move(ids));
  }
  // {x : M x in lift(h)}: solutions of M x - lift(h)^T w = 0.
  IntMat ht = transpose(h.lift());
  IntMat neg_ht = ht;
  for (std::size_t i = 0; i < neg_ht.rows(); ++i)
    for (std::size_t j = 0; j < neg_ht.cols(); ++j)
      neg_ht.at(i, j) = -neg_ht.at(i, j);
  IntMat k = kernel_columns(hstack(phi.matrix(), neg_ht));
  IntMat rows(k.cols(), dom.dim());
  for (std::size_t c = 0; c < k.cols(); ++c)
    for (std::size_t i = 0; i < dom.dim(); ++i)
      rows.at(c, i) = k.at(i, c);
  return Subgroup::from_lift_rows(dom, rows);
}

Subgroup torsion_subgroup(const FgAbGroup& g) {
  IntMat rows(g.torsion().num_generators(), g.dim());
  for (std::size_t i = 0; i < g.torsion().num_generators(); ++i)
    rows.at(i, g.free_rank() + i) = 1;
  return Subgroup::from_lift_rows(g, rows);
}

Transversal coset_representatives(const Subgroup& sub) {
  const FgAbGroup& g = sub.ambient();
  std::vector<GroupElement> reps;
  if (g.is_finite()) {
    DenseGroup dense(g.torsion());
    std::vector<char> covered(dense.order(), 0);
    for (std::uint32_t id = 0; id < dense.order(); ++id) {
      if (covered[id])
        continue;
      reps.push_back(make_element(g, dense.decode(id)));
      for (auto h : sub.element_ids())
        covered[dense.add(id, h)] = 1;
    }
    return Transversal{sub, std::move(reps)};
  }
  QuotientGroup q = quotient_group(sub);
  if (!q.group.is_finite())
    throw Error("coset_representatives: infinite index");
  DenseGroup dq(q.group.torsion());
  for (std::uint32_t id = 0; id < dq.order(); ++id) {
    std::vector<Int> x = mat_vec(q.lift, dq.decode(id));
    x = reduce_mod_row_lattice(sub.lift(), x);
    reps.push_back(make_element(g, std::move(x)));
  }
  return Transversal{sub, std::move(reps)};
}

QuotientGroup quotient_group(const Subgroup& sub) {
  const FgAbGroup& g = sub.ambient();
  QuotientPresentation qp = present_quotient(g.dim(), transpose(sub.lift()));
  Homomorphism proj(g, qp.group, qp.projection);
  return QuotientGroup{qp.group, std::move(proj), std::move(qp.lift)};
}

SubgroupPresentation present_subgroup(const Subgroup& sub) {
  const FgAbGroup& g = sub.ambient();
  std::vector<GroupElement> gens = sub.generators();
  std::size_t t = gens.size();
  IntMat mg(g.dim(), t);
  for (std::size_t c = 0; c < t; ++c)
    for (std::size_t i = 0; i < g.dim(); ++i)
      mg.at(i, c) = gens[c].coords[i];

  IntMat combo = hstack(mg, g.relation_columns());
  IntMat k = kernel_columns(combo);
  IntMat krows(t, k.cols());
  for (std::size_t c = 0; c < k.cols(); ++c)
    for (std::size_t i = 0; i < t; ++i)
      krows.at(i, c) = k.at(i, c);
  QuotientPresentation qp = present_quotient(t, krows);

  Homomorphism emb(qp.group, g, mat_mul(mg, qp.lift));
  return SubgroupPresentation{qp.group, std::move(emb), std::move(mg),
                              std::move(qp.projection)};
}

GroupElement subgroup_coordinates(const SubgroupPresentation& pres,
                                  const GroupElement& x) {
  const FgAbGroup& ambient = pres.embedding.codomain();
  if (x.group != ambient)
    throw DomainMismatch("subgroup_coordinates: element of a different group");
  IntMat a = hstack(pres.gen_matrix, ambient.relation_columns());
  auto sol = solve_linear(a, x.coords);
  if (!sol)
    throw Error("subgroup_coordinates: element is not in the subgroup");
  sol->resize(pres.gen_matrix.cols());
  return make_element(pres.embedding.domain(), mat_vec(pres.gen_projection, *sol));
}

std::map<Int, FinAbGroup> primary_decomposition(const FinAbGroup& g) {
  std::map<Int, std::vector<Int>> comp;
  for (const auto& d : g.moduli())
    for (const auto& [p, e] : factorize(d))
      comp[p].push_back(boost::multiprecision::pow(p, e));
  std::map<Int, FinAbGroup> out;
  for (auto& [p, mods] : comp)
    out.emplace(p, FinAbGroup(mods));
  return out;
}

namespace {

std::vector<std::vector<std::uint32_t>> bfs_enumerate(const DenseGroup& dense) {
  std::set<std::vector<std::uint32_t>> seen;
  std::deque<std::vector<std::uint32_t>> queue;
  std::vector<std::uint32_t> triv{0};
  seen.insert(triv);
  queue.push_back(triv);
  while (!queue.empty()) {
    auto s = std::move(queue.front());
    queue.pop_front();
    for (std::uint32_t gid = 1; gid < dense.order(); ++gid) {
      if (std::binary_search(s.begin(), s.end(), gid))
        continue;
      auto t = adjoin_closed(dense, s, gid);
      if (seen.insert(t).second)
        queue.push_back(t);
    }
  }
  return {seen.begin(), seen.end()};
}

// Dense ids of the canonical embedding of a p-primary component. Component
// coordinate c on ambient coordinate i (invariant factor d_i with p-part q)
// embeds as c * (d_i / q) mod d_i.
std::vector<std::uint32_t> embedding_table(const DenseGroup& ambient,
                                           const FinAbGroup& g, const Int& p,
                                           const DenseGroup& comp) {
  std::vector<std::size_t> positions;  // ambient coordinate per component coord
  std::vector<Int> scales;
  for (std::size_t i = 0; i < g.moduli().size(); ++i) {
    Int d = g.moduli()[i], q = 1;
    while (d % p == 0) {
      d /= p;
      q *= p;
    }
    if (q > 1) {
      positions.push_back(i);
      scales.push_back(g.moduli()[i] / q);
    }
  }
  std::vector<std::uint32_t> table(comp.order());
  for (std::uint32_t id = 0; id < comp.order(); ++id) {
    auto c = comp.decode(id);
    std::vector<Int> coords(g.moduli().size());
    for (std::size_t j = 0; j < positions.size(); ++j)
      coords[positions[j]] = (c[j] * scales[j]) % g.moduli()[positions[j]];
    table[id] = ambient.encode(coords);
  }
  return table;
}

}  // namespace

SubgroupLattice enumerate_subgroups(const FinAbGroup& g, const Int& max_order) {
  if (g.order() > max_order)
    throw CapExceeded(g.order(), "subgroup enumeration needs --max-order >= " +
                                     g.order().str());
  DenseGroup dense(g);
  auto primary = primary_decomposition(g);

  // Subgroups of each p-component, as ambient id sets.
  std::vector<std::vector<std::vector<std::uint32_t>>> embedded;
  for (const auto& [p, gp] : primary) {
    DenseGroup dp(gp);
    auto emb = embedding_table(dense, g, p, dp);
    std::vector<std::vector<std::uint32_t>> subs;
    for (auto& s : bfs_enumerate(dp)) {
      std::vector<std::uint32_t> ids;
      ids.reserve(s.size());
      for (auto id : s)
        ids.push_back(emb[id]);
      std::sort(ids.begin(), ids.end());
      subs.push_back(std::move(ids));
    }
    embedded.push_back(std::move(subs));
  }

  std::vector<Subgroup> all;
  std::vector<std::size_t> idx(embedded.size(), 0);
  for (;;) {
    std::vector<std::uint32_t> cur{0};
    for (std::size_t p = 0; p < embedded.size(); ++p) {
      const auto& part = embedded[p][idx[p]];
      std::vector<std::uint32_t> next;
      next.reserve(cur.size() * part.size());
      for (auto a : cur)
        for (auto b : part)
          next.push_back(dense.add(a, b));
      cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    assert(std::adjacent_find(cur.begin(), cur.end()) == cur.end());
    all.push_back(Subgroup::from_ids(g, std::move(cur)));

    std::size_t p = 0;
    while (p < idx.size() && ++idx[p] == embedded[p].size()) {
      idx[p] = 0;
      ++p;
    }
    if (p == idx.size())
      break;
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return SubgroupLattice{FgAbGroup(g), std::move(all)};
}

std::vector<std::vector<std::uint32_t>> enumerate_subgroups_oracle(
    const DenseGroup& dense) {
  std::set<std::vector<std::uint32_t>> seen;
  std::deque<std::vector<std::uint32_t>> queue;
  for (std::uint32_t a = 0; a < dense.order(); ++a)
    for (std::uint32_t b = a; b < dense.order(); ++b) {
      auto s = closure_of(dense, {a, b});
      if (seen.insert(s).second)
        queue.push_back(s);
    }
  while (!queue.empty()) {
    auto s = std::move(queue.front());
    queue.pop_front();
    for (std::uint32_t gid = 1; gid < dense.order(); ++gid) {
      if (std::binary_search(s.begin(), s.end(), gid))
        continue;
      auto t = adjoin_closed(dense, s, gid);
      if (seen.insert(t).second)
        queue.push_back(t);
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t count_subgroups_bruteforce(const DenseGroup& dense) {
  if (dense.order() > 16)
    throw Error("count_subgroups_bruteforce: group too large");
  const std::uint32_t n = dense.order();
  std::vector<std::vector<std::uint32_t>> add(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b)
      add[a][b] = dense.add(a, b);
  std::size_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); mask += 2) {
    // Identity (id 0) always required, hence the odd masks.
    bool closed = true;
    for (std::uint32_t a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1))
        continue;
      for (std::uint32_t b = a; b < n && closed; ++b) {
        if (!(mask >> b & 1))
          continue;
        if (!(mask >> add[a][b] & 1))
          closed = false;
      }
    }
    if (closed)
      ++count;
  }
  return count;
}

std::vector<std::pair<std::size_t, std::size_t>> SubgroupLattice::inclusion_pairs()
    const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < subgroups.size(); ++i)
    for (std::size_t j = 0; j < subgroups.size(); ++j)
      if (i != j && subgroups[j].contains_subgroup(subgroups[i]))
        out.emplace_back(i, j);
  return out;
}

}  // namespace hbl
