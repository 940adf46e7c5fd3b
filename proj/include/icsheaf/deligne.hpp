#pragma once

#include <map>
#include <utility>
#include <vector>

#include "icsheaf/perversity.hpp"
#include "icsheaf/sheaf_ops.hpp"

namespace icsheaf {

// Rank-r local system on an up-closed carrier (normally U_1 = X - Sigma),
// given by invertible matrices on face relations; unspecified covers are
// identities.
template <class K>
struct LocalSystem {
  int rank = 1;
  CellSet carrier;
  std::map<std::pair<int, int>, SparseMatrix<K>> edges;

  static LocalSystem constant(const CellSet& carrier, int rank = 1) { return {rank, carrier, {}}; }
  bool is_constant() const { return edges.empty(); }
};

// Throws NotInvertible, NotAFace or NotFunctorial.
template <class K>
CellSheafComplex<K> to_sheaf(const LocalSystem<K>& g, ComplexPtr complex) {
  const auto& c = *complex;
  if (g.is_constant()) return constant_sheaf<K>(complex, g.carrier, g.rank);
  CellSheafComplex<K> s(complex, g.carrier, 0, 0);
  auto stalk = CochainComplex<K>::concentrated(0, g.rank);
  for (int id : g.carrier.ids()) s.set_stalk(id, stalk);
  for (const auto& [edge, m] : g.edges) {
    auto [a, b] = edge;
    if (!g.carrier.contains(a) || !g.carrier.contains(b) || a == b || !c.is_face(a, b))
      throw Error("NotAFace", c.name(a) + "<" + c.name(b));
    if (m.rows() != g.rank || m.cols() != g.rank || rank(m) != g.rank)
      throw Error("NotInvertible", c.name(a) + "<" + c.name(b));
  }
  for (int id : g.carrier.ids())
    for (int u : c.cofaces(id)) {
      if (!g.carrier.contains(u)) continue;
      auto it = g.edges.find({id, u});
      ChainMap<K> f;
      f.lo = 0;
      f.components.push_back(it == g.edges.end() ? SparseMatrix<K>::identity(g.rank) : it->second);
      s.set_restriction(id, u, std::move(f));
    }
  s.compose_from_covers();
  for (const auto& [edge, m] : g.edges) {
    auto [a, b] = edge;
    if (c.simplex_dim(b) != c.simplex_dim(a) + 1 && !(*s.restriction(a, b).at(0) == m))
      throw Error("NotFunctorial", c.name(a) + "<" + c.name(b));
  }
  s.validate();
  return s;
}

struct DeligneOptions {
  bool reduce = false;
  bool retain_stages = true;
  Exec exec = Exec::parallel;
};

template <class K>
struct DeligneBuild {
  Stratification strat;
  ExtendedPerversity perversity;
  LocalSystem<K> coefficients;
  std::vector<CellSheafComplex<K>> stages;  // P_1 .. P_{n+1} when retained
  CellSheafComplex<K> result;
};

// P_{k+1} = tau_{<= p(k)} R i_{k*} P_k for k = 1..n, from P_1 = G on U_1.
// When S_{n-k} is empty the inclusion U_k -> U_{k+1} is the identity and
// only the truncation acts. With Sigma empty there is nothing to extend
// across and P = G.
template <class K>
DeligneBuild<K> build_deligne(const Stratification& strat, const ExtendedPerversity& p, const LocalSystem<K>& g,
                              const DeligneOptions& opt = {}) {
  strat.validate();
  int n = strat.n();
  if (p.ambient_dim() != n) throw Error("UnderspecifiedRange", "perversity extended to " + std::to_string(p.ambient_dim()));
  if (!(g.carrier == strat.open_part(1))) throw Error("CoefficientCarrier", "local system must live on X - Sigma");
  DeligneBuild<K> b{strat, p, g, {}, {}};
  auto current = to_sheaf(g, strat.complex_ptr());
  if (opt.retain_stages) b.stages.push_back(current);
  if (strat.is_trivial()) {
    for (int k = 1; k <= n && opt.retain_stages; ++k) b.stages.push_back(current);
    b.result = std::move(current);
    return b;
  }
  for (int k = 1; k <= n; ++k) {
    if (!strat.stratum(k).empty()) {
      current = pushforward(current, strat.open_part(k + 1), opt.exec);
      if (opt.reduce) current = reduce(current, opt.exec);
    }
    current = truncate(current, static_cast<int>(p(k)), opt.exec);
    if (opt.reduce) current = reduce(current, opt.exec);
    if (opt.retain_stages) b.stages.push_back(current);
  }
  b.result = std::move(current);
  return b;
}

template <class K>
CellSheafComplex<K> full_pushforward(const LocalSystem<K>& g, ComplexPtr complex, Exec exec = Exec::parallel) {
  auto s = to_sheaf(g, complex);
  return pushforward(s, CellSet::all(complex->size()), exec);
}

template <class K>
CohomologyResult intersection_cohomology(const Stratification& strat, const ExtendedPerversity& p,
                                         const LocalSystem<K>& g, const DeligneOptions& opt = {}) {
  DeligneOptions o = opt;
  o.retain_stages = false;
  return hypercohomology(build_deligne(strat, p, g, o).result);
}

// H^*(X - Sigma; G) straight from the coefficient sheaf.
template <class K>
CohomologyResult complement_cohomology(const LocalSystem<K>& g, ComplexPtr complex) {
  return hypercohomology(to_sheaf(g, std::move(complex)), Route::roos);
}

}  // namespace icsheaf
