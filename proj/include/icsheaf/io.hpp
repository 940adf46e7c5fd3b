#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "icsheaf/axioms.hpp"
#include "icsheaf/sanity.hpp"

namespace icsheaf {

using Json = nlohmann::ordered_json;

// Throws FileNotFound or ParseError.
Json read_json_file(const std::string& path);

// {"vertices": [...], "maximal_simplices": [[...], ...]}
ComplexPtr complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& c);

// Depth object keyed by "v0,v1" names; omitted simplices get depth 0.
// Accepts either the object itself or a document with a "depth" member.
Stratification stratification_from_json(ComplexPtr c, const Json& j);
Json depth_to_json(const Stratification& s);

// Closure of the listed simplices: an array of vertex-name arrays, or a
// document with a "sigma" member holding one.
CellSet sigma_from_json(const SimplicialComplex& c, const Json& j);

Json to_json(const ExtInt& x);
Json to_json(const CohomologyResult& r, int first, int last);
Json to_json(const Check& c);
Json to_json(const ClauseResult& c);
Json to_json(const AxiomReport& r);
Json to_json(const ComponentCheck& c);
std::string to_markdown(const AxiomReport& r);

// {"rank": r, "edges": {"s<t": [[a, b], [c, d]], ...}} on U_1 of strat.
template <class K>
LocalSystem<K> local_system_from_json(const Json& j, const Stratification& strat) {
  const auto& c = strat.complex();
  LocalSystem<K> g = LocalSystem<K>::constant(strat.open_part(1), j.value("rank", 1));
  if (g.rank < 0) throw Error("ParseError", "negative rank");
  if (!j.contains("edges")) return g;
  for (const auto& [key, m] : j.at("edges").items()) {
    auto cut = key.find('<');
    if (cut == std::string::npos) throw Error("ParseError", "edge key " + key);
    int a = c.parse_name(key.substr(0, cut));
    int b = c.parse_name(key.substr(cut + 1));
    if (!m.is_array() || static_cast<int>(m.size()) != g.rank) throw Error("ParseError", "matrix for " + key);
    std::vector<Triplet<K>> t;
    for (int r = 0; r < g.rank; ++r) {
      if (!m[r].is_array() || static_cast<int>(m[r].size()) != g.rank) throw Error("ParseError", "matrix for " + key);
      for (int col = 0; col < g.rank; ++col) {
        const auto& e = m[r][col];
        K v;
        if (e.is_string()) v = parse_scalar<K>(e.template get<std::string>());
        else v = K(static_cast<long>(e.template get<long long>()));
        if (!is_zero(v)) t.push_back({r, col, v});
      }
    }
    g.edges[{a, b}] = SparseMatrix<K>::from_triplets(g.rank, g.rank, std::move(t));
  }
  return g;
}

template <class K>
Json matrix_to_json(const SparseMatrix<K>& m) {
  Json out = Json::array();
  for (int col = 0; col < m.cols(); ++col)
    for (const auto& [row, v] : m.column(col)) out.push_back(Json::array({row, col, to_string(v)}));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", out}};
}

// Per-simplex stalk dimensions and cohomology, and restriction maps along
// covers.
template <class K>
Json sheaf_dump(const CellSheafComplex<K>& s) {
  const auto& c = s.complex();
  Json stalks = Json::object();
  Json maps = Json::object();
  for (int id : s.carrier().ids()) {
    const auto& st = s.stalk(id);
    std::vector<int> dims;
    for (int q = s.lo(); q <= s.hi(); ++q) dims.push_back(st.dim(q));
    auto h = cohomology(st, false);
    stalks[c.name(id)] = {{"dims", dims}, {"cohomology", h.range(s.lo(), s.hi())}};
    for (int u : c.cofaces(id)) {
      if (!s.carrier().contains(u)) continue;
      Json degrees = Json::object();
      const auto& f = s.restriction(id, u);
      for (int q = s.lo(); q <= s.hi(); ++q)
        if (const auto* m = f.at(q); m && m->nonzeros() > 0) degrees[std::to_string(q)] = matrix_to_json(*m);
      maps[c.name(id) + "<" + c.name(u)] = degrees;
    }
  }
  return {{"lo", s.lo()}, {"hi", s.hi()}, {"stalks", stalks}, {"restrictions", maps}};
}

}  // namespace icsheaf
