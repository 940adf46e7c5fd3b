#pragma once

#include <string>
#include <vector>

#include "icsheaf/cochain.hpp"
#include "icsheaf/stratification.hpp"

namespace icsheaf {

// Simplicial cochains with the usual alternating-face coboundary.
template <class K>
CochainComplex<K> simplicial_cochains(const SimplicialComplex& c) {
  int n = c.dim();
  if (n < 0) return CochainComplex<K>(0, {}, {});
  std::vector<std::vector<int>> by_dim(n + 1);
  std::vector<int> pos(c.size());
  for (int d = 0; d <= n; ++d) {
    by_dim[d] = c.simplices_of_dim(d);
    for (std::size_t i = 0; i < by_dim[d].size(); ++i) pos[by_dim[d][i]] = static_cast<int>(i);
  }
  std::vector<int> dims;
  for (const auto& v : by_dim) dims.push_back(static_cast<int>(v.size()));
  std::vector<SparseMatrix<K>> diffs;
  for (int d = 0; d < n; ++d) {
    std::vector<Triplet<K>> t;
    for (int s : by_dim[d + 1]) {
      auto f = c.faces(s);
      for (std::size_t i = 0; i < f.size(); ++i) t.push_back({pos[s], pos[f[i]], i % 2 == 0 ? K(1) : K(-1)});
    }
    diffs.push_back(SparseMatrix<K>::from_triplets(dims[d + 1], dims[d], std::move(t)));
  }
  return CochainComplex<K>(0, std::move(dims), std::move(diffs));
}

// Reduced Betti numbers; an empty complex is the (-1)-sphere.
template <class K>
std::vector<long> reduced_betti(const SimplicialComplex& c) {
  if (c.size() == 0) return {1};
  auto h = cohomology(simplicial_cochains<K>(c), false);
  std::vector<long> out{0};
  for (int j = 0; j <= c.dim(); ++j) out.push_back(h.at(j) - (j == 0 ? 1 : 0));
  return out;  // out[j + 1] = reduced b_j
}

template <class K>
bool is_homology_sphere(const SimplicialComplex& c, int m) {
  auto b = reduced_betti<K>(c);
  for (int j = -1; j + 1 < static_cast<int>(b.size()); ++j)
    if (b[j + 1] != (j == m ? 1 : 0)) return false;
  return m + 1 < static_cast<int>(b.size());
}

struct ComponentCheck {
  int depth = 0;
  std::string first_cell;
  int cells = 0;
  bool pure = true;
  bool spheres = true;
  std::string warning;
  bool pass() const { return pure && spheres; }
};

// Per stratum component: pure of dimension n - k, and for every cell the
// link taken inside the stratum is a homology sphere of the right dimension.
// Warnings only; stratifications are trusted inputs.
template <class K>
std::vector<ComponentCheck> stratum_sanity_check(const Stratification& s) {
  const auto& c = s.complex();
  int n = s.n();
  std::vector<ComponentCheck> out;
  for (const auto& comp : stratum_components(s)) {
    ComponentCheck r;
    r.depth = comp.depth;
    r.cells = static_cast<int>(comp.cells.size());
    r.first_cell = c.name(comp.cells.front());
    int d = n - comp.depth;
    std::vector<bool> in(c.size(), false);
    for (int id : comp.cells) in[id] = true;
    for (int id : comp.cells) {
      bool top = c.simplex_dim(id) == d;
      for (int u : c.upset(id))
        if (in[u] && c.simplex_dim(u) == d) top = true;
      if (!top || c.simplex_dim(id) > d) {
        r.pure = false;
        r.warning = "not pure of dimension " + std::to_string(d) + " at " + c.name(id);
        break;
      }
    }
    if (r.pure)
      for (int id : comp.cells) {
        const auto& sigma = c.simplex(id);
        std::vector<Simplex> lk;
        for (int u : c.upset(id)) {
          if (!in[u]) continue;
          Simplex tau;
          for (int v : c.simplex(u))
            if (!std::binary_search(sigma.begin(), sigma.end(), v)) tau.push_back(v);
          lk.push_back(std::move(tau));
        }
        auto link_complex = SimplicialComplex::from_simplices(c.vertex_names(), std::move(lk));
        if (!is_homology_sphere<K>(link_complex, d - c.simplex_dim(id) - 1)) {
          r.spheres = false;
          r.warning = "link in stratum at " + c.name(id) + " is not a homology " +
                      std::to_string(d - c.simplex_dim(id) - 1) + "-sphere";
          break;
        }
      }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace icsheaf
