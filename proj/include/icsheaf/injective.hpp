#pragma once

#include <algorithm>
#include <memory>
#include <unordered_map>
#include <vector>

#include "icsheaf/sheaf.hpp"

namespace icsheaf {

// Bounded complex of injective cellular sheaves. A generator based at x
// stands for the sheaf that is the field on every face of x and zero
// elsewhere. A map from a generator at x to one at y exists only when
// y <= x, and is then a scalar. Sections over an up-closed W keep the
// generators based in W; the stalk at s keeps those based in the open star.
template <class K>
struct InjectiveComplex {
  ComplexPtr complex;
  int lo = 0;
  std::vector<std::vector<int>> base;  // base[i][g]: cell of generator g in degree lo + i
  std::vector<SparseMatrix<K>> d;      // d[i]: degree lo + i -> lo + i + 1

  int hi() const { return lo + static_cast<int>(base.size()) - 1; }
  int count(int degree) const {
    int k = degree - lo;
    return (k < 0 || k >= static_cast<int>(base.size())) ? 0 : static_cast<int>(base[k].size());
  }
  long size() const {
    long t = 0;
    for (const auto& b : base) t += static_cast<long>(b.size());
    return t;
  }

  // Support condition and d^2 = 0.
  void validate() const {
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (int g = 0; g < d[i].cols(); ++g)
        for (const auto& [h, v] : d[i].column(g))
          if (!complex->is_face(base[i + 1][h], base[i][g])) throw Error("NotInjectiveMap", std::to_string(lo + static_cast<int>(i)));
      if (i + 1 < d.size() && !(d[i + 1] * d[i]).is_zero_matrix())
        throw Error("DifferentialSquareNonzero", std::to_string(lo + static_cast<int>(i)));
    }
  }

  // Generators whose base lies in `keep`, as a complex (a quotient when
  // keep is up-closed, a subcomplex when it is a single cell's fibre).
  CochainComplex<K> restrict_to(const std::vector<bool>& keep) const {
    if (base.empty()) return {};
    std::vector<std::vector<int>> sel(base.size());
    std::vector<std::vector<int>> pos(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      pos[i].assign(base[i].size(), -1);
      for (std::size_t g = 0; g < base[i].size(); ++g)
        if (keep[base[i][g]]) {
          pos[i][g] = static_cast<int>(sel[i].size());
          sel[i].push_back(static_cast<int>(g));
        }
    }
    std::vector<int> dims;
    for (const auto& s : sel) dims.push_back(static_cast<int>(s.size()));
    std::vector<SparseMatrix<K>> diffs;
    for (std::size_t i = 0; i + 1 < base.size(); ++i) diffs.push_back(d[i].select(pos[i + 1], dims[i + 1], sel[i]));
    return CochainComplex<K>(lo, std::move(dims), std::move(diffs));
  }
};

template <class K>
std::vector<bool> star_mask(const SimplicialComplex& c, int id) {
  std::vector<bool> m(c.size(), false);
  m[id] = true;
  for (int u : c.upset(id)) m[u] = true;
  return m;
}

// Sheaf on `carrier` presented by k: stalk at s = generators based in the
// open star of s, restrictions = projections. Bases must lie in carrier.
template <class K>
CellSheafComplex<K> to_sheaf(std::shared_ptr<const InjectiveComplex<K>> k, const CellSet& carrier,
                             Exec exec = Exec::parallel) {
  const auto& c = *k->complex;
  if (!is_open(c, carrier)) throw Error("NotOpenSubposet");
  for (const auto& b : k->base)
    for (int x : b)
      if (!carrier.contains(x)) throw Error("NotNested", c.name(x));
  int lo = k->lo;
  int hi = k->base.empty() ? lo - 1 : k->hi();
  CellSheafComplex<K> s(k->complex, carrier, lo, hi);
  auto cells = carrier.ids();
  int degrees = static_cast<int>(k->base.size());
  // Generator lists per cell and degree.
  std::vector<std::vector<std::vector<int>>> gens(c.size());
  for_each_index(static_cast<int>(cells.size()), exec, [&](int i) {
    int id = cells[i];
    auto mask = star_mask<K>(c, id);
    gens[id].resize(degrees);
    for (int q = 0; q < degrees; ++q)
      for (std::size_t g = 0; g < k->base[q].size(); ++g)
        if (mask[k->base[q][g]]) gens[id][q].push_back(static_cast<int>(g));
    s.set_stalk(id, k->restrict_to(mask));
  });
  for_each_index(static_cast<int>(cells.size()), exec, [&](int i) {
    int id = cells[i];
    for (int u : s.carrier_upset(id)) {
      ChainMap<K> f;
      f.lo = lo;
      for (int q = 0; q < degrees; ++q) {
        const auto& src = gens[id][q];
        const auto& dst = gens[u][q];
        std::vector<Triplet<K>> t;
        // dst is a sorted subsequence of src.
        std::size_t a = 0;
        for (std::size_t b = 0; b < dst.size(); ++b) {
          while (src[a] != dst[b]) ++a;
          t.push_back({static_cast<int>(b), static_cast<int>(a), K(1)});
        }
        f.components.push_back(
            SparseMatrix<K>::from_triplets(static_cast<int>(dst.size()), static_cast<int>(src.size()), std::move(t)));
      }
      s.set_restriction(id, u, std::move(f));
    }
  });
  s.set_presentation(std::move(k));
  return s;
}

// Cancels every invertible same-base entry of the differential (Gaussian
// elimination of a contractible summand I_x -> I_x). The result is
// homotopy equivalent and has no same-base entries: it is the minimal
// injective complex, whose generators at x count the local costalk.
template <class K>
InjectiveComplex<K> minimize(const InjectiveComplex<K>& in) {
  int degrees = static_cast<int>(in.base.size());
  using Line = std::unordered_map<int, K>;
  std::vector<std::vector<Line>> col(std::max(0, degrees - 1)), row(std::max(0, degrees - 1));
  std::vector<std::vector<char>> alive(degrees);
  for (int i = 0; i < degrees; ++i) alive[i].assign(in.base[i].size(), 1);
  for (int i = 0; i + 1 < degrees; ++i) {
    col[i].resize(in.base[i].size());
    row[i].resize(in.base[i + 1].size());
    for (int g = 0; g < in.d[i].cols(); ++g)
      for (const auto& [h, v] : in.d[i].column(g)) {
        col[i][g].emplace(h, v);
        row[i][h].emplace(g, v);
      }
  }
  for (int i = 0; i + 1 < degrees; ++i) {
    const auto& bsrc = in.base[i];
    const auto& bdst = in.base[i + 1];
    std::vector<int> work;
    for (int g = static_cast<int>(bsrc.size()) - 1; g >= 0; --g) work.push_back(g);
    std::vector<char> queued(bsrc.size(), 1);
    while (!work.empty()) {
      int g = work.back();
      work.pop_back();
      queued[g] = 0;
      if (!alive[i][g]) continue;
      int h = -1;
      std::size_t best = 0;
      for (const auto& [r, v] : col[i][g])
        if (bdst[r] == bsrc[g] && (h < 0 || row[i][r].size() < best)) {
          h = r;
          best = row[i][r].size();
        }
      if (h < 0) continue;
      K inv = K(1) / col[i][g].at(h);
      // Schur complement on the remaining block.
      std::vector<std::pair<int, K>> gamma, beta;
      for (const auto& [r, v] : col[i][g])
        if (r != h) gamma.emplace_back(r, v);
      for (const auto& [s, v] : row[i][h])
        if (s != g) beta.emplace_back(s, v);
      for (const auto& [s, bv] : beta) {
        K fs = bv * inv;
        for (const auto& [r, gv] : gamma) {
          K delta = gv * fs;
          auto& cell = col[i][s][r];
          cell -= delta;
          if (is_zero(cell)) {
            col[i][s].erase(r);
            row[i][r].erase(s);
          } else {
            row[i][r][s] = cell;
          }
        }
        if (!queued[s]) {
          queued[s] = 1;
          work.push_back(s);
        }
      }
      for (const auto& [r, v] : col[i][g]) row[i][r].erase(g);
      col[i][g].clear();
      for (const auto& [s, v] : row[i][h]) col[i][s].erase(h);
      row[i][h].clear();
      alive[i][g] = 0;
      alive[i + 1][h] = 0;
      if (i > 0) {
        for (const auto& [t, v] : row[i - 1][g]) col[i - 1][t].erase(g);
        row[i - 1][g].clear();
      }
      if (i + 2 < degrees) {
        for (const auto& [u, v] : col[i + 1][h]) row[i + 1][u].erase(h);
        col[i + 1][h].clear();
      }
    }
  }
  // Compact, dropping empty degrees at both ends.
  std::vector<std::vector<int>> pos(degrees);
  std::vector<std::vector<int>> base(degrees);
  for (int i = 0; i < degrees; ++i) {
    pos[i].assign(in.base[i].size(), -1);
    for (std::size_t g = 0; g < in.base[i].size(); ++g)
      if (alive[i][g]) {
        pos[i][g] = static_cast<int>(base[i].size());
        base[i].push_back(in.base[i][g]);
      }
  }
  int first = 0, last = degrees - 1;
  while (first <= last && base[first].empty()) ++first;
  while (last >= first && base[last].empty()) --last;
  InjectiveComplex<K> out;
  out.complex = in.complex;
  if (first > last) {
    out.lo = in.lo;
    return out;
  }
  out.lo = in.lo + first;
  for (int i = first; i <= last; ++i) out.base.push_back(base[i]);
  for (int i = first; i < last; ++i) {
    std::vector<Triplet<K>> t;
    for (std::size_t g = 0; g < col[i].size(); ++g) {
      if (!alive[i][g]) continue;
      for (const auto& [h, v] : col[i][g]) t.push_back({pos[i + 1][h], pos[i][g], v});
    }
    out.d.push_back(SparseMatrix<K>::from_triplets(static_cast<int>(base[i + 1].size()),
                                                   static_cast<int>(base[i].size()), std::move(t)));
  }
  return out;
}

}  // namespace icsheaf
