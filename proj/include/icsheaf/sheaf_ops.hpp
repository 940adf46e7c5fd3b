#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "icsheaf/ext_int.hpp"
#include "icsheaf/roos.hpp"
#include "icsheaf/stratification.hpp"

namespace icsheaf {

// Soft truncation: degrees below m kept, degree m replaced by ker d^m,
// nothing above. Restrictions preserve kernels.
template <class K>
CellSheafComplex<K> truncate(const CellSheafComplex<K>& s, int m, Exec exec = Exec::parallel) {
  if (m >= s.hi()) return s;
  if (m < s.lo()) return CellSheafComplex<K>(s.complex_ptr(), s.carrier(), s.lo(), s.lo() - 1);
  const auto& c = s.complex();
  CellSheafComplex<K> t(s.complex_ptr(), s.carrier(), s.lo(), m);
  auto cells = s.carrier().ids();
  std::vector<KernelBasis<K>> ker(c.size());
  for_each_index(static_cast<int>(cells.size()), exec, [&](int i) {
    int id = cells[i];
    const auto& st = s.stalk(id);
    ker[id] = kernel(st.d(m));
    std::vector<int> dims;
    std::vector<SparseMatrix<K>> diffs;
    for (int q = s.lo(); q < m; ++q) dims.push_back(st.dim(q));
    dims.push_back(ker[id].dim());
    for (int q = s.lo(); q + 1 < m; ++q) diffs.push_back(st.d(q));
    if (m > s.lo()) {
      const auto& last = st.d(m - 1);
      SparseMatrix<K> into(ker[id].dim(), last.cols());
      for (int col = 0; col < last.cols(); ++col) into.set_column(col, ker[id].coordinates(last.column(col)));
      diffs.push_back(std::move(into));
    }
    t.set_stalk(id, CochainComplex<K>(s.lo(), std::move(dims), std::move(diffs)));
  });
  for_each_index(static_cast<int>(cells.size()), exec, [&](int i) {
    int id = cells[i];
    for (int u : s.carrier_upset(id)) {
      const auto& f = s.restriction(id, u);
      ChainMap<K> g;
      g.lo = s.lo();
      for (int q = s.lo(); q < m; ++q) g.components.push_back(*f.at(q));
      const auto& fm = *f.at(m);
      SparseMatrix<K> top(ker[u].dim(), ker[id].dim());
      for (int b = 0; b < ker[id].dim(); ++b) top.set_column(b, ker[u].coordinates(fm.apply(ker[id].basis[b])));
      g.components.push_back(std::move(top));
      t.set_restriction(id, u, std::move(g));
    }
  });
  return t;
}

template <class K>
void require_open_in_carrier(const CellSheafComplex<K>& s, const CellSet& u) {
  const auto& c = s.complex();
  if (u.universe() != c.size() || !u.is_subset_of(s.carrier())) throw Error("NotOpenSubposet");
  for (int id : u.ids())
    for (int v : c.cofaces(id))
      if (s.carrier().contains(v) && !u.contains(v)) throw Error("NotOpenSubposet", c.name(id));
}

template <class K>
std::vector<bool> mask_of(const CellSet& u) {
  std::vector<bool> m(u.universe());
  for (int i = 0; i < u.universe(); ++i) m[i] = u.contains(i);
  return m;
}

enum class Route { automatic, roos };

// Derived sections over an up-closed u inside the carrier.
template <class K>
CochainComplex<K> sections(const CellSheafComplex<K>& s, const CellSet& u, Route route = Route::automatic) {
  require_open_in_carrier(s, u);
  if (route == Route::automatic && s.presentation()) return s.presentation()->restrict_to(mask_of<K>(u));
  return roos_sections(s, u);
}

template <class K>
CohomologyResult hypercohomology(const CellSheafComplex<K>& s, Route route = Route::automatic) {
  return cohomology(sections(s, s.carrier(), route), false);
}

// R i_* along u = carrier of s inside the up-closed v.
template <class K>
CellSheafComplex<K> pushforward(const CellSheafComplex<K>& s, const CellSet& v, Exec exec = Exec::parallel) {
  const auto& c = s.complex();
  if (v.universe() != c.size() || !s.carrier().is_subset_of(v)) throw Error("NotNested");
  if (!is_open(c, v) || !is_open(c, s.carrier())) throw Error("NotNested", "not open");
  std::shared_ptr<const InjectiveComplex<K>> k = s.presentation();
  if (!k) k = std::make_shared<const InjectiveComplex<K>>(roos_resolution(s, s.carrier()));
  return to_sheaf(std::move(k), v, exec);
}

// Comparison from the stalk at id to sections over u intersected with the
// deleted open star of id.
template <class K>
struct AttachmentComparison {
  CochainComplex<K> source;
  CochainComplex<K> target;
  ChainMap<K> map;
};

template <class K>
AttachmentComparison<K> attachment(const CellSheafComplex<K>& s, const CellSet& u, int id,
                                   Route route = Route::automatic) {
  const auto& c = s.complex();
  CellSet w = u & deleted_star(c, id);
  w = w & s.carrier();
  AttachmentComparison<K> a;
  a.source = s.stalk(id);
  a.map.lo = s.lo();
  if (route == Route::automatic && s.presentation()) {
    const auto& k = *s.presentation();
    auto mask = mask_of<K>(w);
    a.target = rewindow(k.restrict_to(mask), s.lo(), s.hi());
    auto star = star_mask<K>(c, id);
    for (int q = s.lo(); q <= s.hi(); ++q) {
      std::vector<Triplet<K>> t;
      int row = 0, col = 0;
      for (int x : (q - k.lo >= 0 && q <= k.hi()) ? k.base[q - k.lo] : std::vector<int>{}) {
        if (!star[x]) continue;
        if (mask[x]) t.push_back({row++, col, K(1)});
        ++col;
      }
      a.map.components.push_back(SparseMatrix<K>::from_triplets(row, col, std::move(t)));
    }
    return a;
  }
  // Chain model: degree-q component lands in the p = 0 block.
  auto m = roos_model(s, w);
  if (m.chains.max_p() < 0 || s.hi() < s.lo()) {
    a.target = CochainComplex<K>(s.lo(), {}, {});
    a.target = rewindow(a.target, s.lo(), s.hi());
    for (int q = s.lo(); q <= s.hi(); ++q) a.map.components.emplace_back(0, a.source.dim(q));
    return a;
  }
  a.target = rewindow(total_complex(m.dc, false), s.lo(), s.hi() + m.chains.max_p());
  a.map.components.clear();
  for (int q = s.lo(); q <= s.hi(); ++q) {
    BlockBuilder<K> b(a.target.dim(q), a.source.dim(q));
    const auto& singles = m.chains.by_length[0];
    for (std::size_t k = 0; k < singles.size(); ++k) {
      const auto* r = s.restriction(id, singles[k][0]).at(q);
      if (r) b.add_block(m.dc.total_offset(0, q) + m.chain_offset(0, q, static_cast<int>(k)), 0, *r);
    }
    a.map.components.push_back(b.build());
  }
  return a;
}

// Local costalk complex at the cell (cone of the attachment over the whole
// deleted star, shifted by -1), before the cell-dimension shift.
template <class K>
CochainComplex<K> costalk_complex(const CellSheafComplex<K>& s, int id, Route route = Route::automatic) {
  if (route == Route::automatic && s.presentation()) {
    std::vector<bool> only(s.complex().size(), false);
    only[id] = true;
    return s.presentation()->restrict_to(only);
  }
  auto a = attachment(s, s.carrier(), id, Route::roos);
  return shift(cone(a.source, a.target, a.map, false), -1);
}

// H^j(f_x^! S) for a point x in the open cell: local costalk shifted up by
// the cell dimension.
template <class K>
CohomologyResult costalk_cohomology(const CellSheafComplex<K>& s, int id, Route route = Route::automatic) {
  auto r = cohomology(costalk_complex(s, id, route), false);
  r.lo += s.complex().simplex_dim(id);
  return r;
}

template <class K>
std::vector<CohomologyResult> costalk_table(const CellSheafComplex<K>& s, Exec exec = Exec::parallel) {
  std::vector<CohomologyResult> out(s.complex().size());
  auto cells = s.carrier().ids();
  for_each_index(static_cast<int>(cells.size()), exec,
                 [&](int i) { out[cells[i]] = costalk_cohomology(s, cells[i]); });
  return out;
}

// Max dimension of cells (optionally within `within`) where table[id] is
// nonzero in degree j.
inline ExtInt support_dimension(const SimplicialComplex& c, const std::vector<CohomologyResult>& table, int j,
                                const CellSet* within = nullptr) {
  ExtInt best = ExtInt::neg_inf();
  for (int id = 0; id < c.size(); ++id) {
    if (within && !within->contains(id)) continue;
    if (table[id].at(j) != 0 && ExtInt(c.simplex_dim(id)) > best) best = ExtInt(c.simplex_dim(id));
  }
  return best;
}

template <class K>
ExtInt support_dimension(const CellSheafComplex<K>& s, int j) {
  return support_dimension(s.complex(), stalk_table(s), j);
}

template <class K>
ExtInt cosupport_dimension(const CellSheafComplex<K>& s, int j, const CellSet* restrict_to = nullptr) {
  return support_dimension(s.complex(), costalk_table(s), j, restrict_to);
}

struct ClcReport {
  bool pass = true;
  int from = -1;
  int to = -1;
  int degree = 0;
  long defect = 0;
};

// Restrictions along covers inside one stratum induce isomorphisms on
// stalk cohomology (composites then do too).
template <class K>
ClcReport clc_check(const CellSheafComplex<K>& s, const Stratification& strat,
                    const std::vector<CohomologyResult>* table = nullptr) {
  const auto& c = s.complex();
  std::vector<CohomologyResult> own;
  if (!table) {
    own = stalk_table(s);
    table = &own;
  }
  for (int id : s.carrier().ids())
    for (int u : c.cofaces(id)) {
      if (!s.carrier().contains(u) || strat.depth(u) != strat.depth(id)) continue;
      const auto& f = s.restriction(id, u);
      for (int q = s.lo(); q <= s.hi(); ++q) {
        auto iso = induced_iso(s.stalk(id), (*table)[id], s.stalk(u), (*table)[u], f, q);
        if (!iso.iso()) return {false, id, u, q, iso.defect()};
      }
    }
  return {};
}

// Sheaf of H^j when every stalk has cohomology only in degree j.
template <class K>
CellSheafComplex<K> cohomology_sheaf(const CellSheafComplex<K>& s, int j, Exec exec = Exec::parallel) {
  const auto& c = s.complex();
  CellSheafComplex<K> h(s.complex_ptr(), s.carrier(), j, j);
  auto cells = s.carrier().ids();
  std::vector<std::unique_ptr<CohomologyBasis<K>>> basis(c.size());
  for_each_index(static_cast<int>(cells.size()), exec, [&](int i) {
    int id = cells[i];
    basis[id] = std::make_unique<CohomologyBasis<K>>(s.stalk(id), j);
    h.set_stalk(id, CochainComplex<K>::concentrated(j, basis[id]->dim()));
  });
  for_each_index(static_cast<int>(cells.size()), exec, [&](int i) {
    int id = cells[i];
    for (int u : s.carrier_upset(id)) {
      const auto& f = *s.restriction(id, u).at(j);
      SparseMatrix<K> m(basis[u]->dim(), basis[id]->dim());
      for (int k = 0; k < basis[id]->dim(); ++k) m.set_column(k, basis[u]->coordinates(f.apply(basis[id]->representative(k))));
      ChainMap<K> g;
      g.lo = j;
      g.components.push_back(std::move(m));
      h.set_restriction(id, u, std::move(g));
    }
  });
  return h;
}

// Smaller quasi-isomorphic model with the same observables:
//  - cohomology concentrated in one degree: the cohomology sheaf;
//  - stalks already with zero differential: unchanged;
//  - otherwise the minimal injective model of (a resolution of) s.
template <class K>
CellSheafComplex<K> reduce(const CellSheafComplex<K>& s, Exec exec = Exec::parallel) {
  auto table = stalk_table(s, exec);
  std::optional<int> degree;
  bool single = true;
  for (int id : s.carrier().ids())
    for (int q = table[id].lo; q <= table[id].hi(); ++q) {
      if (table[id].at(q) == 0) continue;
      if (degree && *degree != q) single = false;
      degree = q;
    }
  if (!degree) return zero_sheaf<K>(s.complex_ptr(), s.carrier());
  if (single) return cohomology_sheaf(s, *degree, exec);
  bool flat = true;
  for (int id : s.carrier().ids())
    for (int q = s.lo(); q <= s.hi() && flat; ++q)
      if (!s.stalk(id).d(q).is_zero_matrix()) flat = false;
  if (flat) return s;
  std::shared_ptr<const InjectiveComplex<K>> k = s.presentation();
  auto mini = k ? minimize(*k) : minimize(roos_resolution(s, s.carrier()));
  return to_sheaf(std::make_shared<const InjectiveComplex<K>>(std::move(mini)), s.carrier(), exec);
}

}  // namespace icsheaf
