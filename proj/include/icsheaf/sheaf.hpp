#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "icsheaf/cochain.hpp"
#include "icsheaf/complex.hpp"
#include "icsheaf/kernels.hpp"

namespace icsheaf {

template <class K>
struct InjectiveComplex;

// Pads or re-anchors a complex to the window [lo, hi]; cohomology outside the
// window must vanish chain-level (dims zero there).
template <class K>
CochainComplex<K> rewindow(const CochainComplex<K>& c, int lo, int hi) {
  if (hi < lo) {
    if (c.total_dim() != 0) throw Error("ShapeMismatch", "window");
    return CochainComplex<K>(lo, {}, {});
  }
  if (c.lo() == lo && c.hi() == hi) return c;
  for (int i = c.lo(); i <= c.hi(); ++i)
    if ((i < lo || i > hi) && c.dim(i) != 0) throw Error("ShapeMismatch", "window");
  std::vector<int> dims;
  std::vector<SparseMatrix<K>> diffs;
  for (int i = lo; i <= hi; ++i) dims.push_back(c.dim(i));
  for (int i = lo; i < hi; ++i) {
    const auto& m = c.d(i);
    diffs.push_back(m.rows() == c.dim(i + 1) && m.cols() == c.dim(i) ? m : SparseMatrix<K>(c.dim(i + 1), c.dim(i)));
  }
  return CochainComplex<K>(lo, std::move(dims), std::move(diffs));
}

template <class K>
ChainMap<K> rewindow(const ChainMap<K>& f, const CochainComplex<K>& a, const CochainComplex<K>& b) {
  ChainMap<K> g;
  g.lo = a.lo();
  for (int i = a.lo(); i <= a.hi(); ++i) g.components.push_back(component(f, i, b.dim(i), a.dim(i)));
  return g;
}

// A complex of cellular sheaves on an up-closed carrier of a simplicial
// complex: a stalk complex per simplex and a chain map for every comparable
// pair s < t, all stalks sharing the degree window [lo, hi].
//
// Sheaves produced from injective presentations keep a pointer to it; the
// presentation then answers section and costalk queries directly.
template <class K>
class CellSheafComplex {
 public:
  CellSheafComplex() = default;
  CellSheafComplex(ComplexPtr complex, CellSet carrier, int lo, int hi)
      : complex_(std::move(complex)), carrier_(std::move(carrier)), lo_(lo), hi_(std::max(hi, lo - 1)) {
    int n = complex_->size();
    if (carrier_.universe() != n) throw Error("ShapeMismatch", "carrier");
    stalks_.assign(n, CochainComplex<K>(lo_, {}, {}));
    maps_.resize(n);
    for (int id = 0; id < n; ++id) {
      if (!carrier_.contains(id)) continue;
      stalks_[id] = rewindow(CochainComplex<K>(), lo_, hi_);
      int count = 0;
      for (int u : complex_->upset(id))
        if (carrier_.contains(u)) ++count;
      maps_[id].resize(count);
    }
  }

  const SimplicialComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  const CellSet& carrier() const { return carrier_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }

  const CochainComplex<K>& stalk(int id) const {
    check_cell(id);
    return stalks_[id];
  }
  void set_stalk(int id, CochainComplex<K> c) {
    check_cell(id);
    stalks_[id] = rewindow(c, lo_, hi_);
  }

  // Cells of the carrier strictly above id, in ascending order.
  std::vector<int> carrier_upset(int id) const {
    std::vector<int> out;
    for (int u : complex_->upset(id))
      if (carrier_.contains(u)) out.push_back(u);
    return out;
  }

  const ChainMap<K>& restriction(int from, int to) const { return maps_[from][slot(from, to)]; }
  void set_restriction(int from, int to, ChainMap<K> f) {
    maps_[from][slot(from, to)] = rewindow(f, stalks_[from], stalks_[to]);
  }

  // Fills every comparable pair from the cover maps already set.
  void compose_from_covers() {
    const auto& c = *complex_;
    for (int s = c.size() - 1; s >= 0; --s) {
      if (!carrier_.contains(s)) continue;
      for (int u : carrier_upset(s)) {
        if (c.simplex_dim(u) == c.simplex_dim(s) + 1) continue;
        int via = -1;
        for (int t : c.cofaces(s))
          if (c.is_face(t, u)) {
            via = t;
            break;
          }
        set_restriction(s, u, compose(restriction(via, u), restriction(s, via), stalks_[s], stalks_[via], stalks_[u]));
      }
    }
  }

  // d^2 = 0 on stalks, chain maps on all pairs, functoriality on all triples.
  void validate() const {
    const auto& c = *complex_;
    for (int s = 0; s < c.size(); ++s) {
      if (!carrier_.contains(s)) continue;
      try {
        stalks_[s].validate();
      } catch (const Error& e) {
        throw Error(e.kind(), c.name(s) + ": " + e.what());
      }
      for (int u : carrier_upset(s)) {
        const auto& f = restriction(s, u);
        try {
          check_chain_map(stalks_[s], stalks_[u], f);
        } catch (const Error& e) {
          throw Error(e.kind(), c.name(s) + "<" + c.name(u) + ": " + e.what());
        }
        for (int t : carrier_upset(s)) {
          if (t == u || !c.is_face(t, u)) continue;
          if (!(compose(restriction(t, u), restriction(s, t), stalks_[s], stalks_[t], stalks_[u]) == f))
            throw Error("NotFunctorial", c.name(s) + "<" + c.name(t) + "<" + c.name(u));
        }
      }
    }
  }

  const std::shared_ptr<const InjectiveComplex<K>>& presentation() const { return presentation_; }
  void set_presentation(std::shared_ptr<const InjectiveComplex<K>> p) { presentation_ = std::move(p); }

  long total_dim() const {
    long t = 0;
    for (int id = 0; id < complex_->size(); ++id)
      if (carrier_.contains(id)) t += stalks_[id].total_dim();
    return t;
  }

 private:
  void check_cell(int id) const {
    if (id < 0 || id >= complex_->size() || !carrier_.contains(id))
      throw Error("SimplexNotInCarrier", id >= 0 && id < complex_->size() ? complex_->name(id) : std::to_string(id));
  }
  int slot(int from, int to) const {
    check_cell(from);
    check_cell(to);
    int k = 0;
    for (int u : complex_->upset(from)) {
      if (u == to) return k;
      if (carrier_.contains(u)) ++k;
    }
    throw Error("NotAFace", complex_->name(from) + "<" + complex_->name(to));
  }

  ComplexPtr complex_;
  CellSet carrier_;
  int lo_ = 0;
  int hi_ = -1;
  std::vector<CochainComplex<K>> stalks_;
  std::vector<std::vector<ChainMap<K>>> maps_;
  std::shared_ptr<const InjectiveComplex<K>> presentation_;
};

// Rank-r constant sheaf in degree 0.
template <class K>
CellSheafComplex<K> constant_sheaf(ComplexPtr complex, const CellSet& carrier, int rank) {
  if (rank < 0) throw Error("BadRank", std::to_string(rank));
  CellSheafComplex<K> s(complex, carrier, 0, 0);
  auto stalk = CochainComplex<K>::concentrated(0, rank);
  for (int id : carrier.ids()) s.set_stalk(id, stalk);
  ChainMap<K> id_map = identity_map(stalk);
  for (int id : carrier.ids())
    for (int u : s.carrier_upset(id)) s.set_restriction(id, u, id_map);
  return s;
}

// Zero sheaf with an empty window.
template <class K>
CellSheafComplex<K> zero_sheaf(ComplexPtr complex, const CellSet& carrier) {
  return CellSheafComplex<K>(std::move(complex), carrier, 0, -1);
}

template <class K>
long stalk_cohomology(const CellSheafComplex<K>& s, int id, int j) {
  return cohomology(s.stalk(id), false).at(j);
}

// Stalk cohomology of every carrier cell (empty results elsewhere).
template <class K>
std::vector<CohomologyResult> stalk_table(const CellSheafComplex<K>& s, Exec exec = Exec::parallel) {
  std::vector<CohomologyResult> out(s.complex().size());
  auto cells = s.carrier().ids();
  for_each_index(static_cast<int>(cells.size()), exec, [&](int i) { out[cells[i]] = cohomology(s.stalk(cells[i]), false); });
  return out;
}

}  // namespace icsheaf
