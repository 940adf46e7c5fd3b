#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "icsheaf/error.hpp"
#include "icsheaf/sparse.hpp"

namespace icsheaf {

// Betti numbers over an explicit degree window; zero outside.
struct CohomologyResult {
  int lo = 0;
  std::vector<long> betti;

  long at(int degree) const {
    int i = degree - lo;
    return (i < 0 || i >= static_cast<int>(betti.size())) ? 0 : betti[i];
  }
  int hi() const { return lo + static_cast<int>(betti.size()) - 1; }
  bool is_zero() const {
    return std::all_of(betti.begin(), betti.end(), [](long b) { return b == 0; });
  }
  long euler() const {
    long e = 0;
    for (int d = lo; d <= hi(); ++d) e += ((d % 2 == 0) ? 1 : -1) * at(d);
    return e;
  }
  // Dense list for degrees first..last.
  std::vector<long> range(int first, int last) const {
    std::vector<long> out;
    for (int d = first; d <= last; ++d) out.push_back(at(d));
    return out;
  }
  // Equal as functions on all degrees.
  friend bool operator==(const CohomologyResult& a, const CohomologyResult& b) {
    int lo = std::min(a.lo, b.lo);
    int hi = std::max(a.hi(), b.hi());
    for (int d = lo; d <= hi; ++d)
      if (a.at(d) != b.at(d)) return false;
    return true;
  }
};

// Bounded cochain complex C^lo -> ... -> C^hi with d^i : C^i -> C^{i+1}.
// An empty dims list is the zero complex.
template <class K>
class CochainComplex {
 public:
  CochainComplex() = default;

  // diffs[i] is d^{lo+i}; either dims.size()-1 entries (interior) or
  // dims.size() entries (last one must map to zero).
  CochainComplex(int lo, std::vector<int> dims, std::vector<SparseMatrix<K>> diffs)
      : lo_(lo), dims_(std::move(dims)) {
    int n = static_cast<int>(dims_.size());
    if (static_cast<int>(diffs.size()) != n - 1 && !(n == 0 && diffs.empty()))
      throw Error("ShapeMismatch", "differential count");
    d_.reserve(n + 1);
    d_.emplace_back(n ? dims_[0] : 0, 0);
    for (int i = 0; i + 1 < n; ++i) {
      if (diffs[i].rows() != dims_[i + 1] || diffs[i].cols() != dims_[i])
        throw Error("ShapeMismatch", "d^" + std::to_string(lo + i));
      d_.push_back(std::move(diffs[i]));
    }
    if (n) d_.emplace_back(0, dims_[n - 1]);
  }

  static CochainComplex concentrated(int degree, int dim) { return CochainComplex(degree, {dim}, {}); }

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  bool empty_window() const { return dims_.empty(); }
  const std::vector<int>& dims() const { return dims_; }
  int dim(int i) const {
    int k = i - lo_;
    return (k < 0 || k >= static_cast<int>(dims_.size())) ? 0 : dims_[k];
  }
  long total_dim() const {
    long t = 0;
    for (int d : dims_) t += d;
    return t;
  }
  // d^i : C^i -> C^{i+1}, with correct shape in every degree.
  const SparseMatrix<K>& d(int i) const {
    int k = i - lo_ + 1;
    if (k < 0 || k >= static_cast<int>(d_.size())) return empty_;
    return d_[k];
  }

  void validate() const {
    for (int i = lo_ - 1; i < hi(); ++i)
      if (!(d(i + 1) * d(i)).is_zero_matrix()) throw Error("DifferentialSquareNonzero", std::to_string(i));
  }

  friend bool operator==(const CochainComplex& a, const CochainComplex& b) {
    return a.lo_ == b.lo_ && a.dims_ == b.dims_ && a.d_ == b.d_;
  }

 private:
  int lo_ = 0;
  std::vector<int> dims_;
  std::vector<SparseMatrix<K>> d_;  // d^{lo-1} .. d^{hi}
  static inline const SparseMatrix<K> empty_{};
};

template <class K>
CohomologyResult cohomology(const CochainComplex<K>& c, bool check = true) {
  if (check) c.validate();
  CohomologyResult r;
  r.lo = c.lo();
  std::vector<int> ranks;
  for (int i = c.lo() - 1; i <= c.hi(); ++i) ranks.push_back(rank(c.d(i)));
  for (int i = c.lo(); i <= c.hi(); ++i) {
    int k = i - c.lo();
    r.betti.push_back(c.dim(i) - ranks[k + 1] - ranks[k]);
  }
  return r;
}

// Degree-0 map of complexes; components[i] acts in degree lo + i.
template <class K>
struct ChainMap {
  int lo = 0;
  std::vector<SparseMatrix<K>> components;

  const SparseMatrix<K>* at(int i) const {
    int k = i - lo;
    return (k < 0 || k >= static_cast<int>(components.size())) ? nullptr : &components[k];
  }
  friend bool operator==(const ChainMap&, const ChainMap&) = default;
};

template <class K>
SparseMatrix<K> component(const ChainMap<K>& f, int i, int rows, int cols) {
  const auto* m = f.at(i);
  if (m) {
    if (m->rows() != rows || m->cols() != cols) throw Error("ShapeMismatch", "chain map in degree " + std::to_string(i));
    return *m;
  }
  return SparseMatrix<K>(rows, cols);
}

template <class K>
ChainMap<K> identity_map(const CochainComplex<K>& a) {
  ChainMap<K> f;
  f.lo = a.lo();
  for (int i = a.lo(); i <= a.hi(); ++i) f.components.push_back(SparseMatrix<K>::identity(a.dim(i)));
  return f;
}

template <class K>
ChainMap<K> compose(const ChainMap<K>& g, const ChainMap<K>& f, const CochainComplex<K>& a,
                    const CochainComplex<K>& b, const CochainComplex<K>& c) {
  ChainMap<K> h;
  h.lo = a.lo();
  for (int i = a.lo(); i <= a.hi(); ++i)
    h.components.push_back(component(g, i, c.dim(i), b.dim(i)) * component(f, i, b.dim(i), a.dim(i)));
  return h;
}

template <class K>
void check_chain_map(const CochainComplex<K>& a, const CochainComplex<K>& b, const ChainMap<K>& f) {
  int lo = std::min(a.lo(), b.lo()) - 1;
  int hi = std::max(a.hi(), b.hi());
  for (int i = lo; i <= hi; ++i) {
    auto fi = component(f, i, b.dim(i), a.dim(i));
    auto fn = component(f, i + 1, b.dim(i + 1), a.dim(i + 1));
    if (!(fn * a.d(i) == b.d(i) * fi)) throw Error("NotChainMap", std::to_string(i));
  }
}

// cone(f)^i = A^{i+1} + B^i, d(a, b) = (-d a, f a + d b).
template <class K>
CochainComplex<K> cone(const CochainComplex<K>& a, const CochainComplex<K>& b, const ChainMap<K>& f,
                       bool check = true) {
  if (check) check_chain_map(a, b, f);
  if (a.empty_window() && b.empty_window()) return {};
  int lo = a.empty_window() ? b.lo() : a.lo() - 1;
  int hi = a.empty_window() ? b.hi() : a.hi() - 1;
  if (!b.empty_window()) {
    lo = std::min(lo, b.lo());
    hi = std::max(hi, b.hi());
  }
  std::vector<int> dims;
  for (int i = lo; i <= hi; ++i) dims.push_back(a.dim(i + 1) + b.dim(i));
  std::vector<SparseMatrix<K>> diffs;
  for (int i = lo; i < hi; ++i) {
    BlockBuilder<K> bb(a.dim(i + 2) + b.dim(i + 1), a.dim(i + 1) + b.dim(i));
    bb.add_block(0, 0, a.d(i + 1), K(-1));
    bb.add_block(a.dim(i + 2), 0, component(f, i + 1, b.dim(i + 1), a.dim(i + 1)));
    bb.add_block(a.dim(i + 2), a.dim(i + 1), b.d(i));
    diffs.push_back(bb.build());
  }
  return CochainComplex<K>(lo, std::move(dims), std::move(diffs));
}

// (C[m])^i = C^{i+m}, differential scaled by (-1)^m.
template <class K>
CochainComplex<K> shift(const CochainComplex<K>& c, int m) {
  if (c.empty_window()) return c;
  std::vector<SparseMatrix<K>> diffs;
  K sign = (m % 2 == 0) ? K(1) : K(-1);
  for (int i = c.lo(); i < c.hi(); ++i) diffs.push_back(c.d(i).scaled(sign));
  return CochainComplex<K>(c.lo() - m, c.dims(), std::move(diffs));
}

// Rank of H^i(f) : H^i(A) -> H^i(B).
template <class K>
int induced_rank(const CochainComplex<K>& a, const CochainComplex<K>& b, const ChainMap<K>& f, int i) {
  auto z = kernel(a.d(i));
  auto fi = component(f, i, b.dim(i), a.dim(i));
  const auto& bd = b.d(i - 1);
  Echelon<K> e(b.dim(i));
  for (int c = 0; c < bd.cols(); ++c) e.insert(bd.column(c));
  int boundary_rank = e.rank();
  for (const auto& v : z.basis) e.insert(fi.apply(v));
  return e.rank() - boundary_rank;
}

// Whether H^i(f) is an isomorphism, with the defect dim ker + dim coker.
struct IsoCheck {
  long source = 0;
  long target = 0;
  long rank = 0;
  bool iso() const { return rank == source && rank == target; }
  long defect() const { return (source - rank) + (target - rank); }
};

template <class K>
IsoCheck induced_iso(const CochainComplex<K>& a, const CohomologyResult& ha, const CochainComplex<K>& b,
                     const CohomologyResult& hb, const ChainMap<K>& f, int i) {
  IsoCheck r{ha.at(i), hb.at(i), 0};
  if (r.source == 0 || r.target == 0) return r;
  r.rank = induced_rank(a, b, f, i);
  return r;
}

// Basis of H^i(C) as a quotient Z / B with canonical coordinates.
template <class K>
class CohomologyBasis {
 public:
  CohomologyBasis(const CochainComplex<K>& c, int i) : z_(kernel(c.d(i))), b_(z_.dim()) {
    const auto& bd = c.d(i - 1);
    for (int col = 0; col < bd.cols(); ++col) b_.insert(z_.coordinates(bd.column(col)));
    for (int k = 0; k < z_.dim(); ++k)
      if (!b_.is_pivot(k)) complement_.push_back(k);
    slot_.assign(z_.dim(), -1);
    for (std::size_t k = 0; k < complement_.size(); ++k) slot_[complement_[k]] = static_cast<int>(k);
  }

  int dim() const { return static_cast<int>(complement_.size()); }
  // Cocycle representing basis class k.
  const SparseVec<K>& representative(int k) const { return z_.basis[complement_[k]]; }
  // Class of a cocycle in this basis.
  SparseVec<K> coordinates(const SparseVec<K>& cocycle) const {
    SparseVec<K> w = z_.coordinates(cocycle);
    b_.reduce_full(w);
    SparseVec<K> out;
    for (const auto& [k, v] : w)
      if (slot_[k] >= 0) out.emplace_back(slot_[k], v);
    return out;
  }

 private:
  KernelBasis<K> z_;
  Echelon<K> b_;
  std::vector<int> complement_;
  std::vector<int> slot_;
};

// First-quadrant style double complex with dh : C^{p,q} -> C^{p+1,q} and
// dv : C^{p,q} -> C^{p,q+1}, commuting squares.
template <class K>
class DoubleComplex {
 public:
  DoubleComplex(int p_lo, int p_hi, int q_lo, int q_hi)
      : p_lo_(p_lo), p_hi_(p_hi), q_lo_(q_lo), q_hi_(q_hi),
        dims_(cells(), 0), dh_(cells()), dv_(cells()) {}

  int p_lo() const { return p_lo_; }
  int p_hi() const { return p_hi_; }
  int q_lo() const { return q_lo_; }
  int q_hi() const { return q_hi_; }
  bool inside(int p, int q) const { return p >= p_lo_ && p <= p_hi_ && q >= q_lo_ && q <= q_hi_; }

  int dim(int p, int q) const { return inside(p, q) ? dims_[idx(p, q)] : 0; }
  void set_dim(int p, int q, int d) { dims_[idx(p, q)] = d; }
  void set_dh(int p, int q, SparseMatrix<K> m) { dh_[idx(p, q)] = std::move(m); }
  void set_dv(int p, int q, SparseMatrix<K> m) { dv_[idx(p, q)] = std::move(m); }

  SparseMatrix<K> dh(int p, int q) const {
    if (!inside(p, q) || !inside(p + 1, q)) return SparseMatrix<K>(dim(p + 1, q), dim(p, q));
    const auto& m = dh_[idx(p, q)];
    if (m.rows() != dim(p + 1, q) || m.cols() != dim(p, q)) return SparseMatrix<K>(dim(p + 1, q), dim(p, q));
    return m;
  }
  SparseMatrix<K> dv(int p, int q) const {
    if (!inside(p, q) || !inside(p, q + 1)) return SparseMatrix<K>(dim(p, q + 1), dim(p, q));
    const auto& m = dv_[idx(p, q)];
    if (m.rows() != dim(p, q + 1) || m.cols() != dim(p, q)) return SparseMatrix<K>(dim(p, q + 1), dim(p, q));
    return m;
  }

  void validate() const {
    for (int p = p_lo_; p <= p_hi_; ++p)
      for (int q = q_lo_; q <= q_hi_; ++q) {
        bool ok = (dh(p + 1, q) * dh(p, q)).is_zero_matrix() && (dv(p, q + 1) * dv(p, q)).is_zero_matrix() &&
                  dv(p + 1, q) * dh(p, q) == dh(p, q + 1) * dv(p, q);
        if (!ok) throw Error("SquareNonzero", std::to_string(p) + "," + std::to_string(q));
      }
  }

  // Offset of block (p, t - p) inside total degree t; blocks ordered by p.
  int total_offset(int p, int t) const {
    int off = 0;
    for (int pp = p_lo_; pp < p; ++pp) off += dim(pp, t - pp);
    return off;
  }
  int total_dim(int t) const { return total_offset(p_hi_ + 1, t); }

 private:
  int cells() const { return std::max(0, (p_hi_ - p_lo_ + 1) * (q_hi_ - q_lo_ + 1)); }
  int idx(int p, int q) const {
    if (!inside(p, q)) throw Error("ShapeMismatch", "double complex index");
    return (p - p_lo_) * (q_hi_ - q_lo_ + 1) + (q - q_lo_);
  }

  int p_lo_, p_hi_, q_lo_, q_hi_;
  std::vector<int> dims_;
  std::vector<SparseMatrix<K>> dh_, dv_;
};

// Tot^t = sum over p of C^{p, t-p}, D = dh + (-1)^p dv.
template <class K>
CochainComplex<K> total_complex(const DoubleComplex<K>& dc, bool check = true) {
  if (check) dc.validate();
  int lo = dc.p_lo() + dc.q_lo();
  int hi = dc.p_hi() + dc.q_hi();
  if (hi < lo) return {};
  std::vector<int> dims;
  for (int t = lo; t <= hi; ++t) dims.push_back(dc.total_dim(t));
  std::vector<SparseMatrix<K>> diffs;
  for (int t = lo; t < hi; ++t) {
    BlockBuilder<K> bb(dc.total_dim(t + 1), dc.total_dim(t));
    for (int p = dc.p_lo(); p <= dc.p_hi(); ++p) {
      int q = t - p;
      if (!dc.inside(p, q) || dc.dim(p, q) == 0) continue;
      int col = dc.total_offset(p, t);
      if (dc.inside(p + 1, q)) bb.add_block(dc.total_offset(p + 1, t + 1), col, dc.dh(p, q));
      if (dc.inside(p, q + 1)) bb.add_block(dc.total_offset(p, t + 1), col, dc.dv(p, q), K(p % 2 == 0 ? 1 : -1));
    }
    diffs.push_back(bb.build());
  }
  return CochainComplex<K>(lo, std::move(dims), std::move(diffs));
}

}  // namespace icsheaf
