#pragma once

#include <algorithm>
#include <utility>
#include <type_traits>
#include <vector>

#include "icsheaf/field.hpp"

namespace icsheaf {

// Sorted by index, no stored zeros.
template <class K>
using SparseVec = std::vector<std::pair<int, K>>;

// y += a * x
template <class K>
void axpy(SparseVec<K>& y, const std::type_identity_t<K>& a, const SparseVec<K>& x) {
  if (is_zero(a) || x.empty()) return;
  SparseVec<K> out;
  out.reserve(y.size() + x.size());
  auto i = y.begin();
  auto j = x.begin();
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->first < j->first)) {
      out.push_back(std::move(*i));
      ++i;
    } else if (i == y.end() || j->first < i->first) {
      out.emplace_back(j->first, a * j->second);
      ++j;
    } else {
      K v = i->second + a * j->second;
      if (!is_zero(v)) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  y.swap(out);
}

template <class K>
struct Triplet {
  int row;
  int col;
  K value;
};

// Column-compressed sparse matrix.
template <class K>
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix from_triplets(int rows, int cols, std::vector<Triplet<K>> t) {
    SparseMatrix m(rows, cols);
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
      return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    for (std::size_t i = 0; i < t.size();) {
      std::size_t j = i;
      K sum = t[i].value;
      while (++j < t.size() && t[j].col == t[i].col && t[j].row == t[i].row) sum += t[j].value;
      if (!is_zero(sum)) m.columns_[t[i].col].emplace_back(t[i].row, std::move(sum));
      i = j;
    }
    return m;
  }

  static SparseMatrix identity(int n) {
    SparseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.columns_[i].emplace_back(i, K(1));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SparseVec<K>& column(int c) const { return columns_[c]; }
  void set_column(int c, SparseVec<K> v) { columns_[c] = std::move(v); }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
  }
  bool is_zero_matrix() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
  }

  K at(int r, int c) const {
    const auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int v) { return e.first < v; });
    return (it != col.end() && it->first == r) ? it->second : K(0);
  }

  SparseVec<K> apply(const SparseVec<K>& x) const {
    SparseVec<K> y;
    for (const auto& [j, v] : x) axpy(y, v, columns_[j]);
    return y;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int c = 0; c < cols_; ++c)
      for (const auto& [r, v] : columns_[c]) t.columns_[r].emplace_back(c, v);
    return t;
  }

  // Rows and columns picked by index lists (a submatrix), in list order.
  SparseMatrix select(const std::vector<int>& row_map, int new_rows, const std::vector<int>& cols) const {
    // row_map[r] = new row index or -1.
    SparseMatrix m(new_rows, static_cast<int>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) {
      auto& out = m.columns_[k];
      for (const auto& [r, v] : columns_[cols[k]])
        if (row_map[r] >= 0) out.emplace_back(row_map[r], v);
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return m;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error("ShapeMismatch");
    SparseMatrix m(a.rows_, b.cols_);
    for (int c = 0; c < b.cols_; ++c) m.columns_[c] = a.apply(b.columns_[c]);
    return m;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("ShapeMismatch");
    SparseMatrix m = a;
    for (int c = 0; c < a.cols_; ++c) axpy(m.columns_[c], K(1), b.columns_[c]);
    return m;
  }

  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error("ShapeMismatch");
    SparseMatrix m = a;
    for (int c = 0; c < a.cols_; ++c) axpy(m.columns_[c], K(-1), b.columns_[c]);
    return m;
  }

  SparseMatrix scaled(const K& s) const {
    if (is_zero(s)) return SparseMatrix(rows_, cols_);
    SparseMatrix m = *this;
    for (auto& col : m.columns_)
      for (auto& e : col) e.second = e.second * s;
    return m;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVec<K>> columns_;
};

// Assembles a matrix from scaled blocks placed at offsets.
template <class K>
class BlockBuilder {
 public:
  BlockBuilder(int rows, int cols) : rows_(rows), cols_(cols) {}

  void add(int r, int c, K v) {
    if (!is_zero(v)) t_.push_back({r, c, std::move(v)});
  }
  void add_block(int row_off, int col_off, const SparseMatrix<K>& m, const K& scale = K(1)) {
    for (int c = 0; c < m.cols(); ++c)
      for (const auto& [r, v] : m.column(c)) t_.push_back({row_off + r, col_off + c, v * scale});
  }
  void add_identity(int row_off, int col_off, int n, const K& scale = K(1)) {
    for (int i = 0; i < n; ++i) t_.push_back({row_off + i, col_off + i, scale});
  }
  SparseMatrix<K> build() { return SparseMatrix<K>::from_triplets(rows_, cols_, std::move(t_)); }

 private:
  int rows_;
  int cols_;
  std::vector<Triplet<K>> t_;
};

// Column echelon form keyed by the lowest nonzero row of each column.
template <class K>
class Echelon {
 public:
  explicit Echelon(int rows) : pivot_(rows, -1) {}

  // Reduces v against stored columns; stores and returns true if independent.
  bool insert(SparseVec<K> v) {
    reduce_low(v);
    if (v.empty()) return false;
    pivot_[v.back().first] = static_cast<int>(cols_.size());
    cols_.push_back(std::move(v));
    return true;
  }

  // Eliminates every pivot position of v; v is then a canonical
  // representative modulo the span.
  void reduce_full(SparseVec<K>& v) const {
    int bound = rows();
    for (;;) {
      int found = -1;
      for (std::size_t k = v.size(); k-- > 0;) {
        if (v[k].first >= bound) continue;
        if (pivot_[v[k].first] >= 0) {
          found = static_cast<int>(k);
          break;
        }
      }
      if (found < 0) return;
      bound = v[found].first;
      const auto& col = cols_[pivot_[bound]];
      K f = v[found].second / col.back().second;
      axpy(v, -f, col);
    }
  }

  int rank() const { return static_cast<int>(cols_.size()); }
  bool is_pivot(int row) const { return pivot_[row] >= 0; }
  int rows() const { return static_cast<int>(pivot_.size()); }

 private:
  void reduce_low(SparseVec<K>& v) const {
    while (!v.empty()) {
      int p = pivot_[v.back().first];
      if (p < 0) return;
      const auto& col = cols_[p];
      K f = v.back().second / col.back().second;
      axpy(v, -f, col);
    }
  }

  std::vector<int> pivot_;
  std::vector<SparseVec<K>> cols_;
};

template <class K>
int rank(const SparseMatrix<K>& m) {
  Echelon<K> e(m.rows());
  for (int c = 0; c < m.cols(); ++c) e.insert(m.column(c));
  return e.rank();
}

// Basis of ker(m) normalized so that basis[i] has a 1 at free[i] and zeros
// at all other free coordinates. The coordinates of a kernel vector are
// therefore its entries at the free positions.
template <class K>
struct KernelBasis {
  int ambient = 0;
  std::vector<int> free;
  std::vector<SparseVec<K>> basis;
  std::vector<int> slot;  // ambient index -> basis index or -1

  int dim() const { return static_cast<int>(basis.size()); }

  SparseVec<K> coordinates(const SparseVec<K>& z) const {
    SparseVec<K> out;
    for (const auto& [i, v] : z)
      if (slot[i] >= 0) out.emplace_back(slot[i], v);
    return out;
  }
};

template <class K>
KernelBasis<K> kernel(const SparseMatrix<K>& m) {
  KernelBasis<K> kb;
  kb.ambient = m.cols();
  kb.slot.assign(m.cols(), -1);
  std::vector<int> pivot(m.rows(), -1);
  std::vector<SparseVec<K>> reduced;
  std::vector<SparseVec<K>> track;
  for (int c = 0; c < m.cols(); ++c) {
    SparseVec<K> r = m.column(c);
    SparseVec<K> v{{c, K(1)}};
    while (!r.empty()) {
      int p = pivot[r.back().first];
      if (p < 0) break;
      K f = r.back().second / reduced[p].back().second;
      axpy(r, -f, reduced[p]);
      axpy(v, -f, track[p]);
    }
    if (r.empty()) {
      kb.free.push_back(c);
      kb.basis.push_back(std::move(v));
    } else {
      pivot[r.back().first] = static_cast<int>(reduced.size());
      reduced.push_back(std::move(r));
      track.push_back(std::move(v));
    }
  }
  for (std::size_t i = 0; i < kb.free.size(); ++i) kb.slot[kb.free[i]] = static_cast<int>(i);
  // Clear the other free coordinates. basis[i] only has entries <= free[i],
  // and earlier vectors are already clean, so coefficients can be read first.
  for (std::size_t i = 0; i < kb.basis.size(); ++i) {
    auto& b = kb.basis[i];
    std::vector<std::pair<int, K>> hits;
    for (const auto& [idx, v] : b)
      if (kb.slot[idx] >= 0 && kb.slot[idx] != static_cast<int>(i)) hits.emplace_back(kb.slot[idx], v);
    for (const auto& [s, v] : hits) axpy(b, K(-v), kb.basis[s]);
  }
  return kb;
}

}  // namespace icsheaf
