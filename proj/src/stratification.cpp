#include "icsheaf/stratification.hpp"

#include <algorithm>
#include <numeric>

#include "icsheaf/error.hpp"

namespace icsheaf {

Stratification::Stratification(ComplexPtr complex, std::vector<int> depth)
    : complex_(std::move(complex)), depth_(std::move(depth)) {
  if (!complex_ || complex_->size() == 0) throw Error("EmptyComplex");
  if (static_cast<int>(depth_.size()) != complex_->size()) throw Error("BadDepth", "size mismatch");
  for (int d : depth_)
    if (d < 0) throw Error("BadDepth", std::to_string(d));
}

Stratification Stratification::trivial(ComplexPtr complex) {
  int size = complex ? complex->size() : 0;
  return Stratification(std::move(complex), std::vector<int>(size, 0));
}

void Stratification::validate() const {
  const auto& c = *complex_;
  int n = c.dim();
  for (int id = 0; id < c.size(); ++id)
    for (int f : c.faces(id))
      if (depth_[f] < depth_[id]) throw Error("NotClosed", std::to_string(n - depth_[id]));
  for (int id = 0; id < c.size(); ++id)
    if (c.simplex_dim(id) > n - depth_[id]) throw Error("DimensionExceeded", std::to_string(n - depth_[id]));
  for (int id = 0; id < c.size(); ++id) {
    bool ok = c.simplex_dim(id) == n && depth_[id] == 0;
    for (int u : c.upset(id)) {
      if (ok) break;
      ok = c.simplex_dim(u) == n && depth_[u] == 0;
    }
    if (!ok) throw Error("TopStratumNotDense", c.name(id));
  }
}

int Stratification::max_depth() const { return *std::max_element(depth_.begin(), depth_.end()); }

CellSet Stratification::skeleton(int j) const {
  CellSet s(complex_->size());
  int n = this->n();
  for (int id = 0; id < complex_->size(); ++id)
    if (depth_[id] >= n - j) s.insert(id);
  return s;
}

CellSet Stratification::singular() const { return skeleton(n() - 1); }

CellSet Stratification::open_part(int k) const {
  CellSet s(complex_->size());
  for (int id = 0; id < complex_->size(); ++id)
    if (depth_[id] < k) s.insert(id);
  return s;
}

CellSet Stratification::stratum(int k) const {
  CellSet s(complex_->size());
  for (int id = 0; id < complex_->size(); ++id)
    if (depth_[id] == k) s.insert(id);
  return s;
}

bool Stratification::is_trivial() const {
  return std::all_of(depth_.begin(), depth_.end(), [](int d) { return d == 0; });
}

std::vector<StratumComponent> stratum_components(const Stratification& s) {
  const auto& c = s.complex();
  std::vector<int> parent(c.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int id = 0; id < c.size(); ++id)
    for (int u : c.cofaces(id))
      if (s.depth(u) == s.depth(id)) parent[find(u)] = find(id);
  std::vector<int> slot(c.size(), -1);
  std::vector<StratumComponent> out;
  for (int id = 0; id < c.size(); ++id) {
    int r = find(id);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.push_back({s.depth(id), {}});
    }
    out[slot[r]].cells.push_back(id);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.depth < b.depth; });
  return out;
}

CellSet pseudoboundary(const Stratification& s) { return closure(s.complex(), s.stratum(1)); }

bool subject_to(const Stratification& s, const CellSet& sigma) { return s.singular() == sigma; }

Stratification default_stratification(ComplexPtr complex, const CellSet& sigma) {
  const auto& c = *complex;
  int n = c.dim();
  if (sigma.universe() != c.size() || !is_closed(c, sigma)) throw Error("DensityFailure", "not a subcomplex");
  std::vector<int> depth(c.size(), 0);
  for (int id = 0; id < c.size(); ++id) {
    if (!sigma.contains(id)) continue;
    if (c.simplex_dim(id) > n - 1) throw Error("DensityFailure", c.name(id));
    depth[id] = n - c.simplex_dim(id);
  }
  Stratification s(std::move(complex), std::move(depth));
  try {
    s.validate();
  } catch (const Error& e) {
    throw Error("DensityFailure", e.what());
  }
  return s;
}

}  // namespace icsheaf
