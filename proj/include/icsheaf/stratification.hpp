#pragma once

#include <vector>

#include "icsheaf/complex.hpp"

namespace icsheaf {

// Filtration of a complex by closed subcomplexes, stored as depth per simplex:
// depth(s) is the largest k with s in X^{n-k}, 0 on the open top stratum.
// Then U_k = {depth < k}, S_{n-k} = {depth == k}, Sigma = {depth >= 1}.
class Stratification {
 public:
  Stratification(ComplexPtr complex, std::vector<int> depth);
  static Stratification trivial(ComplexPtr complex);

  // Throws NotClosed(j), DimensionExceeded(j) or TopStratumNotDense(simplex).
  void validate() const;

  const SimplicialComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  int n() const { return complex_->dim(); }
  int depth(int id) const { return depth_[id]; }
  const std::vector<int>& depths() const { return depth_; }
  int max_depth() const;

  CellSet skeleton(int j) const;    // X^j
  CellSet singular() const;         // X^{n-1}
  CellSet open_part(int k) const;   // U_k
  CellSet stratum(int k) const;     // S_{n-k}
  bool is_trivial() const;

  friend bool operator==(const Stratification& a, const Stratification& b) {
    return a.complex_ == b.complex_ && a.depth_ == b.depth_;
  }

 private:
  ComplexPtr complex_;
  std::vector<int> depth_;
};

struct StratumComponent {
  int depth = 0;
  std::vector<int> cells;  // ascending ids
};

// Connected components of each stratum; cells are adjacent when one is a
// face of the other inside the stratum.
std::vector<StratumComponent> stratum_components(const Stratification& s);

CellSet pseudoboundary(const Stratification& s);
bool subject_to(const Stratification& s, const CellSet& sigma);

// Finest filtration subject to sigma: depth n - dim on sigma. Throws
// DensityFailure when the complement of sigma is not dense or sigma is
// not a subcomplex of dimension <= n - 1.
Stratification default_stratification(ComplexPtr complex, const CellSet& sigma);

}  // namespace icsheaf
