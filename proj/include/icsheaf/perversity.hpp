#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "icsheaf/ext_int.hpp"

namespace icsheaf {

enum class PerversityClass { traditional, super, sub, other };

std::string to_string(PerversityClass c);

// p(k) for k = 1..K, with p(k) <= p(k+1) <= p(k) + 1.
class Perversity {
 public:
  explicit Perversity(std::vector<int> values);

  // "zero", "top" (k-2) or "ultra" (k-1), tabulated on 1..max_codim.
  static Perversity preset(std::string_view name, int max_codim);
  // Values given from k = 2 upward; p(1) = p(2) - 1.
  static Perversity from_codim2(const std::vector<int>& values);

  int max_codim() const { return static_cast<int>(values_.size()); }
  int operator()(int k) const { return values_.at(k - 1); }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const Perversity&, const Perversity&) = default;

 private:
  std::vector<int> values_;
};

PerversityClass classify(const Perversity& p);

// A perversity on all of Z: core values on 1..n, linear tails of slope 0 or 1
// outside. The extension of a perversity has slopes (1, 0); its dual (0, 1).
class ExtendedPerversity {
 public:
  ExtendedPerversity(std::vector<int> core, int left_slope, int right_slope);

  long long operator()(long long k) const;
  int ambient_dim() const { return static_cast<int>(core_.size()); }
  const std::vector<int>& core() const { return core_; }
  int left_slope() const { return left_slope_; }
  int right_slope() const { return right_slope_; }

  friend bool operator==(const ExtendedPerversity&, const ExtendedPerversity&) = default;

 private:
  std::vector<int> core_;
  int left_slope_;
  int right_slope_;
};

// Throws UnderspecifiedRange when p stops short of n, unless grow_if_short,
// in which case the missing values continue with maximal growth.
ExtendedPerversity extend(const Perversity& p, int n, bool grow_if_short = false);
ExtendedPerversity dual(const ExtendedPerversity& p);

// min{c : p(c) >= j}; +inf above p(n); -inf when every value is >= j.
ExtInt inverse(const ExtendedPerversity& p, long long j);
ExtInt codim_threshold(const ExtendedPerversity& p);

// Array of integers or preset name.
Perversity parse_perversity(std::string_view text, int n);

}  // namespace icsheaf
