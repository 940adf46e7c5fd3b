#include "icsheaf/perversity.hpp"

#include <json.hpp>

#include "icsheaf/error.hpp"

namespace icsheaf {

namespace {

void check_growth(const std::vector<int>& v) {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i + 1] < v[i] || v[i + 1] > v[i] + 1) throw Error("GrowthViolation", std::to_string(i + 1));
}

}  // namespace

std::string to_string(PerversityClass c) {
  switch (c) {
    case PerversityClass::traditional: return "traditional";
    case PerversityClass::super: return "super";
    case PerversityClass::sub: return "sub";
    case PerversityClass::other: return "other";
  }
  return "other";
}

Perversity::Perversity(std::vector<int> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error("EmptyPerversity");
  check_growth(values_);
}

Perversity Perversity::preset(std::string_view name, int max_codim) {
  if (max_codim < 1) throw Error("UnderspecifiedRange", std::to_string(max_codim));
  std::vector<int> v(max_codim);
  for (int k = 1; k <= max_codim; ++k) {
    if (name == "zero")
      v[k - 1] = 0;
    else if (name == "top")
      v[k - 1] = k - 2;
    else if (name == "ultra")
      v[k - 1] = k - 1;
    else
      throw Error("UnknownPreset", std::string(name));
  }
  return Perversity(std::move(v));
}

Perversity Perversity::from_codim2(const std::vector<int>& values) {
  if (values.empty()) throw Error("EmptyPerversity");
  std::vector<int> v;
  v.reserve(values.size() + 1);
  v.push_back(values.front() - 1);
  v.insert(v.end(), values.begin(), values.end());
  return Perversity(std::move(v));
}

PerversityClass classify(const Perversity& p) {
  int p1 = p(1);
  int p2 = p.max_codim() >= 2 ? p(2) : p1 + 1;
  if (p2 > 0) return PerversityClass::super;
  if (p2 < 0) return PerversityClass::sub;
  return p1 == 0 ? PerversityClass::traditional : PerversityClass::other;
}

ExtendedPerversity::ExtendedPerversity(std::vector<int> core, int left_slope, int right_slope)
    : core_(std::move(core)), left_slope_(left_slope), right_slope_(right_slope) {
  if (core_.empty()) throw Error("UnderspecifiedRange", "0");
  if ((left_slope_ != 0 && left_slope_ != 1) || (right_slope_ != 0 && right_slope_ != 1))
    throw Error("GrowthViolation", "tail");
  check_growth(core_);
}

long long ExtendedPerversity::operator()(long long k) const {
  long long n = ambient_dim();
  if (k < 1) return core_.front() + left_slope_ * (k - 1);
  if (k > n) return core_.back() + right_slope_ * (k - n);
  return core_[k - 1];
}

ExtendedPerversity extend(const Perversity& p, int n, bool grow_if_short) {
  if (n < 1) throw Error("UnderspecifiedRange", std::to_string(n));
  std::vector<int> core = p.values();
  if (p.max_codim() < n) {
    if (!grow_if_short) throw Error("UnderspecifiedRange", std::to_string(p.max_codim()) + "<" + std::to_string(n));
    while (static_cast<int>(core.size()) < n) core.push_back(core.back() + 1);
  }
  core.resize(n);
  return ExtendedPerversity(std::move(core), 1, 0);
}

ExtendedPerversity dual(const ExtendedPerversity& p) {
  std::vector<int> q(p.core().size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    int k = static_cast<int>(i) + 1;
    q[i] = k - 2 - p.core()[i];
  }
  return ExtendedPerversity(std::move(q), 1 - p.left_slope(), 1 - p.right_slope());
}

ExtInt inverse(const ExtendedPerversity& p, long long j) {
  int n = p.ambient_dim();
  if (j > p(n)) return ExtInt::pos_inf();
  long long first = p(1);
  if (j <= first) {
    if (p.left_slope() == 0) return ExtInt::neg_inf();
    return ExtInt(j - first + 1);
  }
  for (int c = 2; c <= n; ++c)
    if (p(c) >= j) return ExtInt(c);
  return ExtInt::pos_inf();  // unreachable: j <= p(n)
}

ExtInt codim_threshold(const ExtendedPerversity& p) { return inverse(dual(p), 0); }

Perversity parse_perversity(std::string_view text, int n) {
  if (text == "zero" || text == "top" || text == "ultra") return Perversity::preset(text, std::max(n, 1));
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    throw Error("BadPerversity", std::string(text));
  }
  if (j.is_string()) return Perversity::preset(j.get<std::string>(), std::max(n, 1));
  if (!j.is_array()) throw Error("BadPerversity", std::string(text));
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error("BadPerversity", std::string(text));
    v.push_back(x.get<int>());
  }
  return Perversity(std::move(v));
}

}  // namespace icsheaf
