#include "icsheaf/field.hpp"

#include <charconv>

namespace icsheaf {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long parse_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error("BadScalar", std::string(s));
  return v;
}

}  // namespace

void Zp::set_modulus(std::uint32_t p) {
  if (!is_prime(p) || p > 2147483647u) throw Error("NotPrime", std::to_string(p));
  p_ = p;
}

Zp Zp::inverse() const {
  if (v_ == 0) throw Error("DivisionByZero");
  // Fermat: v^(p-2).
  std::uint64_t base = v_, result = 1, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return raw(result);
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Zp& x) { return std::to_string(x.value()); }

template <>
Rational parse_scalar<Rational>(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) throw Error("BadScalar", std::string(text));
  if (sgn(r.get_den()) == 0) throw Error("BadScalar", std::string(text));
  r.canonicalize();
  return r;
}

template <>
Zp parse_scalar<Zp>(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Zp(parse_int(text));
  Zp den(parse_int(text.substr(slash + 1)));
  if (is_zero(den)) throw Error("BadScalar", std::string(text));
  return Zp(parse_int(text.substr(0, slash))) / den;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  FieldSpec f;
  if (text == "Q") return f;
  std::string_view digits;
  if (text.substr(0, 3) == "Fp:")
    digits = text.substr(3);
  else if (text.substr(0, 1) == "F")
    digits = text.substr(1);
  else
    throw Error("UnknownField", std::string(text));
  long long p = 0;
  try {
    p = parse_int(digits);
  } catch (const Error&) {
    throw Error("UnknownField", std::string(text));
  }
  if (p < 2 || p > 2147483647 || !is_prime(static_cast<std::uint32_t>(p)))
    throw Error("NotPrime", std::string(digits));
  f.rational = false;
  f.prime = static_cast<std::uint32_t>(p);
  return f;
}

std::string FieldSpec::name() const { return rational ? "Q" : "F" + std::to_string(prime); }

}  // namespace icsheaf
