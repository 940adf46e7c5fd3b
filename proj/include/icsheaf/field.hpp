#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "icsheaf/error.hpp"

namespace icsheaf {

using Rational = mpq_class;

// Element of Z/p. The prime is process-wide and must be fixed before any
// arithmetic; it is never changed while computations are running.
class Zp {
 public:
  Zp() = default;
  Zp(long long v) {  // NOLINT
    long long m = static_cast<long long>(p_);
    long long r = v % m;
    v_ = static_cast<std::uint32_t>(r < 0 ? r + m : r);
  }

  static void set_modulus(std::uint32_t p);
  static std::uint32_t modulus() { return p_; }
  std::uint32_t value() const { return v_; }

  friend Zp operator+(Zp a, Zp b) { return raw((a.v_ + std::uint64_t{b.v_}) % p_); }
  friend Zp operator-(Zp a, Zp b) { return raw((a.v_ + std::uint64_t{p_} - b.v_) % p_); }
  friend Zp operator*(Zp a, Zp b) { return raw(std::uint64_t{a.v_} * b.v_ % p_); }
  friend Zp operator/(Zp a, Zp b) { return a * b.inverse(); }
  Zp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_); }
  Zp& operator+=(Zp o) { return *this = *this + o; }
  Zp& operator-=(Zp o) { return *this = *this - o; }
  Zp& operator*=(Zp o) { return *this = *this * o; }
  Zp& operator/=(Zp o) { return *this = *this / o; }
  friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }

  Zp inverse() const;

 private:
  static Zp raw(std::uint64_t v) {
    Zp z;
    z.v_ = static_cast<std::uint32_t>(v);
    return z;
  }
  std::uint32_t v_ = 0;
  static inline std::uint32_t p_ = 2;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Zp& x) { return x.value() == 0; }

std::string to_string(const Rational& x);
std::string to_string(const Zp& x);

// Parses "a", "-a" or "a/b".
template <class K>
K parse_scalar(std::string_view text);
template <>
Rational parse_scalar<Rational>(std::string_view text);
template <>
Zp parse_scalar<Zp>(std::string_view text);

// Field choice as given on the command line: "Q", "Fp:<p>" or "F<p>".
struct FieldSpec {
  bool rational = true;
  std::uint32_t prime = 0;

  static FieldSpec parse(std::string_view text);
  std::string name() const;
};

}  // namespace icsheaf
