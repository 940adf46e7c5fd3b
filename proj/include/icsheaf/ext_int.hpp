#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace icsheaf {

// Integer extended by -inf and +inf. Used for perversity inverses and
// dimension bounds, where infinities must compare exactly.
class ExtInt {
 public:
  enum class Kind : std::int8_t { neg_inf = -1, finite = 0, pos_inf = 1 };

  constexpr ExtInt(long long v = 0) : kind_(Kind::finite), v_(v) {}  // NOLINT
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::pos_inf); }
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::neg_inf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr long long value() const { return v_; }

  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
    if (a.kind_ != Kind::finite) return std::strong_ordering::equal;
    return a.v_ <=> b.v_;
  }
  friend constexpr bool operator==(ExtInt a, ExtInt b) { return (a <=> b) == 0; }

  // a - b with a finite: flips infinities.
  friend constexpr ExtInt operator-(long long a, ExtInt b) {
    if (b.kind_ == Kind::pos_inf) return neg_inf();
    if (b.kind_ == Kind::neg_inf) return pos_inf();
    return ExtInt(a - b.v_);
  }

  std::string str() const {
    if (kind_ == Kind::pos_inf) return "inf";
    if (kind_ == Kind::neg_inf) return "-inf";
    return std::to_string(v_);
  }

 private:
  constexpr explicit ExtInt(Kind k) : kind_(k), v_(0) {}
  Kind kind_;
  long long v_;
};

}  // namespace icsheaf
