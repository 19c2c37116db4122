#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace padic {

// A 64-bit integer extended with +infinity and -infinity.
//
// Valuations live in Z ∪ {+inf} (+inf is the valuation of zero) and norm
// exponents live in Z ∪ {-inf}; both use this type so that every norm
// inequality becomes an exact integer comparison.
class ExtInt {
public:
  constexpr ExtInt() = default;
  constexpr ExtInt(std::int64_t v) : kind_(Kind::finite), value_(v) {}

  static constexpr ExtInt pos_inf() { return ExtInt(Kind::pos_inf); }
  static constexpr ExtInt neg_inf() { return ExtInt(Kind::neg_inf); }

  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  std::int64_t value() const {
    if (!is_finite()) {
      throw std::logic_error("ExtInt::value() called on an infinite value");
    }
    return value_;
  }

  constexpr ExtInt operator-() const {
    switch (kind_) {
    case Kind::pos_inf: return neg_inf();
    case Kind::neg_inf: return pos_inf();
    default: return ExtInt(-value_);
    }
  }

  // inf + (-inf) is undefined and rejected.
  friend ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.is_finite() && b.is_finite()) {
      return ExtInt(a.value_ + b.value_);
    }
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) {
      throw std::domain_error("ExtInt: +inf + -inf is undefined");
    }
    return a.is_finite() ? b : a;
  }
  friend ExtInt operator-(ExtInt a, ExtInt b) { return a + (-b); }

  friend constexpr bool operator==(ExtInt a, ExtInt b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtInt a, ExtInt b) {
    if (a.kind_ != b.kind_) {
      return rank(a.kind_) <=> rank(b.kind_);
    }
    if (a.kind_ != Kind::finite) {
      return std::strong_ordering::equal;
    }
    return a.value_ <=> b.value_;
  }

  friend ExtInt min(ExtInt a, ExtInt b) { return b < a ? b : a; }
  friend ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

  std::string to_string() const {
    switch (kind_) {
    case Kind::pos_inf: return "+inf";
    case Kind::neg_inf: return "-inf";
    default: return std::to_string(value_);
    }
  }

private:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };
  explicit constexpr ExtInt(Kind k) : kind_(k) {}
  static constexpr int rank(Kind k) { return static_cast<int>(k); }

  Kind kind_ = Kind::finite;
  std::int64_t value_ = 0;
};

// v = +inf means "exactly zero".
using Valuation = ExtInt;
// e means a norm of p^e; -inf is the norm of zero.
using NormExponent = ExtInt;

} // namespace padic
