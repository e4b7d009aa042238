#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace onerel {

/// A weight value or the distinguished +infinity. Arithmetic refuses to
/// proceed through infinity; callers must branch on is_infinite().
class Valuation {
 public:
  constexpr Valuation() = default;  // +infinity
  constexpr explicit Valuation(int w) : value_(w), finite_(true) {}
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }
  int value() const {
    if (!finite_) throw std::domain_error("Valuation: value() of +infinity");
    return value_;
  }

  friend Valuation operator+(Valuation a, Valuation b) {
    if (!a.finite_ || !b.finite_) throw std::domain_error("Valuation: arithmetic on +infinity");
    return Valuation(a.value_ + b.value_);
  }

  friend constexpr bool operator==(Valuation a, Valuation b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
    if (a.finite_ && b.finite_) return a.value_ <=> b.value_;
    if (a.finite_ == b.finite_) return std::strong_ordering::equal;
    return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  std::string str() const { return finite_ ? std::to_string(value_) : "inf"; }

 private:
  int value_ = 0;
  bool finite_ = false;
};

}  // namespace onerel
