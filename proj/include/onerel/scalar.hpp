#pragma once

// Exact coefficient domains: arbitrary-precision integers, rationals, and
// prime fields. Every container in the library is templated on one of these.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace onerel {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when two values from incompatible coefficient domains meet.
class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Element of F_p. The modulus travels with the value so that mixing
/// fields is detected at run time.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw std::invalid_argument("ModP: modulus must be >= 2");
    auto r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += static_cast<std::int64_t>(modulus);
    value_ = static_cast<std::uint64_t>(r);
  }

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  friend ModP operator+(ModP a, ModP b) {
    check(a, b);
    auto s = a.value_ + b.value_;
    if (s >= a.modulus_) s -= a.modulus_;
    return raw(s, a.modulus_);
  }
  friend ModP operator-(ModP a, ModP b) {
    check(a, b);
    return raw(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + a.modulus_ - b.value_,
               a.modulus_);
  }
  friend ModP operator*(ModP a, ModP b) {
    check(a, b);
    return raw(static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.value_) * b.value_ %
                                          a.modulus_),
               a.modulus_);
  }
  ModP operator-() const { return raw(value_ == 0 ? 0 : modulus_ - value_, modulus_); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }

  /// Multiplicative inverse by Fermat; the modulus is assumed prime.
  ModP inverse() const {
    if (value_ == 0) throw std::domain_error("ModP: inverse of zero");
    ModP result = raw(1, modulus_), base = *this;
    for (auto k = modulus_ - 2; k > 0; k >>= 1) {
      if (k & 1) result *= base;
      base *= base;
    }
    return result;
  }

  friend bool operator==(ModP a, ModP b) { return a.value_ == b.value_ && a.modulus_ == b.modulus_; }

 private:
  static ModP raw(std::uint64_t v, std::uint64_t p) {
    ModP r;
    r.value_ = v;
    r.modulus_ = p;
    return r;
  }
  static void check(ModP a, ModP b) {
    if (a.modulus_ != b.modulus_) throw DomainMismatch("ModP: moduli differ");
  }

  std::uint64_t value_ = 0;
  std::uint64_t modulus_ = 2;
};

bool is_prime(std::uint64_t p);

/// Per-domain constants and formatting. A Domain value is the run-time
/// context of a coefficient type (only F_p needs any state).
template <class Scalar>
struct Domain;

template <>
struct Domain<Integer> {
  Integer zero() const { return 0; }
  Integer one() const { return 1; }
  Integer from_integer(const Integer& z) const { return z; }
  static bool is_zero(const Integer& a) { return sgn(a) == 0; }
  static bool is_unit(const Integer& a) { return a == 1 || a == -1; }
  static bool is_negative(const Integer& a) { return sgn(a) < 0; }
  static std::string format(const Integer& a) { return a.get_str(); }
  Integer parse(const std::string& text) const { return Integer(text); }
  std::string suffix() const { return {}; }
  friend bool operator==(const Domain&, const Domain&) { return true; }
};

template <>
struct Domain<Rational> {
  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_integer(const Integer& z) const { return Rational(z); }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool is_unit(const Rational& a) { return !is_zero(a); }
  static bool is_negative(const Rational& a) { return sgn(a) < 0; }
  static std::string format(const Rational& a) { return a.get_str(); }
  Rational parse(const std::string& text) const {
    Rational r(text);
    r.canonicalize();
    return r;
  }
  std::string suffix() const { return {}; }
  friend bool operator==(const Domain&, const Domain&) { return true; }
};

template <>
struct Domain<ModP> {
  explicit Domain(std::uint64_t p = 2) : modulus(p) {
    if (!is_prime(p)) throw std::invalid_argument("Domain<ModP>: " + std::to_string(p) + " is not prime");
  }
  ModP zero() const { return ModP(0, modulus); }
  ModP one() const { return ModP(1, modulus); }
  ModP from_integer(const Integer& z) const {
    Integer r = z % Integer(std::to_string(modulus));
    return ModP(r.get_si(), modulus);
  }
  static bool is_zero(const ModP& a) { return a.value() == 0; }
  static bool is_unit(const ModP& a) { return a.value() != 0; }
  static bool is_negative(const ModP&) { return false; }
  static std::string format(const ModP& a) { return std::to_string(a.value()); }
  ModP parse(const std::string& text) const { return from_integer(Integer(text)); }
  std::string suffix() const { return " (mod " + std::to_string(modulus) + ")"; }
  friend bool operator==(const Domain& a, const Domain& b) { return a.modulus == b.modulus; }

  std::uint64_t modulus;
};

}  // namespace onerel
