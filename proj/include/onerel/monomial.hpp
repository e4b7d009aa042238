#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <string>

#include "onerel/weight_scheme.hpp"

namespace onerel {

/// A word in the noncommuting letters, packed one byte per letter. The
/// empty word is the unit monomial. Natural order is lexicographic on
/// letter indices with a proper prefix sorting first.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<Letter> letters) {
    for (auto l : letters) letters_.push_back(static_cast<char>(l));
  }
  static Monomial letter(Letter l) { return Monomial{l}; }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }
  void push_back(Letter l) { letters_.push_back(static_cast<char>(l)); }
  void pop_back() { letters_.pop_back(); }

  Monomial substr(std::size_t pos, std::size_t count = std::string::npos) const {
    Monomial r;
    r.letters_ = letters_.substr(pos, count);
    return r;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.letters_.reserve(a.size() + b.size());
    r.letters_ = a.letters_;
    r.letters_ += b.letters_;
    return r;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    int c = a.letters_.compare(b.letters_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  const std::string& packed() const { return letters_; }

 private:
  std::string letters_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return std::hash<std::string>{}(m.packed()); }
};

/// a + e*b for a X-letters and b Y-letters.
inline int monomial_weight(const Monomial& mono, const WeightScheme& scheme) {
  int w = 0;
  for (std::size_t i = 0; i < mono.size(); ++i) w += scheme.weight(mono[i]);
  return w;
}

/// `X1*X2*Y1`; the unit monomial prints as `1`.
inline std::string format_monomial(const Monomial& mono, const WeightScheme& scheme) {
  if (mono.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < mono.size(); ++i) {
    if (i) s += '*';
    s += scheme.name(mono[i], true);
  }
  return s;
}

/// Order used for canonical storage: weight first, then lexicographic.
struct CanonicalOrder {
  WeightScheme scheme;
  bool operator()(const Monomial& a, const Monomial& b) const {
    int wa = monomial_weight(a, scheme), wb = monomial_weight(b, scheme);
    if (wa != wb) return wa < wb;
    return a < b;
  }
};

}  // namespace onerel
