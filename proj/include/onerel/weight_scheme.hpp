#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace onerel {

/// Letter index. X-letters occupy 0..m-1 and Y-letters m..m+n-1, which is
/// also the alphabet order xi_1 < ... < xi_m < eta_1 < ... < eta_n.
using Letter = std::uint8_t;

/// Raised for letters or generators outside the scheme's alphabet.
class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Alphabet X_1..X_m (weight 1) and Y_1..Y_n (weight e).
struct WeightScheme {
  int m = 1;
  int n = 0;
  int e = 1;

  WeightScheme() = default;
  WeightScheme(int m_, int n_, int e_) : m(m_), n(n_), e(e_) {
    if (m < 1 || n < 0 || e < 1) throw std::invalid_argument("WeightScheme: need m >= 1, n >= 0, e >= 1");
    if (m + n > 120) throw std::invalid_argument("WeightScheme: alphabet too large");
  }

  int letters() const { return m + n; }
  bool is_x(Letter l) const { return l < m; }
  int weight(Letter l) const {
    check(l);
    return l < m ? 1 : e;
  }
  void check(Letter l) const {
    if (l >= letters()) throw OutOfRange("letter index " + std::to_string(l) + " outside alphabet");
  }
  Letter x(int i) const {  // 1-based, as in x1
    if (i < 1 || i > m) throw OutOfRange("x" + std::to_string(i) + " outside 1.." + std::to_string(m));
    return static_cast<Letter>(i - 1);
  }
  Letter y(int j) const {
    if (j < 1 || j > n) throw OutOfRange("y" + std::to_string(j) + " outside 1.." + std::to_string(n));
    return static_cast<Letter>(m + j - 1);
  }
  /// Spelling in generator names, "x1" or "y2"; the algebra letters use
  /// the upper-case form.
  std::string name(Letter l, bool upper = false) const {
    check(l);
    if (l < m) return (upper ? "X" : "x") + std::to_string(l + 1);
    return (upper ? "Y" : "y") + std::to_string(l - m + 1);
  }

  friend bool operator==(const WeightScheme&, const WeightScheme&) = default;
  std::string str() const {
    return "(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ", e=" + std::to_string(e) + ")";
  }
};

inline void require_same(const WeightScheme& a, const WeightScheme& b) {
  if (!(a == b)) throw std::invalid_argument("weight scheme mismatch: " + a.str() + " vs " + b.str());
}

}  // namespace onerel
