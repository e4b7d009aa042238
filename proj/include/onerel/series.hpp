#pragma once

// Truncated noncommutative power series over an exact coefficient domain:
// the computational image of the Magnus algebra Z<<X_1..X_m, Y_1..Y_n>>
// cut off at a fixed weight.

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "onerel/monomial.hpp"
#include "onerel/scalar.hpp"
#include "onerel/valuation.hpp"
#include "onerel/weight_scheme.hpp"

namespace onerel {

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SeriesParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class Scalar>
class Series {
 public:
  using Terms = std::map<Monomial, Scalar, CanonicalOrder>;

  Series(const WeightScheme& scheme, int cutoff, Domain<Scalar> domain = Domain<Scalar>())
      : scheme_(scheme), cutoff_(cutoff), domain_(domain), terms_(CanonicalOrder{scheme}) {
    if (cutoff < 0) throw std::invalid_argument("Series: cutoff must be >= 0");
  }

  static Series one(const WeightScheme& scheme, int cutoff, Domain<Scalar> domain = Domain<Scalar>()) {
    Series s(scheme, cutoff, domain);
    s.add_term(Monomial(), domain.one());
    return s;
  }
  /// The series consisting of the single letter l with coefficient 1.
  static Series letter(const WeightScheme& scheme, int cutoff, Letter l, Domain<Scalar> domain = Domain<Scalar>()) {
    scheme.check(l);
    Series s(scheme, cutoff, domain);
    s.add_term(Monomial::letter(l), domain.one());
    return s;
  }

  /// Accumulates c*mono; terms above the cutoff are discarded and zero
  /// coefficients are never stored.
  void add_term(const Monomial& mono, const Scalar& c) {
    if (monomial_weight(mono, scheme_) > cutoff_ || Domain<Scalar>::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (Domain<Scalar>::is_zero(it->second)) terms_.erase(it);
    }
  }

  const WeightScheme& scheme() const { return scheme_; }
  int cutoff() const { return cutoff_; }
  const Domain<Scalar>& domain() const { return domain_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// True when an operation on this value (or its inputs) mixed cutoffs and
  /// had to narrow to the smaller one.
  bool narrowed() const { return narrowed_; }

  Scalar coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? domain_.zero() : it->second;
  }
  Scalar constant_term() const { return coefficient(Monomial()); }

  /// Drops every term of weight > c. Raising the cutoff is not possible.
  Series truncated(int c) const {
    Series r(scheme_, std::min(c, cutoff_), domain_);
    r.narrowed_ = narrowed_;
    for (const auto& [mono, coef] : terms_)
      if (monomial_weight(mono, scheme_) <= r.cutoff_) r.terms_.emplace_hint(r.terms_.end(), mono, coef);
    return r;
  }

  Series operator-() const {
    Series r = *this;
    for (auto& [mono, coef] : r.terms_) coef = -coef;
    return r;
  }
  Series& operator+=(const Series& o) {
    merge_context(o);
    for (const auto& [mono, coef] : o.terms_) add_term(mono, coef);
    drop_above_cutoff();
    return *this;
  }
  Series& operator-=(const Series& o) {
    merge_context(o);
    for (const auto& [mono, coef] : o.terms_) add_term(mono, -coef);
    drop_above_cutoff();
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Scalar& c, Series a) {
    if (Domain<Scalar>::is_zero(c)) return Series(a.scheme_, a.cutoff_, a.domain_);
    for (auto& [mono, coef] : a.terms_) coef *= c;
    return a;
  }

  /// Equality is structural on the term association.
  friend bool operator==(const Series& a, const Series& b) {
    return a.scheme_ == b.scheme_ && a.domain_ == b.domain_ && a.terms_ == b.terms_;
  }

  template <class S>
  friend Series<S> mul(const Series<S>& f, const Series<S>& g);

 private:
  void merge_context(const Series& o) {
    require_same(scheme_, o.scheme_);
    if (!(domain_ == o.domain_)) throw DomainMismatch("Series: coefficient domains differ");
    if (o.cutoff_ != cutoff_) narrowed_ = true;
    narrowed_ = narrowed_ || o.narrowed_;
    cutoff_ = std::min(cutoff_, o.cutoff_);
  }
  void drop_above_cutoff() {
    while (!terms_.empty() && monomial_weight(std::prev(terms_.end())->first, scheme_) > cutoff_)
      terms_.erase(std::prev(terms_.end()));
  }

  WeightScheme scheme_;
  int cutoff_;
  Domain<Scalar> domain_;
  Terms terms_;
  bool narrowed_ = false;
};

/// Minimum weight over the stored terms, +infinity for the empty series.
/// For a truncated series +infinity only says "greater than the cutoff".
template <class Scalar>
Valuation valuation(const Series<Scalar>& f) {
  if (f.is_zero()) return Valuation::infinity();
  return Valuation(monomial_weight(f.terms().begin()->first, f.scheme()));
}

/// Noncommutative product, truncated at the smaller of the two cutoffs.
template <class Scalar>
Series<Scalar> mul(const Series<Scalar>& f, const Series<Scalar>& g) {
  require_same(f.scheme(), g.scheme());
  if (!(f.domain() == g.domain())) throw DomainMismatch("mul: coefficient domains differ");
  const int cutoff = std::min(f.cutoff(), g.cutoff());
  const auto& scheme = f.scheme();

  struct Factor {
    const Monomial* mono;
    const Scalar* coef;
    int weight;
  };
  std::vector<Factor> right;
  right.reserve(g.size());
  for (const auto& [mono, coef] : g.terms()) right.push_back({&mono, &coef, monomial_weight(mono, scheme)});

  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  for (const auto& [a, ca] : f.terms()) {
    const int wa = monomial_weight(a, scheme);
    if (wa > cutoff) break;
    for (const auto& b : right) {
      if (wa + b.weight > cutoff) break;
      Scalar prod = ca * *b.coef;
      auto [it, inserted] = acc.try_emplace(a * *b.mono, prod);
      if (!inserted) it->second += prod;
    }
  }

  Series<Scalar> r(scheme, cutoff, f.domain());
  r.narrowed_ = f.narrowed() || g.narrowed() || f.cutoff() != g.cutoff();
  for (auto& [mono, coef] : acc)
    if (!Domain<Scalar>::is_zero(coef)) r.terms_.emplace(mono, std::move(coef));
  return r;
}

template <class Scalar>
Series<Scalar> operator*(const Series<Scalar>& f, const Series<Scalar>& g) {
  return mul(f, g);
}

/// Two-sided inverse of a series with constant term exactly 1, via the
/// geometric series in (f - 1).
template <class Scalar>
Series<Scalar> inverse(const Series<Scalar>& f) {
  const auto& dom = f.domain();
  if (!(f.constant_term() == dom.one())) throw NotInvertible("inverse: constant term must be exactly 1");
  auto one = Series<Scalar>::one(f.scheme(), f.cutoff(), dom);
  auto h = f - one;
  // g_{k+1} = 1 - h g_k is exact through weight k+1, and every letter has weight >= 1.
  auto g = one;
  for (int k = 0; k < f.cutoff(); ++k) g = one - mul(h, g);
  return g;
}

/// The weight-w part of f.
template <class Scalar>
Series<Scalar> homogeneous_component(const Series<Scalar>& f, int w) {
  Series<Scalar> r(f.scheme(), f.cutoff(), f.domain());
  for (const auto& [mono, coef] : f.terms())
    if (monomial_weight(mono, f.scheme()) == w) r.add_term(mono, coef);
  return r;
}

/// Canonical text, e.g. `1 - X1 + X1*X1` or `1 + 2*X1 (mod 3)`.
template <class Scalar>
std::string to_string(const Series<Scalar>& f) {
  using D = Domain<Scalar>;
  if (f.is_zero()) return "0" + f.domain().suffix();
  std::string out;
  bool first = true;
  for (const auto& [mono, coef] : f.terms()) {
    const bool neg = D::is_negative(coef);
    const Scalar mag = neg ? Scalar(-coef) : coef;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const bool unit = mag == f.domain().one();
    if (mono.empty())
      out += D::format(mag);
    else if (unit)
      out += format_monomial(mono, f.scheme());
    else
      out += D::format(mag) + "*" + format_monomial(mono, f.scheme());
  }
  return out + f.domain().suffix();
}

/// Reads the text produced by to_string back into a series.
template <class Scalar>
Series<Scalar> parse_series(const std::string& text, const WeightScheme& scheme, int cutoff,
                            Domain<Scalar> domain = Domain<Scalar>()) {
  std::string body = text;
  const std::string suffix = domain.suffix();
  if (!suffix.empty()) {
    if (body.size() < suffix.size() || body.compare(body.size() - suffix.size(), suffix.size(), suffix) != 0)
      throw SeriesParseError("parse_series: missing suffix '" + suffix + "'");
    body.resize(body.size() - suffix.size());
  }
  std::string s;
  for (char ch : body)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;

  Series<Scalar> r(scheme, cutoff, domain);
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw SeriesParseError("parse_series: " + what + " at offset " + std::to_string(pos));
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return s.substr(start, pos - start);
  };
  auto read_letter = [&]() -> Letter {
    const char kind = s[pos++];
    const int idx = std::stoi(read_int());
    return kind == 'X' ? scheme.x(idx) : scheme.y(idx);
  };

  if (s == "0") return r;
  bool negative = false;
  if (pos < s.size() && s[pos] == '-') {
    negative = true;
    ++pos;
  }
  while (true) {
    if (pos >= s.size()) fail("expected term");
    std::string coef_text = "1";
    Monomial mono;
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef_text = read_int();
      if (pos < s.size() && s[pos] == '/') {
        ++pos;
        coef_text += "/" + read_int();
      }
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || (s[pos] != 'X' && s[pos] != 'Y')) fail("expected letter");
      }
    }
    while (pos < s.size() && (s[pos] == 'X' || s[pos] == 'Y')) {
      mono.push_back(read_letter());
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        if (pos >= s.size() || (s[pos] != 'X' && s[pos] != 'Y')) fail("expected letter");
      }
    }
    Scalar c = domain.parse(coef_text);
    r.add_term(mono, negative ? Scalar(-c) : c);
    if (pos == s.size()) break;
    if (s[pos] != '+' && s[pos] != '-') fail("expected '+' or '-'");
    negative = s[pos++] == '-';
  }
  return r;
}

}  // namespace onerel
