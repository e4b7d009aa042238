#pragma once

// The free Lie ring on xi_1..xi_m (weight 1) and eta_1..eta_n (weight e),
// with the Lyndon basis: a Lyndon word w = uv (v the smallest proper
// suffix) stands for the bracket P_w = [P_u, P_v].

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "onerel/group_word.hpp"
#include "onerel/monomial.hpp"
#include "onerel/scalar.hpp"
#include "onerel/series.hpp"

namespace onerel {

class NotLieElement : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotIntegral : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegreeExceedsCutoff : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct LyndonBasisElement {
  Monomial word;
  int weight = 0;
  std::size_t split = 0;  // word = word[0, split) word[split, end); 0 for a letter
};

bool is_lyndon(const Monomial& w);

/// Start of the smallest proper suffix, which is the right factor of the
/// standard factorization. Returns 0 for single letters.
std::size_t standard_split(const Monomial& w);

/// All Lyndon words of the given weighted degree, lexicographically sorted.
std::vector<LyndonBasisElement> lyndon_basis(const WeightScheme& scheme, int weight);

/// dim L(F)_k for k = 1..up_to, counted as weighted Lyndon words.
std::vector<std::size_t> witt_dimensions(const WeightScheme& scheme, int up_to);

/// Expansion of a bracket into the associative algebra. Coefficients of
/// Lyndon brackets are bounded by 2^(length-1), so 64 bits suffice.
using Expansion = std::vector<std::pair<Monomial, std::int64_t>>;

/// The Lyndon basis of one weighted degree together with the associative
/// expansion of every basis bracket. Obtain through lyndon_table(); tables
/// are built once and are read-only afterwards.
class LyndonTable {
 public:
  LyndonTable(const WeightScheme& scheme, int weight, const std::vector<const LyndonTable*>& lower);

  const WeightScheme& scheme() const { return scheme_; }
  int weight() const { return weight_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<LyndonBasisElement>& elements() const { return elements_; }
  const LyndonBasisElement& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Monomial& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  /// Sorted lexicographically; the leading term is the word itself with
  /// coefficient 1.
  const Expansion& expansion(std::size_t i) const { return expansions_[i]; }

 private:
  WeightScheme scheme_;
  int weight_;
  std::vector<LyndonBasisElement> elements_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
  std::vector<Expansion> expansions_;
};

/// Shared table for (scheme, weight). Thread-safe.
const LyndonTable& lyndon_table(const WeightScheme& scheme, int weight);

/// A homogeneous element of L(F) in Lyndon coordinates.
class LieElement {
 public:
  using Coords = std::map<Monomial, Integer>;

  LieElement() = default;
  LieElement(const WeightScheme& scheme, int degree) : scheme_(scheme), degree_(degree) {}
  /// The basis bracket P_w; w must be Lyndon.
  static LieElement basis(const WeightScheme& scheme, const Monomial& w);
  /// xi_l or eta_l for a letter index.
  static LieElement generator(const WeightScheme& scheme, Letter l) { return basis(scheme, Monomial::letter(l)); }

  const WeightScheme& scheme() const { return scheme_; }
  int degree() const { return degree_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Integer coefficient(const Monomial& w) const;
  /// gcd of the coordinates; 0 for the zero element.
  Integer content() const;

  void add(const Monomial& w, const Integer& c);
  LieElement operator-() const;
  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Integer& c, LieElement a);
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.scheme_ == b.scheme_ && a.degree_ == b.degree_ && a.coords_ == b.coords_;
  }

  /// Sum of c_w P_w in the associative algebra, cutoff = degree.
  Series<Integer> expand() const;

  /// `1*L[x1 x2] - 3*L[x1 x1 x2]`; `0` for zero.
  std::string str() const;

 private:
  WeightScheme scheme_;
  int degree_ = 0;
  Coords coords_;
};

namespace detail {

/// Back-substitution against the unitriangular Lyndon expansions. Throws
/// NotLieElement when a non-Lyndon word leads the remainder.
template <class Scalar>
std::map<Monomial, Scalar> triangular_rewrite(std::map<Monomial, Scalar> p, const LyndonTable& table) {
  std::map<Monomial, Scalar> coords;
  while (!p.empty()) {
    const auto head = p.begin()->first;
    auto idx = table.index_of(head);
    if (!idx) throw NotLieElement("word " + format_monomial(head, table.scheme()) + " leads a non-Lie remainder");
    const Scalar c = p.begin()->second;
    coords.emplace(head, c);
    for (const auto& [mono, k] : table.expansion(*idx)) {
      auto [it, inserted] = p.try_emplace(mono, Scalar(0));
      it->second -= c * Scalar(static_cast<long>(k));
      if (sgn(it->second) == 0) p.erase(it);
    }
  }
  return coords;
}

/// Dynkin-Specht-Wever: on the length-k part, the left-normed bracketing
/// map satisfies D(p) = k p exactly when p is a Lie element.
template <class Scalar>
bool dynkin_criterion(const std::map<Monomial, Scalar>& p) {
  std::map<std::size_t, std::map<Monomial, Scalar>> by_length;
  for (const auto& [mono, c] : p) by_length[mono.size()].emplace(mono, c);
  for (const auto& [len, part] : by_length) {
    std::map<Monomial, Scalar> image;
    for (const auto& [mono, c] : part) {
      // [..[a1, a2], .., ak] expanded letter by letter.
      std::vector<std::pair<Monomial, long>> terms{{Monomial::letter(mono[0]), 1}};
      for (std::size_t j = 1; j < mono.size(); ++j) {
        std::vector<std::pair<Monomial, long>> next;
        next.reserve(terms.size() * 2);
        const auto a = Monomial::letter(mono[j]);
        for (const auto& [t, k] : terms) {
          next.emplace_back(t * a, k);
          next.emplace_back(a * t, -k);
        }
        terms = std::move(next);
      }
      for (const auto& [t, k] : terms) {
        auto [it, inserted] = image.try_emplace(t, Scalar(0));
        it->second += c * Scalar(k);
      }
    }
    for (const auto& [mono, c] : part) {
      auto it = image.find(mono);
      Scalar lhs = it == image.end() ? Scalar(0) : it->second;
      if (!(lhs == Scalar(static_cast<long>(len)) * c)) return false;
      if (it != image.end()) image.erase(it);
    }
    for (const auto& [mono, c] : image)
      if (sgn(c) != 0) return false;
  }
  return true;
}

}  // namespace detail

/// Lyndon coordinates of a homogeneous weight-`weight` series with integer
/// or rational coefficients. Lie-ness is decided by the Dynkin criterion;
/// the coordinates must then be integral.
template <class Scalar>
LieElement to_lyndon_coords(const Series<Scalar>& p, int weight) {
  static_assert(std::is_same_v<Scalar, Integer> || std::is_same_v<Scalar, Rational>,
                "to_lyndon_coords needs integer or rational coefficients");
  const auto& scheme = p.scheme();
  std::map<Monomial, Scalar> terms;
  for (const auto& [mono, c] : p.terms()) {
    if (monomial_weight(mono, scheme) != weight)
      throw std::invalid_argument("to_lyndon_coords: input is not homogeneous of weight " + std::to_string(weight));
    terms.emplace(mono, c);
  }
  LieElement result(scheme, weight);
  if (terms.empty()) return result;
  if (weight < 1) throw NotLieElement("to_lyndon_coords: constant term is not a Lie element");
  if (!detail::dynkin_criterion(terms)) throw NotLieElement("to_lyndon_coords: Dynkin criterion fails");
  const auto coords = detail::triangular_rewrite(std::move(terms), lyndon_table(scheme, weight));
  for (const auto& [w, c] : coords) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      if (c.get_den() != 1) throw NotIntegral("to_lyndon_coords: coordinate " + c.get_str() + " is not an integer");
      result.add(w, c.get_num());
    } else {
      result.add(w, c);
    }
  }
  return result;
}

/// [a, b], computed in the associative algebra and rewritten in the basis.
LieElement bracket(const LieElement& a, const LieElement& b);

/// Coordinates of [generator l, P_w] for a basis word w. Not cached.
LieElement bracket_generator_basis(const WeightScheme& scheme, Letter l, const Monomial& w);

struct LeadingForm {
  int degree = 0;
  LieElement form;
};

/// Degree d = deg(w) and the Lie element of the weight-d part of mu(w) - 1.
LeadingForm leading_lie_form(const GroupWord& w, const WeightScheme& scheme, int cutoff);

}  // namespace onerel
