#include "onerel/lie.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <tuple>

#include "onerel/magnus.hpp"

namespace onerel {

bool is_lyndon(const Monomial& w) {
  if (w.empty()) return false;
  const auto& s = w.packed();
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s.compare(i, std::string::npos, s) <= 0) return false;
  return true;
}

std::size_t standard_split(const Monomial& w) {
  if (w.size() < 2) return 0;
  const auto& s = w.packed();
  std::size_t best = 1;
  for (std::size_t i = 2; i < s.size(); ++i)
    if (s.compare(i, std::string::npos, s, best, std::string::npos) < 0) best = i;
  return best;
}

namespace {

void enumerate_words(const WeightScheme& scheme, int remaining, Monomial& prefix,
                     std::vector<LyndonBasisElement>& out, int weight) {
  if (remaining == 0) {
    if (is_lyndon(prefix)) out.push_back({prefix, weight, standard_split(prefix)});
    return;
  }
  for (Letter l = 0; l < scheme.letters(); ++l) {
    const int w = scheme.weight(l);
    if (w > remaining) continue;
    // A Lyndon word of length >= 2 starts with its smallest letter, which
    // cannot exceed any later letter.
    if (!prefix.empty() && l < prefix[0]) continue;
    prefix.push_back(l);
    enumerate_words(scheme, remaining - w, prefix, out, weight);
    prefix.pop_back();
  }
}

Expansion combine(std::unordered_map<Monomial, std::int64_t, MonomialHash>&& acc) {
  Expansion e;
  e.reserve(acc.size());
  for (auto& [mono, k] : acc)
    if (k != 0) e.emplace_back(mono, k);
  std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return e;
}

/// a*b - b*a on expansions.
Expansion commutator(const Expansion& a, const Expansion& b) {
  std::unordered_map<Monomial, std::int64_t, MonomialHash> acc;
  acc.reserve(a.size() * b.size() * 2);
  for (const auto& [u, ku] : a)
    for (const auto& [v, kv] : b) {
      acc[u * v] += ku * kv;
      acc[v * u] -= ku * kv;
    }
  return combine(std::move(acc));
}

}  // namespace

std::vector<LyndonBasisElement> lyndon_basis(const WeightScheme& scheme, int weight) {
  if (weight < 1) throw std::invalid_argument("lyndon_basis: weight must be >= 1");
  std::vector<LyndonBasisElement> out;
  Monomial prefix;
  enumerate_words(scheme, weight, prefix, out, weight);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.word < b.word; });
  return out;
}

std::vector<std::size_t> witt_dimensions(const WeightScheme& scheme, int up_to) {
  if (up_to < 1) throw std::invalid_argument("witt_dimensions: need up_to >= 1");
  std::vector<std::size_t> dims;
  for (int k = 1; k <= up_to; ++k) dims.push_back(lyndon_basis(scheme, k).size());
  return dims;
}

LyndonTable::LyndonTable(const WeightScheme& scheme, int weight, const std::vector<const LyndonTable*>& lower)
    : scheme_(scheme), weight_(weight), elements_(lyndon_basis(scheme, weight)) {
  auto lookup = [&](const Monomial& w) -> const Expansion& {
    const auto* t = lower.at(monomial_weight(w, scheme));
    return t->expansion(*t->index_of(w));
  };
  expansions_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& el = elements_[i];
    index_.emplace(el.word, i);
    if (el.split == 0)
      expansions_.push_back({{el.word, 1}});
    else
      expansions_.push_back(commutator(lookup(el.word.substr(0, el.split)), lookup(el.word.substr(el.split))));
  }
}

const LyndonTable& lyndon_table(const WeightScheme& scheme, int weight) {
  if (weight < 1) throw std::invalid_argument("lyndon_table: weight must be >= 1");
  using Key = std::tuple<int, int, int>;
  static std::mutex mutex;
  static std::map<Key, std::vector<std::unique_ptr<LyndonTable>>> cache;
  std::lock_guard lock(mutex);
  auto& tables = cache[{scheme.m, scheme.n, scheme.e}];
  while (static_cast<int>(tables.size()) < weight) {
    std::vector<const LyndonTable*> lower{nullptr};
    for (const auto& t : tables) lower.push_back(t.get());
    tables.push_back(std::make_unique<LyndonTable>(scheme, static_cast<int>(tables.size()) + 1, lower));
  }
  return *tables[weight - 1];
}

LieElement LieElement::basis(const WeightScheme& scheme, const Monomial& w) {
  if (!is_lyndon(w)) throw std::invalid_argument("LieElement::basis: word is not Lyndon");
  for (std::size_t i = 0; i < w.size(); ++i) scheme.check(w[i]);
  LieElement r(scheme, monomial_weight(w, scheme));
  r.coords_.emplace(w, 1);
  return r;
}

Integer LieElement::coefficient(const Monomial& w) const {
  auto it = coords_.find(w);
  return it == coords_.end() ? Integer(0) : it->second;
}

Integer LieElement::content() const {
  Integer g = 0;
  for (const auto& [w, c] : coords_) g = gcd(g, c);
  return g;
}

void LieElement::add(const Monomial& w, const Integer& c) {
  if (sgn(c) == 0) return;
  if (monomial_weight(w, scheme_) != degree_) throw std::invalid_argument("LieElement: inhomogeneous coordinate");
  auto [it, inserted] = coords_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) coords_.erase(it);
  }
}

LieElement LieElement::operator-() const {
  LieElement r = *this;
  for (auto& [w, c] : r.coords_) c = -c;
  return r;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  require_same(scheme_, o.scheme_);
  if (degree_ != o.degree_) throw std::invalid_argument("LieElement: degrees differ");
  for (const auto& [w, c] : o.coords_) add(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) { return *this += -o; }

LieElement operator*(const Integer& c, LieElement a) {
  if (sgn(c) == 0) a.coords_.clear();
  for (auto& [w, x] : a.coords_) x *= c;
  return a;
}

Series<Integer> LieElement::expand() const {
  Series<Integer> s(scheme_, std::max(degree_, 0));
  if (coords_.empty()) return s;
  const auto& table = lyndon_table(scheme_, degree_);
  for (const auto& [w, c] : coords_)
    for (const auto& [mono, k] : table.expansion(*table.index_of(w))) s.add_term(mono, c * Integer(static_cast<long>(k)));
  return s;
}

std::string LieElement::str() const {
  if (coords_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : coords_) {
    const bool neg = sgn(c) < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += Integer(abs(c)).get_str() + "*L[";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? " " : "") + scheme_.name(w[i]);
    out += "]";
  }
  return out;
}

namespace {

LieElement rewrite_integral(const WeightScheme& scheme, int degree, const Series<Integer>& p) {
  LieElement r(scheme, degree);
  if (p.is_zero()) return r;
  std::map<Monomial, Integer> terms(p.terms().begin(), p.terms().end());
  for (auto& [w, c] : detail::triangular_rewrite(std::move(terms), lyndon_table(scheme, degree))) r.add(w, c);
  return r;
}

}  // namespace

LieElement bracket(const LieElement& a, const LieElement& b) {
  require_same(a.scheme(), b.scheme());
  const int degree = a.degree() + b.degree();
  if (a.is_zero() || b.is_zero()) return LieElement(a.scheme(), degree);
  // Re-home both expansions at the full cutoff before multiplying.
  Series<Integer> fa(a.scheme(), degree), fb(a.scheme(), degree);
  const auto ea = a.expand(), eb = b.expand();
  for (const auto& [m, c] : ea.terms()) fa.add_term(m, c);
  for (const auto& [m, c] : eb.terms()) fb.add_term(m, c);
  return rewrite_integral(a.scheme(), degree, mul(fa, fb) - mul(fb, fa));
}

LieElement bracket_generator_basis(const WeightScheme& scheme, Letter l, const Monomial& w) {
  const int degree = scheme.weight(l) + monomial_weight(w, scheme);
  const auto& wt = lyndon_table(scheme, monomial_weight(w, scheme));
  const auto& ew = wt.expansion(*wt.index_of(w));
  std::map<Monomial, Integer> terms;
  const auto g = Monomial::letter(l);
  for (const auto& [mono, k] : ew) {
    terms[g * mono] += k;
    terms[mono * g] -= k;
  }
  std::erase_if(terms, [](const auto& t) { return sgn(t.second) == 0; });
  LieElement r(scheme, degree);
  for (auto& [v, c] : detail::triangular_rewrite(std::move(terms), lyndon_table(scheme, degree))) r.add(v, c);
  return r;
}

LeadingForm leading_lie_form(const GroupWord& w, const WeightScheme& scheme, int cutoff) {
  if (w.is_identity()) throw std::invalid_argument("leading_lie_form: identity word has no leading form");
  const auto deg = filtration_degree(w, scheme, cutoff);
  if (!deg.exact)
    throw DegreeExceedsCutoff("leading_lie_form: degree of " + w.str() + " exceeds cutoff " + std::to_string(cutoff));
  const auto image = magnus_embed<Integer>(w, scheme, deg.value);
  return {deg.value, to_lyndon_coords(homogeneous_component(image, deg.value), deg.value)};
}

}  // namespace onerel
