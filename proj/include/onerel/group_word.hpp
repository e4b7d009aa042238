#pragma once

// Freely reduced words in F = A * B, A = <x_1..x_m>, B = <y_1..y_n>.

#include <compare>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "onerel/weight_scheme.hpp"

namespace onerel {

enum class Factor : std::uint8_t { X, Y };

/// x_i, y_j or an inverse; index is 1-based as in the text form.
struct GenSymbol {
  Factor factor = Factor::X;
  int index = 1;
  bool inverted = false;

  GenSymbol inverse() const { return {factor, index, !inverted}; }
  bool cancels(const GenSymbol& o) const {
    return factor == o.factor && index == o.index && inverted != o.inverted;
  }
  friend bool operator==(const GenSymbol&, const GenSymbol&) = default;
  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;
};

inline GenSymbol x_sym(int i, bool inv = false) { return {Factor::X, i, inv}; }
inline GenSymbol y_sym(int j, bool inv = false) { return {Factor::Y, j, inv}; }

class WordParseError : public std::invalid_argument {
 public:
  WordParseError(const std::string& what, int column)
      : std::invalid_argument(what + " (column " + std::to_string(column) + ")"), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

/// An element of the free group, always stored freely reduced. The only
/// way to build one from raw symbols is reduce().
class GroupWord {
 public:
  GroupWord() = default;  // identity

  static GroupWord reduce(const std::vector<GenSymbol>& raw);
  /// As reduce(raw), additionally rejecting symbols outside the scheme.
  static GroupWord reduce(const std::vector<GenSymbol>& raw, const WeightScheme& scheme);
  static GroupWord generator(GenSymbol s) { return reduce({s}); }

  const std::vector<GenSymbol>& symbols() const { return symbols_; }
  std::size_t length() const { return symbols_.size(); }
  bool is_identity() const { return symbols_.empty(); }
  /// Only x-letters occur (membership in A).
  bool in_A() const;
  /// Only y-letters occur (membership in B).
  bool in_B() const;
  /// Throws OutOfRange if a symbol lies outside the scheme's generators.
  void check_range(const WeightScheme& scheme) const;

  GroupWord inverse() const;
  GroupWord pow(int k) const;
  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

  /// Grammar-compatible text, e.g. `x1 x2 x1^-1 x2^-1`; identity is `1`.
  std::string str() const;

 private:
  std::vector<GenSymbol> symbols_;
};

/// w z w^-1 z^-1, reduced.
GroupWord group_commutator(const GroupWord& w, const GroupWord& z);

/// Parses the word grammar: tokens x1, y2, ...; `^k` powers (k may be
/// negative); `[a, b]` commutators; parentheses; juxtaposition; `1`.
GroupWord parse_word(const std::string& text);
GroupWord parse_word(const std::string& text, const WeightScheme& scheme);

/// A reduced word whose length is uniform on 0..max_len and whose letters
/// are uniform among the non-cancelling choices.
GroupWord random_word(std::mt19937_64& rng, int m, int n, int max_len);

}  // namespace onerel
