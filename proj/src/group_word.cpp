#include "onerel/group_word.hpp"

#include <algorithm>
#include <cctype>

namespace onerel {

GroupWord GroupWord::reduce(const std::vector<GenSymbol>& raw) {
  GroupWord w;
  for (const auto& s : raw) {
    if (s.index < 1) throw OutOfRange("generator index must be >= 1");
    if (!w.symbols_.empty() && w.symbols_.back().cancels(s))
      w.symbols_.pop_back();
    else
      w.symbols_.push_back(s);
  }
  return w;
}

GroupWord GroupWord::reduce(const std::vector<GenSymbol>& raw, const WeightScheme& scheme) {
  auto w = reduce(raw);
  // Range-check the raw input, cancelled symbols included.
  for (const auto& s : raw) {
    if (s.factor == Factor::X)
      scheme.x(s.index);
    else
      scheme.y(s.index);
  }
  return w;
}

bool GroupWord::in_A() const {
  return std::all_of(symbols_.begin(), symbols_.end(), [](const GenSymbol& s) { return s.factor == Factor::X; });
}

bool GroupWord::in_B() const {
  return std::all_of(symbols_.begin(), symbols_.end(), [](const GenSymbol& s) { return s.factor == Factor::Y; });
}

void GroupWord::check_range(const WeightScheme& scheme) const {
  for (const auto& s : symbols_) {
    if (s.factor == Factor::X)
      scheme.x(s.index);
    else
      scheme.y(s.index);
  }
}

GroupWord GroupWord::inverse() const {
  GroupWord r;
  r.symbols_.reserve(symbols_.size());
  for (auto it = symbols_.rbegin(); it != symbols_.rend(); ++it) r.symbols_.push_back(it->inverse());
  return r;
}

GroupWord GroupWord::pow(int k) const {
  GroupWord base = k < 0 ? inverse() : *this;
  GroupWord r;
  for (int i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  std::vector<GenSymbol> raw = a.symbols_;
  raw.insert(raw.end(), b.symbols_.begin(), b.symbols_.end());
  return GroupWord::reduce(raw);
}

std::string GroupWord::str() const {
  if (symbols_.empty()) return "1";
  std::string out;
  for (const auto& s : symbols_) {
    if (!out.empty()) out += ' ';
    out += (s.factor == Factor::X ? "x" : "y") + std::to_string(s.index);
    if (s.inverted) out += "^-1";
  }
  return out;
}

GroupWord group_commutator(const GroupWord& w, const GroupWord& z) { return w * z * w.inverse() * z.inverse(); }

namespace {

class WordParser {
 public:
  WordParser(const std::string& text, const WeightScheme* scheme) : text_(text), scheme_(scheme) {}

  GroupWord parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty word");
    auto w = sequence();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return w;
  }

 private:
  // sequence := power+
  GroupWord sequence() {
    GroupWord w = power();
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      char c = text_[pos_];
      if (c == ',' || c == ']' || c == ')') break;
      w = w * power();
    }
    return w;
  }

  // power := atom ('^' integer)?
  GroupWord power() {
    GroupWord a = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      bool neg = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) neg = text_[pos_++] == '-';
      int k = integer();
      a = a.pow(neg ? -k : k);
    }
    return a;
  }

  GroupWord atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of word");
    char c = text_[pos_];
    if (c == 'x' || c == 'y') {
      ++pos_;
      if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail(std::string("expected generator index after '") + c + "'");
      std::size_t start = pos_;
      int idx = integer();
      if (idx < 1) {
        pos_ = start;
        fail("generator index must be >= 1");
      }
      if (scheme_ && idx > (c == 'x' ? scheme_->m : scheme_->n)) {
        pos_ = start - 1;
        fail(std::string(1, c) + std::to_string(idx) + " is outside " + c + "1.." + c +
             std::to_string(c == 'x' ? scheme_->m : scheme_->n));
      }
      return GroupWord::generator(c == 'x' ? x_sym(idx) : y_sym(idx));
    }
    if (c == '1') {
      ++pos_;
      return GroupWord();
    }
    if (c == '(') {
      ++pos_;
      auto w = sequence();
      expect(')');
      return w;
    }
    if (c == '[') {
      ++pos_;
      auto a = sequence();
      expect(',');
      auto b = sequence();
      expect(']');
      return group_commutator(a, b);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  int integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (pos_ == text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw WordParseError(what, static_cast<int>(pos_) + 1); }

  const std::string& text_;
  const WeightScheme* scheme_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupWord parse_word(const std::string& text) { return WordParser(text, nullptr).parse(); }

GroupWord parse_word(const std::string& text, const WeightScheme& scheme) { return WordParser(text, &scheme).parse(); }

GroupWord random_word(std::mt19937_64& rng, int m, int n, int max_len) {
  const int gens = m + n;
  if (gens < 1 || max_len < 0) throw std::invalid_argument("random_word: bad parameters");
  const int len = std::uniform_int_distribution<int>(0, max_len)(rng);
  std::vector<GenSymbol> raw;
  raw.reserve(len);
  auto symbol = [&](int code) {
    const int g = code / 2;
    const bool inv = code % 2;
    return g < m ? x_sym(g + 1, inv) : y_sym(g - m + 1, inv);
  };
  for (int i = 0; i < len; ++i) {
    // 2*gens choices, one of which would cancel the previous symbol.
    const int choices = raw.empty() ? 2 * gens : 2 * gens - 1;
    int code = std::uniform_int_distribution<int>(0, choices - 1)(rng);
    if (!raw.empty()) {
      GenSymbol forbidden = raw.back().inverse();
      int fcode = (forbidden.factor == Factor::X ? forbidden.index - 1 : m + forbidden.index - 1) * 2 +
                  (forbidden.inverted ? 1 : 0);
      if (code >= fcode) ++code;
    }
    raw.push_back(symbol(code));
  }
  return GroupWord::reduce(raw);
}

}  // namespace onerel
