#include "onerel/presentation.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace onerel {

namespace {

std::size_t skip_space(const std::string& s, std::size_t pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  return pos;
}

struct Field {
  std::string value;
  int line = 0;
  int column = 0;  // 1-based column of value[0]
};

int parse_count(const Field& f, const char* key, int minimum) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(f.value, &used);
  } catch (const std::exception&) {
    throw PresentationParseError(std::string("expected an integer for '") + key + "'", f.line, f.column);
  }
  if (used != f.value.size())
    throw PresentationParseError(std::string("trailing text after '") + key + "' value", f.line,
                                 f.column + static_cast<int>(used));
  if (v < minimum)
    throw PresentationParseError(std::string("'") + key + "' must be >= " + std::to_string(minimum), f.line, f.column);
  return v;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::optional<Field> gx, gy, relator, e, max_degree;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    std::size_t start = skip_space(line, 0);
    if (start == line.size()) continue;
    const auto colon = line.find(':', start);
    if (colon == std::string::npos) throw PresentationParseError("expected 'key: value'", line_no, int(start) + 1);

    // Keys compare with internal whitespace collapsed: "generators   x".
    std::string key, token;
    std::istringstream words(line.substr(start, colon - start));
    while (words >> token) key += (key.empty() ? "" : " ") + token;

    const std::size_t vstart = skip_space(line, colon + 1);
    Field f{line.substr(vstart), line_no, static_cast<int>(vstart) + 1};
    std::optional<Field>* slot = nullptr;
    if (key == "generators x")
      slot = &gx;
    else if (key == "generators y")
      slot = &gy;
    else if (key == "relator")
      slot = &relator;
    else if (key == "e")
      slot = &e;
    else if (key == "max_degree")
      slot = &max_degree;
    else
      throw PresentationParseError("unknown key '" + key + "'", line_no, int(start) + 1);
    if (*slot) throw PresentationParseError("duplicate key '" + key + "'", line_no, int(start) + 1);
    if (f.value.empty()) throw PresentationParseError("missing value for '" + key + "'", line_no, f.column);
    *slot = f;
  }

  if (!gx) throw PresentationParseError("missing 'generators x'", line_no, 1);
  if (!relator) throw PresentationParseError("missing 'relator'", line_no, 1);

  Presentation p;
  p.m = parse_count(*gx, "generators x", 1);
  p.n = gy ? parse_count(*gy, "generators y", 0) : 0;
  if (e) p.e = parse_count(*e, "e", 1);
  if (max_degree) p.max_degree = parse_count(*max_degree, "max_degree", 1);

  const WeightScheme scheme(p.m, p.n, 1);
  const auto& rel = relator->value;
  const auto eq = rel.find('=');
  if (eq == std::string::npos) throw PresentationParseError("relator needs the form 'u = v'", relator->line, relator->column);
  if (rel.find('=', eq + 1) != std::string::npos)
    throw PresentationParseError("relator has more than one '='", relator->line,
                                 relator->column + static_cast<int>(rel.find('=', eq + 1)));
  auto parse_side = [&](const std::string& side, int offset) {
    try {
      return parse_word(side, scheme);
    } catch (const WordParseError& err) {
      std::string msg = err.what();
      msg = msg.substr(0, msg.rfind(" (column"));
      throw PresentationParseError(msg, relator->line, relator->column + offset + err.column() - 1);
    }
  };
  p.u = parse_side(rel.substr(0, eq), 0);
  p.v = parse_side(rel.substr(eq + 1), static_cast<int>(eq) + 1);
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "<";
  for (int i = 1; i <= p.m; ++i) out += (i > 1 ? "," : "") + std::string("x") + std::to_string(i);
  for (int j = 1; j <= p.n; ++j) out += ",y" + std::to_string(j);
  return out + " | " + p.u.str() + " = " + p.v.str() + ">";
}

}  // namespace onerel
