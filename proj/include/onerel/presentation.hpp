#pragma once

// Line-oriented presentation files:
//
//   # comment
//   generators x: 2
//   generators y: 1
//   relator: [x1,x2] = y1
//   e: 3            (optional)
//   max_degree: 8   (optional)

#include <stdexcept>
#include <string>

#include "onerel/relator_gate.hpp"

namespace onerel {

class PresentationParseError : public std::invalid_argument {
 public:
  PresentationParseError(const std::string& what, int line, int column)
      : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Words are reduced and range-checked here; membership of u in A and of v
/// in B is left to the gate.
Presentation parse_presentation(const std::string& text);

/// `<x1,x2,y1 | [x1,x2] = y1>` style echo (words in reduced form).
std::string format_presentation(const Presentation& p);

}  // namespace onerel
