#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lambek/formula.hpp"

namespace lambek {

struct ParseError : std::runtime_error {
  int line, col;
  std::vector<std::string> expected;
  ParseError(const std::string& msg, int line_, int col_,
             std::vector<std::string> expected_)
      : std::runtime_error(msg),
        line(line_),
        col(col_),
        expected(std::move(expected_)) {}
};

FormulaPtr parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);

}  // namespace lambek
