#ifndef CLINT_EXPRS_HPP
#define CLINT_EXPRS_HPP

#include <string>
#include <vector>

#include "clint/algebra.hpp"

namespace clint {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at line " + std::to_string(line) +
                           ", column " + std::to_string(col)),
        line(line),
        col(col) {}
  int line, col;
};

// Parse a generator expression ("t^4 + 2*t^5", "x^2*y", "(y+x^2)^3") in the
// monomial syntax of the algebra's family and evaluate it to an element.
// line_offset feeds positioned errors for ring-spec files.
Vec parse_element(const AlgebraPtr& A, const std::string& text, int line = 1);

// A comma-separated generator list, optionally parenthesized:
// "(t^4, t^5)" or "t^4,t^5". "(0)" is the zero ideal, "(1)" or "R" the unit.
std::vector<Vec> parse_generator_list(const AlgebraPtr& A, const std::string& text,
                                      int line = 1);

Submodule parse_ideal(const AlgebraPtr& A, const std::string& text, int line = 1);

// canonical printing: minimal generators of the RREF normal form, in
// degree-then-lex monomial order
std::string ideal_to_string(const Submodule& I);

}  // namespace clint

#endif
