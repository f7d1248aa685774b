/*
 * parser.hpp
 * ----------
 * Recursive-descent parser for polynomial expressions over the declared
 * variables.  Grammar:
 *
 *   expr   := ('-')? term (('+'|'-') term)*
 *   term   := factor ('*' factor)*
 *   factor := base ('^' natural)?
 *   base   := rational | 'i' | 'sqrt' | ident | '~' ident | '(' expr ')'
 *
 * 'sqrt' denotes the square root of the session radicand d, '~x' the formal
 * conjugate of the variable x.  Errors carry line and column.
 */
#pragma once

#include "crrigid/mpoly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace crrigid {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error(msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")"),
          line(l),
          col(c) {}
};

MPoly parse_poly(const std::string& src, const std::vector<std::string>& vars, std::int64_t sqrt_d);

// Constant expression (no variables allowed); used for point coordinates.
CScalar parse_scalar(const std::string& src, std::int64_t sqrt_d);

}  // namespace crrigid
