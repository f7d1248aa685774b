/*
 * printing.hpp
 * ------------
 * Canonical text form for scalars and polynomials.  Terms are emitted in
 * the fixed monomial order with coefficients written from rationals,
 * 'sqrt' and 'i'; re-parsing a printed polynomial with the same variable
 * list and radicand reproduces it exactly.
 */
#pragma once

#include "crrigid/mpoly.hpp"

#include <string>
#include <vector>

namespace crrigid {

std::string scalar_string(const CScalar& c);
std::string quadext_string(const QuadExt& q);
std::string poly_string(const MPoly& p, const std::vector<std::string>& vars);

}  // namespace crrigid
