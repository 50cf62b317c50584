#pragma once

// Human-readable input forms.
//
//   polynomial:  "t^2 - t + 1", "t + t^-1 - 1", "2t^3 - (t - 1)^2"
//   named poly:  unknot, trefoil, figure-eight, T(a,b)
//   knot:        unknot | trefoil | figure-eight | reverse(K) | mirror(K) | K # K
//   poly set:    "unit" or polynomials separated by ';'

#include <string_view>

#include "conclab/polyalg.hpp"
#include "conclab/seifert.hpp"

namespace conclab {

/// Integer-coefficient Laurent expression in t. Throws Error(Parse).
LaurentPoly parse_polynomial(std::string_view text);

/// A named knot or T(a,b), falling back to parse_polynomial.
LaurentPoly resolve_polynomial(std::string_view text);

/// Seifert matrix of a knot expression. Throws Error(Parse) on unknown names.
SeifertMatrix parse_knot(std::string_view text);

/// Throws Error(NotNormalized) for entries that are not Alexander polynomials.
PolySet parse_polyset(std::string_view text);

}  // namespace conclab
