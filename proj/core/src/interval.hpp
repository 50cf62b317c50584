#pragma once

// Certified enclosures of the transcendental maps between a circle
// parameter t and x = 2 cos(2 pi t). Every bound is produced with directed
// rounding, so the true value always lies inside the returned interval.

#include "conclab/numeric.hpp"

namespace conclab::detail {

struct Enclosure {
  Rational lo;
  Rational hi;
};

/// Encloses 2 cos(2 pi t) for rational t in (0, 1/2].
Enclosure enclose_circle_x(const Rational& t, unsigned precision_bits);

/// Encloses acos(x / 2) / (2 pi) over x in [x_lo, x_hi] subset of [-2, 2].
Enclosure enclose_circle_t(const Rational& x_lo, const Rational& x_hi, unsigned precision_bits);

}  // namespace conclab::detail
