#ifndef BIHARMONIC_MPFLOAT_HPP
#define BIHARMONIC_MPFLOAT_HPP

#include "biharmonic/rational.hpp"

#include <utility>

namespace biharmonic {

class QuadExt;

/// Directed-rounding helpers built on MPFR. Every function returns exact
/// rational read-backs of the computed floats (MPFR values are dyadic), so
/// the enclosures stay certified end to end.

/// [lo, hi] with lo <= atan(1/t) <= hi for all t in [t_lo, t_hi], t_lo > 0,
/// at `digits` decimal digits of working precision.
std::pair<Rational, Rational> atan_reciprocal_interval(const Rational& t_lo,
                                                       const Rational& t_hi,
                                                       unsigned digits);

/// Enclosure of a + b*sqrt(d) at `digits` decimal digits.
std::pair<Rational, Rational> quadext_interval(const QuadExt& x, unsigned digits);

/// atan(1/t) rounded to nearest at `digits` working digits (uncertified; for
/// display next to certified intervals).
Rational atan_reciprocal_approx(const Rational& t, unsigned digits);

} // namespace biharmonic

#endif
