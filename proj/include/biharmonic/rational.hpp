#ifndef BIHARMONIC_RATIONAL_HPP
#define BIHARMONIC_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace biharmonic {

// Exact arbitrary-precision arithmetic carriers. mpq_class keeps values in
// canonical form (positive denominator, reduced), which is exactly the
// invariant we need everywhere.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline Integer pow10(unsigned digits)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, digits);
    return r;
}

/// floor(q) as an Integer.
inline Integer floor_int(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

enum class DecimalMode { truncate, round };

/// Fixed-point decimal rendering of a rational, `digits` places after the
/// point. Truncation is toward zero (default); rounding is half away from
/// zero.
std::string decimal_string(const Rational& q, unsigned digits,
                           DecimalMode mode = DecimalMode::truncate);

/// Parses "a", "a/b" or decimal strings like "-1.25" into an exact Rational.
Rational parse_rational(const std::string& text);

} // namespace biharmonic

#endif
