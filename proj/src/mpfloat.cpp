#include "biharmonic/mpfloat.hpp"

#include "biharmonic/quadext.hpp"

#include <mpfr.h>

namespace biharmonic {

namespace {

mpfr_prec_t bits_for(unsigned digits)
{
    // ~3.33 bits per decimal digit, plus slack
    return static_cast<mpfr_prec_t>(digits * 4 + 64);
}

Rational to_rational(const mpfr_t x)
{
    if (mpfr_zero_p(x))
        return Rational(0);
    Integer mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    Rational r(mant);
    Rational two(2);
    if (e >= 0) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= Rational(p);
    } else {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= Rational(p);
    }
    r.canonicalize();
    return r;
}

void set_from_rational(mpfr_t out, const Rational& q, mpfr_rnd_t rnd)
{
    mpfr_set_q(out, q.get_mpq_t(), rnd);
}

Rational atan_recip_rounded(const Rational& t, unsigned digits, mpfr_rnd_t rnd)
{
    mpfr_t x, r;
    mpfr_init2(x, bits_for(digits));
    mpfr_init2(r, bits_for(digits));
    set_from_rational(x, t, rnd == MPFR_RNDU ? MPFR_RNDD : rnd == MPFR_RNDD ? MPFR_RNDU : rnd);
    mpfr_ui_div(r, 1, x, rnd); // 1/t, monotone decreasing in t
    mpfr_atan(r, r, rnd);      // atan monotone increasing
    Rational out = to_rational(r);
    mpfr_clear(x);
    mpfr_clear(r);
    return out;
}

} // namespace

std::pair<Rational, Rational> atan_reciprocal_interval(const Rational& t_lo,
                                                       const Rational& t_hi,
                                                       unsigned digits)
{
    if (sign(t_lo) <= 0 || t_hi < t_lo)
        throw std::domain_error("atan_reciprocal_interval requires 0 < t_lo <= t_hi");
    // atan(1/t) is decreasing in t: lower bound comes from t_hi
    Rational lo = atan_recip_rounded(t_hi, digits, MPFR_RNDD);
    Rational hi = atan_recip_rounded(t_lo, digits, MPFR_RNDU);
    return {lo, hi};
}

Rational atan_reciprocal_approx(const Rational& t, unsigned digits)
{
    return atan_recip_rounded(t, digits, MPFR_RNDN);
}

std::pair<Rational, Rational> quadext_interval(const QuadExt& x, unsigned digits)
{
    if (x.is_rational())
        return {x.a(), x.a()};
    mpfr_prec_t prec = bits_for(digits);
    mpfr_t s, v;
    mpfr_init2(s, prec);
    mpfr_init2(v, prec);
    std::pair<Rational, Rational> out;
    for (int side = 0; side < 2; ++side) {
        // lower bound of x on side 0, upper on side 1
        mpfr_rnd_t rnd = side == 0 ? MPFR_RNDD : MPFR_RNDU;
        mpfr_rnd_t sqrt_rnd = (sign(x.b()) > 0) == (side == 0) ? MPFR_RNDD : MPFR_RNDU;
        mpfr_set_si(s, x.d(), MPFR_RNDN);
        mpfr_sqrt(s, s, sqrt_rnd);
        mpfr_mul_q(v, s, x.b().get_mpq_t(), rnd);
        mpfr_add_q(v, v, x.a().get_mpq_t(), rnd);
        (side == 0 ? out.first : out.second) = to_rational(v);
    }
    mpfr_clear(s);
    mpfr_clear(v);
    return out;
}

} // namespace biharmonic
