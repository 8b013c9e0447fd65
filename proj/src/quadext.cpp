#include "biharmonic/quadext.hpp"

#include <sstream>

namespace biharmonic {

bool is_square_free(long d)
{
    if (d < 2)
        return false;
    for (long f = 2; f * f <= d; ++f)
        if (d % (f * f) == 0)
            return false;
    return true;
}

QuadExt::QuadExt(const Rational& a)
    : a_(a)
{
}

QuadExt::QuadExt(Rational a, Rational b, long d)
    : a_(std::move(a))
    , b_(std::move(b))
    , d_(d)
{
    if (sign(b_) != 0 && !is_square_free(d_))
        throw std::invalid_argument("QuadExt: d must be a square-free integer >= 2");
    normalize();
}

void QuadExt::normalize()
{
    if (sign(b_) == 0)
        d_ = 0;
}

QuadExt QuadExt::sqrt_of(const Integer& m)
{
    if (sign(m) < 0)
        throw std::domain_error("sqrt of negative integer");
    if (m == 0)
        return QuadExt(Rational(0));
    // pull out the square part: m = s^2 * core
    Integer core = m, s = 1;
    for (Integer f = 2; f * f <= core; ++f) {
        while (core % (f * f) == 0) {
            core /= f * f;
            s *= f;
        }
    }
    if (core == 1)
        return QuadExt(Rational(s));
    return QuadExt(Rational(0), Rational(s), core.get_si());
}

int QuadExt::sgn() const
{
    const int sa = sign(a_);
    const int sb = sign(b_);
    if (sb == 0)
        return sa;
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // opposite signs: compare a^2 with b^2 d
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    int cmp = (lhs > rhs) - (lhs < rhs);
    if (cmp == 0)
        return 0; // cannot happen for irrational sqrt(d), kept for safety
    return cmp > 0 ? sa : sb;
}

QuadExt QuadExt::operator-() const
{
    QuadExt r(*this);
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

namespace {
long merged_field(const QuadExt& x, const QuadExt& y)
{
    if (x.is_rational())
        return y.d();
    if (y.is_rational())
        return x.d();
    if (x.d() != y.d())
        throw std::invalid_argument("QuadExt: mixed quadratic fields");
    return x.d();
}
} // namespace

QuadExt QuadExt::operator+(const QuadExt& rhs) const
{
    long d = merged_field(*this, rhs);
    return QuadExt(a_ + rhs.a_, b_ + rhs.b_, d == 0 ? 2 : d);
}

QuadExt QuadExt::operator-(const QuadExt& rhs) const { return *this + (-rhs); }

QuadExt QuadExt::operator*(const QuadExt& rhs) const
{
    long d = merged_field(*this, rhs);
    if (d == 0)
        return QuadExt(a_ * rhs.a_);
    Rational na = a_ * rhs.a_ + b_ * rhs.b_ * Rational(d);
    Rational nb = a_ * rhs.b_ + b_ * rhs.a_;
    return QuadExt(na, nb, d);
}

QuadExt QuadExt::operator/(const QuadExt& rhs) const
{
    if (rhs.sgn() == 0)
        throw std::domain_error("QuadExt: division by zero");
    if (rhs.is_rational()) {
        return QuadExt(a_ / rhs.a_, b_ / rhs.a_, d_ == 0 ? 2 : d_);
    }
    // 1/(a+b sqrt d) = (a - b sqrt d)/(a^2 - b^2 d)
    Rational norm = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * Rational(rhs.d_);
    QuadExt conj = rhs.conjugate();
    QuadExt num = *this * conj;
    return QuadExt(num.a_ / norm, num.b_ / norm, rhs.d_);
}

QuadExt QuadExt::conjugate() const
{
    QuadExt r(*this);
    r.b_ = -r.b_;
    return r;
}

bool QuadExt::operator==(const QuadExt& rhs) const
{
    return (*this - rhs).sgn() == 0;
}

bool QuadExt::operator<(const QuadExt& rhs) const
{
    return (*this - rhs).sgn() < 0;
}

bool QuadExt::operator<=(const QuadExt& rhs) const
{
    return (*this - rhs).sgn() <= 0;
}

std::pair<Rational, Rational> sqrt_enclosure(long d, const Rational& gap)
{
    // Newton iteration from above: x_{k+1} = (x_k + d/x_k)/2 >= sqrt(d)
    Integer di(d);
    Integer isq;
    mpz_sqrt(isq.get_mpz_t(), di.get_mpz_t());
    Rational hi = Rational(isq) + 1;
    Rational dr(d);
    while (true) {
        Rational lo = dr / hi; // lo <= sqrt(d) <= hi
        if (hi - lo <= gap)
            return {lo, hi};
        hi = (hi + lo) / 2;
    }
}

Rational QuadExt::rational_below(const Rational& gap) const
{
    if (is_rational())
        return a_ - gap;
    // sqrt(d) is irrational, so the enclosure below is strict
    Rational w = gap / (rational_abs(b_) * 2);
    auto [lo, hi] = sqrt_enclosure(d_, w);
    return sign(b_) > 0 ? a_ + b_ * lo : a_ + b_ * hi;
}

Rational QuadExt::rational_above(const Rational& gap) const
{
    return -((-*this).rational_below(gap));
}

std::string QuadExt::to_string() const
{
    if (is_rational())
        return a_.get_str();
    std::ostringstream os;
    if (sign(a_) != 0)
        os << a_.get_str();
    if (sign(b_) > 0 && sign(a_) != 0)
        os << "+";
    if (b_ == -1)
        os << "-";
    else if (b_ != 1)
        os << b_.get_str() << "*";
    os << "sqrt(" << d_ << ")";
    return os.str();
}

QuadExt eval_at(const Poly& p, const QuadExt& x)
{
    QuadExt acc{Rational(0)};
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * x + QuadExt(p.coeff(k));
    return acc;
}

} // namespace biharmonic
