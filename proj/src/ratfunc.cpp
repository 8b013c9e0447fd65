#include "biharmonic/ratfunc.hpp"

#include "biharmonic/quadext.hpp"

namespace biharmonic {

RatFunc::RatFunc(Poly num, Poly den)
    : num_(std::move(num))
    , den_(std::move(den))
{
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(Rational(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    const Rational scale = Rational(1) / den_.lead();
    num_ = num_ * scale;
    den_ = den_ * scale;
}

RatFunc RatFunc::operator-() const
{
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& rhs) const
{
    return RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc RatFunc::operator-(const RatFunc& rhs) const { return *this + (-rhs); }

RatFunc RatFunc::operator*(const RatFunc& rhs) const
{
    return RatFunc(num_ * rhs.num_, den_ * rhs.den_);
}

RatFunc RatFunc::operator/(const RatFunc& rhs) const
{
    if (rhs.is_zero())
        throw std::domain_error("division by zero rational function");
    return RatFunc(num_ * rhs.den_, den_ * rhs.num_);
}

RatFunc RatFunc::operator*(const Rational& s) const
{
    return RatFunc(num_ * s, den_);
}

Rational RatFunc::eval(const Rational& x) const
{
    Rational d = den_.eval(x);
    if (sign(d) == 0)
        throw std::domain_error("rational function evaluated at a pole");
    return num_.eval(x) / d;
}

std::string RatFunc::to_string(const std::string& var) const
{
    if (is_polynomial())
        return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

QuadExt eval_at(const RatFunc& f, const QuadExt& x)
{
    QuadExt d = eval_at(f.den(), x);
    if (d.sgn() == 0)
        throw std::domain_error("rational function evaluated at a pole");
    return eval_at(f.num(), x) / d;
}

} // namespace biharmonic
