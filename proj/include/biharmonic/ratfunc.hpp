#ifndef BIHARMONIC_RATFUNC_HPP
#define BIHARMONIC_RATFUNC_HPP

#include "biharmonic/poly.hpp"

namespace biharmonic {

/// Reduced rational function num/den: gcd(num, den) = 1 and den monic, so
/// equality of values is equality of representations.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::constant(Rational(1))) {}
    RatFunc(const Rational& c) : RatFunc(Poly::constant(c), Poly::constant(Rational(1))) {}
    RatFunc(Poly num, Poly den);
    static RatFunc variable() { return RatFunc(Poly::variable(), Poly::constant(Rational(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& rhs) const;
    RatFunc operator-(const RatFunc& rhs) const;
    RatFunc operator*(const RatFunc& rhs) const;
    RatFunc operator/(const RatFunc& rhs) const;
    RatFunc operator*(const Rational& s) const;
    bool operator==(const RatFunc& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
    bool operator!=(const RatFunc& rhs) const { return !(*this == rhs); }

    RatFunc squared() const { return *this * *this; }
    Rational eval(const Rational& x) const;

    std::string to_string(const std::string& var = "t") const;

private:
    Poly num_, den_;
};

class QuadExt;
QuadExt eval_at(const RatFunc& f, const QuadExt& x);

} // namespace biharmonic

#endif
