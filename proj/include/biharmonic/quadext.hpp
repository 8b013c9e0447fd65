#ifndef BIHARMONIC_QUADEXT_HPP
#define BIHARMONIC_QUADEXT_HPP

#include "biharmonic/poly.hpp"
#include "biharmonic/rational.hpp"

#include <string>

namespace biharmonic {

/// Exact element a + b*sqrt(d) of a real quadratic extension of Q. d is a
/// square-free integer >= 2; pure rationals are stored with d = 0, b = 0, so
/// one type covers interval endpoints like 1/sqrt(3), 2+sqrt(3), or 5/7.
/// Mixed-field arithmetic (both surd parts nonzero, different d) is rejected.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rational& a); // rational embedding
    QuadExt(Rational a, Rational b, long d);

    /// sqrt(m) for a nonnegative integer m, with the square part extracted:
    /// sqrt(12) = 2*sqrt(3), sqrt(25) = 5.
    static QuadExt sqrt_of(const Integer& m);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long d() const { return d_; }
    bool is_rational() const { return d_ == 0; }

    int sgn() const;
    QuadExt operator-() const;
    QuadExt operator+(const QuadExt& rhs) const;
    QuadExt operator-(const QuadExt& rhs) const;
    QuadExt operator*(const QuadExt& rhs) const;
    QuadExt operator/(const QuadExt& rhs) const;
    QuadExt conjugate() const; // a - b*sqrt(d)

    bool operator==(const QuadExt& rhs) const;
    bool operator!=(const QuadExt& rhs) const { return !(*this == rhs); }
    bool operator<(const QuadExt& rhs) const;
    bool operator<=(const QuadExt& rhs) const;
    bool operator>(const QuadExt& rhs) const { return rhs < *this; }
    bool operator>=(const QuadExt& rhs) const { return rhs <= *this; }

    /// Rational r with r < *this (resp. r > *this), within `gap` of it.
    Rational rational_below(const Rational& gap = Rational(1, 1024)) const;
    Rational rational_above(const Rational& gap = Rational(1, 1024)) const;

    std::string to_string() const;

private:
    void normalize();
    Rational a_{0};
    Rational b_{0};
    long d_ = 0;
};

bool is_square_free(long d);

/// p evaluated at a quadratic-extension point, exactly.
QuadExt eval_at(const Poly& p, const QuadExt& x);

/// Rational enclosure [lo, hi] of sqrt(d) with hi - lo <= gap; lo, hi > 0.
std::pair<Rational, Rational> sqrt_enclosure(long d, const Rational& gap);

} // namespace biharmonic

#endif
