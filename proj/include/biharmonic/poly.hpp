#ifndef BIHARMONIC_POLY_HPP
#define BIHARMONIC_POLY_HPP

#include "biharmonic/rational.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace biharmonic {

/// Univariate polynomial with exact rational coefficients, coefficient index
/// = degree of the monomial. The zero polynomial stores no coefficients;
/// otherwise the leading coefficient is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> ascending_coeffs);
    explicit Poly(std::vector<Rational> ascending_coeffs);
    static Poly constant(const Rational& c);
    static Poly variable(); // X

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& lead() const;
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Rational& s) const;
    bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    /// Exact rational long division; throws std::domain_error("zero divisor")
    /// when divisor is zero. Returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    Poly derivative() const;
    Poly monic() const;
    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return sign(eval(x)); }

    /// Sign of p(x) as x -> +inf / -inf.
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;

    /// Scales by the positive rational that clears denominators and divides
    /// by the content; keeps the sign. Useful to keep Sturm chains small.
    Poly primitive_scaled() const;

    /// Cauchy bound: every real root lies in (-B, B); returned as an integer.
    Integer root_bound() const;

    /// For polynomials with only even-degree terms, the polynomial q with
    /// q(X) = p(t), X = t^2; throws std::domain_error otherwise.
    Poly even_decimation() const;
    bool has_only_even_terms() const;
    /// Inverse of even_decimation: q(X) -> q(t^2).
    Poly inflate_square() const;

    std::string to_string(const std::string& var = "X") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

/// Monic gcd by the Euclidean remainder sequence; gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// p / gcd(p, p'), scaled monic-free (keeps the sign of p's leading
/// coefficient). Second member is gcd(p, p'), monic.
std::pair<Poly, Poly> squarefree_part(const Poly& p);

} // namespace biharmonic

#endif
