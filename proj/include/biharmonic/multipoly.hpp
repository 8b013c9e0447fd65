#ifndef BIHARMONIC_MULTIPOLY_HPP
#define BIHARMONIC_MULTIPOLY_HPP

#include "biharmonic/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace biharmonic {

/// Sparse multivariate polynomial over Q in a fixed number of variables
/// x1..xm. Terms map exponent vectors to nonzero coefficients; the map order
/// gives a canonical, deterministic serialization.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;

    explicit MultiPoly(unsigned nvars = 0) : nvars_(nvars) {}
    static MultiPoly constant(unsigned nvars, const Rational& c);
    static MultiPoly monomial(unsigned nvars, const Exponents& e, const Rational& c);
    static MultiPoly variable(unsigned nvars, unsigned index); // x_{index}, 0-based

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator*(const Rational& s) const;
    bool operator==(const MultiPoly& rhs) const
    {
        return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
    }
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    MultiPoly partial(unsigned var) const;
    Rational eval(const std::vector<Rational>& point) const;
    MultiPoly permute_variables(const std::vector<unsigned>& perm) const;
    unsigned total_degree() const;

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    unsigned nvars_;
    std::map<Exponents, Rational> terms_;
};

inline MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

/// Sum of second partials over all variables.
MultiPoly laplacian(const MultiPoly& p);

} // namespace biharmonic

#endif
