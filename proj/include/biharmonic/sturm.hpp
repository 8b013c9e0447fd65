#ifndef BIHARMONIC_STURM_HPP
#define BIHARMONIC_STURM_HPP

#include "biharmonic/poly.hpp"
#include "biharmonic/quadext.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace biharmonic {

/// Raised when a query interval endpoint is a root of the polynomial; the
/// caller decides whether to perturb or deflate (open intervals everywhere,
/// interior roots only).
class EndpointRootError : public std::runtime_error {
public:
    explicit EndpointRootError(const std::string& what)
        : std::runtime_error(what)
    {
    }
};

/// An interval endpoint: -inf, +inf, or an exact algebraic value a+b*sqrt(d).
struct Endpoint {
    enum class Kind { neg_inf, finite, pos_inf };
    Kind kind = Kind::finite;
    QuadExt value;

    static Endpoint neg_inf() { return {Kind::neg_inf, QuadExt()}; }
    static Endpoint pos_inf() { return {Kind::pos_inf, QuadExt()}; }
    static Endpoint at(const QuadExt& v) { return {Kind::finite, v}; }
    static Endpoint at(const Rational& v) { return {Kind::finite, QuadExt(v)}; }
    bool finite() const { return kind == Kind::finite; }
    std::string to_string() const;
};

bool endpoint_less(const Endpoint& a, const Endpoint& b);

/// Canonical Sturm chain: p0 = p, p1 = p', p_{i+1} = -rem(p_{i-1}, p_i),
/// remainders positively rescaled. The final element is a nonzero constant
/// multiple of gcd(p, p').
class SturmChain {
public:
    explicit SturmChain(const Poly& p);
    const std::vector<Poly>& seq() const { return seq_; }
    int variations_at(const Rational& x) const;
    int variations_at(const QuadExt& x) const;
    int variations_at(const Endpoint& e) const;

private:
    std::vector<Poly> seq_;
};

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Endpoints must not be roots of p (throws EndpointRootError).
int count_roots(const Poly& p, const Endpoint& lo, const Endpoint& hi);

/// Like count_roots but tolerates roots sitting exactly on an endpoint: they
/// are simply not counted (the interval is open). Used for denominator
/// nonvanishing checks where a pole at the excluded boundary is fine.
int count_interior_roots(const Poly& p, const Endpoint& lo, const Endpoint& hi);

/// One isolated real root: (low, high) contains exactly one root of the
/// source polynomial, p(low) != 0 != p(high). When bisection lands on the
/// root, `exact` holds its rational value and low = high = that value.
struct IsolatedRoot {
    Rational low;
    Rational high;
    bool simple = true; // false when the root is a multiple root of the input
    std::optional<Rational> exact;
    std::string decimal;

    /// Certified bound |root - decimal-midpoint|; for assertions.
    Rational midpoint() const { return exact ? *exact : (low + high) / 2; }
    Rational radius() const { return exact ? Rational(0) : (high - low) / 2; }
};

/// Isolating intervals for all real roots of p inside (lo, hi), refined so
/// that `decimal` is correct to `digits` places (truncated by default).
/// Deterministic: sorted by lower endpoint.
std::vector<IsolatedRoot> isolate_and_refine(const Poly& p, const Endpoint& lo,
                                             const Endpoint& hi, unsigned digits,
                                             DecimalMode mode = DecimalMode::truncate);

/// Proof object: zero Sturm roots in the open interval plus one positive
/// interior sample forces p > 0 on the whole interval.
struct PositivityCertificate {
    Poly polynomial;
    Endpoint lo, hi;
    int sturm_root_count = 0;
    Rational sample_point;
    int sample_sign = +1;
};

struct PositivityOutcome {
    bool positive = false;
    std::optional<PositivityCertificate> certificate;
    /// When not positive: an isolating interval of a root in the interval, if
    /// any (absent when p < 0 throughout).
    std::optional<IsolatedRoot> witness;
    int sample_sign = 0;
};

PositivityOutcome certify_positive(const Poly& p, const Endpoint& lo, const Endpoint& hi);

/// A rational point strictly inside (lo, hi).
Rational interior_sample(const Endpoint& lo, const Endpoint& hi);

/// Further bisection of an isolating interval until high - low <= width.
IsolatedRoot refine_to_width(const Poly& p_squarefree, IsolatedRoot root, const Rational& width);

} // namespace biharmonic

#endif
