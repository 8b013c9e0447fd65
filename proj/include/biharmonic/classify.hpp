#ifndef BIHARMONIC_CLASSIFY_HPP
#define BIHARMONIC_CLASSIFY_HPP

#include "biharmonic/catalog.hpp"
#include "biharmonic/sturm.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace biharmonic {

struct LedgerEntry {
    std::string code;   // stable machine tag, e.g. "display-mismatch:bnorm2"
    std::string detail; // prose
    std::vector<std::pair<std::string, std::string>> data; // ordered key/value
};

/// Sign certificate for ||B||^2 - threshold on the family range: a Sturm
/// count of zero for the numerator plus sampled signs of numerator and
/// denominator pin the sign of the whole function on the open range.
struct SignCertificate {
    PositivityCertificate certificate; // for numerator_sign * numerator > 0
    int numerator_sign = +1;
    int denominator_sign = +1;
    int function_sign = +1;
};

/// Exact isoparametric level value t_level = cos(x) attached to a root of a
/// sphere family (g = 1, 2 only).
struct LevelValue {
    std::string which; // "minimal" or "biharmonic"
    size_t root_index = 0;
    QuadExt value;
    std::string decimal;
};

struct ClassificationResult {
    FamilySpec family;
    Rational threshold;
    RatFunc mean_curv; // derived (dim M) * H, reference normalization
    RatFunc bnorm2;    // derived ||B||^2
    Poly minimal_eq;   // square-free derived numerator, in the family parameter
    Poly minimal_gcd;  // gcd(numerator, numerator') before square-free reduction
    Poly biharmonic_eq;
    Poly biharmonic_gcd;
    std::vector<IsolatedRoot> minimal_roots;
    std::vector<IsolatedRoot> biharmonic_roots;
    std::vector<size_t> nonminimal_indices; // into biharmonic_roots
    std::optional<SignCertificate> nonexistence;
    std::vector<LevelValue> levels;
    std::vector<LedgerEntry> ledger;
    unsigned digits = 6;
    DecimalMode mode = DecimalMode::truncate;

    bool is_nonminimal(size_t biharmonic_index) const;
};

/// Square-free numerator of the derived mean curvature, with the
/// denominator certified nonvanishing on the family range. Throws
/// std::domain_error when the numerator vanishes identically.
Poly minimality_equation(const FamilySpec& f);

/// Square-free numerator of derived ||B||^2 - threshold, denominator
/// certified on the range.
Poly biharmonicity_equation(const FamilySpec& f);

/// Full classification: certified roots on the family range, certified
/// minimal/biharmonic separation, a sign certificate when no biharmonic
/// radii exist, and a ledger comparing every transcribed display against the
/// derived forms. EndpointRootError is rethrown with family context.
ClassificationResult classify(const FamilySpec& f, unsigned digits = 6,
                              DecimalMode mode = DecimalMode::truncate);

/// Exact residual ||B||^2(x) - threshold at a rational point.
Rational biharmonic_residual(const ClassificationResult& r, const Rational& x);

/// Certified decision: do these two isolated roots (of the two square-free
/// polynomials) denote the same algebraic number?
bool same_root(const Poly& p_sf, const IsolatedRoot& a, const Poly& q_sf,
               const IsolatedRoot& b);

} // namespace biharmonic

#endif
