#ifndef BIHARMONIC_CATALOG_HPP
#define BIHARMONIC_CATALOG_HPP

#include "biharmonic/quadext.hpp"
#include "biharmonic/ratfunc.hpp"
#include "biharmonic/sturm.hpp"

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace biharmonic {

enum class FamilyId {
    sphere_g1,
    sphere_g2,
    sphere_g3,
    sphere_g4,
    sphere_g6,
    cp_a,
    cp_b,
    cp_c,
    cp_d,
    cp_e,
    hp_geodesic_sphere,
    hp_cp_tube,
    hp_hpk_tube,
};

std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(const std::string& name);

struct FamilyParams {
    int n = 0;    // ambient dimension parameter
    int p = 0;    // sphere g=2 and CP A-type
    int q = 0;    // CP A-type
    int k = 0;    // HP^k tube
    int mult = 0; // sphere g=3 (1,2,4,8) and g=6 (1,2)
    int m1 = 0;   // sphere g=4
    int m2 = 0;
    Rational ambient_c{0}; // 0 = family default (1 for spheres, 4 for CP/HP)
};

struct AmbientSpace {
    enum class Kind { sphere, complex_projective, quaternion_projective };
    Kind kind = Kind::sphere;
    Rational c{1}; // sectional / holomorphic / quaternionic curvature constant
    int n = 0;
    int dim_m = 0; // hypersurface dimension
    std::string to_string() const;
};

/// One principal-curvature branch that is a rational function of the family
/// parameter.
struct RationalBranch {
    RatFunc value;
    Integer multiplicity;
    std::string label;
};

/// A pair of curvature branches conjugate over Q(sqrt(3)): each branch is a
/// Moebius map with coefficients in the extension, but the symmetrized sum
/// and sum of squares are rational functions with rational coefficients.
struct ConjugatePairRule {
    // branch(y) = (c0 + c1*y)/(c2 + c3*y), entries in Q(sqrt 3)
    std::array<QuadExt, 4> branch_plus;
    std::array<QuadExt, 4> branch_minus;
    RatFunc pair_sum;        // branch_plus + branch_minus
    RatFunc pair_sum_squares; // branch_plus^2 + branch_minus^2
    Integer multiplicity_each;
    std::string label;
};

using SpectrumTerm = std::variant<RationalBranch, ConjugatePairRule>;

/// Transcribed display formulas from the classical classification, kept
/// purely as cross-check data. The derived spectra are the source of truth;
/// whenever a transcription disagrees, the classifier ledgers the delta.
struct PublishedForms {
    std::optional<RatFunc> mean_curvature;  // displayed (dim M) * H
    std::optional<RatFunc> bnorm2;          // displayed ||B||^2
    std::optional<Poly> biharmonic_eq;      // displayed biharmonic condition
    std::optional<Poly> biharmonic_eq_raw;  // pre-simplification display, if different
    std::optional<Poly> minimal_eq;         // displayed minimality condition
    std::optional<Poly> minimal_eq_alt;     // second displayed form, if the source has one
    bool equations_in_x = false;            // true: variable is X = t^2
    std::vector<std::string> notes;         // statement-level discrepancies to ledger
    std::optional<std::string> quoted_biharmonic_x;  // decimal quoted for the root
    std::optional<std::string> quoted_biharmonic_t;
    std::optional<std::string> quoted_biharmonic_u;
};

struct FamilySpec {
    FamilyId id;
    FamilyParams params;
    AmbientSpace ambient;
    std::string parameter_note; // e.g. "t = cot u, u in (0, pi/2)"
    Endpoint range_lo, range_hi;
    std::vector<SpectrumTerm> spectrum;
    Rational threshold; // biharmonicity level for ||B||^2
    PublishedForms published;

    Integer multiplicity_sum() const;
};

/// Builds a fully populated family; throws std::invalid_argument naming the
/// violated constraint. Multiplicity sums are verified against dim M.
FamilySpec build_family(FamilyId id, const FamilyParams& params);

/// (dim M) * H as a reduced rational function of the parameter, derived from
/// the spectrum (never transcribed).
RatFunc mean_curvature(const FamilySpec& f);

/// Sum of multiplicity-weighted squared principal curvatures, derived.
RatFunc second_form_norm2(const FamilySpec& f);

/// The constant ||B||^2 level characterizing nonminimal biharmonic
/// hypersurfaces: c*dim M (spheres), (n+1)c/2 (CP^n), (n+2)c (HP^n).
Rational biharmonic_threshold(const FamilySpec& f);

/// Certifies that `den` has no zero on the family's open parameter range.
/// Throws std::logic_error if it does (would invalidate the spectrum).
void certify_denominator_nonvanishing(const FamilySpec& f, const Poly& den);

} // namespace biharmonic

#endif
