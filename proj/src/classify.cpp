#include "biharmonic/classify.hpp"

#include "biharmonic/mpfloat.hpp"

#include <algorithm>
#include <sstream>

namespace biharmonic {

namespace {

Rational default_reference_c(const AmbientSpace& a)
{
    return a.kind == AmbientSpace::Kind::sphere ? Rational(1) : Rational(4);
}

/// Monic square-free normal form used for all display-vs-derived equation
/// comparisons: scalar multiples and repeated factors do not count as
/// disagreements about the zero set.
Poly zero_set_normal_form(const Poly& p)
{
    if (p.is_zero())
        return p;
    return squarefree_part(p).first.monic();
}

bool same_zero_set(const Poly& a, const Poly& b)
{
    return zero_set_normal_form(a) == zero_set_normal_form(b);
}

/// Derived equation brought into the variable of a display: X = t^2 when the
/// display is written in X. Returns nullopt when the derived polynomial has
/// odd terms (not expressible in X).
std::optional<Poly> in_display_variable(const Poly& derived_in_t, bool display_in_x)
{
    if (!display_in_x)
        return derived_in_t;
    if (!derived_in_t.has_only_even_terms())
        return std::nullopt;
    return derived_in_t.even_decimation();
}

void push_equation_check(std::vector<LedgerEntry>& ledger, const std::string& what,
                         const Poly& derived_t, const std::optional<Poly>& display,
                         bool display_in_x, const std::string& var)
{
    if (!display)
        return;
    auto derived = in_display_variable(derived_t, display_in_x);
    LedgerEntry e;
    e.data.emplace_back("displayed", display->to_string(var));
    if (derived && same_zero_set(*derived, *display)) {
        e.code = "display-match:" + what;
        e.detail = "transcribed " + what + " display agrees with the derived equation";
        e.data.emplace_back("derived", derived->to_string(var));
    } else {
        e.code = "display-mismatch:" + what;
        e.detail = "transcribed " + what + " display disagrees with the derived equation";
        e.data.emplace_back("derived",
                            derived ? derived->to_string(var) : derived_t.to_string("t"));
        if (derived) {
            Poly delta = zero_set_normal_form(*derived) - zero_set_normal_form(*display);
            e.data.emplace_back("normal-form-difference", delta.to_string(var));
        }
    }
    ledger.push_back(std::move(e));
}

void push_ratfunc_check(std::vector<LedgerEntry>& ledger, const std::string& what,
                        const RatFunc& derived, const std::optional<RatFunc>& display,
                        const std::string& var)
{
    if (!display)
        return;
    LedgerEntry e;
    e.data.emplace_back("displayed", display->to_string(var));
    e.data.emplace_back("derived", derived.to_string(var));
    if (derived == *display) {
        e.code = "display-match:" + what;
        e.detail = "transcribed " + what + " display agrees with the derived expression";
    } else {
        e.code = "display-mismatch:" + what;
        e.detail = "transcribed " + what + " display disagrees with the derived expression";
        RatFunc delta = derived - *display;
        e.data.emplace_back("difference", delta.to_string(var));
    }
    ledger.push_back(std::move(e));
}

/// sqrt of a nonnegative rational as an exact QuadExt.
QuadExt quadext_sqrt(const Rational& r)
{
    if (sign(r) < 0)
        throw std::domain_error("sqrt of a negative rational");
    Integer m = r.get_num() * r.get_den();
    QuadExt root = QuadExt::sqrt_of(m);
    return root / QuadExt(Rational(r.get_den()));
}

} // namespace

bool ClassificationResult::is_nonminimal(size_t biharmonic_index) const
{
    return std::find(nonminimal_indices.begin(), nonminimal_indices.end(),
                     biharmonic_index) != nonminimal_indices.end();
}

Poly minimality_equation(const FamilySpec& f)
{
    RatFunc h = mean_curvature(f);
    if (h.is_zero())
        throw std::domain_error("family is minimal for all parameters");
    certify_denominator_nonvanishing(f, h.den());
    return squarefree_part(h.num()).first;
}

Poly biharmonicity_equation(const FamilySpec& f)
{
    RatFunc diff = second_form_norm2(f) - RatFunc(biharmonic_threshold(f));
    certify_denominator_nonvanishing(f, diff.den());
    if (diff.is_zero())
        throw std::domain_error("family is biharmonic for all parameters");
    return squarefree_part(diff.num()).first;
}

bool same_root(const Poly& p_sf, const IsolatedRoot& a, const Poly& q_sf,
               const IsolatedRoot& b)
{
    if (a.exact && b.exact)
        return *a.exact == *b.exact;
    if (a.exact)
        return q_sf.sign_at(*a.exact) == 0 && b.low < *a.exact && *a.exact < b.high;
    if (b.exact)
        return p_sf.sign_at(*b.exact) == 0 && a.low < *b.exact && *b.exact < a.high;

    Poly g = poly_gcd(p_sf, q_sf);
    if (g.degree() <= 0)
        return false; // coprime polynomials share no root
    SturmChain gchain(g);
    auto is_root_of_g = [&](const IsolatedRoot& r) {
        return gchain.variations_at(r.low) - gchain.variations_at(r.high) > 0;
    };
    if (!is_root_of_g(a) || !is_root_of_g(b))
        return false;
    // both roots are roots of g; equal iff the hull never separates and
    // isolates a single root of g
    IsolatedRoot ra = a, rb = b;
    while (true) {
        if (ra.exact && rb.exact)
            return *ra.exact == *rb.exact;
        if (ra.high <= rb.low || rb.high <= ra.low)
            return false; // separated (interval endpoints are never the roots)
        Rational lo = std::min(ra.exact ? *ra.exact : ra.low, rb.exact ? *rb.exact : rb.low);
        Rational hi = std::max(ra.exact ? *ra.exact : ra.high, rb.exact ? *rb.exact : rb.high);
        if (lo < hi && g.sign_at(lo) != 0 && g.sign_at(hi) != 0) {
            SturmChain hull(g);
            if (hull.variations_at(lo) - hull.variations_at(hi) == 1)
                return true; // one root of g in the hull containing both
        }
        Rational half(1, 2);
        ra = refine_to_width(p_sf, ra, (ra.high - ra.low) * half);
        rb = refine_to_width(q_sf, rb, (rb.high - rb.low) * half);
    }
}

namespace {

std::vector<IsolatedRoot> roots_with_context(const FamilySpec& f, const Poly& full_num,
                                             const char* which, unsigned digits,
                                             DecimalMode mode)
{
    try {
        return isolate_and_refine(full_num, f.range_lo, f.range_hi, digits, mode);
    } catch (const EndpointRootError& e) {
        throw EndpointRootError("family " + family_name(f.id) + " [" + which +
                                " equation]: " + e.what());
    }
}

void attach_levels(ClassificationResult& r)
{
    const FamilySpec& f = r.family;
    if (f.id != FamilyId::sphere_g1 && f.id != FamilyId::sphere_g2)
        return;
    auto level_of_exact_param = [&](const Rational& y) {
        if (f.id == FamilyId::sphere_g2) {
            Rational X = y * y;
            return QuadExt((X - 1) / (X + 1)); // cos x = (cot^2(x/2)-1)/(cot^2(x/2)+1)
        }
        // g = 1: cos x = y/sqrt(1+y^2)
        Rational X = y * y;
        QuadExt mag = quadext_sqrt(X / (1 + X));
        return sign(y) < 0 ? -mag : mag;
    };
    auto level_from_square = [&](const Rational& X) {
        if (f.id == FamilyId::sphere_g2)
            return QuadExt((X - 1) / (X + 1));
        return quadext_sqrt(X / (1 + X)); // in-range g1 roots would be positive
    };
    auto level_from_even_equation = [&](const IsolatedRoot& root,
                                        const Poly& sf) -> std::optional<QuadExt> {
        // y irrational but y^2 may be a rational root of the even decimation
        if (!sf.has_only_even_terms())
            return std::nullopt;
        Poly px = sf.even_decimation();
        // certify the square of the isolated root: shrink until the squared
        // interval brackets exactly one root of px (in-range roots are > 0)
        IsolatedRoot probe = root;
        while (!probe.exact) {
            Rational a2 = probe.low * probe.low, b2 = probe.high * probe.high;
            if (count_roots(px, Endpoint::at(a2), Endpoint::at(b2)) == 1)
                break;
            probe = refine_to_width(sf, probe, (probe.high - probe.low) / 2);
        }
        if (probe.exact)
            return level_from_square(*probe.exact * *probe.exact);
        for (const auto& xr :
             isolate_and_refine(px, Endpoint::at(probe.low * probe.low),
                                Endpoint::at(probe.high * probe.high), 6)) {
            if (xr.exact)
                return level_from_square(*xr.exact);
        }
        return std::nullopt; // the square is irrational: no exact level
    };
    auto emit = [&](const char* which, const std::vector<IsolatedRoot>& roots,
                    const Poly& sf) {
        for (size_t i = 0; i < roots.size(); ++i) {
            std::optional<QuadExt> level;
            if (roots[i].exact)
                level = level_of_exact_param(*roots[i].exact);
            else
                level = level_from_even_equation(roots[i], sf);
            if (!level)
                continue;
            LevelValue lv;
            lv.which = which;
            lv.root_index = i;
            lv.value = *level;
            auto enc = quadext_interval(*level, r.digits + 10);
            lv.decimal = decimal_string((enc.first + enc.second) / 2, r.digits, r.mode);
            r.levels.push_back(std::move(lv));
        }
    };
    emit("minimal", r.minimal_roots, r.minimal_eq);
    emit("biharmonic", r.biharmonic_roots, r.biharmonic_eq);
}

void ledger_published_equation_roots(ClassificationResult& r)
{
    const PublishedForms& pub = r.family.published;
    if (!pub.biharmonic_eq)
        return;
    auto derived = in_display_variable(r.biharmonic_eq, pub.equations_in_x);
    const bool differs = !derived || !same_zero_set(*derived, *pub.biharmonic_eq);
    if (!differs)
        return;
    LedgerEntry e;
    e.code = "published-equation-roots";
    e.detail = "roots of the transcribed biharmonic display, which differs from the "
               "derived equation; classification follows the derived one";
    const std::string var = pub.equations_in_x ? "X" : "t";
    e.data.emplace_back("equation", pub.biharmonic_eq->to_string(var));
    const Endpoint zero = Endpoint::at(Rational(0));
    Poly t_poly = pub.equations_in_x ? pub.biharmonic_eq->inflate_square() : *pub.biharmonic_eq;
    Poly t_sf = squarefree_part(t_poly).first;
    auto t_roots = isolate_and_refine(t_poly, zero, Endpoint::pos_inf(), r.digits, r.mode);
    std::vector<IsolatedRoot> x_roots;
    if (pub.equations_in_x)
        x_roots = isolate_and_refine(*pub.biharmonic_eq, zero, Endpoint::pos_inf(), r.digits,
                                     r.mode);
    // for equations in X the positive t-roots pair with the positive X-roots
    // in ascending order (t -> t^2 is monotone on t > 0)
    for (size_t i = 0; i < t_roots.size(); ++i) {
        std::string tag = i == 0 ? "biharmonic" : "biharmonic_" + std::to_string(i + 1);
        IsolatedRoot tight =
            refine_to_width(t_sf, t_roots[i], Rational(1, pow10(r.digits + 8)));
        Rational t_lo = tight.exact ? *tight.exact : tight.low;
        Rational t_hi = tight.exact ? *tight.exact : tight.high;
        if (pub.equations_in_x && i < x_roots.size())
            e.data.emplace_back(tag + "_X", x_roots[i].decimal);
        e.data.emplace_back(tag + "_t", tight.decimal);
        if (sign(t_lo) > 0) {
            auto [ulo, uhi] = atan_reciprocal_interval(t_lo, t_hi, 50);
            e.data.emplace_back(tag + "_u", decimal_string((ulo + uhi) / 2, r.digits, r.mode));
        }
        bool in_range =
            (!r.family.range_lo.finite() || QuadExt(t_lo) > r.family.range_lo.value) &&
            (!r.family.range_hi.finite() || QuadExt(t_hi) < r.family.range_hi.value);
        e.data.emplace_back(tag + "_in_range", in_range ? "yes" : "no");
    }
    if (t_roots.empty())
        e.data.emplace_back("roots", "none on (0, +inf)");
    r.ledger.push_back(std::move(e));
}

} // namespace

ClassificationResult classify(const FamilySpec& f, unsigned digits, DecimalMode mode)
{
    if (digits < 1 || digits > 50)
        throw std::invalid_argument("precision digits must be in [1, 50]");
    ClassificationResult r;
    r.family = f;
    r.digits = digits;
    r.threshold = biharmonic_threshold(f);
    r.mean_curv = mean_curvature(f);
    r.bnorm2 = second_form_norm2(f);

    if (r.mean_curv.is_zero())
        throw std::domain_error("family is minimal for all parameters");
    certify_denominator_nonvanishing(f, r.mean_curv.den());
    RatFunc diff = r.bnorm2 - RatFunc(r.threshold);
    certify_denominator_nonvanishing(f, diff.den());

    auto [min_sf, min_gcd] = squarefree_part(r.mean_curv.num());
    auto [bih_sf, bih_gcd] = squarefree_part(diff.num());
    r.minimal_eq = min_sf;
    r.minimal_gcd = min_gcd;
    r.biharmonic_eq = bih_sf;
    r.biharmonic_gcd = bih_gcd;

    r.mode = mode;
    r.minimal_roots = roots_with_context(f, r.mean_curv.num(), "minimality", digits, mode);
    r.biharmonic_roots = roots_with_context(f, diff.num(), "biharmonicity", digits, mode);

    for (size_t i = 0; i < r.biharmonic_roots.size(); ++i) {
        bool distinct_from_all = true;
        for (const auto& m : r.minimal_roots) {
            if (same_root(r.biharmonic_eq, r.biharmonic_roots[i], r.minimal_eq, m)) {
                distinct_from_all = false;
                break;
            }
        }
        if (distinct_from_all)
            r.nonminimal_indices.push_back(i);
    }

    if (r.biharmonic_roots.empty()) {
        SignCertificate sc;
        Rational den_sample = interior_sample(f.range_lo, f.range_hi);
        sc.denominator_sign = diff.den().sign_at(den_sample);
        PositivityOutcome pos = certify_positive(diff.num(), f.range_lo, f.range_hi);
        if (pos.positive) {
            sc.numerator_sign = +1;
            sc.certificate = *pos.certificate;
        } else {
            PositivityOutcome neg = certify_positive(-diff.num(), f.range_lo, f.range_hi);
            if (!neg.positive)
                throw std::logic_error("no roots on range yet no constant sign");
            sc.numerator_sign = -1;
            sc.certificate = *neg.certificate;
        }
        sc.function_sign = sc.numerator_sign * sc.denominator_sign;
        r.nonexistence = std::move(sc);
    }

    attach_levels(r);

    // ledger: display cross-checks, then statement notes, then the roots of a
    // differing published equation
    const Rational scale = f.ambient.c / default_reference_c(f.ambient);
    push_ratfunc_check(r.ledger, "mean-curvature", r.mean_curv,
                       f.published.mean_curvature, "t");
    std::optional<RatFunc> scaled_display;
    if (f.published.bnorm2)
        scaled_display = *f.published.bnorm2 * scale;
    push_ratfunc_check(r.ledger, "bnorm2", r.bnorm2, scaled_display, "t");
    const std::string var = f.published.equations_in_x ? "X" : "t";
    push_equation_check(r.ledger, "minimal-equation", r.minimal_eq, f.published.minimal_eq,
                        f.published.equations_in_x, var);
    push_equation_check(r.ledger, "minimal-equation-alt", r.minimal_eq,
                        f.published.minimal_eq_alt, f.published.equations_in_x, var);
    push_equation_check(r.ledger, "biharmonic-equation", r.biharmonic_eq,
                        f.published.biharmonic_eq, f.published.equations_in_x, var);
    if (f.published.biharmonic_eq_raw && f.published.biharmonic_eq) {
        LedgerEntry e;
        const bool consistent =
            same_zero_set(*f.published.biharmonic_eq_raw, *f.published.biharmonic_eq);
        e.code = consistent ? "display-internal-consistent" : "display-internal-mismatch";
        e.detail = consistent
                       ? "the pre-simplification display reduces to the displayed equation"
                       : "the pre-simplification display does not reduce to the displayed "
                         "equation";
        e.data.emplace_back("pre-simplification", f.published.biharmonic_eq_raw->to_string(var));
        e.data.emplace_back("displayed", f.published.biharmonic_eq->to_string(var));
        if (!consistent)
            e.data.emplace_back(
                "pre-simplification-normal-form",
                zero_set_normal_form(*f.published.biharmonic_eq_raw).to_string(var));
        r.ledger.push_back(std::move(e));
    }
    for (const auto& note : f.published.notes)
        r.ledger.push_back(LedgerEntry{"source-note", note, {}});
    ledger_published_equation_roots(r);
    return r;
}

Rational biharmonic_residual(const ClassificationResult& r, const Rational& x)
{
    return r.bnorm2.eval(x) - r.threshold;
}

} // namespace biharmonic
