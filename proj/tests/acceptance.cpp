// Acceptance suite: one check per release criterion, one verdict line each.
// Every tolerance is pinned in code; the binary exits nonzero when any
// criterion fails.

#include "biharmonic/chen_example.hpp"
#include "biharmonic/classify.hpp"
#include "biharmonic/form_algebra.hpp"
#include "biharmonic/mpfloat.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace biharmonic;

namespace {

struct SubCheck {
    std::string name;
    bool pass = false;
    std::string note;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    std::vector<SubCheck> subs;
    double seconds = 0;
    double budget_seconds = 0; // 0 = no budget
    bool pass() const
    {
        for (const auto& s : subs)
            if (!s.pass)
                return false;
        return budget_seconds == 0 || seconds < budget_seconds;
    }
};

Poly ip(std::initializer_list<long> ascending)
{
    std::vector<Rational> c;
    for (long v : ascending)
        c.emplace_back(v);
    return Poly(std::move(c));
}

Poly zero_set_normal_form(const Poly& p)
{
    return p.is_zero() ? p : squarefree_part(p).first.monic();
}

/// Interval certified within tol of the decimal target?
bool within(const Rational& lo, const Rational& hi, const std::string& target,
            const Rational& tol)
{
    Rational t = parse_rational(target);
    return rational_abs(lo - t) <= tol && rational_abs(hi - t) <= tol;
}

SubCheck check(std::string name, bool pass, std::string note = "")
{
    return {std::move(name), pass, std::move(note)};
}

// ---------------------------------------------------------------- criteria

/// Shared by criteria 1 and 2: the derived equation vs the quoted cubic, the
/// quoted cubic's unique positive root, and the ledgered discrepancies.
CriterionResult exceptional_tube_criterion(int id, FamilyId family, const Poly& quoted_cubic,
                                           const std::string& x_quote, const Rational& x_tol,
                                           const std::string& t_quote, const Rational& t_tol,
                                           const std::string& u_quote, const Rational& u_tol,
                                           const std::vector<std::string>& ledger_needles)
{
    CriterionResult out;
    out.id = id;
    out.title = family_name(family) + " classification";
    out.budget_seconds = 1.0;

    ClassificationResult r = classify(build_family(family, {}), 6);

    Poly derived_x = r.biharmonic_eq.even_decimation();
    bool derived_matches =
        zero_set_normal_form(derived_x) == zero_set_normal_form(quoted_cubic);
    out.subs.push_back(check(
        "derived biharmonic equation equals " + quoted_cubic.to_string("X") + " exactly",
        derived_matches,
        derived_matches ? ""
                        : "derived equation is " + derived_x.to_string("X") +
                              " (no real roots; the spectrum-derived truth differs from "
                              "the quoted cubic -- see the classification ledger)"));

    // the quoted cubic itself: unique positive root with the quoted decimals
    auto xroots = isolate_and_refine(quoted_cubic, Endpoint::at(Rational(0)),
                                     Endpoint::pos_inf(), 10);
    bool unique = xroots.size() == 1;
    out.subs.push_back(check("quoted cubic has a unique positive root", unique));
    if (unique) {
        Poly sf = squarefree_part(quoted_cubic).first;
        IsolatedRoot xr = refine_to_width(sf, xroots[0], Rational(1, pow10(10)));
        out.subs.push_back(check("root X = " + x_quote + " within tolerance",
                                 within(xr.low, xr.high, x_quote, x_tol)));
        Poly tpoly = quoted_cubic.inflate_square();
        auto troots = isolate_and_refine(tpoly, Endpoint::at(Rational(0)),
                                         Endpoint::pos_inf(), 10);
        bool t_ok = false, u_ok = false;
        if (troots.size() == 1) {
            Poly tsf = squarefree_part(tpoly).first;
            IsolatedRoot tr = refine_to_width(tsf, troots[0], Rational(1, pow10(10)));
            t_ok = within(tr.low, tr.high, t_quote, t_tol);
            auto [ulo, uhi] = atan_reciprocal_interval(tr.low, tr.high, 50);
            u_ok = within(ulo, uhi, u_quote, u_tol);
        }
        out.subs.push_back(check("t = " + t_quote + " within tolerance", t_ok));
        out.subs.push_back(check("u = " + u_quote + " within tolerance (50-digit interval "
                                 "arctangent)",
                                 u_ok));
    }

    for (const auto& needle : ledger_needles) {
        bool found = false;
        for (const auto& e : r.ledger)
            if (e.detail.find(needle) != std::string::npos)
                found = true;
        out.subs.push_back(check("ledger records '" + needle + "'", found));
    }
    return out;
}

CriterionResult criterion_1()
{
    return exceptional_tube_criterion(
        1, FamilyId::cp_d, ip({-15, 41, 43, 11}), "0.278629", Rational(5, pow10(7)),
        "0.527853", Rational(5, pow10(7)), "1.08512", Rational(5, pow10(6)),
        {"41t^6", "1.0917"});
}

CriterionResult criterion_2()
{
    return exceptional_tube_criterion(
        2, FamilyId::cp_e, ip({-9, 43, -107, 13}), "7.81906", Rational(5, pow10(6)),
        "2.79626", Rational(5, pow10(6)), "0.343448", Rational(5, pow10(6)), {});
}

CriterionResult criterion_3()
{
    CriterionResult out;
    out.id = 3;
    out.title = "isoparametric sweep, n = 3..10";
    out.budget_seconds = 10.0;
    const QuadExt half_sqrt2(Rational(0), Rational(1, 2), 2);

    bool g1_ok = true;
    for (int n = 3; n <= 10; ++n) {
        ClassificationResult r = classify(build_family(FamilyId::sphere_g1, {.n = n}), 6);
        std::vector<QuadExt> levels;
        for (const auto& l : r.levels)
            if (l.which == "biharmonic")
                levels.push_back(l.value);
        g1_ok = g1_ok && r.nonminimal_indices.size() == 2 && levels.size() == 2 &&
                levels[0] == -half_sqrt2 && levels[1] == half_sqrt2;
    }
    out.subs.push_back(check("g=1: nonminimal biharmonic exactly at level +-1/sqrt(2)", g1_ok));

    bool g2_ok = true;
    for (int n = 3; n <= 10; ++n)
        for (int p = 2; 2 * p <= n + 1; ++p) {
            ClassificationResult r =
                classify(build_family(FamilyId::sphere_g2, {.n = n, .p = p}), 6);
            const bool excluded = (p - 1) == (n - p);
            g2_ok = g2_ok && (r.nonminimal_indices.size() == (excluded ? 0u : 1u));
            if (!excluded && !r.nonminimal_indices.empty()) {
                const IsolatedRoot& torus = r.biharmonic_roots[r.nonminimal_indices[0]];
                g2_ok = g2_ok && torus.exact && *torus.exact == Rational(1);
            }
            bool level_ok = false;
            for (const auto& l : r.levels)
                if (l.which == "minimal" &&
                    l.value == QuadExt(Rational(n + 1 - 2 * p, n - 1)))
                    level_ok = true;
            g2_ok = g2_ok && level_ok;
        }
    out.subs.push_back(check(
        "g=2: Clifford-torus level 0 with the p-1 != n-p exclusion; minimal level "
        "(n+1-2p)/(n-1) exact",
        g2_ok));

    auto certified = [](const ClassificationResult& r) {
        return r.biharmonic_roots.empty() && r.nonexistence &&
               r.nonexistence->certificate.sturm_root_count == 0 &&
               r.nonexistence->function_sign == +1;
    };
    bool g3_ok = true;
    for (int mult : {1, 2, 4, 8})
        g3_ok = g3_ok &&
                certified(classify(build_family(FamilyId::sphere_g3, {.mult = mult}), 6));
    out.subs.push_back(check("g=3: positivity certificates for all four variants", g3_ok));

    bool g4_ok = true;
    for (int n = 5; n <= 10; n += 2)
        for (int m1 = 1; 2 * m1 <= (n - 1) / 2; ++m1)
            g4_ok = g4_ok && certified(classify(build_family(FamilyId::sphere_g4,
                                                             {.m1 = m1,
                                                              .m2 = (n - 1) / 2 - m1}),
                                                6));
    out.subs.push_back(check("g=4: positivity certificates", g4_ok));

    bool g6_ok = true;
    for (int mult : {1, 2})
        g6_ok = g6_ok &&
                certified(classify(build_family(FamilyId::sphere_g6, {.mult = mult}), 6));
    out.subs.push_back(check("g=6: positivity certificates", g6_ok));
    return out;
}

CriterionResult criterion_4()
{
    CriterionResult out;
    out.id = 4;
    out.title = "A-type closed-form radii, p+q <= 9";
    bool closed_form_ok = true, norm_ok = true, bracket_ok = true;
    for (int p = 0; p <= 4; ++p)
        for (int q = std::max(p, 1); p + q <= 9; ++q) {
            FamilySpec f = build_family(FamilyId::cp_a, {.p = p, .q = q});
            ClassificationResult r = classify(f, 6);
            if (r.biharmonic_roots.size() != 2) {
                closed_form_ok = false;
                continue;
            }
            const long n = p + q + 1;
            const Integer disc = Integer(p - q) * (p - q) + 4 * (p + q + 2);
            QuadExt sqrt_disc = QuadExt::sqrt_of(disc);
            QuadExt denom{Rational(2 * q + 1)};
            QuadExt xplus = (QuadExt(Rational(p + q + 3)) + sqrt_disc) / denom;
            QuadExt xminus = (QuadExt(Rational(p + q + 3)) - sqrt_disc) / denom;

            Poly bx = r.biharmonic_eq.even_decimation();
            closed_form_ok = closed_form_ok && eval_at(bx, xplus).sgn() == 0 &&
                             eval_at(bx, xminus).sgn() == 0 && xminus.sgn() > 0;

            RatFunc bnx(r.bnorm2.num().even_decimation(),
                        r.bnorm2.den().even_decimation());
            norm_ok = norm_ok && eval_at(bnx, xplus) == QuadExt(Rational(2 * (n + 1))) &&
                      eval_at(bnx, xminus) == QuadExt(Rational(2 * (n + 1)));

            // the isolated radii bracket the closed-form values, in order
            auto brackets = [&](const IsolatedRoot& root, const QuadExt& x) {
                if (root.exact)
                    return QuadExt(*root.exact * *root.exact) == x;
                return QuadExt(root.low * root.low) < x &&
                       QuadExt(root.high * root.high) > x;
            };
            bracket_ok = bracket_ok && brackets(r.biharmonic_roots[0], xminus) &&
                         brackets(r.biharmonic_roots[1], xplus);
        }
    out.subs.push_back(check("both radii solve the closed form with exact residual 0",
                             closed_form_ok));
    out.subs.push_back(check("||B||^2 at both radii equals 2(n+1) exactly", norm_ok));
    out.subs.push_back(check("isolating intervals bracket the closed-form values",
                             bracket_ok));
    return out;
}

CriterionResult criterion_5()
{
    CriterionResult out;
    out.id = 5;
    out.title = "B- and C-type nonexistence, n up to 12";
    bool b_ok = true, c_ok = true, b_display = true, c_display = true;
    for (int n = 2; n <= 12; ++n) {
        FamilySpec f = build_family(FamilyId::cp_b, {.n = n});
        ClassificationResult r = classify(f, 6);
        b_ok = b_ok && r.biharmonic_roots.empty() && r.nonexistence &&
               r.nonexistence->function_sign == +1;
        b_display = b_display && second_form_norm2(f) == *f.published.bnorm2;
    }
    for (int n = 3; n <= 12; ++n) {
        FamilySpec f = build_family(FamilyId::cp_c, {.n = n});
        ClassificationResult r = classify(f, 6);
        c_ok = c_ok && r.biharmonic_roots.empty() && r.nonexistence &&
               r.nonexistence->function_sign == +1;
        c_display = c_display && second_form_norm2(f) == *f.published.bnorm2;
    }
    out.subs.push_back(check("B-type certificates, n = 2..12", b_ok));
    out.subs.push_back(check("C-type certificates, n = 3..12", c_ok));
    out.subs.push_back(check("derived ||B||^2 equals the displayed B-type quotient exactly",
                             b_display));
    out.subs.push_back(check("derived ||B||^2 equals the displayed C(X) quotient exactly",
                             c_display));
    return out;
}

CriterionResult criterion_6()
{
    CriterionResult out;
    out.id = 6;
    out.title = "quaternionic sweep, n = 2..8";

    bool geo_min = true, geo_bih = true, geo_note = true;
    for (int n = 2; n <= 8; ++n) {
        FamilySpec f = build_family(FamilyId::hp_geodesic_sphere, {.n = n});
        ClassificationResult r = classify(f, 6);
        // minimal radius: t^2 = 3/(4n-1) exactly
        Poly mx = r.minimal_eq.even_decimation();
        geo_min = geo_min && r.minimal_roots.size() == 1 &&
                  sign(mx.eval(Rational(3, 4 * n - 1))) == 0 &&
                  zero_set_normal_form(mx) == zero_set_normal_form(ip({-3, 4 * n - 1}));
        // biharmonic radii: t^2 = (2n+7 +- 2 sqrt(n^2+4n+13))/(4n-1), residual 0
        Poly bx = r.biharmonic_eq.even_decimation();
        QuadExt disc = QuadExt::sqrt_of(Integer(n) * n + 4 * n + 13);
        QuadExt denom{Rational(4 * n - 1)};
        QuadExt xp = (QuadExt(Rational(2 * n + 7)) + disc * QuadExt(Rational(2))) / denom;
        QuadExt xm = (QuadExt(Rational(2 * n + 7)) - disc * QuadExt(Rational(2))) / denom;
        RatFunc bnx(r.bnorm2.num().even_decimation(), r.bnorm2.den().even_decimation());
        geo_bih = geo_bih && r.biharmonic_roots.size() == 2 &&
                  r.nonminimal_indices.size() == 2 && eval_at(bx, xp).sgn() == 0 &&
                  eval_at(bx, xm).sgn() == 0 &&
                  eval_at(bnx, xp) == QuadExt(Rational(4 * (n + 2))) &&
                  eval_at(bnx, xm) == QuadExt(Rational(4 * (n + 2)));
        bool note = false;
        for (const auto& e : r.ledger)
            if (e.detail.find("omits a factor 2") != std::string::npos)
                note = true;
        geo_note = geo_note && note;
    }
    out.subs.push_back(check("geodesic spheres: minimal radius matches the closed form "
                             "exactly",
                             geo_min));
    out.subs.push_back(check("geodesic spheres: biharmonic radii solve the solved form "
                             "(factor-2 misprint ledgered) with ||B||^2 = 4(n+2) exactly",
                             geo_bih && geo_note));

    bool tube_ok = true, tube_ledger = true;
    for (int n = 2; n <= 8; ++n) {
        FamilySpec f = build_family(FamilyId::hp_cp_tube, {.n = n});
        ClassificationResult r = classify(f, 6);
        // derived quartic: every reported radius satisfies the threshold; with
        // no real roots the condition holds vacuously and a certificate exists
        tube_ok = tube_ok && r.biharmonic_roots.empty() && r.nonexistence &&
                  r.nonexistence->function_sign == +1;
        for (size_t idx : r.nonminimal_indices) {
            Rational res = biharmonic_residual(r, r.biharmonic_roots[idx].midpoint());
            tube_ok = tube_ok && sign(res) == 0;
        }
        int mismatches = 0;
        for (const auto& e : r.ledger) {
            if (e.code == "display-mismatch:minimal-equation")
                ++mismatches;
            if (e.code == "display-mismatch:minimal-equation-alt")
                ++mismatches;
        }
        tube_ledger = tube_ledger && mismatches == 2;
    }
    out.subs.push_back(check("CP-tubes: derived quartic used; both displayed minimality "
                             "numerators ledgered as mismatching",
                             tube_ok && tube_ledger));

    bool hpk_ok = true;
    int boundary_cells = 0;
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            FamilySpec f = build_family(FamilyId::hp_hpk_tube, {.n = n, .k = k});
            if (n == 2 * k + 1) {
                // minimal radius sits on the open-range boundary: the endpoint
                // policy must fire
                try {
                    classify(f, 6);
                    hpk_ok = false;
                } catch (const EndpointRootError&) {
                    ++boundary_cells;
                }
                continue;
            }
            ClassificationResult r = classify(f, 6);
            Poly bx = r.biharmonic_eq.even_decimation();
            Integer disc = Integer(2 * n + 7) * (2 * n + 7) -
                           Integer(4 * (n - k) - 1) * (4 * k + 3);
            QuadExt sq = QuadExt::sqrt_of(disc);
            QuadExt denom{Rational(4 * (n - k) - 1)};
            QuadExt xp = (QuadExt(Rational(2 * n + 7)) + sq) / denom;
            QuadExt xm = (QuadExt(Rational(2 * n + 7)) - sq) / denom;
            RatFunc bnx(r.bnorm2.num().even_decimation(), r.bnorm2.den().even_decimation());
            hpk_ok = hpk_ok && eval_at(bx, xp).sgn() == 0 && eval_at(bx, xm).sgn() == 0 &&
                     eval_at(bnx, xp) == QuadExt(Rational(4 * (n + 2))) &&
                     eval_at(bnx, xm) == QuadExt(Rational(4 * (n + 2)));
            // reported radii lie among the closed-form values
            for (const auto& root : r.biharmonic_roots) {
                QuadExt lo2(root.low * root.low), hi2(root.high * root.high);
                bool matches = (root.exact && (QuadExt(*root.exact * *root.exact) == xp ||
                                               QuadExt(*root.exact * *root.exact) == xm)) ||
                               (lo2 < xp && xp < hi2) || (lo2 < xm && xm < hi2);
                hpk_ok = hpk_ok && matches;
            }
        }
    out.subs.push_back(check("HP^k tubes: radii solve the derived quartic with residual 0 "
                             "and ||B||^2 = 4(n+2) exactly",
                             hpk_ok));
    out.subs.push_back(check("HP^k tubes: boundary minimal radii (n = 2k+1) trigger the "
                             "endpoint policy",
                             boundary_cells == 3));
    return out;
}

CriterionResult criterion_7()
{
    CriterionResult out;
    out.id = 7;
    out.title = "explicit biharmonic map verifier, m = 1..6";
    out.budget_seconds = 5.0;
    bool bitension = true, displays = true, report_complete = true;
    for (unsigned m = 1; m <= 6; ++m) {
        VerificationReport r = verify_example(m);
        bitension = bitension && r.bilaplacian_vanishes && r.identities[1].equal;
        displays = displays && r.identities[0].equal && r.identities[2].equal &&
                   r.tension_norm_nonnegative;
        // identity (d): outcome reported with the exact difference polynomial
        const IdentityCheck& d = r.identities[3];
        bool diff_consistent = (d.claimed - d.computed) == d.difference;
        report_complete = report_complete && d.name == "tension-gradient-norm-squared" &&
                          diff_consistent && (m == 1 ? d.equal : !d.equal);
    }
    out.subs.push_back(check("bitension vanishes exactly for every component", bitension));
    out.subs.push_back(
        check("tension component and tension-norm displays match exactly", displays));
    out.subs.push_back(check("gradient-norm display outcome reported with exact "
                             "difference polynomial",
                             report_complete));
    return out;
}

CriterionResult criterion_8()
{
    CriterionResult out;
    out.id = 8;
    out.title = "curvature-algebra identities and inequalities, 10^4 instances";
    out.budget_seconds = 30.0;
    std::uint64_t total = 0, violations = 0;
    bool identities = true, contraction = true, bounded = true;
    for (unsigned m = 2; m <= 4; ++m)
        for (unsigned r = 2; r <= 4; ++r) {
            InequalityReport rep = check_inequalities(1112, 42, m, r);
            total += rep.trials;
            violations += rep.violations.size();
            identities = identities && rep.identities_exact;
            contraction = contraction && rep.contraction_identity_exact;
            bounded = bounded && rep.max_bracket_ratio <= Rational(1) &&
                      rep.max_curvature_ratio <= Rational(1);
        }
    out.subs.push_back(check("10^4 instances executed (seed 42)", total >= 10000,
                             std::to_string(total) + " trials"));
    out.subs.push_back(check("adjoint identity exact on every instance", identities));
    out.subs.push_back(check("contraction identity exact on every instance", contraction));
    out.subs.push_back(check("zero inequality violations", violations == 0));
    out.subs.push_back(check("tightness ratios bounded by 1", bounded));
    return out;
}

CriterionResult criterion_9()
{
    CriterionResult out;
    out.id = 9;
    out.title = "root-count oracle equivalence and ring axioms";

    auto dense_count = [](const Poly& p, const Rational& lo, const Rational& hi) {
        int count = 0;
        int prev = p.sign_at(lo);
        Rational step = (hi - lo) / 10000;
        for (int i = 1; i < 10000; ++i) {
            int s = p.sign_at(lo + step * i);
            if (s == 0) {
                ++count;
                prev = 0;
                continue;
            }
            if (prev != 0 && s != prev)
                ++count;
            prev = s;
        }
        int end = p.sign_at(hi);
        if (prev != 0 && end != prev)
            ++count;
        return count;
    };

    std::uint64_t state = 50001;
    auto random_poly = [&](int max_degree, long amp) {
        while (true) {
            int deg = static_cast<int>(rand_int(state, 1, max_degree));
            std::vector<Rational> c;
            for (int i = 0; i <= deg; ++i)
                c.emplace_back(rand_int(state, -amp, amp));
            Poly p{std::move(c)};
            if (p.degree() >= 1)
                return p;
        }
    };

    int agreements = 0, polys = 0;
    bool all_agree = true;
    while (polys < 500) {
        Poly sf = squarefree_part(random_poly(6, 50)).first;
        if (sf.degree() < 1)
            continue;
        ++polys;
        Rational bound(sf.root_bound());
        int sturm = count_roots(sf, Endpoint::at(-bound), Endpoint::at(bound));
        int sampled = dense_count(sf, -bound, bound);
        if (sturm == sampled)
            ++agreements;
        else
            all_agree = false;
    }
    out.subs.push_back(check("Sturm counts match the 10^4-point sampling oracle on 500 "
                             "random polynomials",
                             all_agree, std::to_string(agreements) + "/500"));

    bool axioms = true;
    for (int trial = 0; trial < 200; ++trial) {
        Poly p = random_poly(6, 50);
        Poly q = random_poly(6, 50);
        axioms = axioms &&
                 (p * q).derivative() == p.derivative() * q + p * q.derivative();
        auto [quot, rem] = p.divmod(q);
        axioms = axioms && p == q * quot + rem && rem.degree() < q.degree();
        Poly g = poly_gcd(p, q);
        axioms = axioms && p.divmod(g).second.is_zero() && q.divmod(g).second.is_zero() &&
                 g.lead() == Rational(1);
    }
    out.subs.push_back(check("ring-axiom property tests pass", axioms));
    return out;
}

} // namespace

int main()
{
    std::vector<std::function<CriterionResult()>> criteria = {
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
        criterion_6, criterion_7, criterion_8, criterion_9};

    int failures = 0;
    for (auto& make : criteria) {
        auto start = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = make();
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                      start)
                            .count();
        } catch (const std::exception& e) {
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                      start)
                            .count();
            r.subs.push_back(check("criterion executed", false, e.what()));
        }
        const bool pass = r.pass();
        if (!pass)
            ++failures;
        std::ostringstream line;
        line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.title
             << " (" << r.seconds << "s";
        if (r.budget_seconds > 0)
            line << ", budget " << r.budget_seconds << "s";
        line << ")";
        std::cout << line.str() << "\n";
        for (const auto& s : r.subs) {
            std::cout << "    " << (s.pass ? "- ok:   " : "- FAIL: ") << s.name;
            if (!s.note.empty())
                std::cout << " [" << s.note << "]";
            std::cout << "\n";
        }
        if (r.budget_seconds > 0 && r.seconds >= r.budget_seconds)
            std::cout << "    - FAIL: runtime budget exceeded\n";
    }
    std::cout << "acceptance: " << (9 - failures) << "/9 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
