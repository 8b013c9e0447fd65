#include "biharmonic/catalog.hpp"

#include <sstream>

namespace biharmonic {

std::string family_name(FamilyId id)
{
    switch (id) {
    case FamilyId::sphere_g1: return "sphere-g1";
    case FamilyId::sphere_g2: return "sphere-g2";
    case FamilyId::sphere_g3: return "sphere-g3";
    case FamilyId::sphere_g4: return "sphere-g4";
    case FamilyId::sphere_g6: return "sphere-g6";
    case FamilyId::cp_a: return "cp-a";
    case FamilyId::cp_b: return "cp-b";
    case FamilyId::cp_c: return "cp-c";
    case FamilyId::cp_d: return "cp-d";
    case FamilyId::cp_e: return "cp-e";
    case FamilyId::hp_geodesic_sphere: return "hp-geodesic-sphere";
    case FamilyId::hp_cp_tube: return "hp-cp-tube";
    case FamilyId::hp_hpk_tube: return "hp-hpk-tube";
    }
    return "?";
}

std::optional<FamilyId> family_from_name(const std::string& name)
{
    for (FamilyId id : {FamilyId::sphere_g1, FamilyId::sphere_g2, FamilyId::sphere_g3,
                        FamilyId::sphere_g4, FamilyId::sphere_g6, FamilyId::cp_a, FamilyId::cp_b,
                        FamilyId::cp_c, FamilyId::cp_d, FamilyId::cp_e,
                        FamilyId::hp_geodesic_sphere, FamilyId::hp_cp_tube,
                        FamilyId::hp_hpk_tube})
        if (family_name(id) == name)
            return id;
    return std::nullopt;
}

std::string AmbientSpace::to_string() const
{
    std::ostringstream os;
    switch (kind) {
    case Kind::sphere: os << "S^" << n << "(c=" << c.get_str() << ")"; break;
    case Kind::complex_projective: os << "CP^" << n << "(c=" << c.get_str() << ")"; break;
    case Kind::quaternion_projective: os << "HP^" << n << "(c=" << c.get_str() << ")"; break;
    }
    return os.str();
}

Integer FamilySpec::multiplicity_sum() const
{
    Integer total(0);
    for (const auto& term : spectrum) {
        if (const auto* b = std::get_if<RationalBranch>(&term))
            total += b->multiplicity;
        else
            total += 2 * std::get<ConjugatePairRule>(term).multiplicity_each;
    }
    return total;
}

namespace {

Poly ipoly(std::initializer_list<long> ascending)
{
    std::vector<Rational> c;
    c.reserve(ascending.size());
    for (long v : ascending)
        c.emplace_back(v);
    return Poly(std::move(c));
}

RatFunc rf(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den)); }

const Poly kOne = ipoly({1});
const Poly kT = ipoly({0, 1});

RationalBranch branch(RatFunc value, long mult, std::string label)
{
    return {std::move(value), Integer(mult), std::move(label)};
}

// branch values as rational functions of t = cot u
RatFunc cot_u() { return rf(kT, kOne); }
RatFunc minus_tan_u() { return rf(ipoly({-1}), kT); }
RatFunc tan_u() { return rf(kOne, kT); }
RatFunc minus_cot_u() { return rf(ipoly({0, -1}), kOne); }
RatFunc two_cot_2u() { return rf(ipoly({-1, 0, 1}), kT); }          // (t^2-1)/t
RatFunc minus_two_cot_2u() { return rf(ipoly({1, 0, -1}), kT); }    // (1-t^2)/t
RatFunc two_tan_2u() { return rf(ipoly({0, 4}), ipoly({-1, 0, 1})); } // 4t/(t^2-1)
RatFunc minus_two_tan_2u() { return rf(ipoly({0, -4}), ipoly({-1, 0, 1})); }
RatFunc cot_quarter_less() { return rf(ipoly({1, 1}), ipoly({-1, 1})); }  // (t+1)/(t-1) = cot(pi/4-u)
RatFunc cot_threequarter_less() { return rf(ipoly({1, -1}), ipoly({1, 1})); } // (1-t)/(1+t) = cot(3pi/4-u)

// The two cot branches conjugate over Q(sqrt 3) appearing for g = 3 and as
// the m1 group of g = 6: cot(x/g + pi/3) and cot(x/g + 2pi/3).
ConjugatePairRule sqrt3_pair_third(long mult_each)
{
    ConjugatePairRule r;
    const QuadExt s3(Rational(0), Rational(1), 3);
    r.branch_plus = {QuadExt(Rational(-1)) * s3, QuadExt(Rational(1)), QuadExt(Rational(1)), s3};
    r.branch_minus = {s3, QuadExt(Rational(1)), QuadExt(Rational(1)), -s3};
    r.pair_sum = rf(ipoly({0, 8}), ipoly({1, 0, -3}));
    r.pair_sum_squares = rf(ipoly({6, 0, 44, 0, 6}), ipoly({1, 0, -6, 0, 9}));
    r.multiplicity_each = Integer(mult_each);
    r.label = "cot(x/g + pi/3), cot(x/g + 2pi/3)";
    return r;
}

// cot(x/6 + pi/6) and cot(x/6 + 5pi/6): the m2-group pair of g = 6.
ConjugatePairRule sqrt3_pair_sixth(long mult_each)
{
    ConjugatePairRule r;
    const QuadExt s3(Rational(0), Rational(1), 3);
    r.branch_plus = {QuadExt(Rational(-1)), s3, s3, QuadExt(Rational(1))};
    r.branch_minus = {QuadExt(Rational(1)), s3, s3, QuadExt(Rational(-1))};
    r.pair_sum = rf(ipoly({0, 8}), ipoly({3, 0, -1}));
    r.pair_sum_squares = rf(ipoly({6, 0, 44, 0, 6}), ipoly({9, 0, -6, 0, 1}));
    r.multiplicity_each = Integer(mult_each);
    r.label = "cot(x/6 + pi/6), cot(x/6 + 5pi/6)";
    return r;
}

void require(bool ok, const std::string& constraint)
{
    if (!ok)
        throw std::invalid_argument("family constraint violated: " + constraint);
}

Rational default_c(AmbientSpace::Kind kind)
{
    return kind == AmbientSpace::Kind::sphere ? Rational(1) : Rational(4);
}

} // namespace

FamilySpec build_family(FamilyId id, const FamilyParams& params)
{
    FamilySpec f;
    f.id = id;
    f.params = params;

    const QuadExt one_over_sqrt3(Rational(0), Rational(1, 3), 3);
    const QuadExt sqrt3(Rational(0), Rational(1), 3);

    switch (id) {
    case FamilyId::sphere_g1: {
        require(params.n >= 2, "sphere g=1 needs n >= 2");
        f.ambient = {AmbientSpace::Kind::sphere, Rational(1), params.n, params.n - 1};
        f.parameter_note = "y = cot(x), x in (0, pi)";
        f.range_lo = Endpoint::neg_inf();
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(cot_u(), params.n - 1, "cot(x)")};
        f.published.minimal_eq = kT;
        f.published.biharmonic_eq = ipoly({-(params.n - 1), 0, params.n - 1});
        f.published.notes = {
            "stated classification: minimal level t = 0 (great sphere); nonminimal "
            "biharmonic level t = +-1/sqrt(2) (small sphere)"};
        break;
    }
    case FamilyId::sphere_g2: {
        const int n = params.n, p = params.p;
        require(n >= 3, "sphere g=2 needs n >= 3");
        require(2 <= p && 2 * p <= n + 1, "sphere g=2 needs 2 <= p <= (n+1)/2");
        f.ambient = {AmbientSpace::Kind::sphere, Rational(1), n, n - 1};
        f.parameter_note = "y = cot(x/2), x in (0, pi)";
        f.range_lo = Endpoint::at(Rational(0));
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(cot_u(), p - 1, "cot(x/2)"),
                      branch(minus_tan_u(), n - p, "cot((pi+x)/2)")};
        f.published.minimal_eq = ipoly({-(n - p), 0, p - 1});
        f.published.biharmonic_eq = ipoly({n - p, 0, -(n - 1), 0, p - 1});
        f.published.notes = {
            "stated classification: biharmonic levels t = 0 and t = (n+1-2p)/(n-1); "
            "nonminimal (Clifford torus) requires p-1 != n-p"};
        break;
    }
    case FamilyId::sphere_g3: {
        const int m = params.mult;
        require(m == 1 || m == 2 || m == 4 || m == 8, "sphere g=3 multiplicity in {1,2,4,8}");
        const int n = 3 * m + 1;
        require(params.n == 0 || params.n == n, "sphere g=3 forces n = 3*mult + 1");
        f.ambient = {AmbientSpace::Kind::sphere, Rational(1), n, n - 1};
        f.parameter_note = "y = cot(x/3), x in (0, pi)";
        f.range_lo = Endpoint::at(one_over_sqrt3);
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(cot_u(), m, "cot(x/3)"), sqrt3_pair_third(m)};
        f.published.notes = {
            "source remark states 0 < cot(x/3) < 1/sqrt(3), but x in (0, pi) gives "
            "cot(x/3) in (1/sqrt(3), inf); the catalog uses the derived range"};
        break;
    }
    case FamilyId::sphere_g4: {
        const int m1 = params.m1, m2 = params.m2;
        require(m1 >= 1 && m2 >= 1, "sphere g=4 needs m1, m2 >= 1");
        const int n = 2 * (m1 + m2) + 1;
        require(params.n == 0 || params.n == n, "sphere g=4 forces n = 2(m1+m2) + 1");
        f.ambient = {AmbientSpace::Kind::sphere, Rational(1), n, n - 1};
        f.parameter_note = "y = cot(x/4), x in (0, pi)";
        f.range_lo = Endpoint::at(Rational(1));
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(cot_u(), m1, "cot(x/4)"),
                      branch(rf(ipoly({-1, 1}), ipoly({1, 1})), m2, "cot((pi+x)/4)"),
                      branch(minus_tan_u(), m1, "cot((2pi+x)/4)"),
                      branch(rf(ipoly({-1, -1}), ipoly({-1, 1})), m2, "cot((3pi+x)/4)")};
        break;
    }
    case FamilyId::sphere_g6: {
        const int m = params.mult;
        require(m == 1 || m == 2, "sphere g=6 multiplicity in {1,2}");
        const int n = 6 * m + 1;
        require(params.n == 0 || params.n == n, "sphere g=6 forces n = 6*mult + 1");
        f.ambient = {AmbientSpace::Kind::sphere, Rational(1), n, n - 1};
        f.parameter_note = "y = cot(x/6), x in (0, pi)";
        f.range_lo = Endpoint::at(sqrt3);
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(cot_u(), m, "cot(x/6)"), sqrt3_pair_third(m),
                      branch(minus_tan_u(), m, "cot((3pi+x)/6)"), sqrt3_pair_sixth(m)};
        break;
    }
    case FamilyId::cp_a: {
        const int p = params.p, q = params.q;
        require(0 <= p && p <= q && q > 0, "A-type needs 0 <= p <= q, 0 < q");
        const int n = p + q + 1;
        require(params.n == 0 || params.n == n, "A-type forces n = p + q + 1");
        f.ambient = {AmbientSpace::Kind::complex_projective, default_c(AmbientSpace::Kind::complex_projective),
                     n, 2 * n - 1};
        f.parameter_note = "t = cot(u), u in (0, pi/2)";
        f.range_lo = Endpoint::at(Rational(0));
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(minus_tan_u(), 2 * p, "-tan(u)"),
                      branch(cot_u(), 2 * q, "cot(u)"),
                      branch(two_cot_2u(), 1, "2cot(2u)")};
        f.published.mean_curvature = rf(ipoly({-(2 * p + 1), 0, 2 * q + 1}), kT);
        f.published.bnorm2 =
            rf(ipoly({2 * p + 1, 0, -2, 0, 2 * q + 1}), ipoly({0, 0, 1}));
        f.published.minimal_eq = ipoly({-(2 * p + 1), 0, 2 * q + 1});
        f.published.biharmonic_eq =
            ipoly({2 * p + 1, 0, -2 * (p + q + 3), 0, 2 * q + 1});
        break;
    }
    case FamilyId::cp_b: {
        const int n = params.n;
        require(n >= 2, "B-type needs n >= 2");
        f.ambient = {AmbientSpace::Kind::complex_projective, default_c(AmbientSpace::Kind::complex_projective),
                     n, 2 * n - 1};
        f.parameter_note = "t = cot(u), u in (0, pi/4)";
        f.range_lo = Endpoint::at(Rational(1));
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(minus_cot_u(), n - 1, "-cot(u)"),
                      branch(tan_u(), n - 1, "tan(u)"),
                      branch(two_tan_2u(), 1, "2tan(2u)")};
        f.published.mean_curvature =
            rf(ipoly({-(n - 1), 0, 2 * (n + 1), 0, -(n - 1)}), ipoly({0, -1, 0, 1}));
        {
            // ((n-1)(X-1)^2(X^2+1) + 16X^2) / (X(X-1)^2), written in t
            Poly X = Poly::variable();
            Poly num = (ipoly({-1, 1}) * ipoly({-1, 1})) * ipoly({1, 0, 1}) * Rational(n - 1) +
                       ipoly({0, 0, 16});
            Poly den = X * ipoly({-1, 1}) * ipoly({-1, 1});
            f.published.bnorm2 = rf(num.inflate_square(), den.inflate_square());
            f.published.biharmonic_eq =
                num - (X * ipoly({-1, 1}) * ipoly({-1, 1})) * Rational(2 * (n + 1));
            f.published.minimal_eq = ipoly({n - 1, -2 * (n + 1), n - 1});
            f.published.equations_in_x = true;
        }
        break;
    }
    case FamilyId::cp_c: {
        const int n = params.n;
        require(n >= 3, "C-type needs n >= 3");
        f.ambient = {AmbientSpace::Kind::complex_projective, default_c(AmbientSpace::Kind::complex_projective),
                     n, 2 * n - 1};
        f.parameter_note = "t = cot(u), u in (0, pi/4)";
        f.range_lo = Endpoint::at(Rational(1));
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(minus_cot_u(), n - 3, "-cot(u)"),
                      branch(cot_quarter_less(), 2, "cot(pi/4 - u)"),
                      branch(tan_u(), n - 3, "cot(pi/2 - u)"),
                      branch(cot_threequarter_less(), 2, "cot(3pi/4 - u)"),
                      branch(minus_two_cot_2u(), 1, "1/t - t")};
        {
            Poly X = Poly::variable();
            Poly Xm1sq = ipoly({-1, 1}) * ipoly({-1, 1});
            Poly num = Rational(n - 2) * (X * X * Xm1sq) + Rational(n - 2) * Xm1sq +
                       Rational(4) * (X * ipoly({1, 6, 1})) - Rational(2) * (X * Xm1sq);
            f.published.bnorm2 = rf(num.inflate_square(), (X * Xm1sq).inflate_square());
            f.published.biharmonic_eq = num - Rational(2 * (n + 1)) * (X * Xm1sq);
            f.published.minimal_eq = ipoly({n - 2, -2 * (n + 2), n - 2});
            f.published.equations_in_x = true;
        }
        f.published.mean_curvature =
            rf(ipoly({-(n - 2), 0, 2 * (n + 2), 0, -(n - 2)}), ipoly({0, -1, 0, 1}));
        f.published.notes = {
            "curvature table states -2tan(2u) for the Hopf branch; the accompanying "
            "t-expressions use 1/t - t = -2cot(2u), which is what the displayed mean "
            "curvature requires, so the t-expressions are taken as primitive"};
        break;
    }
    case FamilyId::cp_d: {
        require(params.n == 0 || params.n == 9, "D-type is the n = 9 tube");
        const int n = 9;
        f.ambient = {AmbientSpace::Kind::complex_projective, default_c(AmbientSpace::Kind::complex_projective),
                     n, 2 * n - 1};
        f.parameter_note = "t = cot(u), u in (0, pi/4)";
        f.range_lo = Endpoint::at(Rational(1));
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(minus_cot_u(), 4, "-cot(u)"),
                      branch(cot_quarter_less(), 4, "cot(pi/4 - u)"),
                      branch(tan_u(), 4, "cot(pi/2 - u)"),
                      branch(cot_threequarter_less(), 4, "cot(3pi/4 - u)"),
                      branch(minus_two_cot_2u(), 1, "1/t - t")};
        f.published.mean_curvature = rf(ipoly({-5, 0, 26, 0, -5}), ipoly({0, -1, 0, 1}));
        {
            Poly X = Poly::variable();
            Poly Xm1sq = ipoly({-1, 1}) * ipoly({-1, 1});
            Poly numD = ipoly({5, 1, 63, 11}); // 11X^3 + 63X^2 + X + 5
            f.published.bnorm2 = rf(numD.inflate_square(), (X * Xm1sq).inflate_square());
            f.published.biharmonic_eq_raw = numD - Rational(20) * (X * Xm1sq);
            f.published.biharmonic_eq = ipoly({-15, 41, 43, 11});
            f.published.minimal_eq = ipoly({5, -26, 5});
            f.published.equations_in_x = true;
        }
        f.published.notes = {
            "curvature table states -2tan(2u) for the Hopf branch; the accompanying "
            "t-expressions use 1/t - t, consistent with the displayed mean curvature",
            "statement quotes the biharmonic condition as 41t^6+43t^4+41t^2-15 = 0 while "
            "the worked solution uses 11X^3+43X^2+41X-15 with X = t^2 (leading "
            "coefficient 41 vs 11)",
            "statement quotes radius u = 1.0917, the worked solution u = 1.08512",
            "the quoted root t = 0.527853 lies outside the tube range t > 1 (u < pi/4)",
            "minimal radius quoted as t = 1/5; the displayed factorization gives "
            "t^2 in {1/5, 5}, and only t = sqrt(5) lies in the range t > 1"};
        f.published.quoted_biharmonic_x = "0.278629";
        f.published.quoted_biharmonic_t = "0.527853";
        f.published.quoted_biharmonic_u = "1.08512";
        break;
    }
    case FamilyId::cp_e: {
        require(params.n == 0 || params.n == 15, "E-type is the n = 15 tube");
        const int n = 15;
        f.ambient = {AmbientSpace::Kind::complex_projective, default_c(AmbientSpace::Kind::complex_projective),
                     n, 2 * n - 1};
        f.parameter_note = "t = cot(u), u in (0, pi/4)";
        f.range_lo = Endpoint::at(Rational(1));
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(minus_cot_u(), 8, "-cot(u)"),
                      branch(cot_quarter_less(), 6, "cot(pi/4 - u)"),
                      branch(tan_u(), 8, "cot(pi/2 - u)"),
                      branch(cot_threequarter_less(), 6, "cot(3pi/4 - u)"),
                      branch(minus_two_cot_2u(), 1, "1/t - t")};
        f.published.mean_curvature = rf(ipoly({-9, 0, 42, 0, -9}), ipoly({0, -1, 0, 1}));
        {
            Poly X = Poly::variable();
            Poly Xm1sq = ipoly({-1, 1}) * ipoly({-1, 1});
            Poly numE = ipoly({9, -9, 99, 21}); // 21X^3 + 99X^2 - 9X + 9
            // display reads E(X)/(X(X-1)^2) - 2
            Poly denE = X * Xm1sq;
            f.published.bnorm2 = rf((numE - Rational(2) * denE).inflate_square(),
                                    denE.inflate_square());
            f.published.biharmonic_eq_raw = numE - Rational(2) * denE;
            f.published.biharmonic_eq = ipoly({-9, 43, -107, 13});
            f.published.minimal_eq = ipoly({3, -14, 3});
            f.published.equations_in_x = true;
        }
        f.published.notes = {
            "curvature table states -2tan(2u) for the Hopf branch; the accompanying "
            "t-expressions use 1/t - t, consistent with the displayed mean curvature",
            "minimal radii quoted as t = (sqrt(15)+-sqrt(6))/3, u = 0.443039 or "
            "1.12776; only u = 0.443039 lies in (0, pi/4)"};
        f.published.quoted_biharmonic_x = "7.81906";
        f.published.quoted_biharmonic_t = "2.79626";
        f.published.quoted_biharmonic_u = "0.343448";
        break;
    }
    case FamilyId::hp_geodesic_sphere: {
        const int n = params.n;
        require(n >= 2, "HP geodesic sphere needs n >= 2");
        f.ambient = {AmbientSpace::Kind::quaternion_projective,
                     default_c(AmbientSpace::Kind::quaternion_projective), n, 4 * n - 1};
        f.parameter_note = "t = cot(u), u in (0, pi/2)";
        f.range_lo = Endpoint::at(Rational(0));
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(cot_u(), 4 * (n - 1), "cot(u)"),
                      branch(two_cot_2u(), 3, "2cot(2u)")};
        f.published.mean_curvature = rf(ipoly({-3, 0, 4 * n - 1}), kT);
        f.published.bnorm2 =
            rf(ipoly({3, 0, -6, 0, 4 * n - 1}), ipoly({0, 0, 1}));
        f.published.minimal_eq = ipoly({-3, 4 * n - 1});
        f.published.biharmonic_eq = ipoly({3, -2 * (2 * n + 7), 4 * n - 1});
        f.published.equations_in_x = true;
        f.published.notes = {
            "quoted solved form t^2 = (2n+7 +- sqrt(n^2+4n+13))/(4n-1) omits a factor 2 "
            "on the square root; the quadratic formula gives "
            "t^2 = (2n+7 +- 2sqrt(n^2+4n+13))/(4n-1)"};
        break;
    }
    case FamilyId::hp_cp_tube: {
        const int n = params.n;
        require(n >= 2, "HP CP-tube needs n >= 2");
        f.ambient = {AmbientSpace::Kind::quaternion_projective,
                     default_c(AmbientSpace::Kind::quaternion_projective), n, 4 * n - 1};
        f.parameter_note = "t = cot(u), u in (0, pi/4)";
        f.range_lo = Endpoint::at(Rational(1));
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(cot_u(), 2 * (n - 1), "cot(u)"),
                      branch(minus_tan_u(), 2 * (n - 1), "-tan(u)"),
                      branch(two_cot_2u(), 1, "2cot(2u)"),
                      branch(minus_two_tan_2u(), 2, "-2tan(2u)")};
        // the source displays two different minimality numerators
        f.published.minimal_eq = ipoly({2 * (n - 1), -(4 * n + 5), 2 * n - 1});
        f.published.minimal_eq_alt = ipoly({2 * (n - 1), -(4 * n + 5), 2 * (n - 1)});
        f.published.biharmonic_eq =
            ipoly({-12, -2 * (2 * n - 1), -(6 * n + 11), -8 * (n + 1), 2 * n - 1});
        {
            Poly X = Poly::variable();
            Poly Xm1sq = ipoly({-1, 1}) * ipoly({-1, 1});
            Poly num = Rational(2 * n - 1) * (X * X * Xm1sq) + Rational(2 * n - 1) * Xm1sq -
                       Rational(2) * (X * Xm1sq) + ipoly({0, 0, 32});
            f.published.bnorm2 = rf(num.inflate_square(), (X * Xm1sq).inflate_square());
        }
        f.published.equations_in_x = true;
        f.published.notes = {
            "the displayed minimality numerator reads (2n-1)t^4-(4n+5)t^2+2(n-1) while "
            "the solved form uses 2(n-1)t^4-(4n+5)t^2+2(n-1); the spectrum-derived "
            "numerator is (2n-1)t^4-(4n+6)t^2+(2n-1), matching neither display"};
        break;
    }
    case FamilyId::hp_hpk_tube: {
        const int n = params.n, k = params.k;
        require(n >= 2, "HP^k tube needs n >= 2");
        require(1 <= k && k <= n - 1, "HP^k tube needs 1 <= k <= n-1");
        f.ambient = {AmbientSpace::Kind::quaternion_projective,
                     default_c(AmbientSpace::Kind::quaternion_projective), n, 4 * n - 1};
        f.parameter_note = "t = cot(u), u in (0, pi/4)";
        f.range_lo = Endpoint::at(Rational(1));
        f.range_hi = Endpoint::pos_inf();
        f.spectrum = {branch(cot_u(), 4 * (n - k - 1), "cot(u)"),
                      branch(minus_tan_u(), 4 * k, "-tan(u)"),
                      branch(two_cot_2u(), 3, "2cot(2u)")};
        f.published.mean_curvature = rf(ipoly({-(4 * k + 3), 0, 4 * (n - k) - 1}), kT);
        f.published.bnorm2 = rf(ipoly({4 * k + 3, 0, -6, 0, 4 * (n - k) - 1}),
                                ipoly({0, 0, 1}));
        f.published.minimal_eq = ipoly({-(4 * k + 3), 4 * (n - k) - 1});
        f.published.biharmonic_eq =
            ipoly({4 * k + 3, -2 * (2 * n + 4), 4 * (n - k) - 1});
        f.published.equations_in_x = true;
        f.published.notes = {
            "the displayed biharmonicity quartic has middle coefficient 2(2n+4); the "
            "k = 0 degeneration to the geodesic sphere and the displayed ||B||^2 both "
            "force 2(2n+7), which the derived equation uses"};
        break;
    }
    }

    if (sign(params.ambient_c) != 0) {
        require(sign(params.ambient_c) > 0, "ambient curvature c must be positive");
        f.ambient.c = params.ambient_c;
    }
    if (f.multiplicity_sum() != f.ambient.dim_m)
        throw std::logic_error("multiplicity sum does not match dim M for " +
                               family_name(id));
    return f;
}

RatFunc mean_curvature(const FamilySpec& f)
{
    RatFunc total;
    for (const auto& term : f.spectrum) {
        if (const auto* b = std::get_if<RationalBranch>(&term)) {
            total = total + b->value * Rational(b->multiplicity);
        } else {
            const auto& pr = std::get<ConjugatePairRule>(term);
            total = total + pr.pair_sum * Rational(pr.multiplicity_each);
        }
    }
    return total;
}

RatFunc second_form_norm2(const FamilySpec& f)
{
    RatFunc total;
    for (const auto& term : f.spectrum) {
        if (const auto* b = std::get_if<RationalBranch>(&term)) {
            total = total + b->value.squared() * Rational(b->multiplicity);
        } else {
            const auto& pr = std::get<ConjugatePairRule>(term);
            total = total + pr.pair_sum_squares * Rational(pr.multiplicity_each);
        }
    }
    // rescaling the ambient metric to curvature c multiplies ||B||^2 by c/c0
    Rational c0 = default_c(f.ambient.kind);
    if (f.ambient.c != c0)
        total = total * (f.ambient.c / c0);
    return total;
}

Rational biharmonic_threshold(const FamilySpec& f)
{
    switch (f.ambient.kind) {
    case AmbientSpace::Kind::sphere:
        return f.ambient.c * Rational(f.ambient.dim_m);
    case AmbientSpace::Kind::complex_projective:
        return Rational(f.ambient.n + 1) / 2 * f.ambient.c;
    case AmbientSpace::Kind::quaternion_projective:
        return Rational(f.ambient.n + 2) * f.ambient.c;
    }
    throw std::logic_error("unreachable");
}

void certify_denominator_nonvanishing(const FamilySpec& f, const Poly& den)
{
    if (den.degree() <= 0)
        return;
    if (count_interior_roots(den, f.range_lo, f.range_hi) != 0)
        throw std::logic_error("denominator vanishes inside the parameter range of " +
                               family_name(f.id));
}

} // namespace biharmonic
