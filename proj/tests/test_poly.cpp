#include <doctest.h>

#include "biharmonic/form_algebra.hpp" // deterministic rand_int helper
#include "biharmonic/poly.hpp"

using namespace biharmonic;

namespace {

Poly ip(std::initializer_list<long> ascending)
{
    std::vector<Rational> c;
    for (long v : ascending)
        c.emplace_back(v);
    return Poly(std::move(c));
}

Poly random_poly(std::uint64_t& state, int max_degree, long amp)
{
    int deg = static_cast<int>(rand_int(state, 0, max_degree));
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i)
        c.emplace_back(rand_int(state, -amp, amp));
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("basic arithmetic identities")
{
    Poly xm1 = ip({-1, 1});
    Poly xp1 = ip({1, 1});
    CHECK(xm1 * xp1 == ip({-1, 0, 1}));
    CHECK(ip({-1, 0, 1}) - xm1 * xp1 == Poly());
    CHECK((ip({1, 2}) + ip({-1, -2})).is_zero());
}

TEST_CASE("gcd of X^2-1 and X-1 is the monic common factor")
{
    CHECK(poly_gcd(ip({-1, 0, 1}), ip({-1, 1})) == ip({-1, 1}));
    CHECK(poly_gcd(ip({-2, 0, 2}), ip({-3, 3})) == ip({-1, 1})); // monic output
}

TEST_CASE("derivative of the D-type cubic")
{
    Poly h = ip({-15, 41, 43, 11}); // 11X^3+43X^2+41X-15
    CHECK(h.derivative() == ip({41, 86, 33}));
    CHECK(Poly::constant(Rational(7)).derivative().is_zero());
}

TEST_CASE("divmod and gcd reject zero divisors")
{
    CHECK_THROWS_AS(ip({1, 1}).divmod(Poly()), std::domain_error);
    CHECK_THROWS_AS(poly_gcd(ip({1, 1}), Poly()), std::domain_error);
    CHECK_THROWS_AS(poly_gcd(Poly(), ip({1, 1})), std::domain_error);
    auto [q, r] = ip({-1, 0, 1}).divmod(ip({-1, 1}));
    CHECK(q == ip({1, 1}));
    CHECK(r.is_zero());
}

TEST_CASE("ring axioms hold on random instances")
{
    std::uint64_t state = 12345;
    for (int trial = 0; trial < 300; ++trial) {
        Poly p = random_poly(state, 6, 50);
        Poly q = random_poly(state, 6, 50);
        // Leibniz rule
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
        if (!q.is_zero()) {
            auto [quot, rem] = p.divmod(q);
            CHECK(p == q * quot + rem); // exact division identity
            CHECK(rem.degree() < q.degree());
        }
        if (!p.is_zero() && !q.is_zero()) {
            Poly g = poly_gcd(p, q);
            CHECK(p.divmod(g).second.is_zero());
            CHECK(q.divmod(g).second.is_zero());
            CHECK(g.lead() == Rational(1));
        }
    }
}

TEST_CASE("square-free part strips repeated factors")
{
    Poly sq = ip({-1, 1}) * ip({-1, 1}) * ip({3, 1});
    auto [sf, gcd] = squarefree_part(sq);
    CHECK(poly_gcd(sf, sf.derivative()).degree() == 0);
    CHECK(gcd == ip({-1, 1})); // monic gcd(p, p')
    CHECK(sf.degree() == 2);
}

TEST_CASE("even decimation and inflation round trip")
{
    Poly even = ip({5, 0, -24, 0, 102}); // in t
    Poly x = even.even_decimation();
    CHECK(x == ip({5, -24, 102}));
    CHECK(x.inflate_square() == even);
    CHECK_THROWS_AS(ip({0, 1}).even_decimation(), std::domain_error);
}

TEST_CASE("Cauchy bound encloses all real roots")
{
    std::uint64_t state = 777;
    for (int trial = 0; trial < 100; ++trial) {
        Poly p = random_poly(state, 6, 50);
        if (p.degree() < 1)
            continue;
        Integer b = p.root_bound();
        // signs at +-b match the leading behaviour: no roots beyond the bound
        CHECK(p.sign_at(Rational(b)) == p.sign_at_pos_inf());
        CHECK(p.sign_at(Rational(-b)) == p.sign_at_neg_inf());
    }
}

TEST_CASE("polynomial printing")
{
    CHECK(ip({-15, 41, 43, 11}).to_string("X") == "11*X^3+43*X^2+41*X-15");
    CHECK(ip({0, -1}).to_string("t") == "-t");
    CHECK(Poly().to_string() == "0");
    CHECK(Poly{Rational(1, 2), Rational(-3, 4)}.to_string("y") == "-3/4*y+1/2");
}
