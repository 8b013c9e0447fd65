#include <doctest.h>

#include "biharmonic/form_algebra.hpp" // rand_int
#include "biharmonic/mpfloat.hpp"
#include "biharmonic/quadext.hpp"

using namespace biharmonic;

TEST_CASE("field arithmetic in Q(sqrt 2)")
{
    QuadExt a(Rational(1), Rational(1), 2);  // 1 + sqrt 2
    QuadExt b(Rational(1), Rational(-1), 2); // 1 - sqrt 2
    CHECK((a * b) == QuadExt(Rational(-1)));
    CHECK((a + b) == QuadExt(Rational(2)));
    QuadExt inv = QuadExt(Rational(1)) / a;
    CHECK(inv * a == QuadExt(Rational(1)));
    CHECK(a.conjugate() == b);
    CHECK_THROWS_AS(a / QuadExt(Rational(0)), std::domain_error);
}

TEST_CASE("mixed fields are rejected, rationals embed everywhere")
{
    QuadExt s2(Rational(0), Rational(1), 2);
    QuadExt s3(Rational(0), Rational(1), 3);
    CHECK_THROWS_AS(s2 + s3, std::invalid_argument);
    CHECK(s2 + QuadExt(Rational(5)) == QuadExt(Rational(5), Rational(1), 2));
    CHECK_THROWS_AS(QuadExt(Rational(0), Rational(1), 12), std::invalid_argument);
}

TEST_CASE("integer square roots extract the square part")
{
    CHECK(QuadExt::sqrt_of(Integer(12)) == QuadExt(Rational(0), Rational(2), 3));
    CHECK(QuadExt::sqrt_of(Integer(25)) == QuadExt(Rational(5)));
    CHECK(QuadExt::sqrt_of(Integer(0)) == QuadExt(Rational(0)));
    CHECK(QuadExt::sqrt_of(Integer(90)) == QuadExt(Rational(0), Rational(3), 10));
    CHECK_THROWS_AS(QuadExt::sqrt_of(Integer(-1)), std::domain_error);
}

TEST_CASE("exact signs near cancellation")
{
    // 7/5 < sqrt(2) < 3/2
    QuadExt s2(Rational(0), Rational(1), 2);
    CHECK(QuadExt(Rational(7, 5)) < s2);
    CHECK(s2 < QuadExt(Rational(3, 2)));
    // 1/sqrt(3) = sqrt(3)/3
    QuadExt inv_s3(Rational(0), Rational(1, 3), 3);
    CHECK(inv_s3 > QuadExt(Rational(0)));
    CHECK(inv_s3 < QuadExt(Rational(3, 5)));
    CHECK(inv_s3 > QuadExt(Rational(4, 7)));
    // (1+sqrt(5))/2 is a root of x^2-x-1
    QuadExt golden(Rational(1, 2), Rational(1, 2), 5);
    CHECK(eval_at(Poly{Rational(-1), Rational(-1), Rational(1)}, golden).sgn() == 0);
}

TEST_CASE("polynomial evaluation in the extension")
{
    // 3y^2 - 1 vanishes at 1/sqrt(3)
    Poly p{Rational(-1), Rational(0), Rational(3)};
    QuadExt inv_s3(Rational(0), Rational(1, 3), 3);
    CHECK(eval_at(p, inv_s3).sgn() == 0);
    // y^2 - 3 vanishes at sqrt(3)
    Poly q{Rational(-3), Rational(0), Rational(1)};
    CHECK(eval_at(q, QuadExt(Rational(0), Rational(1), 3)).sgn() == 0);
}

TEST_CASE("comparison agrees with 50-digit floating evaluation")
{
    const long fields[] = {2, 3, 5, 6, 7, 10, 34};
    std::uint64_t state = 424242;
    for (int trial = 0; trial < 1000; ++trial) {
        long d = fields[rand_int(state, 0, 6)];
        Rational a(rand_int(state, -99, 99), rand_int(state, 1, 40));
        Rational b(rand_int(state, -99, 99), rand_int(state, 1, 40));
        Rational q(rand_int(state, -99, 99), rand_int(state, 1, 40));
        a.canonicalize();
        b.canonicalize();
        q.canonicalize();
        QuadExt x(a, b, d);
        auto [lo, hi] = quadext_interval(x, 50);
        // certified enclosure of a + b sqrt(d) at 50 digits decides the sign
        // unless the value is extremely close to q; these draws never are
        if (hi < q) {
            CHECK(x < QuadExt(q));
        } else if (lo > q) {
            CHECK(x > QuadExt(q));
        } else {
            CHECK(x == QuadExt(q));
        }
    }
}

TEST_CASE("rational neighbours bracket the value")
{
    QuadExt x(Rational(2), Rational(-3, 7), 5);
    Rational below = x.rational_below(Rational(1, 1000000));
    Rational above = x.rational_above(Rational(1, 1000000));
    CHECK(QuadExt(below) < x);
    CHECK(QuadExt(above) > x);
    CHECK(above - below < Rational(1, 100000));
}

TEST_CASE("sqrt enclosures are tight and ordered")
{
    auto [lo, hi] = sqrt_enclosure(3, Rational(1, Integer(1000000000)));
    CHECK(lo * lo < Rational(3));
    CHECK(hi * hi > Rational(3));
    CHECK(hi - lo <= Rational(1, Integer(1000000000)));
}
