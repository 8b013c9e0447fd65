#include <doctest.h>

#include "biharmonic/form_algebra.hpp"

using namespace biharmonic;

TEST_CASE("skew generation and matrix basics")
{
    std::uint64_t state = 99;
    for (int trial = 0; trial < 50; ++trial) {
        RatMatrix s = random_skew(state, 4);
        CHECK(s.is_skew());
        CHECK(commutator(s, s).is_zero());
    }
    RatMatrix id = RatMatrix::identity(3);
    CHECK(id.is_symmetric());
    CHECK((id * id) == id);
    CHECK(id.inner(id) == Rational(3));
}

TEST_CASE("bracket wedge: zero and abelian cases")
{
    OneForm zero = OneForm::zero(3, 3);
    CHECK(bracket_wedge(zero, zero).norm2() == Rational(0));

    // so(2) is abelian: every bracket wedge vanishes
    std::uint64_t state = 7;
    for (int trial = 0; trial < 20; ++trial) {
        OneForm b1 = random_one_form(state, 4, 2);
        OneForm b2 = random_one_form(state, 4, 2);
        TwoForm w = bracket_wedge(b1, b2);
        for (const auto& entry : w.upper)
            CHECK(entry.is_zero());
    }
}

TEST_CASE("bracket wedge equals the explicit double-loop commutator")
{
    std::uint64_t state = 1234;
    for (int trial = 0; trial < 50; ++trial) {
        OneForm b1 = random_one_form(state, 4, 3);
        OneForm b2 = random_one_form(state, 4, 3);
        TwoForm w = bracket_wedge(b1, b2);
        for (unsigned i = 0; i < 4; ++i)
            for (unsigned j = 0; j < 4; ++j) {
                if (i == j)
                    continue;
                RatMatrix expect = commutator(b1.comp[i], b2.comp[j]) -
                                   commutator(b1.comp[j], b2.comp[i]);
                CHECK(w.at(i, j) == expect);
            }
    }
}

TEST_CASE("curvature action annihilates zero arguments")
{
    std::uint64_t state = 55;
    TwoForm phi = random_two_form(state, 3, 3);
    OneForm beta = random_one_form(state, 3, 3);
    CHECK(curvature_action(TwoForm::zero(3, 3), beta).norm2() == Rational(0));
    CHECK(curvature_action(phi, OneForm::zero(3, 3)).norm2() == Rational(0));
    OneForm wrong = OneForm::zero(4, 3);
    CHECK_THROWS_AS(curvature_action(phi, wrong), std::invalid_argument);
    CHECK_THROWS_AS(bracket_wedge(beta, wrong), std::invalid_argument);
}

TEST_CASE("adjoint identity holds exactly")
{
    std::uint64_t state = 2024;
    for (int trial = 0; trial < 200; ++trial) {
        unsigned m = 2 + static_cast<unsigned>(rand_int(state, 0, 2));
        unsigned r = 2 + static_cast<unsigned>(rand_int(state, 0, 2));
        TwoForm phi = random_two_form(state, m, r);
        OneForm b1 = random_one_form(state, m, r);
        OneForm b2 = random_one_form(state, m, r);
        Rational lhs = phi.inner(bracket_wedge(b1, b2));
        Rational mid = curvature_action(phi, b2).inner(b1);
        Rational rhs = b2.inner(curvature_action(phi, b1));
        CHECK(lhs == mid);
        CHECK(mid == rhs);
    }
}

TEST_CASE("ad-invariance of the endomorphism inner product")
{
    std::uint64_t state = 31;
    for (int trial = 0; trial < 200; ++trial) {
        RatMatrix eta = random_skew(state, 4);
        RatMatrix psi = random_skew(state, 4);
        RatMatrix xi = random_skew(state, 4);
        CHECK(commutator(eta, psi).inner(xi) + psi.inner(commutator(eta, xi)) ==
              Rational(0));
    }
}

TEST_CASE("Ricci composition")
{
    std::uint64_t state = 808;
    OneForm alpha = random_one_form(state, 4, 3);
    RicciModel id{RatMatrix::identity(4), Rational(1)};
    OneForm same = ricci_compose(alpha, id);
    for (unsigned i = 0; i < 4; ++i)
        CHECK(same.comp[i] == alpha.comp[i]);

    // diagonal Ricci: <alpha o Ric, alpha> = sum_i mu_i ||alpha(e_i)||^2
    RicciModel diag{RatMatrix(4, 4), Rational(1)};
    Rational expected(0);
    for (unsigned i = 0; i < 4; ++i) {
        diag.matrix.at(i, i) = Rational(static_cast<long>(i) + 1);
        expected += Rational(static_cast<long>(i) + 1) * alpha.comp[i].norm2();
    }
    CHECK(ricci_compose(alpha, diag).inner(alpha) == expected);

    // bilinear symmetry for symmetric Ric
    for (int trial = 0; trial < 50; ++trial) {
        RicciModel ric = random_ricci(state, 4);
        OneForm a = random_one_form(state, 4, 3);
        OneForm b = random_one_form(state, 4, 3);
        CHECK(ricci_compose(a, ric).inner(b) == a.inner(ricci_compose(b, ric)));
    }

    // equality case: Ric = k Id gives <alpha o Ric, alpha> = k ||alpha||^2
    RicciModel scaled{RatMatrix::identity(4) * Rational(5), Rational(5)};
    CHECK(ricci_compose(alpha, scaled).inner(alpha) == Rational(5) * alpha.norm2());
}

TEST_CASE("exact LDL^T positive-semidefiniteness")
{
    CHECK(is_positive_semidefinite(RatMatrix::identity(4)));
    CHECK(is_positive_semidefinite(RatMatrix(3, 3))); // zero matrix
    RatMatrix neg = RatMatrix::identity(2) * Rational(-1);
    CHECK_FALSE(is_positive_semidefinite(neg));

    RatMatrix indef(2, 2);
    indef.at(0, 0) = 1;
    indef.at(0, 1) = 2;
    indef.at(1, 0) = 2;
    indef.at(1, 1) = 1; // eigenvalues 3 and -1
    CHECK_FALSE(is_positive_semidefinite(indef));

    RatMatrix hollow(2, 2);
    hollow.at(0, 1) = 1;
    hollow.at(1, 0) = 1; // zero diagonal, nonzero off-diagonal
    CHECK_FALSE(is_positive_semidefinite(hollow));

    std::uint64_t state = 4096;
    for (int trial = 0; trial < 50; ++trial) {
        RatMatrix g(3, 3);
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned j = 0; j < 3; ++j)
                g.at(i, j) = Rational(rand_int(state, -5, 5));
        CHECK(is_positive_semidefinite(g.transpose() * g)); // Gram matrices
        RicciModel ric = random_ricci(state, 3);
        CHECK(ric.certified());
    }
    CHECK_THROWS_AS(is_positive_semidefinite(RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("pointwise inequality sweep is clean and deterministic")
{
    InequalityReport r1 = check_inequalities(500, 42, 4, 3);
    CHECK(r1.ok());
    CHECK(r1.violations.empty());
    CHECK(r1.identities_exact);
    CHECK(r1.contraction_identity_exact);
    CHECK(r1.max_bracket_ratio <= Rational(1));
    CHECK(r1.max_curvature_ratio <= Rational(1));
    CHECK(r1.max_bracket_ratio > Rational(0));

    InequalityReport r2 = check_inequalities(500, 42, 4, 3);
    CHECK(r1.max_bracket_ratio == r2.max_bracket_ratio);
    CHECK(r1.max_curvature_ratio == r2.max_curvature_ratio);

    CHECK_THROWS_AS(check_inequalities(0, 1, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(check_inequalities(10, 1, 1, 3), std::invalid_argument);
}

TEST_CASE("zero form saturates every inequality as equality")
{
    OneForm zero = OneForm::zero(3, 3);
    std::uint64_t state = 77;
    TwoForm phi = random_two_form(state, 3, 3);
    CHECK(curvature_action(phi, zero).inner(zero) == Rational(0));
    CHECK(bracket_wedge(zero, zero).norm2() == Rational(0));
    CHECK(zero.norm2() == Rational(0));
}
