#include "biharmonic/chen_example.hpp"

#include <random>
#include <stdexcept>

namespace biharmonic {

MultiPoly chen_component(unsigned m, unsigned i)
{
    if (m < 1)
        throw std::invalid_argument("m must be >= 1");
    if (i >= m)
        throw std::invalid_argument("component index out of range");
    MultiPoly p(m);
    for (unsigned j = 0; j < m; ++j) {
        MultiPoly::Exponents e(m, 0);
        e[j] = 4;
        p = p + MultiPoly::monomial(m, e, Rational(1));
    }
    MultiPoly::Exponents ei(m, 0);
    ei[i] = 4;
    return p - MultiPoly::monomial(m, ei, Rational(m));
}

bool VerificationReport::all_equal() const
{
    for (const auto& id : identities)
        if (!id.equal)
            return false;
    return bilaplacian_vanishes && tension_norm_nonnegative;
}

namespace {

MultiPoly power_sum(unsigned m, unsigned power)
{
    MultiPoly s(m);
    for (unsigned j = 0; j < m; ++j) {
        MultiPoly::Exponents e(m, 0);
        e[j] = power;
        s = s + MultiPoly::monomial(m, e, Rational(1));
    }
    return s;
}

IdentityCheck make_check(std::string name, MultiPoly claimed, MultiPoly computed)
{
    IdentityCheck c;
    c.name = std::move(name);
    c.difference = claimed - computed;
    c.equal = c.difference.is_zero();
    c.claimed = std::move(claimed);
    c.computed = std::move(computed);
    return c;
}

} // namespace

VerificationReport verify_example(unsigned m, unsigned samples, unsigned long seed)
{
    if (m < 1)
        throw std::invalid_argument("m must be >= 1");
    VerificationReport report;
    report.m = m;

    std::vector<MultiPoly> phi, dphi;
    for (unsigned i = 0; i < m; ++i) {
        phi.push_back(chen_component(m, i));
        dphi.push_back(laplacian(phi.back()));
    }
    const MultiPoly s2 = power_sum(m, 2);
    const MultiPoly s4 = power_sum(m, 4);

    // (a) Delta(phi_i) = 12(sum x_j^2 - m x_i^2), checked for every i
    bool a_equal = true;
    MultiPoly a_diff(m);
    for (unsigned i = 0; i < m; ++i) {
        MultiPoly::Exponents ei(m, 0);
        ei[i] = 2;
        MultiPoly claimed = (s2 - MultiPoly::monomial(m, ei, Rational(m))) * Rational(12);
        MultiPoly diff = claimed - dphi[i];
        if (!diff.is_zero()) {
            a_equal = false;
            a_diff = diff;
        }
    }
    {
        MultiPoly::Exponents e0(m, 0);
        e0[0] = 2;
        IdentityCheck c;
        c.name = "tension-component";
        c.claimed = (s2 - MultiPoly::monomial(m, e0, Rational(m))) * Rational(12);
        c.computed = dphi[0];
        c.equal = a_equal;
        c.difference = a_diff;
        report.identities.push_back(std::move(c));
    }

    // (b) Delta(Delta(phi_i)) = 0 for all i
    report.bilaplacian_vanishes = true;
    MultiPoly b_witness(m);
    for (unsigned i = 0; i < m; ++i) {
        MultiPoly dd = laplacian(dphi[i]);
        if (!dd.is_zero()) {
            report.bilaplacian_vanishes = false;
            b_witness = dd;
        }
    }
    report.identities.push_back(
        make_check("bitension", MultiPoly(m), b_witness));

    // (c) sum_i (Delta phi_i)^2 = 144 m (m sum x_j^4 - (sum x_j^2)^2)
    MultiPoly tension_norm2(m);
    for (unsigned i = 0; i < m; ++i)
        tension_norm2 = tension_norm2 + dphi[i] * dphi[i];
    MultiPoly c_claimed = (s4 * Rational(m) - s2 * s2) * Rational(144 * static_cast<long>(m));
    report.identities.push_back(make_check("tension-norm-squared", c_claimed, tension_norm2));

    // (d) sum_{i,k} (d_k Delta phi_i)^2 against 576 m(m-1) (sum x_j^2)^2
    MultiPoly grad_norm2(m);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned k = 0; k < m; ++k) {
            MultiPoly g = dphi[i].partial(k);
            grad_norm2 = grad_norm2 + g * g;
        }
    MultiPoly d_claimed = s2 * s2 * Rational(576 * static_cast<long>(m) * (static_cast<long>(m) - 1));
    report.identities.push_back(
        make_check("tension-gradient-norm-squared", d_claimed, grad_norm2));

    // (e) m * sum x_j^4 - (sum x_j^2)^2 >= 0 at random rational points
    MultiPoly power_mean_gap = s4 * Rational(m) - s2 * s2;
    std::mt19937_64 rng(seed);
    report.tension_norm_nonnegative = true;
    report.sample_count = samples;
    for (unsigned trial = 0; trial < samples; ++trial) {
        std::vector<Rational> point;
        point.reserve(m);
        for (unsigned i = 0; i < m; ++i) {
            long num = static_cast<long>(rng() % 41) - 20;
            long den = static_cast<long>(rng() % 9) + 1;
            Rational v(num, den);
            v.canonicalize();
            point.push_back(v);
        }
        if (sign(power_mean_gap.eval(point)) < 0) {
            report.tension_norm_nonnegative = false;
            break;
        }
    }
    return report;
}

} // namespace biharmonic
