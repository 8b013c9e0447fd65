#include "biharmonic/form_algebra.hpp"

#include <stdexcept>

namespace biharmonic {

RatMatrix::RatMatrix(unsigned rows, unsigned cols)
    : rows_(rows)
    , cols_(cols)
    , data_(static_cast<size_t>(rows) * cols, Rational(0))
{
}

RatMatrix RatMatrix::identity(unsigned n)
{
    RatMatrix m(n, n);
    for (unsigned i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix dimension mismatch");
    RatMatrix r(*this);
    for (size_t i = 0; i < data_.size(); ++i)
        r.data_[i] += rhs.data_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix dimension mismatch");
    RatMatrix r(*this);
    for (size_t i = 0; i < data_.size(); ++i)
        r.data_[i] -= rhs.data_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix dimension mismatch");
    RatMatrix r(rows_, rhs.cols_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (sign(a) == 0)
                continue;
            for (unsigned j = 0; j < rhs.cols_; ++j)
                r.at(i, j) += a * rhs.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator*(const Rational& s) const
{
    RatMatrix r(*this);
    for (auto& v : r.data_)
        v *= s;
    return r;
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix r(cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const
{
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool RatMatrix::is_zero() const
{
    for (const auto& v : data_)
        if (sign(v) != 0)
            return false;
    return true;
}

bool RatMatrix::is_skew() const
{
    if (rows_ != cols_)
        return false;
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j <= i; ++j)
            if (at(i, j) != -at(j, i))
                return false;
    return true;
}

bool RatMatrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < i; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

Rational RatMatrix::inner(const RatMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix dimension mismatch");
    Rational total(0);
    for (size_t i = 0; i < data_.size(); ++i)
        total += data_[i] * rhs.data_[i];
    return total;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b)
{
    return a * b - b * a;
}

bool is_positive_semidefinite(const RatMatrix& sym)
{
    if (!sym.is_symmetric())
        throw std::invalid_argument("PSD test requires a symmetric matrix");
    const unsigned n = sym.rows();
    RatMatrix a = sym;
    std::vector<unsigned> idx(n);
    for (unsigned i = 0; i < n; ++i)
        idx[i] = i;
    for (unsigned step = 0; step < n; ++step) {
        // pivot: largest remaining diagonal entry
        unsigned best = step;
        for (unsigned i = step + 1; i < n; ++i)
            if (a.at(idx[i], idx[i]) > a.at(idx[best], idx[best]))
                best = i;
        std::swap(idx[step], idx[best]);
        const Rational pivot = a.at(idx[step], idx[step]);
        if (sign(pivot) < 0)
            return false;
        if (sign(pivot) == 0) {
            // PSD forces the whole remaining row/column to vanish
            for (unsigned j = step; j < n; ++j)
                if (sign(a.at(idx[step], idx[j])) != 0)
                    return false;
            continue;
        }
        for (unsigned i = step + 1; i < n; ++i) {
            Rational factor = a.at(idx[i], idx[step]) / pivot;
            if (sign(factor) == 0)
                continue;
            for (unsigned j = step; j < n; ++j)
                a.at(idx[i], idx[j]) -= factor * a.at(idx[step], idx[j]);
        }
        // keep symmetry of the trailing block
        for (unsigned i = step + 1; i < n; ++i)
            for (unsigned j = step + 1; j < n; ++j)
                if (i > j)
                    a.at(idx[i], idx[j]) = a.at(idx[j], idx[i]);
    }
    return true;
}

OneForm OneForm::zero(unsigned m, unsigned r)
{
    OneForm f;
    f.m = m;
    f.r = r;
    f.comp.assign(m, RatMatrix(r, r));
    return f;
}

Rational OneForm::norm2() const { return inner(*this); }

Rational OneForm::inner(const OneForm& rhs) const
{
    if (m != rhs.m || r != rhs.r)
        throw std::invalid_argument("form dimension mismatch");
    Rational total(0);
    for (unsigned i = 0; i < m; ++i)
        total += comp[i].inner(rhs.comp[i]);
    return total;
}

TwoForm TwoForm::zero(unsigned m, unsigned r)
{
    TwoForm f;
    f.m = m;
    f.r = r;
    f.upper.assign(static_cast<size_t>(m) * (m - 1) / 2, RatMatrix(r, r));
    return f;
}

unsigned TwoForm::index(unsigned i, unsigned j) const
{
    // position of (i, j), i < j, in lexicographic enumeration
    return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

RatMatrix TwoForm::at(unsigned i, unsigned j) const
{
    if (i == j)
        return RatMatrix(r, r);
    if (i < j)
        return upper[index(i, j)];
    return upper[index(j, i)] * Rational(-1);
}

Rational TwoForm::norm2() const { return inner(*this); }

Rational TwoForm::inner(const TwoForm& rhs) const
{
    if (m != rhs.m || r != rhs.r)
        throw std::invalid_argument("form dimension mismatch");
    Rational total(0);
    for (size_t i = 0; i < upper.size(); ++i)
        total += upper[i].inner(rhs.upper[i]);
    return total;
}

TwoForm bracket_wedge(const OneForm& b1, const OneForm& b2)
{
    if (b1.m != b2.m || b1.r != b2.r)
        throw std::invalid_argument("form dimension mismatch");
    TwoForm out = TwoForm::zero(b1.m, b1.r);
    for (unsigned i = 0; i < b1.m; ++i)
        for (unsigned j = i + 1; j < b1.m; ++j)
            out.upper[out.index(i, j)] =
                commutator(b1.comp[i], b2.comp[j]) - commutator(b1.comp[j], b2.comp[i]);
    return out;
}

OneForm curvature_action(const TwoForm& phi, const OneForm& beta)
{
    if (phi.m != beta.m || phi.r != beta.r)
        throw std::invalid_argument("form dimension mismatch");
    OneForm out = OneForm::zero(beta.m, beta.r);
    for (unsigned i = 0; i < beta.m; ++i) {
        RatMatrix acc(beta.r, beta.r);
        for (unsigned j = 0; j < beta.m; ++j) {
            if (j == i)
                continue;
            acc = acc + commutator(phi.at(j, i), beta.comp[j]);
        }
        out.comp[i] = acc;
    }
    return out;
}

bool RicciModel::certified() const
{
    RatMatrix shifted = matrix - RatMatrix::identity(matrix.rows()) * lower_bound;
    return is_positive_semidefinite(shifted);
}

OneForm ricci_compose(const OneForm& alpha, const RicciModel& ric)
{
    if (ric.matrix.rows() != alpha.m)
        throw std::invalid_argument("Ricci dimension mismatch");
    OneForm out = OneForm::zero(alpha.m, alpha.r);
    for (unsigned i = 0; i < alpha.m; ++i) {
        RatMatrix acc(alpha.r, alpha.r);
        for (unsigned j = 0; j < alpha.m; ++j) {
            const Rational& w = ric.matrix.at(j, i);
            if (sign(w) != 0)
                acc = acc + alpha.comp[j] * w;
        }
        out.comp[i] = acc;
    }
    return out;
}

std::uint64_t next_u64(std::uint64_t& state)
{
    // splitmix64
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t trial)
{
    std::uint64_t s = master ^ (0x9E3779B97F4A7C15ULL * (trial + 1));
    return next_u64(s);
}

long rand_int(std::uint64_t& state, long lo, long hi)
{
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next_u64(state) % span);
}

RatMatrix random_skew(std::uint64_t& state, unsigned r, long amplitude)
{
    RatMatrix m(r, r);
    for (unsigned i = 0; i < r; ++i)
        for (unsigned j = i + 1; j < r; ++j) {
            long v = rand_int(state, -amplitude, amplitude);
            m.at(i, j) = Rational(v);
            m.at(j, i) = Rational(-v);
        }
    return m;
}

OneForm random_one_form(std::uint64_t& state, unsigned m, unsigned r, long amplitude)
{
    OneForm f = OneForm::zero(m, r);
    for (unsigned i = 0; i < m; ++i)
        f.comp[i] = random_skew(state, r, amplitude);
    return f;
}

TwoForm random_two_form(std::uint64_t& state, unsigned m, unsigned r, long amplitude)
{
    TwoForm f = TwoForm::zero(m, r);
    for (auto& entry : f.upper)
        entry = random_skew(state, r, amplitude);
    return f;
}

RicciModel random_ricci(std::uint64_t& state, unsigned m)
{
    RicciModel ric;
    ric.lower_bound = Rational(rand_int(state, 1, 9));
    RatMatrix g(m, m);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j)
            g.at(i, j) = Rational(rand_int(state, -4, 4));
    ric.matrix = RatMatrix::identity(m) * ric.lower_bound + g.transpose() * g;
    return ric;
}

InequalityReport check_inequalities(std::uint64_t trials, std::uint64_t seed, unsigned m,
                                    unsigned r)
{
    if (trials < 1)
        throw std::invalid_argument("trials must be >= 1");
    if (m < 2 || r < 2)
        throw std::invalid_argument("need m >= 2 and r >= 2");
    InequalityReport report;
    report.m = m;
    report.r = r;
    report.trials = trials;
    report.seed = seed;

    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        std::uint64_t state = mix_seed(seed, trial);
        TwoForm phi = random_two_form(state, m, r);
        OneForm alpha = random_one_form(state, m, r);
        OneForm beta1 = random_one_form(state, m, r);
        OneForm beta2 = random_one_form(state, m, r);
        RicciModel ric = random_ricci(state, m);
        RatMatrix psi = random_skew(state, r);

        // adjoint identity, both equalities, exact
        Rational lhs = phi.inner(bracket_wedge(beta1, beta2));
        Rational mid = curvature_action(phi, beta2).inner(beta1);
        Rational rhs = beta2.inner(curvature_action(phi, beta1));
        if (lhs != mid || mid != rhs) {
            report.identities_exact = false;
            report.violations.push_back({"adjoint-identity", trial});
        }

        // |<R_phi(alpha), alpha>| <= ||phi|| ||alpha||^2, squared form
        Rational pairing = curvature_action(phi, alpha).inner(alpha);
        Rational bound = phi.norm2() * alpha.norm2() * alpha.norm2();
        if (pairing * pairing > bound)
            report.violations.push_back({"curvature-pairing-bound", trial});
        if (sign(bound) > 0) {
            Rational ratio = pairing * pairing / bound;
            if (ratio > report.max_curvature_ratio)
                report.max_curvature_ratio = ratio;
        }

        // ||[alpha ^ alpha]||^2 <= ||alpha||^4
        Rational br = bracket_wedge(alpha, alpha).norm2();
        Rational n4 = alpha.norm2() * alpha.norm2();
        if (br > n4)
            report.violations.push_back({"bracket-norm-bound", trial});
        if (sign(n4) > 0) {
            Rational ratio = br / n4;
            if (ratio > report.max_bracket_ratio)
                report.max_bracket_ratio = ratio;
        }

        // <alpha o Ric, alpha> >= k ||alpha||^2, with the lower bound itself
        // certified by the exact LDL^T sweep rather than by construction
        if (!ric.certified())
            report.violations.push_back({"ricci-not-certified", trial});
        Rational ric_pairing = ricci_compose(alpha, ric).inner(alpha);
        if (ric_pairing < ric.lower_bound * alpha.norm2())
            report.violations.push_back({"ricci-lower-bound", trial});

        // sum_{i<j} <phi(e_i,e_j), [phi(e_i,e_j), psi]> = 0
        Rational contraction(0);
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = i + 1; j < m; ++j) {
                RatMatrix c = phi.at(i, j);
                contraction += c.inner(commutator(c, psi));
            }
        if (sign(contraction) != 0) {
            report.contraction_identity_exact = false;
            report.violations.push_back({"contraction-identity", trial});
        }
    }
    return report;
}

} // namespace biharmonic
