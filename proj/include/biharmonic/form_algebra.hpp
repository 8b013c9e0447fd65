#ifndef BIHARMONIC_FORM_ALGEBRA_HPP
#define BIHARMONIC_FORM_ALGEBRA_HPP

#include "biharmonic/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace biharmonic {

/// Dense r x r matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(unsigned rows, unsigned cols);
    static RatMatrix identity(unsigned n);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    Rational& at(unsigned i, unsigned j) { return data_[i * cols_ + j]; }
    const Rational& at(unsigned i, unsigned j) const { return data_[i * cols_ + j]; }

    RatMatrix operator+(const RatMatrix& rhs) const;
    RatMatrix operator-(const RatMatrix& rhs) const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    RatMatrix operator*(const Rational& s) const;
    RatMatrix transpose() const;
    bool operator==(const RatMatrix& rhs) const;
    bool is_zero() const;
    bool is_skew() const;
    bool is_symmetric() const;

    /// Frobenius inner product trace(A^T B) = sum_ij A_ij B_ij; restricted to
    /// skew matrices this is the endomorphism inner product sum_i <A u_i, B u_i>.
    Rational inner(const RatMatrix& rhs) const;
    Rational norm2() const { return inner(*this); }

private:
    unsigned rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b);

/// Exact positive-semidefiniteness test for a symmetric rational matrix by
/// an LDL^T sweep with diagonal pivoting: PSD iff every pivot is >= 0 and a
/// zero pivot forces a zero row.
bool is_positive_semidefinite(const RatMatrix& sym);

/// Alternating 1-form on R^m with values in skew r x r endomorphisms.
struct OneForm {
    unsigned m = 0, r = 0;
    std::vector<RatMatrix> comp; // comp[i] = alpha(e_i)
    static OneForm zero(unsigned m, unsigned r);
    Rational norm2() const;
    Rational inner(const OneForm& rhs) const;
};

/// Alternating 2-form; only components i < j are stored.
struct TwoForm {
    unsigned m = 0, r = 0;
    std::vector<RatMatrix> upper; // (i, j), i < j, lexicographic
    static TwoForm zero(unsigned m, unsigned r);
    RatMatrix at(unsigned i, unsigned j) const; // signed lookup, any i != j
    unsigned index(unsigned i, unsigned j) const;
    Rational norm2() const; // sum over i < j
    Rational inner(const TwoForm& rhs) const;
};

/// [b1 ^ b2](e_i, e_j) = [b1(e_i), b2(e_j)] - [b1(e_j), b2(e_i)].
TwoForm bracket_wedge(const OneForm& b1, const OneForm& b2);

/// (phi acting on beta)(e_i) = sum_j [phi(e_j, e_i), beta(e_j)].
OneForm curvature_action(const TwoForm& phi, const OneForm& beta);

struct RicciModel {
    RatMatrix matrix; // m x m symmetric
    Rational lower_bound;
    /// Verifies matrix - lower_bound*Id is PSD, exactly.
    bool certified() const;
};

/// (alpha o Ric)(e_i) = alpha(Ric(e_i)) = sum_j Ric_ji alpha(e_j).
OneForm ricci_compose(const OneForm& alpha, const RicciModel& ric);

struct InequalityViolation {
    std::string which;
    std::uint64_t trial = 0;
};

struct InequalityReport {
    unsigned m = 0, r = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<InequalityViolation> violations;
    // max over trials of <R(a),a>^2 / (||phi||^2 ||a||^4), as exact rational
    Rational max_curvature_ratio{0};
    // max of ||[a^a]||^2 / ||a||^4
    Rational max_bracket_ratio{0};
    bool identities_exact = true; // the two-sided adjoint identity held exactly
    bool contraction_identity_exact = true; // sum <phi_ij,[phi_ij,psi]> = 0
    bool ok() const { return violations.empty() && identities_exact && contraction_identity_exact; }
};

/// Randomized exact check of the pointwise inequalities and identities used
/// by the isolation arguments:
///   <R_phi(a), a>^2 <= ||phi||^2 ||a||^4,
///   ||[a ^ a]||^2  <= ||a||^4,
///   <a o Ric, a>   >= k ||a||^2  for Ric >= k Id,
/// plus the exact adjoint identity <phi,[b1^b2]> = <R_phi(b2),b1> =
/// <b2,R_phi(b1)> and the contraction identity sum_{i<j}
/// <phi(e_i,e_j), [phi(e_i,e_j), psi]> = 0. Deterministic per seed.
InequalityReport check_inequalities(std::uint64_t trials, std::uint64_t seed, unsigned m,
                                    unsigned r);

/// Deterministic per-trial RNG stream (splitmix-style), shared by tests.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t trial);

RatMatrix random_skew(std::uint64_t& state, unsigned r, long amplitude = 9);
OneForm random_one_form(std::uint64_t& state, unsigned m, unsigned r, long amplitude = 9);
TwoForm random_two_form(std::uint64_t& state, unsigned m, unsigned r, long amplitude = 9);
RicciModel random_ricci(std::uint64_t& state, unsigned m);
std::uint64_t next_u64(std::uint64_t& state);
long rand_int(std::uint64_t& state, long lo, long hi);

} // namespace biharmonic

#endif
