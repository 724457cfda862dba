#ifndef MOMENTLAB_ORTHOPOLY_HPP
#define MOMENTLAB_ORTHOPOLY_HPP

/**
 * @file orthopoly.hpp
 * @brief Monic orthogonal polynomials of a Riesz functional L_y.
 *
 * Two exact routes to P_n: the three-term recurrence
 *
 *     P_{-1} = 0,  P_0 = 1,  P_{k+1}(x) = (x - s_k) P_k(x) - t_k P_{k-1}(x),
 *
 * and the bordered Hankel determinant divided by Delta_{n-1}(y). Zeros are
 * floating point, taken as eigenvalues of the symmetric Jacobi matrix with
 * diagonal s_k and off-diagonal sqrt(t_k).
 */

#include "momentlab/polynomial.hpp"
#include "momentlab/seqcore.hpp"

#include <cstddef>
#include <vector>

namespace momentlab {

/// P_0..P_n from the three-term recurrence with the given (sigma, tau).
std::vector<MonicPolynomial> ops_from_recurrence(const SigmaTauSpec& spec, std::size_t n);

/// L_y[p] = sum_k c_k y_k. Throws InsufficientData when deg p >= y.size().
Rational riesz(const Sequence& y, const Polynomial& p);

/// Recurrence coefficients recovered from moments.
struct RecoveredRecurrence {
    std::vector<Rational> sigma;  ///< s_0..s_{n-1}
    std::vector<Rational> tau;    ///< t_1..t_{n-1}; tau[0] is t_1
    Rational t0;                  ///< L_y[1] = y_0, the free t_0
    std::vector<Rational> norms;  ///< L_y[P_k^2], k = 0..n-1

    /// Spec whose prefixes are the recovered values and whose tails repeat
    /// the last recovered entry.
    SigmaTauSpec as_spec() const;
};

/**
 * s_k = L[x P_k^2] / L[P_k^2] and t_k = L[P_k^2] / L[P_{k-1}^2] for k < n.
 * Needs 2n values. Throws QuasiDefiniteFailure(k) when L[P_k^2] = 0, which
 * happens exactly when Delta_k(y) = 0.
 */
RecoveredRecurrence recurrence_from_moments(const Sequence& y, std::size_t n);

/// P_n as (1/Delta_{n-1}) times the bordered Hankel determinant whose last
/// row is (1, x, ..., x^n). Needs 2n values; throws QuasiDefiniteFailure.
MonicPolynomial ops_determinantal(const Sequence& y, std::size_t n);

/// Symmetric tridiagonal form of the recurrence (positive case only).
struct JacobiMatrix {
    std::vector<double> diagonal;      ///< s_0..s_{n-1}
    std::vector<double> off_diagonal;  ///< sqrt(t_1)..sqrt(t_{n-1})
    std::size_t order() const noexcept { return diagonal.size(); }
};

/// Throws NotPositiveCase unless every tau entry is positive.
JacobiMatrix jacobi_matrix(const SigmaTauSpec& spec, std::size_t n);

/// Eigenvalues of a symmetric tridiagonal matrix, ascending.
std::vector<double> tridiagonal_eigenvalues(const JacobiMatrix& j);

/// Zeros x_{n1} < ... < x_{nn} of P_n. Needs n >= 1 and a positive-case spec.
std::vector<double> ops_zeros(const SigmaTauSpec& spec, std::size_t n);

/// [x_{n1}, x_{nn}]: an inner approximation of the true interval of
/// orthogonality that widens monotonically with n. Never extrapolated.
struct ZeroSpan {
    double lower;
    double upper;
    std::size_t degree;
};

ZeroSpan true_interval_estimate(const SigmaTauSpec& spec, std::size_t n);

}  // namespace momentlab

#endif
