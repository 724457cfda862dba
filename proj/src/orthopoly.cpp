#include "momentlab/orthopoly.hpp"

#include "momentlab/errors.hpp"
#include "momentlab/hankel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace momentlab {

std::vector<MonicPolynomial> ops_from_recurrence(const SigmaTauSpec& spec, std::size_t n) {
    std::vector<Polynomial> p;
    p.reserve(n + 1);
    p.push_back(Polynomial::constant(1));
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial next = Polynomial::linear_factor(spec.s(k)) * p[k];
        if (k >= 1) next -= spec.t(k) * p[k - 1];
        p.push_back(std::move(next));
    }
    std::vector<MonicPolynomial> out;
    out.reserve(p.size());
    for (auto& poly : p) out.emplace_back(std::move(poly));
    return out;
}

Rational riesz(const Sequence& y, const Polynomial& p) {
    if (p.is_zero()) return 0;
    y.require(static_cast<std::size_t>(p.degree()) + 1);
    Rational acc(0);
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * y[k];
    return acc;
}

SigmaTauSpec RecoveredRecurrence::as_spec() const {
    if (sigma.empty()) throw InvalidArgument("no recovered coefficients");
    Rational tail_t = tau.empty() ? Rational(1) : tau.back();
    return SigmaTauSpec(sigma, sigma.back(), tau, tail_t);
}

RecoveredRecurrence recurrence_from_moments(const Sequence& y, std::size_t n) {
    if (n == 0) throw InvalidArgument("recurrence depth must be at least 1");
    y.require(2 * n);
    RecoveredRecurrence out;
    out.t0 = y[0];
    const Polynomial x = Polynomial::monomial(1);
    Polynomial prev;  // P_{-1}
    Polynomial cur = Polynomial::constant(1);
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial sq = cur * cur;
        Rational norm = riesz(y, sq);
        if (norm == 0) throw QuasiDefiniteFailure(k);
        Rational s = riesz(y, x * sq) / norm;
        out.sigma.push_back(s);
        Rational t(0);
        if (k >= 1) {
            t = norm / out.norms.back();
            out.tau.push_back(t);
        }
        out.norms.push_back(norm);
        if (k + 1 < n) {
            Polynomial next = Polynomial::linear_factor(s) * cur;
            if (k >= 1) next -= t * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
    }
    return out;
}

MonicPolynomial ops_determinantal(const Sequence& y, std::size_t n) {
    if (n == 0) return MonicPolynomial(Polynomial::constant(1));
    y.require(2 * n);
    Rational delta = hankel_det(y, n - 1);
    if (delta == 0) throw QuasiDefiniteFailure(n - 1);

    // Expand along the last row (1, x, ..., x^n): the coefficient of x^j is
    // (-1)^{n+j} times the minor that drops the last row and column j.
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        std::vector<std::vector<Rational>> minor(n, std::vector<Rational>());
        for (std::size_t i = 0; i < n; ++i) {
            minor[i].reserve(n);
            for (std::size_t c = 0; c <= n; ++c) {
                if (c != j) minor[i].push_back(y[i + c]);
            }
        }
        Rational cofactor = determinant(std::move(minor));
        if ((n + j) % 2 == 1) cofactor = -cofactor;
        coeffs[j] = cofactor / delta;
    }
    return MonicPolynomial(Polynomial(std::move(coeffs)));
}

JacobiMatrix jacobi_matrix(const SigmaTauSpec& spec, std::size_t n) {
    if (!spec.positive_case()) throw NotPositiveCase("Jacobi matrix needs every t_k > 0");
    JacobiMatrix j;
    j.diagonal.reserve(n);
    for (std::size_t k = 0; k < n; ++k) j.diagonal.push_back(to_double(spec.s(k)));
    for (std::size_t k = 1; k < n; ++k) j.off_diagonal.push_back(std::sqrt(to_double(spec.t(k))));
    return j;
}

std::vector<double> tridiagonal_eigenvalues(const JacobiMatrix& j) {
    const auto n = static_cast<Eigen::Index>(j.order());
    if (n == 0) return {};
    if (n == 1) return {j.diagonal[0]};
    Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(j.diagonal.data(), n);
    Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(j.off_diagonal.data(), n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("tridiagonal eigenvalue iteration did not converge");
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> ops_zeros(const SigmaTauSpec& spec, std::size_t n) {
    if (n == 0) throw InvalidArgument("P_0 has no zeros");
    return tridiagonal_eigenvalues(jacobi_matrix(spec, n));
}

ZeroSpan true_interval_estimate(const SigmaTauSpec& spec, std::size_t n) {
    std::vector<double> zeros = ops_zeros(spec, n);
    return ZeroSpan{zeros.front(), zeros.back(), n};
}

}  // namespace momentlab
