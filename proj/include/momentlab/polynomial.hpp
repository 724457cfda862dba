#ifndef MOMENTLAB_POLYNOMIAL_HPP
#define MOMENTLAB_POLYNOMIAL_HPP

#include "momentlab/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace momentlab {

/// Dense univariate polynomial with exact coefficients c_0..c_n.
/// Trailing zeros are trimmed; the zero polynomial has degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);
    Polynomial(std::initializer_list<long> coefficients);

    static Polynomial constant(const Rational& c);
    static Polynomial monomial(std::size_t k, const Rational& c = 1);
    /// x - root
    static Polynomial linear_factor(const Rational& root);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^k; zero beyond the degree.
    Rational coefficient(std::size_t k) const;
    const Rational& leading() const;

    Rational operator()(const Rational& x) const;
    double evaluate(double x) const;
    /// Sum of |c_k| |x|^k, a scale for rounding-error bounds.
    double magnitude(double x) const;
    Polynomial derivative() const;

    /// Divides by (x - root); returns the quotient and stores the remainder.
    Polynomial divide_linear(const Rational& root, Rational& remainder) const;

    std::string to_string(const std::string& var = "x") const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Polynomial whose leading coefficient is exactly 1.
class MonicPolynomial {
public:
    /// Throws InvalidArgument unless p is nonzero with leading coefficient 1.
    explicit MonicPolynomial(Polynomial p);

    const Polynomial& polynomial() const noexcept { return poly_; }
    int degree() const noexcept { return poly_.degree(); }
    const std::vector<Rational>& coefficients() const noexcept { return poly_.coefficients(); }
    Rational operator()(const Rational& x) const { return poly_(x); }
    double evaluate(double x) const { return poly_.evaluate(x); }

    friend bool operator==(const MonicPolynomial& a, const MonicPolynomial& b) { return a.poly_ == b.poly_; }

private:
    Polynomial poly_;
};

}  // namespace momentlab

#endif
