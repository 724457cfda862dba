#ifndef MOMENTLAB_SURD_HPP
#define MOMENTLAB_SURD_HPP

#include "momentlab/rational.hpp"

#include <string>

namespace momentlab {

/// Exact real number rational + coefficient * sqrt(radicand).
///
/// Support endpoints s -/+ 2 sqrt(t) live in Q(sqrt(t)), so every comparison
/// the support theorem needs can be decided exactly here. Binary operations
/// require a shared radicand unless one operand is rational. A radicand that
/// is a perfect rational square is folded into the rational part.
class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(const Rational& value);  // NOLINT(implicit)
    QuadraticSurd(long value) : QuadraticSurd(Rational(value)) {}  // NOLINT
    QuadraticSurd(const Rational& rational, const Rational& coefficient,
                  const Rational& radicand);

    /// rational + coefficient * sqrt(radicand), with radicand > 0.
    static QuadraticSurd sqrt_of(const Rational& radicand,
                                 const Rational& coefficient = 1);

    const Rational& rational_part() const noexcept { return rational_; }
    const Rational& coefficient() const noexcept { return coefficient_; }
    const Rational& radicand() const noexcept { return radicand_; }
    bool is_rational() const noexcept { return coefficient_ == 0; }

    int sign() const;
    double approx() const;
    QuadraticSurd conjugate() const;
    QuadraticSurd pow(unsigned exponent) const;

    /// e.g. "3-2*sqrt(2)", "4", "1/2+sqrt(3)".
    std::string to_string() const;

    QuadraticSurd operator-() const;
    QuadraticSurd& operator+=(const QuadraticSurd& rhs);
    QuadraticSurd& operator-=(const QuadraticSurd& rhs);
    QuadraticSurd& operator*=(const QuadraticSurd& rhs);
    QuadraticSurd& operator/=(const QuadraticSurd& rhs);

    friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
    friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
    friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
    friend QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) { return a /= b; }

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
        return (a - b).sign() == 0;
    }
    friend bool operator<(const QuadraticSurd& a, const QuadraticSurd& b) {
        return (a - b).sign() < 0;
    }
    friend bool operator<=(const QuadraticSurd& a, const QuadraticSurd& b) {
        return (a - b).sign() <= 0;
    }
    friend bool operator>(const QuadraticSurd& a, const QuadraticSurd& b) { return b < a; }
    friend bool operator>=(const QuadraticSurd& a, const QuadraticSurd& b) { return b <= a; }

private:
    void normalize();
    void unify_radicand(const QuadraticSurd& other);

    Rational rational_{0};
    Rational coefficient_{0};
    Rational radicand_{1};
};

/// Closed interval with exact endpoints.
struct Interval {
    QuadraticSurd lower;
    QuadraticSurd upper;

    double lower_approx() const { return lower.approx(); }
    double upper_approx() const { return upper.approx(); }
    bool contains(double x, double slack = 0.0) const {
        return x >= lower_approx() - slack && x <= upper_approx() + slack;
    }
    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lower == b.lower && a.upper == b.upper;
    }
};

/// [s - 2 sqrt(t), s + 2 sqrt(t)], t > 0.
Interval centered_interval(const Rational& s, const Rational& t);

}  // namespace momentlab

#endif
