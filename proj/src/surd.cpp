#include "momentlab/surd.hpp"

#include "momentlab/errors.hpp"

#include <cmath>

namespace momentlab {

QuadraticSurd::QuadraticSurd(const Rational& value) : rational_(value) {}

QuadraticSurd::QuadraticSurd(const Rational& rational, const Rational& coefficient,
                             const Rational& radicand)
    : rational_(rational), coefficient_(coefficient), radicand_(radicand) {
    if (radicand_ <= 0) throw InvalidArgument("surd radicand must be positive");
    normalize();
}

QuadraticSurd QuadraticSurd::sqrt_of(const Rational& radicand, const Rational& coefficient) {
    return QuadraticSurd(0, coefficient, radicand);
}

void QuadraticSurd::normalize() {
    if (coefficient_ == 0) {
        radicand_ = 1;
        return;
    }
    if (auto root = exact_sqrt(radicand_)) {
        rational_ += coefficient_ * *root;
        coefficient_ = 0;
        radicand_ = 1;
    }
}

void QuadraticSurd::unify_radicand(const QuadraticSurd& other) {
    if (other.is_rational()) return;
    if (is_rational()) {
        radicand_ = other.radicand_;
        return;
    }
    if (radicand_ != other.radicand_) {
        throw InvalidArgument("surds with different radicands: sqrt(" + momentlab::to_string(radicand_) +
                              ") and sqrt(" + momentlab::to_string(other.radicand_) + ")");
    }
}

int QuadraticSurd::sign() const {
    const int su = sgn(rational_);
    const int sv = sgn(coefficient_);
    if (sv == 0) return su;
    if (su == 0 || su == sv) return sv;
    // opposite signs: compare rational^2 against coefficient^2 * radicand
    Rational lhs = rational_ * rational_;
    Rational rhs = coefficient_ * coefficient_ * radicand_;
    if (lhs > rhs) return su;
    if (lhs < rhs) return sv;
    return 0;
}

double QuadraticSurd::approx() const {
    if (is_rational()) return to_double(rational_);
    // Subtract in a way that avoids cancellation when both parts are close.
    const double u = to_double(rational_);
    const double v = to_double(coefficient_) * std::sqrt(to_double(radicand_));
    if ((u > 0) != (v > 0) && u != 0) {
        // u + v = (u^2 - v^2) / (u - v), with u^2 - v^2 evaluated exactly.
        Rational diff = rational_ * rational_ - coefficient_ * coefficient_ * radicand_;
        return to_double(diff) / (u - v);
    }
    return u + v;
}

QuadraticSurd QuadraticSurd::conjugate() const {
    QuadraticSurd c = *this;
    c.coefficient_ = -c.coefficient_;
    return c;
}

QuadraticSurd QuadraticSurd::pow(unsigned exponent) const {
    QuadraticSurd result(Rational(1));
    QuadraticSurd base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

std::string QuadraticSurd::to_string() const {
    if (is_rational()) return momentlab::to_string(rational_);
    std::string out;
    if (rational_ != 0) out = momentlab::to_string(rational_);
    Rational mag = abs(coefficient_);
    if (coefficient_ < 0) {
        out += "-";
    } else if (!out.empty()) {
        out += "+";
    }
    if (mag != 1) out += momentlab::to_string(mag) + "*";
    out += "sqrt(" + momentlab::to_string(radicand_) + ")";
    return out;
}

QuadraticSurd QuadraticSurd::operator-() const {
    QuadraticSurd n = *this;
    n.rational_ = -n.rational_;
    n.coefficient_ = -n.coefficient_;
    return n;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& rhs) {
    unify_radicand(rhs);
    rational_ += rhs.rational_;
    coefficient_ += rhs.coefficient_;
    if (coefficient_ == 0) radicand_ = 1;
    return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& rhs) { return *this += -rhs; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& rhs) {
    unify_radicand(rhs);
    const Rational& d = rhs.is_rational() ? radicand_ : rhs.radicand_;
    Rational u = rational_ * rhs.rational_ + coefficient_ * rhs.coefficient_ * d;
    Rational v = rational_ * rhs.coefficient_ + coefficient_ * rhs.rational_;
    rational_ = u;
    coefficient_ = v;
    if (coefficient_ == 0) {
        radicand_ = 1;
    } else {
        radicand_ = d;
    }
    return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& rhs) {
    if (rhs.sign() == 0) throw InvalidArgument("division by zero surd");
    if (rhs.is_rational()) {
        rational_ /= rhs.rational_;
        coefficient_ /= rhs.rational_;
        return *this;
    }
    Rational norm = rhs.rational_ * rhs.rational_ - rhs.coefficient_ * rhs.coefficient_ * rhs.radicand_;
    *this *= rhs.conjugate();
    rational_ /= norm;
    coefficient_ /= norm;
    return *this;
}

Interval centered_interval(const Rational& s, const Rational& t) {
    if (t <= 0) throw InvalidArgument("centered_interval needs t > 0");
    QuadraticSurd half_width = QuadraticSurd::sqrt_of(t, 2);
    return Interval{QuadraticSurd(s) - half_width, QuadraticSurd(s) + half_width};
}

}  // namespace momentlab
