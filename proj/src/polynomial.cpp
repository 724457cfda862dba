#include "momentlab/polynomial.hpp"

#include "momentlab/errors.hpp"

#include <cmath>

namespace momentlab {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

Polynomial Polynomial::monomial(std::size_t k, const Rational& c) {
    std::vector<Rational> coeffs(k + 1, Rational(0));
    coeffs[k] = c;
    return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::linear_factor(const Rational& root) {
    return Polynomial(std::vector<Rational>{Rational(-root), Rational(1)});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw InvalidArgument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

double Polynomial::evaluate(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

double Polynomial::magnitude(double x) const {
    double acc = 0.0;
    const double ax = std::abs(x);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ax + std::abs(to_double(*it));
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::divide_linear(const Rational& root, Rational& remainder) const {
    if (coeffs_.empty()) {
        remainder = 0;
        return {};
    }
    // synthetic division
    std::vector<Rational> q(coeffs_.size() - 1);
    Rational carry(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        carry = carry * root + coeffs_[i];
        if (i > 0) q[i - 1] = carry;
    }
    remainder = carry;
    return Polynomial(std::move(q));
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit = mag == 1 && i > 0;
        if (!unit) out += momentlab::to_string(mag);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& coeff : coeffs_) coeff *= c;
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

MonicPolynomial::MonicPolynomial(Polynomial p) : poly_(std::move(p)) {
    if (poly_.is_zero() || poly_.leading() != 1) {
        throw InvalidArgument("polynomial is not monic: " + poly_.to_string());
    }
}

}  // namespace momentlab
