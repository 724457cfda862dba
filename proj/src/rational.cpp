#include "momentlab/rational.hpp"

#include "momentlab/errors.hpp"

#include <cctype>
#include <cmath>

namespace momentlab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!all_digits(body)) {
        throw InvalidArgument("not an exact rational: '" + std::string(whole) + "'");
    }
    std::string digits(text.front() == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

}  // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw InvalidArgument("empty rational literal");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw InvalidArgument("not an exact rational: '" + std::string(text) + "'");
        }
        return make_rational(num, Integer(std::string(den_text), 10));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = text.substr(0, dot);
        std::string_view frac_part = text.substr(dot + 1);
        bool negative = !int_part.empty() && int_part.front() == '-';
        if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
            int_part.remove_prefix(1);
        }
        if ((int_part.empty() && frac_part.empty()) ||
            (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw InvalidArgument("not an exact rational: '" + std::string(text) + "'");
        }
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
        Integer whole = int_part.empty() ? Integer(0) : Integer(std::string(int_part), 10);
        Integer frac = frac_part.empty() ? Integer(0) : Integer(std::string(frac_part), 10);
        Integer num = whole * scale + frac;
        if (negative) num = -num;
        return make_rational(num, scale);
    }
    return Rational(parse_integer(text, text));
}

std::string to_string(const Rational& r) { return r.get_str(10); }

double to_double(const Rational& r) { return r.get_d(); }

Rational pow(const Rational& base, unsigned exponent) {
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    return make_rational(num, den);
}

std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0 ||
        mpz_perfect_square_p(r.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    Integer num;
    Integer den;
    mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
    return make_rational(num, den);
}

HypothesisFailure::HypothesisFailure(std::vector<std::string> failed)
    : Error([&] {
          std::string msg = "support theorem hypotheses fail:";
          for (const auto& f : failed) msg += " [" + f + "]";
          return msg;
      }()),
      failed_(std::move(failed)) {}

}  // namespace momentlab
