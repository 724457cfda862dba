#include "momentlab/measures.hpp"

#include "momentlab/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace momentlab {

namespace {

constexpr double pi = boost::math::constants::pi<double>();
using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

bool near_integer(double v) { return std::abs(v - std::round(v)) < 1e-12; }

bool half_odd(double exponent) { return near_integer(exponent - 0.5); }

// Smallest k with k (1 + exponent) an integer, so that x - a = h u^k turns
// (x-a)^exponent dx into a polynomial in u.
unsigned substitution_power(double exponent) {
    const double e = 1.0 + exponent;
    for (unsigned k = 1; k <= 64; ++k) {
        if (near_integer(k * e)) return k;
    }
    return static_cast<unsigned>(std::ceil(4.0 / e));
}

// (1 - r)^{1/d} - 1 without cancellation for small r.
double root_step(double r, unsigned d) { return std::expm1(std::log1p(r) / d); }

template <class F>
double integrate(F f, double lo, double hi, double rel_tol, double& error, double& l1) {
    return Kronrod::integrate(f, lo, hi, 12, rel_tol, &error, &l1);
}

Density make_density(std::string label, Interval iv, double left, double right, WeightFn w) {
    return Density{std::move(label), std::move(iv), left, right, std::move(w)};
}

Interval rational_interval(long a, long b) { return Interval{QuadraticSurd(a), QuadraticSurd(b)}; }

}  // namespace

const std::vector<std::string>& density_names() {
    static const std::vector<std::string> names{"catalan", "central_binomial", "motzkin",
                                                "central_trinomial", "delannoy"};
    return names;
}

Density density_catalog(std::string_view name) {
    auto arcsine = [](double, double l, double r) { return 1.0 / (pi * std::sqrt(l * r)); };
    if (name == "catalan") {
        return make_density("catalan", rational_interval(0, 4), -0.5, 0.5,
                            [](double, double l, double r) { return std::sqrt(r / l) / (2 * pi); });
    }
    if (name == "central_binomial") {
        return make_density("central_binomial", rational_interval(0, 4), -0.5, -0.5, arcsine);
    }
    if (name == "motzkin") {
        return make_density("motzkin", rational_interval(-1, 3), 0.5, 0.5,
                            [](double, double l, double r) { return std::sqrt(l * r) / (2 * pi); });
    }
    if (name == "central_trinomial") {
        return make_density("central_trinomial", rational_interval(-1, 3), -0.5, -0.5, arcsine);
    }
    if (name == "delannoy") {
        return make_density("delannoy", centered_interval(3, 2), -0.5, -0.5, arcsine);
    }
    throw UnknownName(std::string(name));
}

Density catalan_step_density(unsigned d) {
    if (d == 0) throw InvalidArgument("step must be at least 1");
    const double top = std::pow(4.0, d);
    Interval iv{QuadraticSurd(0), QuadraticSurd(pow(Rational(4), d))};
    WeightFn w = [d, top](double x, double, double r) {
        const double root = std::pow(x, 1.0 / d);
        const double gap = -4.0 * root_step(-r / top, d);  // 4 - x^{1/d}
        return std::pow(x, (1.0 - d) / d) / (2.0 * d * pi) * std::sqrt(gap / root);
    };
    const double left = (1.0 - 2.0 * d) / (2.0 * d);
    return make_density("catalan_step_" + std::to_string(d), iv, left, 0.5, std::move(w));
}

QuadratureResult moment_quadrature_estimate(const Density& dens, std::size_t n, double tol) {
    if (dens.left_exponent <= -1.0 || dens.right_exponent <= -1.0) {
        throw NonIntegrable("density " + dens.label + " has an endpoint exponent <= -1");
    }
    if (!(tol > 0.0)) throw InvalidArgument("quadrature tolerance must be positive");
    const double a = dens.a();
    const double b = dens.b();
    const double width = (dens.interval.upper - dens.interval.lower).approx();
    const int power = static_cast<int>(n);

    auto point = [&](double l, double r) { return l <= r ? a + l : b - r; };

    // Each path integrates a smooth integrand; the first pass sets the scale
    // for the relative tolerance that Boost expects.
    auto run = [&](auto&& pieces) {
        QuadratureResult first;
        for (auto& piece : pieces) {
            double err = 0.0, l1 = 0.0;
            first.value += Kronrod::integrate(piece.f, piece.lo, piece.hi, 0, 1.0, &err, &l1);
            first.l1_norm += l1;
        }
        const double scale = std::max(std::abs(first.value), std::numeric_limits<double>::min());
        const double rel = std::clamp(tol / scale, 1e-14, 1e-2);
        QuadratureResult out;
        for (auto& piece : pieces) {
            double err = 0.0, l1 = 0.0;
            out.value += integrate(piece.f, piece.lo, piece.hi, rel, err, l1);
            out.error_estimate += err;
            out.l1_norm += l1;
        }
        return out;
    };

    struct Piece {
        std::function<double(double)> f;
        double lo;
        double hi;
    };

    if (half_odd(dens.left_exponent) && half_odd(dens.right_exponent)) {
        const double r = width / 2;
        std::vector<Piece> pieces{{[&, r](double theta) {
                                        const double l = 2 * r * std::pow(std::sin(theta / 2), 2);
                                        const double rr = 2 * r * std::pow(std::cos(theta / 2), 2);
                                        const double x = point(l, rr);
                                        return std::pow(x, power) * dens.weight(x, l, rr) * r *
                                               std::sin(theta);
                                    },
                                    0.0, pi}};
        return run(pieces);
    }

    const double h = width / 2;
    const unsigned kl = substitution_power(dens.left_exponent);
    const unsigned kr = substitution_power(dens.right_exponent);
    std::vector<Piece> pieces{
        {[&, h, kl](double u) {
             const double l = h * std::pow(u, kl);
             const double r = width - l;
             const double x = point(l, r);
             return std::pow(x, power) * dens.weight(x, l, r) * h * kl * std::pow(u, kl - 1.0);
         },
         0.0, 1.0},
        {[&, h, kr](double u) {
             const double r = h * std::pow(u, kr);
             const double l = width - r;
             const double x = point(l, r);
             return std::pow(x, power) * dens.weight(x, l, r) * h * kr * std::pow(u, kr - 1.0);
         },
         0.0, 1.0}};
    return run(pieces);
}

double moment_quadrature(const Density& dens, std::size_t n, double tol) {
    return moment_quadrature_estimate(dens, n, tol).value;
}

RepresentationReport verify_representation(const Sequence& y, const Density& dens,
                                           std::size_t n_max, double tol) {
    y.require(n_max + 1);
    if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
    RepresentationReport rep;
    rep.sequence_label = y.label();
    rep.density_label = dens.label;
    rep.tol = tol;
    for (std::size_t n = 0; n <= n_max; ++n) {
        MomentCheck c;
        c.n = n;
        c.target = to_double(y[n]);
        const double scale = c.target != 0.0 ? std::abs(c.target) : 1.0;
        c.computed = moment_quadrature(dens, n, 1e-3 * tol * scale);
        c.abs_error = std::abs(c.computed - c.target);
        c.rel_error = c.abs_error / scale;
        rep.max_rel_error = std::max(rep.max_rel_error, c.rel_error);
        if (!(c.rel_error < tol) && !rep.first_failure) rep.first_failure = n;
        rep.checks.push_back(c);
    }
    return rep;
}

Interval power_image(const Interval& k, unsigned d) {
    if (d == 0) throw InvalidArgument("power must be at least 1");
    const QuadraticSurd lo = k.lower.pow(d);
    const QuadraticSurd hi = k.upper.pow(d);
    if (d % 2 == 1 || k.lower.sign() >= 0) return Interval{lo, hi};
    if (k.upper.sign() <= 0) return Interval{hi, lo};
    return Interval{QuadraticSurd(0), lo > hi ? lo : hi};
}

Sequence subsequence_transform(const Sequence& y, unsigned d, std::size_t l) {
    if (d == 0) throw InvalidArgument("subsequence step must be at least 1");
    y.require(l + 1);
    std::vector<Rational> values;
    for (std::size_t idx = l; idx < y.size(); idx += d) values.push_back(y[idx]);
    std::string label = (y.label().empty() ? std::string("y") : y.label()) + "[" +
                        std::to_string(d) + "k+" + std::to_string(l) + "]";
    Sequence out(std::move(values), std::move(label), Origin::transform);
    if (const auto& k = y.support()) {
        if (l % 2 == 0 || k->lower.sign() >= 0) out.set_support(power_image(*k, d));
    }
    return out;
}

Sequence atomic_moments(std::span<const Atom> atoms, std::size_t n_max) {
    std::vector<Rational> values(n_max + 1, Rational(0));
    for (const auto& atom : atoms) {
        Rational power = atom.weight;
        for (std::size_t n = 0; n <= n_max; ++n) {
            values[n] += power;
            power *= atom.point;
        }
    }
    return Sequence(std::move(values), "atomic", Origin::external);
}

PatternVerdict pattern_is_stieltjes_preserving(std::span<const std::size_t> indices) {
    if (indices.size() < 3) throw TooShort("index pattern needs at least three entries");
    for (std::size_t i = 0; i + 1 < indices.size(); ++i) {
        if (indices[i] >= indices[i + 1]) throw InvalidArgument("index pattern must be strictly increasing");
    }
    PatternVerdict v;
    const std::size_t step = indices[1] - indices[0];
    for (std::size_t s = 0; s + 2 < indices.size(); ++s) {
        const std::size_t first_gap = indices[s + 1] - indices[s];
        const std::size_t second_gap = indices[s + 2] - indices[s + 1];
        if (first_gap == second_gap) continue;
        PatternWitness w;
        w.epsilon = first_gap < second_gap ? make_rational(1, 2) : Rational(2);
        w.position = s;
        const Rational e0 = pow(w.epsilon, static_cast<unsigned>(indices[s]));
        const Rational e1 = pow(w.epsilon, static_cast<unsigned>(indices[s + 1]));
        const Rational e2 = pow(w.epsilon, static_cast<unsigned>(indices[s + 2]));
        w.block = {{e0, e1}, {e1, e2}};
        w.determinant = e0 * e2 - e1 * e1;
        v.witness = std::move(w);
        return v;
    }
    v.preserving = true;
    v.step = step;
    v.offset = indices[0];
    return v;
}

GCheck check_g_nonneg(const Polynomial& g, double a, double b, std::size_t grid) {
    if (grid < 2) throw InvalidArgument("grid needs at least two points");
    if (!(a <= b)) throw InvalidArgument("interval endpoints out of order");
    GCheck out;
    out.min_value = std::numeric_limits<double>::infinity();
    auto consider = [&](double x) {
        const double v = g.evaluate(x);
        if (v < out.min_value) {
            out.min_value = v;
            out.argmin = x;
        }
        if (v < -1e-12 * std::max(g.magnitude(x), 1e-300) && !out.violation) out.violation = x;
    };

    const Polynomial dg = g.derivative();
    std::vector<double> xs(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        xs[i] = i + 1 == grid ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(grid - 1);
        consider(xs[i]);
    }
    for (std::size_t i = 0; i + 1 < grid; ++i) {
        double lo = xs[i], hi = xs[i + 1];
        double flo = dg.evaluate(lo), fhi = dg.evaluate(hi);
        if (flo == 0.0 || fhi == 0.0 || (flo < 0) == (fhi < 0)) continue;
        for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = dg.evaluate(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fm < 0) == (flo < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        consider(0.5 * (lo + hi));
    }
    out.nonneg = !out.violation;
    return out;
}

Density weighted_density(const Density& base, const Polynomial& g) {
    if (g.is_zero()) throw InvalidArgument("weight polynomial is zero");
    Polynomial h = g;
    auto strip = [&h](const QuadraticSurd& endpoint) {
        unsigned mult = 0;
        if (!endpoint.is_rational()) return mult;
        const Rational root = endpoint.rational_part();
        while (h.degree() > 0) {
            Rational rem;
            Polynomial q = h.divide_linear(root, rem);
            if (rem != 0) break;
            h = std::move(q);
            ++mult;
        }
        return mult;
    };
    const unsigned i = strip(base.interval.lower);
    const unsigned j = strip(base.interval.upper);
    // (x - b)^j = (-1)^j (b - x)^j
    if (j % 2 == 1) h *= Rational(-1);
    WeightFn w = [base_w = base.weight, h, i, j](double x, double l, double r) {
        return std::pow(l, static_cast<int>(i)) * std::pow(r, static_cast<int>(j)) * h.evaluate(x) *
               base_w(x, l, r);
    };
    return make_density("(" + g.to_string() + ")*" + base.label, base.interval,
                        base.left_exponent + i, base.right_exponent + j, std::move(w));
}

LinearCombination linear_combination_transform(const Sequence& y, const Polynomial& g,
                                               const Interval& ab,
                                               const std::optional<Density>& base) {
    if (g.is_zero()) throw InvalidArgument("weight polynomial is zero");
    const auto deg = static_cast<std::size_t>(g.degree());
    y.require(deg + 1);
    GCheck check = check_g_nonneg(g, ab.lower_approx(), ab.upper_approx());
    if (!check.nonneg) throw GNegative(*check.violation);

    std::vector<Rational> values;
    values.reserve(y.size() - deg);
    const auto& c = g.coefficients();
    for (std::size_t k = 0; k + deg < y.size(); ++k) {
        Rational acc(0);
        for (std::size_t j = 0; j <= deg; ++j) acc += c[j] * y[k + j];
        values.push_back(std::move(acc));
    }
    std::string label = "T[" + g.to_string() + "](" + (y.label().empty() ? "y" : y.label()) + ")";
    Sequence seq(std::move(values), std::move(label), Origin::transform);
    seq.set_support(ab);
    LinearCombination out{std::move(seq), check, std::nullopt};
    if (base) out.density = weighted_density(*base, g);
    return out;
}

std::vector<double> apply_lincomb(std::span<const double> moments, const Polynomial& g) {
    if (g.is_zero()) throw InvalidArgument("weight polynomial is zero");
    const auto deg = static_cast<std::size_t>(g.degree());
    if (moments.size() <= deg) throw InsufficientData(deg + 1, moments.size());
    std::vector<double> coeffs;
    for (const auto& c : g.coefficients()) coeffs.push_back(to_double(c));
    std::vector<double> out;
    for (std::size_t k = 0; k + deg < moments.size(); ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= deg; ++j) acc += coeffs[j] * moments[k + j];
        out.push_back(acc);
    }
    return out;
}

Density power_pushforward(const Density& base, unsigned d, std::size_t l) {
    if (d == 0) throw InvalidArgument("power must be at least 1");
    if (base.interval.lower.sign() < 0) throw InvalidArgument("pushforward by x^d needs a >= 0");
    const Interval image = power_image(base.interval, d);
    const double a = base.a();
    const double b = base.b();
    const double ad = image.lower_approx();
    const double bd = image.upper_approx();
    const bool from_zero = base.interval.lower.sign() == 0;
    const double expo = (static_cast<double>(l) + 1.0 - d) / d;

    WeightFn w = [base_w = base.weight, d, a, b, ad, bd, from_zero, expo](double u, double lu,
                                                                          double ru) {
        const double x = std::pow(u, 1.0 / d);
        const double l0 = from_zero ? x : a * root_step(lu / ad, d);
        const double r0 = -b * root_step(-ru / bd, d);
        return std::pow(u, expo) / d * base_w(x, l0, r0);
    };
    const double left = from_zero ? (l + 1.0 - d + base.left_exponent) / d : base.left_exponent;
    return make_density(base.label + "^(" + std::to_string(d) + "k+" + std::to_string(l) + ")", image,
                        left, base.right_exponent, std::move(w));
}

TransformSpec TransformSpec::subsequence(unsigned d, std::size_t l) {
    TransformSpec t;
    t.kind = Kind::subsequence;
    t.d = d;
    t.l = l;
    return t;
}

TransformSpec TransformSpec::linear_combination(Polynomial g, Interval ab) {
    TransformSpec t;
    t.kind = Kind::linear_combination;
    t.g = std::move(g);
    t.interval = std::move(ab);
    return t;
}

RepresentationReport verify_transform_consistency(const Sequence& y, const TransformSpec& transform,
                                                  const Density& dens, std::size_t n_max,
                                                  double tol) {
    if (transform.kind == TransformSpec::Kind::subsequence) {
        Sequence sub = subsequence_transform(y, transform.d, transform.l);
        return verify_representation(sub, power_pushforward(dens, transform.d, transform.l), n_max, tol);
    }
    const Interval ab = transform.interval.value_or(dens.interval);
    LinearCombination lc = linear_combination_transform(y, transform.g, ab, dens);
    return verify_representation(lc.sequence, *lc.density, n_max, tol);
}

}  // namespace momentlab
