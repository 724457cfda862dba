#ifndef MOMENTLAB_MEASURES_HPP
#define MOMENTLAB_MEASURES_HPP

/**
 * @file measures.hpp
 * @brief Densities, moment quadrature and sequence transforms.
 *
 * A Density carries w(x) >= 0 on [a,b] together with its algebraic endpoint
 * behaviour w(x) ~ (x-a)^alpha near a and (b-x)^beta near b. Quadrature uses
 * the exponents to pick a substitution that makes the integrand smooth, so
 * weights are evaluated as w(x, x-a, b-x) with the endpoint distances
 * supplied exactly by the substitution instead of recomputed from x.
 */

#include "momentlab/hankel.hpp"
#include "momentlab/polynomial.hpp"
#include "momentlab/seqcore.hpp"
#include "momentlab/surd.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace momentlab {

/// w(x) given x, x - a and b - x.
using WeightFn = std::function<double(double x, double from_left, double from_right)>;

struct Density {
    std::string label;
    Interval interval;
    double left_exponent = 0.0;
    double right_exponent = 0.0;
    WeightFn weight;

    double a() const { return interval.lower_approx(); }
    double b() const { return interval.upper_approx(); }
    /// w(x) for a <= x <= b.
    double operator()(double x) const { return weight(x, x - a(), b() - x); }
};

/// Names accepted by density_catalog.
const std::vector<std::string>& density_names();

/// catalan, central_binomial, motzkin, central_trinomial, delannoy.
/// Throws UnknownName.
Density density_catalog(std::string_view name);

/// Density of C_{dn} on [0, 4^d]:
/// x^{(1-d)/d} / (2 d pi) * sqrt((4 - x^{1/d}) / x^{1/d}).
Density catalan_step_density(unsigned d);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    double l1_norm = 0.0;
};

/// Integral of x^n w(x) over [a,b] to absolute tolerance tol (best effort
/// when tol is below the attainable rounding floor). Throws NonIntegrable
/// when an exponent is <= -1 and InvalidArgument when tol <= 0.
QuadratureResult moment_quadrature_estimate(const Density& dens, std::size_t n, double tol);

double moment_quadrature(const Density& dens, std::size_t n, double tol);

struct MomentCheck {
    std::size_t n = 0;
    double target = 0.0;
    double computed = 0.0;
    double abs_error = 0.0;
    /// abs_error / |target|, or abs_error when the target is zero.
    double rel_error = 0.0;
};

struct RepresentationReport {
    std::string sequence_label;
    std::string density_label;
    double tol = 0.0;
    std::vector<MomentCheck> checks;
    double max_rel_error = 0.0;
    std::optional<std::size_t> first_failure;

    bool pass() const noexcept { return !first_failure; }
};

/// Compares y_0..y_{n_max} with quadrature moments; passes iff every relative
/// error is below tol. Throws InsufficientData.
RepresentationReport verify_representation(const Sequence& y, const Density& dens,
                                           std::size_t n_max, double tol);

/// Image {x^d : x in [a,b]}.
Interval power_image(const Interval& k, unsigned d);

/// (y_{dk+l})_k for every k with dk+l in range. Records the image support
/// when y has a known support and x^l >= 0 on it. Throws InsufficientData
/// when y has no y_l, InvalidArgument when d = 0.
Sequence subsequence_transform(const Sequence& y, unsigned d, std::size_t l);

/// Moments (sum_i w_i x_i^n)_{n <= n_max} of a finitely atomic measure.
struct Atom {
    Rational point;
    Rational weight;
};

Sequence atomic_moments(std::span<const Atom> atoms, std::size_t n_max);

struct PatternWitness {
    Rational epsilon;           ///< the atom of delta_epsilon
    std::size_t position = 0;   ///< first s with unequal gaps around n_{s+1}
    std::vector<std::vector<Rational>> block;  ///< [[e^{n_s}, e^{n_{s+1}}], [e^{n_{s+1}}, e^{n_{s+2}}]]
    Rational determinant;       ///< e^{n_s + n_{s+2}} - e^{2 n_{s+1}} < 0
};

struct PatternVerdict {
    bool preserving = false;
    /// d and l when the pattern is n_k = dk + l.
    std::optional<std::size_t> step;
    std::optional<std::size_t> offset;
    std::optional<PatternWitness> witness;
};

/// An index pattern maps every Stieltjes moment sequence to one iff it is
/// affine. Throws TooShort for fewer than three indices and InvalidArgument
/// unless strictly increasing.
PatternVerdict pattern_is_stieltjes_preserving(std::span<const std::size_t> indices);

struct GCheck {
    bool nonneg = false;
    double min_value = 0.0;
    double argmin = 0.0;
    std::optional<double> violation;  ///< a point with g < 0
};

/// g on a uniform grid of `grid` points plus every critical point of g found
/// by bisection on sign changes of g'. Values down to -1e-12 * sum|g_k||x|^k
/// count as zero. Throws InvalidArgument when grid < 2 or a > b.
GCheck check_g_nonneg(const Polynomial& g, double a, double b, std::size_t grid = 2001);

/// w(x) g(x); factors (x-a)^i and (x-b)^j out of g at rational endpoints so
/// that the exponents rise by i and j and the factors are evaluated from the
/// endpoint distances.
Density weighted_density(const Density& base, const Polynomial& g);

struct LinearCombination {
    Sequence sequence;
    GCheck g_check;
    std::optional<Density> density;
};

/// (T_g y)_k = sum_j g_j y_{k+j}. Throws GNegative when g < 0 somewhere on
/// [a,b] and InsufficientData when y has at most deg g values.
LinearCombination linear_combination_transform(const Sequence& y, const Polynomial& g,
                                               const Interval& ab,
                                               const std::optional<Density>& base = std::nullopt);

/// Floating-point T_g on a moment vector.
std::vector<double> apply_lincomb(std::span<const double> moments, const Polynomial& g);

/// Density of the measure with moments integral x^{dk+l} w(x) dx over
/// [a^d, b^d]: (1/d) u^{(l+1-d)/d} w(u^{1/d}). Requires a >= 0.
Density power_pushforward(const Density& base, unsigned d, std::size_t l);

struct TransformSpec {
    enum class Kind { subsequence, linear_combination };
    Kind kind = Kind::subsequence;
    unsigned d = 1;
    std::size_t l = 0;
    Polynomial g;
    std::optional<Interval> interval;

    static TransformSpec subsequence(unsigned d, std::size_t l);
    static TransformSpec linear_combination(Polynomial g, Interval ab);
};

/// Applies the transform to y and to dens, then compares the transformed
/// sequence with quadrature moments of the transformed density.
RepresentationReport verify_transform_consistency(const Sequence& y, const TransformSpec& transform,
                                                  const Density& dens, std::size_t n_max,
                                                  double tol);

}  // namespace momentlab

#endif
