#ifndef MOMENTLAB_CHAINSEQ_HPP
#define MOMENTLAB_CHAINSEQ_HPP

/**
 * @file chainseq.hpp
 * @brief Chain sequences and the support interval of y(p,s;q,t).
 *
 * A sequence (a_n) is a chain sequence when a_n = (1 - g_n) g_{n+1} for some
 * parameters 0 <= g_0 < 1, 0 < g_{n+1} < 1. It is decided with the minimal
 * parameter sequence g_0 = 0, g_{n+1} = a_n / (1 - g_n), which stays in
 * [0,1) exactly when some parameter sequence exists.
 *
 * The spectrum bounds use
 *
 *     alpha_n(x) = t_{n+1} / ((s_n - x)(s_{n+1} - x)).
 *
 * For an eventually constant spec alpha_n(x) is constant from some index on,
 * so the infinite chain condition reduces to a finite exact computation.
 */

#include "momentlab/orthopoly.hpp"
#include "momentlab/seqcore.hpp"
#include "momentlab/surd.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace momentlab {

/// alpha_0(x)..alpha_{n_max}(x). Throws PoleAt(n) when x = s_n.
std::vector<double> alpha_sequence(const SigmaTauSpec& spec, double x, std::size_t n_max);

/// Exact alpha_0(x)..alpha_{n_max}(x) for x in Q(sqrt(r)).
std::vector<QuadraticSurd> alpha_sequence_exact(const SigmaTauSpec& spec, const QuadraticSurd& x,
                                                std::size_t n_max);

enum class ChainMode { minimal_parameters, explicit_parameters };

std::string_view to_string(ChainMode mode);

struct ChainVerdict {
    /// Last n for which a_0..a_n are verified; -1 when a_0 already fails.
    long is_chain_up_to = -1;
    /// g_0, g_1, ... as far as they were computed.
    std::vector<double> parameters;
    std::optional<std::size_t> failure_index;
    ChainMode mode = ChainMode::minimal_parameters;

    bool chain() const noexcept { return !failure_index; }
};

/// Minimal parameters for a_0..a_{min(n_max, |a|-1)}. Fails at the first n
/// where g_{n+1} leaves [0,1). Throws InvalidArgument when a is empty.
ChainVerdict minimal_parameters(std::span<const double> a, std::size_t n_max);

/**
 * Checks 0 <= g_0 < 1, 0 < g_{n+1} < 1 and |a_n - (1-g_n) g_{n+1}| <= tol for
 * every n with g_{n+1} available. g must have |a| or |a|+1 entries; with |a|
 * entries the last a_n is not checked. Throws LengthMismatch otherwise.
 */
bool is_chain_with_parameters(std::span<const double> a, std::span<const double> g,
                              double tol = 1e-12);

/// Exact chain decision for (alpha_n(x))_{n>=0} over all n.
struct ExactChainVerdict {
    bool chain = false;
    /// First index at which the tail alpha_n(x) = tail_value starts.
    std::size_t tail_start = 0;
    QuadraticSurd tail_value;
    /// g_0..g_{tail_start} (fewer on an early failure).
    std::vector<QuadraticSurd> parameters;
    /// Tail value at most 1/4 and g_{tail_start} at most the larger fixed
    /// point (1 + sqrt(1 - 4c))/2 of g -> c/(1-g).
    bool tail_ok = false;
    std::optional<std::size_t> failure_index;
};

/// Throws PoleAt when x equals some s_n.
ExactChainVerdict minimal_parameters_exact(const SigmaTauSpec& spec, const QuadraticSurd& x);

/**
 * @brief Hypotheses and conclusions of the support theorem for y(p,s;q,t).
 *
 * All comparisons against s -/+ 2 sqrt(t) are exact.
 */
struct SupportCertificate {
    Shorthand params;
    Interval interval;
    bool p_above_lower = false;  ///< p > s - 2 sqrt(t)
    bool q_below_upper = false;  ///< q < s + 2 sqrt(t)
    bool t_below_upper = false;  ///< t < s + 2 sqrt(t)
    bool stieltjes = false;      ///< s >= 2 sqrt(t)
    /// g_0 = 1 - q / (sqrt(t) (p - s + 2 sqrt(t))), absent when p = s - 2 sqrt(t).
    std::optional<QuadraticSurd> initial_parameter;

    bool hypotheses_ok() const noexcept { return p_above_lower && q_below_upper && t_below_upper; }
    std::vector<std::string> failed_hypotheses() const;
    /// True when initial_parameter lies in [0,1).
    bool initial_parameter_in_range() const;
};

/// Never throws on failed hypotheses. Throws NotPositiveCase unless q, t > 0.
SupportCertificate evaluate_support(const Rational& p, const Rational& s, const Rational& q,
                                    const Rational& t);

/// Like evaluate_support but throws HypothesisFailure when the theorem does
/// not apply.
SupportCertificate support_interval(const Rational& p, const Rational& s, const Rational& q,
                                    const Rational& t);

enum class Side { lower, upper };

/// Conditions for x to bound the spectrum from one side: s_n > x (lower) or
/// s_n < x (upper) for every n, and (alpha_n(x)) a chain sequence.
struct EndpointCheck {
    QuadraticSurd point;
    Side side = Side::lower;
    bool side_ok = false;
    ChainVerdict numeric;  ///< minimal parameters of alpha_0..alpha_{n_check}
    std::optional<ExactChainVerdict> exact;

    bool pass() const noexcept { return side_ok && numeric.chain() && exact && exact->chain; }
};

EndpointCheck check_endpoint(const SigmaTauSpec& spec, const QuadraticSurd& x, Side side,
                             std::size_t n_check);

struct SupportReport {
    SupportCertificate certificate;
    std::size_t n_check = 0;
    EndpointCheck lower;
    EndpointCheck upper;
    /// alpha(s - 2 sqrt(t)) with parameters (g_0, 1/2, 1/2, ...).
    bool explicit_parameters_ok = false;
    /// alpha(s - 2 sqrt(t)) with parameters (g_0, 1/4, 1/4, ...), read literally.
    bool displayed_parameters_ok = false;
    ZeroSpan zeros{};
    bool zeros_inside = false;

    bool pass() const noexcept {
        return lower.pass() && upper.pass() && explicit_parameters_ok && zeros_inside;
    }
};

/// Degree of P_n whose zeros are compared with the interval.
inline constexpr std::size_t support_zero_degree = 60;

/// Requires a shorthand spec; propagates HypothesisFailure.
SupportReport certify_support(const SigmaTauSpec& spec, std::size_t n_check);

}  // namespace momentlab

#endif
