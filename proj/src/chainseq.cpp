#include "momentlab/chainseq.hpp"

#include "momentlab/errors.hpp"

#include <algorithm>
#include <cmath>

namespace momentlab {

namespace {

// alpha_n(x) is constant for n >= this index.
std::size_t tail_start(const SigmaTauSpec& spec) {
    return std::max(spec.sigma_prefix().size(), spec.tau_prefix().size());
}

QuadraticSurd alpha_exact(const SigmaTauSpec& spec, const QuadraticSurd& x, std::size_t n) {
    QuadraticSurd left = QuadraticSurd(spec.s(n)) - x;
    QuadraticSurd right = QuadraticSurd(spec.s(n + 1)) - x;
    if (left.sign() == 0) throw PoleAt(n);
    if (right.sign() == 0) throw PoleAt(n + 1);
    return QuadraticSurd(spec.t(n + 1)) / (left * right);
}

}  // namespace

std::string_view to_string(ChainMode mode) {
    return mode == ChainMode::minimal_parameters ? "minimal_parameters" : "explicit_parameters";
}

std::vector<double> alpha_sequence(const SigmaTauSpec& spec, double x, std::size_t n_max) {
    std::vector<double> out;
    out.reserve(n_max + 1);
    double left = to_double(spec.s(0)) - x;
    if (left == 0.0) throw PoleAt(0);
    for (std::size_t n = 0; n <= n_max; ++n) {
        double right = to_double(spec.s(n + 1)) - x;
        if (right == 0.0) throw PoleAt(n + 1);
        out.push_back(to_double(spec.t(n + 1)) / (left * right));
        left = right;
    }
    return out;
}

std::vector<QuadraticSurd> alpha_sequence_exact(const SigmaTauSpec& spec, const QuadraticSurd& x,
                                                std::size_t n_max) {
    std::vector<QuadraticSurd> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(alpha_exact(spec, x, n));
    return out;
}

ChainVerdict minimal_parameters(std::span<const double> a, std::size_t n_max) {
    if (a.empty()) throw InvalidArgument("chain test needs at least one term");
    ChainVerdict v;
    v.mode = ChainMode::minimal_parameters;
    const std::size_t last = std::min(n_max, a.size() - 1);
    double g = 0.0;
    v.parameters.push_back(g);
    for (std::size_t n = 0; n <= last; ++n) {
        double next = a[n] / (1.0 - g);
        v.parameters.push_back(next);
        if (!(next >= 0.0 && next < 1.0)) {
            v.failure_index = n;
            return v;
        }
        v.is_chain_up_to = static_cast<long>(n);
        g = next;
    }
    return v;
}

bool is_chain_with_parameters(std::span<const double> a, std::span<const double> g, double tol) {
    if (g.size() != a.size() && g.size() != a.size() + 1) {
        throw LengthMismatch("parameter sequence must have " + std::to_string(a.size()) + " or " +
                             std::to_string(a.size() + 1) + " entries, got " +
                             std::to_string(g.size()));
    }
    if (g.empty() || !(g[0] >= 0.0 && g[0] < 1.0)) return false;
    for (std::size_t n = 0; n + 1 < g.size(); ++n) {
        if (!(g[n + 1] > 0.0 && g[n + 1] < 1.0)) return false;
        if (std::abs(a[n] - (1.0 - g[n]) * g[n + 1]) > tol) return false;
    }
    return true;
}

ExactChainVerdict minimal_parameters_exact(const SigmaTauSpec& spec, const QuadraticSurd& x) {
    ExactChainVerdict v;
    v.tail_start = tail_start(spec);
    v.tail_value = alpha_exact(spec, x, v.tail_start);

    QuadraticSurd g(0);
    v.parameters.push_back(g);
    for (std::size_t n = 0; n < v.tail_start; ++n) {
        QuadraticSurd next = alpha_exact(spec, x, n) / (QuadraticSurd(1) - g);
        v.parameters.push_back(next);
        if (next.sign() < 0 || next >= QuadraticSurd(1)) {
            v.failure_index = n;
            return v;
        }
        g = next;
    }

    const QuadraticSurd& c = v.tail_value;
    const Rational quarter = make_rational(1, 4);
    if (c.sign() >= 0 && c <= QuadraticSurd(quarter)) {
        QuadraticSurd shifted = QuadraticSurd(2) * g - QuadraticSurd(1);
        v.tail_ok = shifted.sign() <= 0 ||
                    shifted * shifted <= QuadraticSurd(1) - QuadraticSurd(4) * c;
    }
    if (!v.tail_ok) {
        v.failure_index = v.tail_start;
        return v;
    }
    v.chain = true;
    return v;
}

std::vector<std::string> SupportCertificate::failed_hypotheses() const {
    std::vector<std::string> out;
    if (!p_above_lower) out.emplace_back("p > s-2sqrt(t)");
    if (!q_below_upper) out.emplace_back("q < s+2sqrt(t)");
    if (!t_below_upper) out.emplace_back("t < s+2sqrt(t)");
    return out;
}

bool SupportCertificate::initial_parameter_in_range() const {
    return initial_parameter && initial_parameter->sign() >= 0 && *initial_parameter < QuadraticSurd(1);
}

SupportCertificate evaluate_support(const Rational& p, const Rational& s, const Rational& q,
                                    const Rational& t) {
    if (q <= 0 || t <= 0) throw NotPositiveCase("support theorem needs q > 0 and t > 0");
    SupportCertificate c;
    c.params = Shorthand{p, s, q, t};
    c.interval = centered_interval(s, t);
    const QuadraticSurd two_root_t = QuadraticSurd::sqrt_of(t, 2);
    const QuadraticSurd gap = QuadraticSurd(p - s) + two_root_t;  // p - (s - 2 sqrt(t))
    c.p_above_lower = gap.sign() > 0;
    c.q_below_upper = QuadraticSurd(q) < c.interval.upper;
    c.t_below_upper = QuadraticSurd(t) < c.interval.upper;
    c.stieltjes = QuadraticSurd(s) >= two_root_t;
    if (gap.sign() != 0) {
        c.initial_parameter = QuadraticSurd(1) - QuadraticSurd(q) / (QuadraticSurd::sqrt_of(t) * gap);
    }
    return c;
}

SupportCertificate support_interval(const Rational& p, const Rational& s, const Rational& q,
                                    const Rational& t) {
    SupportCertificate c = evaluate_support(p, s, q, t);
    if (!c.hypotheses_ok()) throw HypothesisFailure(c.failed_hypotheses());
    return c;
}

EndpointCheck check_endpoint(const SigmaTauSpec& spec, const QuadraticSurd& x, Side side,
                             std::size_t n_check) {
    EndpointCheck e;
    e.point = x;
    e.side = side;
    e.side_ok = true;
    for (std::size_t n = 0; n <= tail_start(spec); ++n) {
        const int sign = (QuadraticSurd(spec.s(n)) - x).sign();
        if (side == Side::lower ? sign <= 0 : sign >= 0) e.side_ok = false;
    }
    try {
        std::vector<double> a = alpha_sequence(spec, x.approx(), n_check);
        e.numeric = minimal_parameters(a, n_check);
    } catch (const PoleAt& pole) {
        e.numeric = ChainVerdict{};
        e.numeric.failure_index = pole.index();
        e.numeric.is_chain_up_to = static_cast<long>(pole.index()) - 1;
    }
    try {
        e.exact = minimal_parameters_exact(spec, x);
    } catch (const PoleAt&) {
        e.exact.reset();
    }
    return e;
}

SupportReport certify_support(const SigmaTauSpec& spec, std::size_t n_check) {
    const auto sh = spec.shorthand();
    if (!sh) throw InvalidArgument("support certification needs a (p,s;q,t) spec");
    SupportReport r;
    r.certificate = support_interval(sh->p, sh->s, sh->q, sh->t);
    r.n_check = n_check;
    const Interval& iv = r.certificate.interval;
    r.lower = check_endpoint(spec, iv.lower, Side::lower, n_check);
    r.upper = check_endpoint(spec, iv.upper, Side::upper, n_check);

    if (r.certificate.initial_parameter) {
        try {
            std::vector<double> a = alpha_sequence(spec, iv.lower_approx(), n_check);
            std::vector<double> g(a.size() + 1, 0.5);
            g[0] = r.certificate.initial_parameter->approx();
            r.explicit_parameters_ok = is_chain_with_parameters(a, g);
            std::fill(g.begin() + 1, g.end(), 0.25);
            r.displayed_parameters_ok = is_chain_with_parameters(a, g);
        } catch (const PoleAt&) {
            r.explicit_parameters_ok = false;
            r.displayed_parameters_ok = false;
        }
    }

    if (spec.positive_case()) {
        r.zeros = true_interval_estimate(spec, support_zero_degree);
        r.zeros_inside = iv.contains(r.zeros.lower, 1e-9) && iv.contains(r.zeros.upper, 1e-9);
    }
    return r;
}

}  // namespace momentlab
