#include "momentlab/io.hpp"

#include "momentlab/errors.hpp"

#include <iomanip>
#include <sstream>

namespace momentlab {

namespace {

Json rationals_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(to_string(v));
    return out;
}

std::string format_double(double x) {
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

}  // namespace

std::string schema_tag(std::string_view kind) { return "momentlab/" + std::string(kind) + "/v1"; }

Json rational_json(const Rational& r) { return to_string(r); }

Json interval_json(const Interval& iv) {
    return Json{{"lower", {{"exact", iv.lower.to_string()}, {"approx", iv.lower_approx()}}},
                {"upper", {{"exact", iv.upper.to_string()}, {"approx", iv.upper_approx()}}}};
}

Json endpoint_json(const QuadraticSurd& x, const Shorthand& params, Side side) {
    return Json{{"exact", x.to_string()},
                {"symbolic", side == Side::lower ? "s-2*sqrt(t)" : "s+2*sqrt(t)"},
                {"p", to_string(params.p)},
                {"s", to_string(params.s)},
                {"q", to_string(params.q)},
                {"t", to_string(params.t)},
                {"approx", x.approx()}};
}

Json to_json(const Sequence& y) {
    Json out{{"schema", schema_tag("sequence")},
             {"label", y.label()},
             {"origin", std::string(to_string(y.origin()))},
             {"values", rationals_json(y.values())}};
    out["support"] = y.support() ? interval_json(*y.support()) : Json(nullptr);
    return out;
}

Json to_json(const SigmaTauSpec& spec) {
    Json out{{"schema", schema_tag("spec")},
             {"sigma_prefix", rationals_json(spec.sigma_prefix())},
             {"sigma_tail", to_string(spec.sigma_tail())},
             {"tau_prefix", rationals_json(spec.tau_prefix())},
             {"tau_tail", to_string(spec.tau_tail())},
             {"positive_case", spec.positive_case()}};
    if (auto sh = spec.shorthand()) {
        out["shorthand"] = Json{{"p", to_string(sh->p)},
                                {"s", to_string(sh->s)},
                                {"q", to_string(sh->q)},
                                {"t", to_string(sh->t)}};
    } else {
        out["shorthand"] = nullptr;
    }
    return out;
}

Json to_json(const PsdVerdict& v) {
    return Json{{"status", std::string(to_string(v.status))},
                {"rank", v.rank()},
                {"pivots", rationals_json(v.pivots)},
                {"witness", rationals_json(v.witness)}};
}

Json to_json(const MomentClassReport& r) {
    Json out{{"schema", schema_tag("classification")},
             {"max_order", r.max_order},
             {"hamburger", r.hamburger()},
             {"hamburger_ok_up_to", r.hamburger_ok_up_to},
             {"stieltjes", r.stieltjes()},
             {"stieltjes_ok_up_to", r.stieltjes_ok_up_to}};
    if (r.hausdorff_interval) {
        out["hausdorff"] = r.hausdorff();
        out["hausdorff_interval"] = interval_json(*r.hausdorff_interval);
        out["hausdorff_ok_up_to"] = *r.hausdorff_ok_up_to;
    } else {
        out["hausdorff"] = nullptr;
    }
    out["hankel_determinants"] = rationals_json(r.delta_values);
    Json witnesses = Json::array();
    for (const auto& w : r.failure_witnesses) {
        witnesses.push_back(Json{{"test", w.test},
                                 {"matrix", w.matrix},
                                 {"order", w.order},
                                 {"verdict", to_json(w.verdict)}});
    }
    out["failure_witnesses"] = std::move(witnesses);
    out["pass"] = r.all_pass();
    return out;
}

Json to_json(const ChainVerdict& v) {
    Json out{{"mode", std::string(to_string(v.mode))},
             {"chain", v.chain()},
             {"is_chain_up_to", v.is_chain_up_to}};
    out["failure_index"] = v.failure_index ? Json(*v.failure_index) : Json(nullptr);
    return out;
}

Json to_json(const ExactChainVerdict& v) {
    Json params = Json::array();
    for (const auto& g : v.parameters) params.push_back(g.to_string());
    Json out{{"chain", v.chain},
             {"tail_start", v.tail_start},
             {"tail_value", v.tail_value.to_string()},
             {"tail_ok", v.tail_ok},
             {"parameters", std::move(params)}};
    out["failure_index"] = v.failure_index ? Json(*v.failure_index) : Json(nullptr);
    return out;
}

Json to_json(const SupportCertificate& c) {
    Json out{{"schema", schema_tag("support-certificate")},
             {"p", to_string(c.params.p)},
             {"s", to_string(c.params.s)},
             {"q", to_string(c.params.q)},
             {"t", to_string(c.params.t)},
             {"lower", endpoint_json(c.interval.lower, c.params, Side::lower)},
             {"upper", endpoint_json(c.interval.upper, c.params, Side::upper)},
             {"hypotheses",
              {{"p_above_lower", c.p_above_lower},
               {"q_below_upper", c.q_below_upper},
               {"t_below_upper", c.t_below_upper}}},
             {"hypotheses_ok", c.hypotheses_ok()},
             {"stieltjes", c.stieltjes}};
    if (c.initial_parameter) {
        out["initial_parameter"] = Json{{"exact", c.initial_parameter->to_string()},
                                        {"approx", c.initial_parameter->approx()},
                                        {"in_range", c.initial_parameter_in_range()}};
    } else {
        out["initial_parameter"] = nullptr;
    }
    return out;
}

namespace {

Json endpoint_check_json(const EndpointCheck& e) {
    Json out{{"point", e.point.to_string()},
             {"approx", e.point.approx()},
             {"side_ok", e.side_ok},
             {"numeric", to_json(e.numeric)}};
    out["exact"] = e.exact ? to_json(*e.exact) : Json(nullptr);
    out["pass"] = e.pass();
    return out;
}

}  // namespace

Json to_json(const SupportReport& r) {
    Json out{{"schema", schema_tag("support-report")},
             {"certificate", to_json(r.certificate)},
             {"n_check", r.n_check},
             {"lower", endpoint_check_json(r.lower)},
             {"upper", endpoint_check_json(r.upper)},
             {"explicit_parameters_ok", r.explicit_parameters_ok},
             {"displayed_parameters_ok", r.displayed_parameters_ok},
             {"zeros",
              {{"degree", r.zeros.degree},
               {"lower", r.zeros.lower},
               {"upper", r.zeros.upper},
               {"inside", r.zeros_inside}}},
             {"pass", r.pass()}};
    return out;
}

Json to_json(const RepresentationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(Json{{"n", c.n},
                              {"target", c.target},
                              {"computed", c.computed},
                              {"abs_error", c.abs_error},
                              {"rel_error", c.rel_error}});
    }
    Json out{{"schema", schema_tag("representation")},
             {"sequence", r.sequence_label},
             {"density", r.density_label},
             {"tol", r.tol},
             {"max_rel_error", r.max_rel_error},
             {"checks", std::move(checks)}};
    out["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
    out["pass"] = r.pass();
    return out;
}

Json to_json(const PatternVerdict& v) {
    Json out{{"schema", schema_tag("pattern")}, {"preserving", v.preserving}};
    if (v.step) out["step"] = *v.step;
    if (v.offset) out["offset"] = *v.offset;
    if (v.witness) {
        Json block = Json::array();
        for (const auto& row : v.witness->block) block.push_back(rationals_json(row));
        out["witness"] = Json{{"epsilon", to_string(v.witness->epsilon)},
                              {"position", v.witness->position},
                              {"block", std::move(block)},
                              {"determinant", to_string(v.witness->determinant)}};
    }
    return out;
}

Json polynomials_json(const std::vector<MonicPolynomial>& ops) {
    Json polys = Json::array();
    for (std::size_t n = 0; n < ops.size(); ++n) {
        polys.push_back(Json{{"degree", n},
                             {"coefficients", rationals_json(ops[n].coefficients())},
                             {"text", ops[n].polynomial().to_string()}});
    }
    return Json{{"schema", schema_tag("polynomials")}, {"polynomials", std::move(polys)}};
}

Json zeros_json(const std::vector<double>& zeros, std::size_t degree) {
    return Json{{"schema", schema_tag("zeros")}, {"degree", degree}, {"zeros", zeros}};
}

Sequence parse_sequence_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument(std::string("malformed sequence JSON: ") + e.what());
    }
    std::string label;
    const Json* values = &doc;
    if (doc.is_object()) {
        if (!doc.contains("values")) throw InvalidArgument("sequence JSON object lacks \"values\"");
        values = &doc["values"];
        if (doc.contains("label") && doc["label"].is_string()) label = doc["label"].get<std::string>();
    }
    if (!values->is_array() || values->empty()) {
        throw InvalidArgument("sequence values must be a non-empty array");
    }
    std::vector<Rational> out;
    for (const auto& v : *values) {
        if (v.is_number_integer()) {
            out.push_back(parse_rational(v.dump()));
        } else if (v.is_string()) {
            out.push_back(parse_rational(v.get<std::string>()));
        } else {
            throw InvalidArgument("sequence entries must be integers or exact rational strings, got " +
                                  v.dump());
        }
    }
    return Sequence(std::move(out), std::move(label), Origin::external);
}

std::string sequence_csv(const Sequence& y) {
    std::ostringstream os;
    os << "n,value\n";
    for (std::size_t n = 0; n < y.size(); ++n) os << n << ',' << to_string(y[n]) << '\n';
    return os.str();
}

std::string representation_csv(const RepresentationReport& r) {
    std::ostringstream os;
    os << "n,target,computed,abs_error,rel_error\n";
    for (const auto& c : r.checks) {
        os << c.n << ',' << format_double(c.target) << ',' << format_double(c.computed) << ','
           << format_double(c.abs_error) << ',' << format_double(c.rel_error) << '\n';
    }
    return os.str();
}

std::string density_csv(const Density& dens, std::size_t points) {
    std::ostringstream os;
    os << "x,w\n";
    const double a = dens.a();
    const double b = dens.b();
    for (std::size_t i = 1; i <= points; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(points + 1);
        os << format_double(x) << ',' << format_double(dens(x)) << '\n';
    }
    return os.str();
}

}  // namespace momentlab
