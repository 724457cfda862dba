#include "momentlab/cli.hpp"

#include "momentlab/chainseq.hpp"
#include "momentlab/errors.hpp"
#include "momentlab/hankel.hpp"
#include "momentlab/io.hpp"
#include "momentlab/measures.hpp"
#include "momentlab/orthopoly.hpp"
#include "momentlab/seqcore.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>

namespace momentlab::cli {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

QuadraticSurd parse_endpoint(const std::string& token, const std::optional<Rational>& s,
                             const std::optional<Rational>& t) {
    std::string compact;
    std::copy_if(token.begin(), token.end(), std::back_inserter(compact),
                 [](char c) { return c != ' ' && c != '*'; });
    if (compact == "s-2sqrt(t)" || compact == "s+2sqrt(t)") {
        if (!s || !t) throw InvalidArgument("interval token " + token + " needs --s and --t");
        if (*t <= 0) throw InvalidArgument("sqrt(t) needs t > 0");
        const Interval iv = centered_interval(*s, *t);
        return compact[1] == '-' ? iv.lower : iv.upper;
    }
    return QuadraticSurd(parse_rational(compact));
}

struct Options {
    std::string format = "json";
    std::string output;

    std::string name;
    std::string input;
    std::optional<std::string> p, s, q, t;
    std::size_t n = 20;
    std::size_t m = 4;
    std::string interval;
    std::size_t check = 200;
    std::optional<double> tol;
    std::string density;
    std::size_t plot = 0;
    std::string sub;
    std::string lincomb;
    bool verify = false;
    std::size_t deg = 6;
    bool zeros = false;
};

struct Outcome {
    std::string text;
    int status = exit_pass;
};

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::optional<Rational> opt_rational(const std::optional<std::string>& v) {
    if (!v) return std::nullopt;
    return parse_rational(*v);
}

bool has_pqst(const Options& o) { return o.p || o.s || o.q || o.t; }

SigmaTauSpec spec_from(const Options& o) {
    if (!o.name.empty()) {
        if (has_pqst(o)) throw InvalidArgument("use either --name or --p/--s/--q/--t");
        return catalog_spec(o.name);
    }
    if (!(o.p && o.s && o.q && o.t)) throw InvalidArgument("need --name or all of --p --s --q --t");
    return make_spec(parse_rational(*o.p), parse_rational(*o.s), parse_rational(*o.q),
                     parse_rational(*o.t));
}

std::string read_input(const std::string& path) {
    std::ostringstream os;
    if (path == "-") {
        os << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw InvalidArgument("cannot read " + path);
        os << in.rdbuf();
    }
    return os.str();
}

// Sequence from --input, --name or --p/--s/--q/--t, with at least `count` values.
Sequence sequence_from(const Options& o, std::size_t count) {
    if (!o.input.empty()) {
        if (!o.name.empty() || has_pqst(o)) throw InvalidArgument("use either --input or a spec");
        return parse_sequence_json(read_input(o.input));
    }
    if (!o.name.empty()) return catalog_sequence(o.name, count - 1).sequence;
    return catalan_like(spec_from(o), count - 1, "y");
}

// s and t used to resolve interval tokens: explicit --s/--t win over the
// named spec's shorthand.
std::pair<std::optional<Rational>, std::optional<Rational>> surd_params(const Options& o) {
    std::optional<Rational> s = opt_rational(o.s);
    std::optional<Rational> t = opt_rational(o.t);
    if ((!s || !t) && !o.name.empty()) {
        if (auto sh = catalog_spec(o.name).shorthand()) {
            if (!s) s = sh->s;
            if (!t) t = sh->t;
        }
    }
    return {s, t};
}

std::string join_values(const Sequence& y) {
    std::string out;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i) out += ", ";
        out += to_string(y[i]);
    }
    return out;
}

std::string sequence_text(const Sequence& y) {
    std::string out = y.label().empty() ? "y" : y.label();
    return out + ": " + join_values(y) + "\n";
}

Outcome emit_sequence(const Options& o, const Sequence& y) {
    if (o.format == "csv") return {sequence_csv(y)};
    if (o.format == "text") return {sequence_text(y)};
    return {dump(to_json(y))};
}

Outcome cmd_gen(const Options& o) {
    if (!o.name.empty() && !has_pqst(o)) return emit_sequence(o, catalog_sequence(o.name, o.n).sequence);
    return emit_sequence(o, catalan_like(spec_from(o), o.n, "y"));
}

Outcome cmd_classify(const Options& o) {
    std::optional<Interval> iv;
    if (!o.interval.empty()) {
        auto [s, t] = surd_params(o);
        iv = parse_interval(o.interval, s, t);
    }
    const Sequence y = sequence_from(o, 2 * o.m + 3);
    const MomentClassReport r = classify(y, o.m, iv);
    const int status = r.all_pass() ? exit_pass : exit_fail;
    if (o.format == "csv") {
        std::ostringstream os;
        os << "test,ok_up_to,pass\n";
        os << "hamburger," << r.hamburger_ok_up_to << ',' << r.hamburger() << '\n';
        os << "stieltjes," << r.stieltjes_ok_up_to << ',' << r.stieltjes() << '\n';
        if (r.hausdorff_interval) os << "hausdorff," << *r.hausdorff_ok_up_to << ',' << r.hausdorff() << '\n';
        return {os.str(), status};
    }
    if (o.format == "text") {
        std::ostringstream os;
        auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
        os << "orders checked: 0.." << r.max_order << '\n';
        os << "hamburger: " << verdict(r.hamburger()) << " (ok up to " << r.hamburger_ok_up_to << ")\n";
        os << "stieltjes: " << verdict(r.stieltjes()) << " (ok up to " << r.stieltjes_ok_up_to << ")\n";
        if (r.hausdorff_interval) {
            os << "hausdorff [" << r.hausdorff_interval->lower.to_string() << ", "
               << r.hausdorff_interval->upper.to_string() << "]: " << verdict(r.hausdorff())
               << " (ok up to " << *r.hausdorff_ok_up_to << ")\n";
        }
        return {os.str(), status};
    }
    return {dump(to_json(r)), status};
}

Outcome cmd_support(const Options& o) {
    const SigmaTauSpec spec = spec_from(o);
    const auto sh = spec.shorthand();
    if (!sh) throw InvalidArgument("support needs a (p,s;q,t) spec");
    const SupportCertificate cert = evaluate_support(sh->p, sh->s, sh->q, sh->t);
    if (!cert.hypotheses_ok()) {
        Json doc = to_json(cert);
        doc["pass"] = false;
        if (o.format == "json") return {dump(doc), exit_fail};
        std::string text = "hypotheses fail:";
        for (const auto& h : cert.failed_hypotheses()) text += " " + h + ";";
        return {text + "\n", exit_fail};
    }
    const SupportReport r = certify_support(spec, o.check);
    const int status = r.pass() ? exit_pass : exit_fail;
    if (o.format == "csv") {
        std::ostringstream os;
        os << "endpoint,exact,approx,side_ok,numeric_chain,exact_chain\n";
        for (const auto* e : {&r.lower, &r.upper}) {
            os << (e == &r.lower ? "lower" : "upper") << ',' << e->point.to_string() << ','
               << e->point.approx() << ',' << e->side_ok << ',' << e->numeric.chain() << ','
               << (e->exact && e->exact->chain) << '\n';
        }
        return {os.str(), status};
    }
    if (o.format == "text") {
        std::ostringstream os;
        os << "interval: [" << r.certificate.interval.lower.to_string() << ", "
           << r.certificate.interval.upper.to_string() << "]\n";
        os << "stieltjes: " << (r.certificate.stieltjes ? "true" : "false") << '\n';
        os << "certified: " << (r.pass() ? "pass" : "fail") << " (n_check " << r.n_check << ")\n";
        return {os.str(), status};
    }
    return {dump(to_json(r)), status};
}

Outcome cmd_verify(const Options& o) {
    const std::string dens_name = o.density.empty() ? o.name : o.density;
    if (dens_name.empty()) throw InvalidArgument("verify needs --name or --density");
    const Density dens = density_catalog(dens_name);
    if (o.plot > 0) return {density_csv(dens, o.plot)};
    const Sequence y = sequence_from(o, o.n + 1);
    const double tol = o.tol.value_or(default_tolerance());
    const RepresentationReport r = verify_representation(y, dens, o.n, tol);
    const int status = r.pass() ? exit_pass : exit_fail;
    if (o.format == "csv") return {representation_csv(r), status};
    if (o.format == "text") {
        std::ostringstream os;
        os << r.sequence_label << " vs " << r.density_label << ": " << (r.pass() ? "pass" : "fail")
           << " (max relative error " << r.max_rel_error << ", tol " << r.tol << ")\n";
        return {os.str(), status};
    }
    return {dump(to_json(r)), status};
}

Outcome cmd_transform(const Options& o) {
    if (o.sub.empty() == o.lincomb.empty()) throw InvalidArgument("give exactly one of --sub or --lincomb");
    std::optional<Density> dens;
    if (!o.name.empty() && std::ranges::count(density_names(), o.name) > 0) dens = density_catalog(o.name);

    if (!o.sub.empty()) {
        const auto [d, l] = parse_sub(o.sub);
        if (o.verify) {
            if (!dens) throw InvalidArgument("--verify needs a catalog density name");
            const Sequence y = sequence_from(o, d * (o.n + 1) + l);
            const RepresentationReport r = verify_transform_consistency(
                y, TransformSpec::subsequence(d, l), *dens, o.n, o.tol.value_or(default_tolerance()));
            return {o.format == "csv" ? representation_csv(r) : dump(to_json(r)),
                    r.pass() ? exit_pass : exit_fail};
        }
        Sequence y = sequence_from(o, o.n + 1);
        if (dens) y.set_support(dens->interval);
        return emit_sequence(o, subsequence_transform(y, d, l));
    }

    const Polynomial g = parse_lincomb(o.lincomb);
    Interval ab;
    if (!o.interval.empty()) {
        auto [s, t] = surd_params(o);
        ab = parse_interval(o.interval, s, t);
    } else if (dens) {
        ab = dens->interval;
    } else {
        throw InvalidArgument("--lincomb needs --interval unless --name has a catalog density");
    }
    const auto deg = static_cast<std::size_t>(g.degree());
    const Sequence y = sequence_from(o, o.n + 1 + deg);
    if (o.verify) {
        if (!dens) throw InvalidArgument("--verify needs a catalog density name");
        const RepresentationReport r = verify_transform_consistency(
            y, TransformSpec::linear_combination(g, ab), *dens, o.n, o.tol.value_or(default_tolerance()));
        return {o.format == "csv" ? representation_csv(r) : dump(to_json(r)),
                r.pass() ? exit_pass : exit_fail};
    }
    try {
        return emit_sequence(o, linear_combination_transform(y, g, ab).sequence);
    } catch (const GNegative& e) {
        Json doc{{"schema", schema_tag("error")}, {"error", e.what()}, {"where", e.where()}};
        return {o.format == "json" ? dump(doc) : std::string(e.what()) + "\n", exit_fail};
    }
}

Outcome cmd_ops(const Options& o) {
    const SigmaTauSpec spec = spec_from(o);
    const std::vector<MonicPolynomial> ops = ops_from_recurrence(spec, o.deg);
    std::vector<double> zeros;
    if (o.zeros && o.deg > 0) zeros = ops_zeros(spec, o.deg);
    if (o.format == "csv") {
        std::ostringstream os;
        os << "degree,coefficients\n";
        for (std::size_t k = 0; k < ops.size(); ++k) {
            os << k << ',';
            const auto& c = ops[k].coefficients();
            for (std::size_t j = 0; j < c.size(); ++j) os << (j ? " " : "") << to_string(c[j]);
            os << '\n';
        }
        return {os.str()};
    }
    if (o.format == "text") {
        std::ostringstream os;
        for (std::size_t k = 0; k < ops.size(); ++k) {
            os << "P_" << k << " = " << ops[k].polynomial().to_string() << '\n';
        }
        if (o.zeros) {
            os << "zeros of P_" << o.deg << ":";
            os.precision(17);
            for (double z : zeros) os << ' ' << z;
            os << '\n';
        }
        return {os.str()};
    }
    Json doc = polynomials_json(ops);
    if (o.zeros) doc["zeros"] = zeros_json(zeros, o.deg);
    return {dump(doc)};
}

void add_spec_options(CLI::App* sub, Options& o) {
    sub->add_option("--name", o.name, "catalog sequence name");
    sub->add_option("--p", o.p, "s_0");
    sub->add_option("--s", o.s, "s_k for k >= 1");
    sub->add_option("--q", o.q, "t_1");
    sub->add_option("--t", o.t, "t_k for k >= 2");
}

void add_output_options(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", o.output, "write to a file instead of stdout");
}

}  // namespace

double default_tolerance() {
    const char* env = std::getenv("MOMENTLAB_PRECISION");
    if (!env || !*env) return 1e-7;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
        throw InvalidArgument(std::string("MOMENTLAB_PRECISION must be a positive number, got ") + env);
    }
    return v;
}

Interval parse_interval(std::string_view text, const std::optional<Rational>& s,
                        const std::optional<Rational>& t) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) throw InvalidArgument("interval must be \"lo,hi\"");
    Interval iv{parse_endpoint(parts[0], s, t), parse_endpoint(parts[1], s, t)};
    if (!(iv.lower < iv.upper)) throw InvalidArgument("interval needs lo < hi");
    return iv;
}

Polynomial parse_lincomb(std::string_view text) {
    std::size_t offset = 0;
    std::string_view coeffs = text;
    if (const auto at = text.find('@'); at != std::string_view::npos) {
        const std::string off = trim(text.substr(at + 1));
        if (off.empty() || off.find_first_not_of("0123456789") != std::string::npos) {
            throw InvalidArgument("bad offset in --lincomb: " + std::string(text));
        }
        offset = std::stoul(off);
        coeffs = text.substr(0, at);
    }
    std::vector<Rational> c(offset, Rational(0));
    for (const auto& token : split(coeffs, ',')) c.push_back(parse_rational(token));
    Polynomial g(std::move(c));
    if (g.is_zero()) throw InvalidArgument("--lincomb polynomial is zero");
    return g;
}

std::pair<unsigned, std::size_t> parse_sub(std::string_view text) {
    unsigned d = 1;
    std::size_t l = 0;
    for (const auto& part : split(text, ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) throw InvalidArgument("bad --sub entry: " + part);
        const std::string key = trim(part.substr(0, eq));
        const std::string value = trim(part.substr(eq + 1));
        if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos) {
            throw InvalidArgument("bad --sub value: " + part);
        }
        if (key == "d") {
            d = static_cast<unsigned>(std::stoul(value));
        } else if (key == "l") {
            l = std::stoul(value);
        } else {
            throw InvalidArgument("unknown --sub key: " + key);
        }
    }
    if (d == 0) throw InvalidArgument("--sub needs d >= 1");
    return {d, l};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Catalan-like numbers, moment classification and support certification", "momentlab"};
    app.require_subcommand(1, 1);

    auto* gen = app.add_subcommand("gen", "generate Catalan-like numbers y_0..y_n");
    add_spec_options(gen, o);
    gen->add_option("--n", o.n, "last index");
    add_output_options(gen, o);

    auto* cls = app.add_subcommand("classify", "Hamburger/Stieltjes/Hausdorff tests up to order m");
    add_spec_options(cls, o);
    cls->add_option("--input", o.input, "sequence JSON file, - for stdin");
    cls->add_option("--m", o.m, "largest Hankel order");
    cls->add_option("--interval", o.interval, "lo,hi for the Hausdorff test");
    add_output_options(cls, o);

    auto* sup = app.add_subcommand("support", "certify the support interval of y(p,s;q,t)");
    add_spec_options(sup, o);
    sup->add_option("--check", o.check, "terms checked numerically");
    add_output_options(sup, o);

    auto* ver = app.add_subcommand("verify", "compare a sequence with quadrature moments of a density");
    add_spec_options(ver, o);
    ver->add_option("--input", o.input, "sequence JSON file, - for stdin");
    ver->add_option("--density", o.density, "density name (defaults to --name)");
    ver->add_option("--n", o.n, "last moment index");
    ver->add_option("--tol", o.tol, "relative tolerance");
    ver->add_option("--plot", o.plot, "emit x,w(x) CSV on this many points instead");
    add_output_options(ver, o);

    auto* tr = app.add_subcommand("transform", "affine subsequence or polynomial linear combination");
    add_spec_options(tr, o);
    tr->add_option("--input", o.input, "sequence JSON file, - for stdin");
    tr->add_option("--n", o.n, "last index of the transformed sequence");
    tr->add_option("--sub", o.sub, "d=<step>,l=<offset>");
    tr->add_option("--lincomb", o.lincomb, "c0,c1,...@offset");
    tr->add_option("--interval", o.interval, "lo,hi on which g must be nonnegative");
    tr->add_flag("--verify", o.verify, "check against the transformed density");
    tr->add_option("--tol", o.tol, "relative tolerance for --verify");
    add_output_options(tr, o);

    auto* ops = app.add_subcommand("ops", "monic orthogonal polynomials P_0..P_deg");
    add_spec_options(ops, o);
    ops->add_option("--deg", o.deg, "largest degree");
    ops->add_flag("--zeros", o.zeros, "also report the zeros of P_deg");
    add_output_options(ops, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_usage;
    }

    Outcome result;
    try {
        if (gen->parsed()) result = cmd_gen(o);
        else if (cls->parsed()) result = cmd_classify(o);
        else if (sup->parsed()) result = cmd_support(o);
        else if (ver->parsed()) result = cmd_verify(o);
        else if (tr->parsed()) result = cmd_transform(o);
        else result = cmd_ops(o);
    } catch (const HypothesisFailure& e) {
        err << "error: " << e.what() << '\n';
        return exit_fail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    if (o.output.empty()) {
        out << result.text;
    } else {
        std::ofstream file(o.output);
        if (!file) {
            err << "error: cannot write " << o.output << '\n';
            return exit_usage;
        }
        file << result.text;
    }
    return result.status;
}

}  // namespace momentlab::cli
