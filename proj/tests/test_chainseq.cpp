#include "momentlab/chainseq.hpp"
#include "momentlab/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace momentlab;

TEST_CASE("alpha_sequence") {
    const SigmaTauSpec c = make_spec(1, 2, 1, 1);
    auto a0 = alpha_sequence(c, 0.0, 5);
    REQUIRE(a0.size() == 6);
    CHECK(a0[0] == 0.5);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(a0[n] == 0.25);
    auto a4 = alpha_sequence(c, 4.0, 5);
    CHECK(a4[0] == doctest::Approx(1.0 / 6.0));
    for (std::size_t n = 1; n <= 5; ++n) CHECK(a4[n] == 0.25);
    CHECK_THROWS_AS(alpha_sequence(make_spec(1, 1, 1, 1), 1.0, 3), PoleAt);
    try {
        alpha_sequence(make_spec(0, 2, 1, 1), 2.0, 3);
    } catch (const PoleAt& e) {
        CHECK(e.index() == 1);
    }
}

TEST_CASE("alpha_sequence_exact at irrational endpoints") {
    const Interval d = centered_interval(3, 2);
    auto a = alpha_sequence_exact(make_spec(3, 3, 4, 2), d.lower, 4);
    CHECK(a[0] == QuadraticSurd(make_rational(1, 2)));
    for (std::size_t n = 1; n <= 4; ++n) CHECK(a[n] == QuadraticSurd(make_rational(1, 4)));
}

TEST_CASE("minimal_parameters") {
    std::vector<double> quarter(21, 0.25);
    ChainVerdict v = minimal_parameters(quarter, 20);
    CHECK(v.chain());
    CHECK(v.is_chain_up_to == 20);
    for (std::size_t n = 0; n < v.parameters.size(); ++n) {
        CHECK(v.parameters[n] == doctest::Approx(n / (2.0 * (n + 1))).epsilon(1e-14));
        if (n > 0) CHECK(v.parameters[n] > v.parameters[n - 1]);
    }

    std::vector<double> half(10, 0.5);
    ChainVerdict h = minimal_parameters(half, 9);
    CHECK_FALSE(h.chain());
    CHECK(h.failure_index == 1);
    CHECK(h.is_chain_up_to == 0);

    std::vector<double> zeros(8, 0.0);
    ChainVerdict z = minimal_parameters(zeros, 7);
    CHECK(z.chain());
    for (double g : z.parameters) CHECK(g == 0.0);

    CHECK_THROWS_AS(minimal_parameters(std::vector<double>{}, 3), InvalidArgument);
    CHECK(minimal_parameters(quarter, 3).is_chain_up_to == 3);
}

TEST_CASE("constant sequences are chains exactly up to 1/4") {
    for (int i = 1; i <= 40; ++i) {
        const double c = 0.01 * i;
        std::vector<double> a(2001, c);
        CAPTURE(c);
        CHECK(minimal_parameters(a, 2000).chain() == (c <= 0.25));
    }
}

TEST_CASE("is_chain_with_parameters") {
    std::vector<double> a{0.5, 0.25, 0.25, 0.25};
    std::vector<double> g{0.0, 0.5, 0.5, 0.5, 0.5};
    CHECK(is_chain_with_parameters(a, g));
    std::vector<double> q(4, 0.25);
    CHECK(is_chain_with_parameters(q, std::vector<double>(5, 0.5)));
    CHECK_FALSE(is_chain_with_parameters(q, std::vector<double>{0.0, 0.9, 0.5, 0.5}));
    CHECK_THROWS_AS(is_chain_with_parameters(q, std::vector<double>(7, 0.5)), LengthMismatch);
    // g_0 = 1 is outside [0,1)
    CHECK_FALSE(is_chain_with_parameters(q, std::vector<double>{1.0, 0.5, 0.5, 0.5}));
}

TEST_CASE("exact chain decision with a constant tail") {
    const SigmaTauSpec c = make_spec(1, 2, 1, 1);
    ExactChainVerdict at0 = minimal_parameters_exact(c, QuadraticSurd(0));
    CHECK(at0.chain);
    CHECK(at0.tail_value == QuadraticSurd(make_rational(1, 4)));
    ExactChainVerdict at4 = minimal_parameters_exact(c, QuadraticSurd(4));
    CHECK(at4.chain);
    ExactChainVerdict mid = minimal_parameters_exact(c, QuadraticSurd(make_rational(1, 2)));
    CHECK_FALSE(mid.chain);
    ExactChainVerdict outside = minimal_parameters_exact(c, QuadraticSurd(-1));
    CHECK(outside.chain);  // below the support: alpha tail 1/9
    CHECK_THROWS_AS(minimal_parameters_exact(c, QuadraticSurd(2)), PoleAt);
}

TEST_CASE("exact and numeric chain decisions agree away from the boundary") {
    const SigmaTauSpec c = make_spec(1, 2, 1, 1);
    for (int i = -40; i <= 40; ++i) {
        const Rational x = make_rational(i, 10);
        if (x == 1 || x == 2) continue;
        ExactChainVerdict e = minimal_parameters_exact(c, QuadraticSurd(x));
        ChainVerdict n = minimal_parameters(alpha_sequence(c, to_double(x), 3000), 3000);
        CAPTURE(i);
        CHECK(e.chain == n.chain());
    }
}

TEST_CASE("support_interval") {
    SupportCertificate cat = support_interval(1, 2, 1, 1);
    CHECK(cat.interval == Interval{QuadraticSurd(0), QuadraticSurd(4)});
    CHECK(cat.stieltjes);
    REQUIRE(cat.initial_parameter);
    CHECK(*cat.initial_parameter == QuadraticSurd(0));
    CHECK(cat.initial_parameter_in_range());

    SupportCertificate del = support_interval(3, 3, 4, 2);
    CHECK(del.interval == centered_interval(3, 2));
    CHECK(del.q_below_upper);
    CHECK(del.stieltjes);

    SupportCertificate mot = support_interval(1, 1, 1, 1);
    CHECK(mot.interval == Interval{QuadraticSurd(-1), QuadraticSurd(3)});
    CHECK_FALSE(mot.stieltjes);

    CHECK_THROWS_AS(support_interval(0, 2, 1, 1), HypothesisFailure);
    bool thrown = false;
    try {
        support_interval(-5, 2, 9, 9);
    } catch (const HypothesisFailure& e) {
        thrown = true;
        CHECK(e.failed().size() == 3);
    }
    CHECK(thrown);
    CHECK_THROWS_AS(evaluate_support(1, 2, -1, 1), NotPositiveCase);
    // boundary decided exactly: q = s + 2 sqrt(t) fails the strict inequality
    CHECK_FALSE(evaluate_support(1, 2, 4, 1).q_below_upper);
}

TEST_CASE("certify_support") {
    SupportReport c = certify_support(make_spec(1, 2, 1, 1), 100);
    CHECK(c.pass());
    CHECK(c.lower.numeric.chain());
    CHECK(c.upper.numeric.chain());
    CHECK(c.explicit_parameters_ok);
    CHECK_FALSE(c.displayed_parameters_ok);

    SupportReport h = certify_support(make_spec(3, 3, 1, 1), 100);
    CHECK(h.pass());
    CHECK(h.certificate.interval == Interval{QuadraticSurd(1), QuadraticSurd(5)});

    EndpointCheck interior = check_endpoint(make_spec(1, 2, 1, 1), QuadraticSurd(make_rational(1, 2)),
                                            Side::lower, 100);
    CHECK_FALSE(interior.pass());
    CHECK_FALSE(interior.numeric.chain());

    CHECK_THROWS_AS(certify_support(make_spec(0, 2, 1, 1), 50), HypothesisFailure);
    CHECK_THROWS_AS(certify_support(SigmaTauSpec({1, 2}, 2, {1}, 1), 50), InvalidArgument);
}

TEST_CASE("explicit parameters for every spec meeting the hypotheses") {
    for (const auto& name : catalog_names()) {
        const auto sh = catalog_spec(name).shorthand();
        SupportCertificate cert = evaluate_support(sh->p, sh->s, sh->q, sh->t);
        if (!cert.hypotheses_ok()) continue;
        CAPTURE(name);
        const SigmaTauSpec spec = catalog_spec(name);
        auto a = alpha_sequence(spec, cert.interval.lower_approx(), 60);
        std::vector<double> g(a.size() + 1, 0.5);
        g[0] = cert.initial_parameter->approx();
        CHECK(std::abs(a[0] - (1 - g[0]) * 0.5) < 1e-12);
        CHECK(is_chain_with_parameters(a, g) == cert.initial_parameter_in_range());
        CHECK(cert.initial_parameter_in_range() == (name != "schroder_little"));
        // read literally, (g_0, 1/4, 1/4, ...) never satisfies the definition
        std::fill(g.begin() + 1, g.end(), 0.25);
        CHECK_FALSE(is_chain_with_parameters(a, g));
    }
}
