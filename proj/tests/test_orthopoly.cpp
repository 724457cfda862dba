#include "momentlab/errors.hpp"
#include "momentlab/hankel.hpp"
#include "momentlab/orthopoly.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace momentlab;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

Sequence interleaved(std::size_t count) {
    std::vector<Rational> v(count, Rational(0));
    const auto c = oracle::catalan(count / 2 + 1);
    for (std::size_t n = 0; n < count; n += 2) v[n] = c[n / 2];
    return Sequence(v, "interleaved");
}

}  // namespace

TEST_CASE("ops_from_recurrence") {
    auto c = ops_from_recurrence(make_spec(1, 2, 1, 1), 2);
    REQUIRE(c.size() == 3);
    CHECK(c[0].polynomial() == Polynomial{1});
    CHECK(c[1].polynomial() == Polynomial{-1, 1});
    CHECK(c[2].polynomial() == Polynomial{1, -3, 1});
    CHECK(ops_from_recurrence(make_spec(4, 5, 6, 7), 0).size() == 1);
    CHECK(ops_from_recurrence(make_spec(1, 1, 1, 1), 2)[2].polynomial() == Polynomial{0, -2, 1});
}

TEST_CASE("riesz functional") {
    Sequence y(ints({1, 1, 2, 5}));
    CHECK(riesz(y, Polynomial{1, -3, 1}) == 1 - 3 + 2);
    CHECK(riesz(y, Polynomial{}) == 0);
    CHECK_THROWS_AS(riesz(y, Polynomial::monomial(4)), InsufficientData);
}

TEST_CASE("recurrence_from_moments examples") {
    auto c = recurrence_from_moments(catalog_sequence("catalan", 19).sequence, 5);
    CHECK(c.sigma == ints({1, 2, 2, 2, 2}));
    CHECK(c.tau == ints({1, 1, 1, 1}));
    CHECK(c.t0 == 1);

    auto d = recurrence_from_moments(catalog_sequence("delannoy", 19).sequence, 4);
    CHECK(d.sigma == ints({3, 3, 3, 3}));
    CHECK(d.tau == ints({4, 2, 2}));
    CHECK(d.as_spec() == make_spec(3, 3, 4, 2));

    auto i = recurrence_from_moments(interleaved(10), 3);
    CHECK(i.sigma == ints({0, 0, 0}));
    CHECK(i.tau == ints({1, 1}));

    CHECK_THROWS_AS(recurrence_from_moments(Sequence(ints({1, 1, 1, 1, 1, 1})), 2), QuasiDefiniteFailure);
    CHECK_THROWS_AS(recurrence_from_moments(catalog_sequence("catalan", 4).sequence, 3), InsufficientData);
}

TEST_CASE("recovered t_{k+1} matches the Hankel determinant formula") {
    for (const auto& name : catalog_names()) {
        const Sequence y = catalog_sequence(name, 24).sequence;
        auto rec = recurrence_from_moments(y, 10);
        for (std::size_t k = 0; k + 1 < 10; ++k) {
            const Rational prev = k == 0 ? Rational(1) : hankel_det(y, k - 1);
            const Rational expect = prev * hankel_det(y, k + 1) / (hankel_det(y, k) * hankel_det(y, k));
            CHECK(rec.tau[k] == expect);
        }
    }
}

TEST_CASE("round trip through moments") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const SigmaTauSpec spec = catalog_spec(name);
        const Sequence y = catalan_like(spec, 24);
        auto rec = recurrence_from_moments(y, 12);
        for (std::size_t k = 0; k < 12; ++k) CHECK(rec.sigma[k] == spec.s(k));
        for (std::size_t k = 1; k < 12; ++k) CHECK(rec.tau[k - 1] == spec.t(k));
    }
}

TEST_CASE("ops_determinantal") {
    const Sequence c = catalog_sequence("catalan", 12).sequence;
    CHECK(ops_determinantal(c, 0).polynomial() == Polynomial{1});
    CHECK(ops_determinantal(c, 1).polynomial() == Polynomial{-1, 1});
    CHECK(ops_determinantal(c, 2).polynomial() == Polynomial{1, -3, 1});
    CHECK_THROWS_AS(ops_determinantal(Sequence(ints({1, 1, 1, 1, 1, 1})), 2), QuasiDefiniteFailure);
}

TEST_CASE("determinantal and recurrence routes agree") {
    for (const auto& name : catalog_names()) {
        const SigmaTauSpec spec = catalog_spec(name);
        const Sequence y = catalan_like(spec, 14);
        const auto ops = ops_from_recurrence(spec, 6);
        for (std::size_t n = 0; n <= 6; ++n) CHECK(ops_determinantal(y, n) == ops[n]);
    }
}

TEST_CASE("orthogonality under the Riesz functional") {
    for (const auto& name : catalog_names()) {
        const SigmaTauSpec spec = catalog_spec(name);
        const Sequence y = catalan_like(spec, 20);
        const auto ops = ops_from_recurrence(spec, 10);
        for (std::size_t m = 0; m <= 10; ++m)
            for (std::size_t n = 0; n <= 10; ++n) {
                if (m + n > 20) continue;
                const Rational v = riesz(y, ops[m].polynomial() * ops[n].polynomial());
                if (m != n) CHECK(v == 0);
                else CHECK(v > 0);
            }
    }
}

TEST_CASE("ops_zeros") {
    const SigmaTauSpec c = make_spec(1, 2, 1, 1);
    auto z1 = ops_zeros(c, 1);
    REQUIRE(z1.size() == 1);
    CHECK(z1[0] == doctest::Approx(1.0));
    auto z2 = ops_zeros(c, 2);
    CHECK(z2[0] == doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-13));
    CHECK(z2[1] == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-13));
    auto m2 = ops_zeros(make_spec(1, 1, 1, 1), 2);
    CHECK(std::abs(m2[0]) < 1e-13);
    CHECK(m2[1] == doctest::Approx(2.0));
    CHECK_THROWS_AS(ops_zeros(make_spec(0, 0, -1, 1), 3), NotPositiveCase);
    CHECK_THROWS_AS(ops_zeros(c, 0), InvalidArgument);
}

TEST_CASE("zeros are roots of the exact polynomial and interlace") {
    for (const auto& name : catalog_names()) {
        const SigmaTauSpec spec = catalog_spec(name);
        const auto ops = ops_from_recurrence(spec, 12);
        for (std::size_t n = 1; n <= 12; ++n) {
            const auto z = ops_zeros(spec, n);
            for (double x : z) {
                const double scale = ops[n].polynomial().magnitude(std::max(1.0, std::abs(x)));
                CHECK(std::abs(ops[n].evaluate(x)) <= 1e-9 * scale);
            }
            if (n < 12) {
                const auto next = ops_zeros(spec, n + 1);
                for (std::size_t i = 0; i < n; ++i) {
                    CHECK(next[i] < z[i] + 1e-9);
                    CHECK(z[i] < next[i + 1] + 1e-9);
                }
            }
        }
    }
}

TEST_CASE("true_interval_estimate") {
    ZeroSpan c2 = true_interval_estimate(make_spec(1, 2, 1, 1), 2);
    CHECK(c2.lower == doctest::Approx(0.381966).epsilon(1e-6));
    CHECK(c2.upper == doctest::Approx(2.618034).epsilon(1e-6));
    ZeroSpan c50 = true_interval_estimate(make_spec(1, 2, 1, 1), 50);
    CHECK(c50.lower > 0.0);
    CHECK(c50.upper < 4.0);
    CHECK(c50.lower < 0.05);
    CHECK(c50.upper > 3.95);
    ZeroSpan m50 = true_interval_estimate(make_spec(1, 1, 1, 1), 50);
    CHECK(m50.lower > -1.0);
    CHECK(m50.upper < 3.0);
    // widens with n
    double lo = 1e9, hi = -1e9;
    for (std::size_t n = 1; n <= 30; ++n) {
        ZeroSpan s = true_interval_estimate(make_spec(1, 2, 1, 1), n);
        CHECK(s.lower <= lo + 1e-12);
        CHECK(s.upper >= hi - 1e-12);
        lo = s.lower;
        hi = s.upper;
    }
}

TEST_CASE("Jacobi matrix") {
    JacobiMatrix j = jacobi_matrix(make_spec(3, 3, 4, 2), 3);
    CHECK(j.order() == 3);
    CHECK(j.diagonal == std::vector<double>{3, 3, 3});
    CHECK(j.off_diagonal[0] == doctest::Approx(2.0));
    CHECK(j.off_diagonal[1] == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(jacobi_matrix(make_spec(0, 0, -1, 1), 2), NotPositiveCase);
}
