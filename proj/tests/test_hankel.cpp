#include "momentlab/errors.hpp"
#include "momentlab/hankel.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace momentlab;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

Sequence catalan(std::size_t n_max) { return catalog_sequence("catalan", n_max).sequence; }

// Catalan numbers at even positions, zeros in between.
Sequence interleaved(std::size_t count) {
    std::vector<Rational> v(count, Rational(0));
    const auto c = oracle::catalan(count / 2 + 1);
    for (std::size_t n = 0; n < count; n += 2) v[n] = c[n / 2];
    return Sequence(v, "interleaved");
}

SymMatrix sym(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> r;
    for (auto row : rows) r.push_back(ints(row));
    return SymMatrix::from_rows(r);
}

}  // namespace

TEST_CASE("hankel_matrix") {
    const Sequence c = catalan(10);
    CHECK(hankel_matrix(c, 1).rows() == oracle::hankel_rows(ints({1, 1, 2}), 1));
    CHECK(hankel_matrix(c, 1, 1) == sym({{1, 2}, {2, 5}}));
    CHECK(hankel_matrix(c, 0) == sym({{1}}));
    CHECK_THROWS_AS(hankel_matrix(Sequence(ints({1, 1})), 1), InsufficientData);
    CHECK_THROWS_AS(SymMatrix::from_rows({ints({1, 2}), ints({3, 4})}), InvalidArgument);
}

TEST_CASE("Catalan Hankel determinants are 1") {
    const Sequence c = catalan(30);
    for (std::size_t m = 0; m <= 12; ++m) CHECK(hankel_det(c, m) == 1);
    for (std::size_t m = 0; m <= 4; ++m) CHECK(oracle::cofactor_det(hankel_matrix(c, m).rows()) == 1);
}

TEST_CASE("hankel_det examples") {
    // moments of (delta_{-1} + delta_2)/2, shifted by one
    Sequence shifted(std::vector<Rational>{make_rational(1, 2), make_rational(5, 2), make_rational(7, 2)});
    CHECK(hankel_det(shifted, 1) == make_rational(-9, 2));
    CHECK(hankel_det(Sequence(ints({7})), 0) == 7);
    // central binomial: Delta_m = 2^m
    const Sequence b = catalog_sequence("central_binomial", 20).sequence;
    for (std::size_t m = 0; m <= 8; ++m) CHECK(hankel_det(b, m) == pow(Rational(2), m));
}

TEST_CASE("Bareiss agrees with cofactor expansion on random matrices") {
    std::mt19937 rng(20261016);
    std::uniform_int_distribution<int> entry(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 5;
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (auto& row : a)
            for (auto& x : row) x = make_rational(entry(rng), den(rng));
        if (trial % 7 == 0 && n > 1) a[n - 1] = a[0];  // singular
        CHECK(determinant(a) == oracle::cofactor_det(a));
    }
}

TEST_CASE("psd_status examples") {
    PsdVerdict pd = psd_status(sym({{1, 1}, {1, 2}}));
    CHECK(pd.status == PsdStatus::positive_definite);
    CHECK(pd.pivots.size() == 2);

    PsdVerdict singular = psd_status(sym({{1, 2}, {2, 4}}));
    CHECK(singular.status == PsdStatus::positive_semidefinite_singular);
    CHECK(singular.rank() == 1);

    SymMatrix m = SymMatrix::from_rows({{make_rational(1, 2), make_rational(5, 2)},
                                        {make_rational(5, 2), make_rational(7, 2)}});
    PsdVerdict bad = psd_status(m);
    CHECK(bad.status == PsdStatus::indefinite);
    CHECK(m.quadratic_form(bad.witness) < 0);

    // zero diagonal with nonzero coupling
    PsdVerdict zero_diag = psd_status(sym({{0, 1}, {1, 0}}));
    CHECK(zero_diag.status == PsdStatus::indefinite);
    CHECK(sym({{0, 1}, {1, 0}}).quadratic_form(zero_diag.witness) < 0);

    CHECK(psd_status(sym({{0, 0}, {0, 0}})).status == PsdStatus::positive_semidefinite_singular);
}

TEST_CASE("psd_status verdicts re-verify and agree with principal minors") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-3, 3);
    int counts[3] = {0, 0, 0};
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const std::size_t k = 1 + trial % 3;
        // Gram matrices B^T B are PSD (often singular when k < n); random
        // perturbations give indefinite ones.
        std::vector<std::vector<Rational>> b(k, std::vector<Rational>(n));
        for (auto& row : b)
            for (auto& x : row) x = entry(rng);
        SymMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Rational acc = 0;
                for (std::size_t r = 0; r < k; ++r) acc += b[r][i] * b[r][j];
                if (trial % 3 == 2) acc += entry(rng);
                m.set(i, j, acc);
            }
        const PsdVerdict v = psd_status(m);
        ++counts[static_cast<int>(v.status)];
        CHECK(verify_verdict(m, v));
        CHECK(v.psd() == principal_minors_nonneg(m));
    }
    CHECK(counts[0] > 10);
    CHECK(counts[1] > 10);
    CHECK(counts[2] > 10);
}

TEST_CASE("total positivity") {
    CHECK(total_positive_up_to(catalan(10), 3, 4).ok);
    Sequence alt(ints({1, -1, 1, -1, 1}));
    TotalPositivity tp = total_positive_up_to(alt, 1, 2);
    CHECK_FALSE(tp.ok);
    REQUIRE(tp.first_failure);
    CHECK(tp.first_failure->value < 0);
    CHECK(total_positive_up_to(Sequence(ints({1, 2, 3, 4, 5})), 2, 1).ok);
    CHECK_THROWS_AS(total_positive_up_to(catalan(30), 7, 2), InvalidArgument);
}

TEST_CASE("shift and localizing sequence") {
    Sequence y(ints({1, 1, 2, 5, 14}));
    CHECK(shift(y, 1).values() == ints({1, 2, 5, 14}));
    CHECK(shift(y, 0).values() == y.values());
    CHECK(shift(y, 2).values() == ints({2, 5, 14}));
    CHECK_THROWS_AS(shift(y, 5), InsufficientData);
    // [0,4]: 4 E y - E^2 y
    CHECK(localizing_sequence(y, 4, 0).values() == ints({4 - 2, 8 - 5, 20 - 14}));
}

TEST_CASE("hausdorff_test") {
    const Sequence c = catalan(20);
    CHECK(hausdorff_test(c, Rational(0), Rational(4), 3).pass());
    // [0,4] combination is H_m(4Ey - E^2 y)
    Sequence combo = localizing_sequence(c, 4, 0);
    for (std::size_t n = 0; n + 2 < c.size(); ++n) CHECK(combo[n] == 4 * c[n + 1] - c[n + 2]);

    const Sequence m = catalog_sequence("motzkin", 20).sequence;
    CHECK(hausdorff_test(m, Rational(-1), Rational(3), 3).pass());
    Sequence mcombo = localizing_sequence(m, 2, -3);
    for (std::size_t n = 0; n < mcombo.size(); ++n) CHECK(mcombo[n] == 3 * m[n] + 2 * m[n + 1] - m[n + 2]);

    CHECK_FALSE(hausdorff_test(c, Rational(0), Rational(3), 2).pass());
    CHECK_THROWS_AS(hausdorff_test(c, Rational(4), Rational(0), 2), InvalidArgument);
    CHECK_THROWS_AS(hausdorff_test(Sequence(ints({1, 1, 2, 5})), Rational(0), Rational(4), 1),
                    InsufficientData);

    const Sequence d = catalog_sequence("delannoy", 20).sequence;
    CHECK(hausdorff_test(d, centered_interval(3, 2), 5).pass());
}

TEST_CASE("classify") {
    MomentClassReport inter = classify(interleaved(12), 2);
    CHECK(inter.hamburger());
    CHECK_FALSE(inter.stieltjes());
    CHECK(inter.stieltjes_ok_up_to == 0);
    REQUIRE_FALSE(inter.failure_witnesses.empty());
    CHECK(inter.failure_witnesses[0].matrix == "H~");
    CHECK(inter.failure_witnesses[0].order == 1);
    // the 2x2 shifted Hankel determinant is -1, the 3x3 one vanishes
    CHECK(determinant(hankel_matrix(interleaved(12), 1, 1)) == -1);
    CHECK(determinant(hankel_matrix(interleaved(12), 2, 1)) == 0);

    MomentClassReport cat = classify(catalan(20), 5, Interval{QuadraticSurd(0), QuadraticSurd(4)});
    CHECK(cat.all_pass());
    CHECK(cat.delta_values == std::vector<Rational>(6, Rational(1)));

    Sequence two_atoms(std::vector<Rational>{1, make_rational(1, 2), make_rational(5, 2),
                                             make_rational(7, 2), make_rational(17, 2)});
    MomentClassReport h = classify(two_atoms, 1);
    CHECK(h.hamburger());
    CHECK_FALSE(h.stieltjes());

    CHECK_THROWS_AS(classify(catalan(5), 3), InsufficientData);
}

TEST_CASE("classification orders are nested") {
    for (const auto& name : catalog_names()) {
        const Sequence y = catalog_sequence(name, 30).sequence;
        MomentClassReport r = classify(y, 6, Interval{QuadraticSurd(0), QuadraticSurd(4)});
        CHECK(r.stieltjes_ok_up_to <= r.hamburger_ok_up_to);
        CHECK(*r.hausdorff_ok_up_to <= r.stieltjes_ok_up_to);
    }
}

TEST_CASE("catalog sequences are positive definite with positive recurrence data") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const Sequence y = catalog_sequence(name, 20).sequence;
        for (std::size_t m = 0; m <= 8; ++m) CHECK(hankel_det(y, m) > 0);
        CHECK(catalog_spec(name).positive_case());
    }
}
