#include "momentlab/errors.hpp"
#include "momentlab/seqcore.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace momentlab;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("make_spec") {
    SigmaTauSpec c = make_spec(1, 2, 1, 1);
    CHECK(c.s(0) == 1);
    CHECK(c.s(1) == 2);
    CHECK(c.s(7) == 2);
    CHECK(c.t(1) == 1);
    CHECK(c.t(5) == 1);
    CHECK(c.positive_case());
    REQUIRE(c.shorthand());
    CHECK(c.shorthand()->s == 2);

    SigmaTauSpec d = make_spec(3, 3, 4, 2);
    CHECK(d.s(0) == 3);
    CHECK(d.t(1) == 4);
    CHECK(d.t(2) == 2);

    CHECK_THROWS_AS(make_spec(0, 0, 0, 1), ZeroTau);
    CHECK_THROWS_AS(make_spec(0, 0, 1, 0), ZeroTau);
    CHECK_FALSE(make_spec(0, 0, -1, 1).positive_case());
}

TEST_CASE("spec equality compares the infinite sequences") {
    SigmaTauSpec a(ints({1}), 2, ints({1}), 1);
    SigmaTauSpec b(ints({1, 2, 2}), 2, ints({1, 1}), 1);
    CHECK(a == b);
    CHECK_FALSE(a == make_spec(1, 2, 2, 1));
    CHECK_THROWS_AS(SigmaTauSpec(ints({1}), 2, ints({1, 0}), 1), ZeroTau);
    CHECK_FALSE(SigmaTauSpec(ints({1, 2}), 2, ints({1, 1}), 1).shorthand());
}

TEST_CASE("recursive matrix") {
    RecursiveMatrix r = recursive_matrix(make_spec(1, 2, 1, 1), 4);
    std::vector<Rational> col;
    for (std::size_t n = 0; n <= 4; ++n) col.push_back(r(n, 0));
    CHECK(col == ints({1, 1, 2, 5, 14}));
    CHECK(col == oracle::catalan(5));

    RecursiveMatrix m = recursive_matrix(make_spec(1, 1, 1, 1), 5);
    std::vector<Rational> mcol;
    for (std::size_t n = 0; n <= 5; ++n) mcol.push_back(m(n, 0));
    CHECK(mcol == ints({1, 1, 2, 4, 9, 21}));

    RecursiveMatrix trivial = recursive_matrix(make_spec(5, 7, 3, 2), 0);
    CHECK(trivial.order() == 0);
    CHECK(trivial(0, 0) == 1);
    CHECK(trivial(0, 3) == 0);
}

TEST_CASE("recursive matrix entries satisfy the recurrence") {
    for (const auto& name : catalog_names()) {
        const SigmaTauSpec spec = catalog_spec(name);
        const std::size_t N = 18;
        RecursiveMatrix r = recursive_matrix(spec, N);
        for (std::size_t n = 0; n <= N; ++n) {
            CHECK(r(n, n) == 1);
            CHECK(r(n, n + 1) == 0);
        }
        for (std::size_t n = 0; n < N; ++n) {
            for (std::size_t k = 0; k <= n + 1; ++k) {
                Rational expect = spec.s(k) * r(n, k) + spec.t(k + 1) * r(n, k + 1);
                if (k > 0) expect += r(n, k - 1);
                CHECK(r(n + 1, k) == expect);
            }
        }
    }
}

TEST_CASE("catalan_like examples") {
    CHECK(catalan_like(make_spec(2, 2, 2, 1), 4).values() == ints({1, 2, 6, 20, 70}));
    CHECK(catalan_like(make_spec(2, 3, 2, 2), 4).values() == ints({1, 2, 6, 22, 90}));
    CHECK(catalan_like(make_spec(3, 3, 1, 1), 2).values() == ints({1, 3, 10}));
    CHECK(catalan_like(make_spec(1, 2, 1, 1), 6).origin() == Origin::recursive_matrix);
}

TEST_CASE("catalog") {
    CHECK(catalog_names().size() == 11);
    auto riordan = catalog_sequence("riordan", 5);
    CHECK(riordan.spec == make_spec(0, 1, 1, 1));
    CHECK(riordan.sequence.values() == ints({1, 0, 1, 1, 3, 6}));
    CHECK(riordan.sequence.origin() == Origin::catalog);
    CHECK(riordan.sequence.label() == "riordan");

    CHECK(catalog_spec("fine") == make_spec(0, 2, 1, 1));
    CHECK(catalog_sequence("catalan", 0).sequence.values() == ints({1}));
    CHECK_THROWS_AS(catalog_spec("bell"), UnknownName);
    CHECK_THROWS_AS(catalog_sequence("", 3), UnknownName);
}

TEST_CASE("catalog matches independent closed forms") {
    for (const auto& [name, f] : oracle::catalog()) {
        CAPTURE(name);
        CHECK(catalog_sequence(name, 29).sequence.values() == f(30));
        const auto& pr = oracle::catalog_params().at(name);
        CHECK(catalog_spec(name) == make_spec(pr.p, pr.s, pr.q, pr.t));
    }
}

TEST_CASE("shifted Catalan is the Catalan numbers moved by one") {
    const auto c = catalog_sequence("catalan", 21).sequence;
    const auto sc = catalog_sequence("shifted_catalan", 20).sequence;
    for (std::size_t n = 0; n <= 20; ++n) CHECK(sc[n] == c[n + 1]);
}

TEST_CASE("Sequence basics") {
    CHECK_THROWS_AS(Sequence({}), InvalidArgument);
    Sequence y(ints({1, 2, 3}), "abc");
    CHECK(y.size() == 3);
    CHECK(y.origin() == Origin::external);
    CHECK_NOTHROW(y.require(3));
    CHECK_THROWS_AS(y.require(4), InsufficientData);
    try {
        y.require(9);
    } catch (const InsufficientData& e) {
        CHECK(e.needed() == 9);
        CHECK(e.available() == 3);
    }
    CHECK(to_string(Origin::recursive_matrix) == "recursive-matrix");
}
