#include <doctest.h>

#include <random>

#include "kwall/curvealg.hpp"

using namespace kwall;
using namespace kwall::curvealg;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};

Rational q(long n, long d = 1) { return make_rational(n, d); }

SparsePoly random_poly(std::mt19937& rng, int max_deg, int terms) {
    std::uniform_int_distribution<int> ex(0, max_deg), co(-5, 5);
    SparsePoly p(XYZ);
    for (int i = 0; i < terms; ++i) {
        Exponent e{ex(rng), ex(rng), ex(rng)};
        while (e[0] + e[1] + e[2] > max_deg) e[rng() % 3] /= 2;
        p.add_term(e, q(co(rng), 1 + rng() % 3));
    }
    return p;
}

ChartValuation chart(const std::string& s, int k, std::vector<Rational> w) { return {s, k, std::move(w), {}}; }

}  // namespace

TEST_CASE("sparse polynomial arithmetic") {
    auto x = SparsePoly::variable(XYZ, "x"), y = SparsePoly::variable(XYZ, "y");
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x - x).is_zero());
    CHECK(((x + y).pow(3)).coeff({2, 1, 0}) == 3);
    CHECK((x * x - y.pow(6) * q(1, 2)).to_string() == "x^2-1/2*y^6");
    CHECK_THROWS_AS(x.var_index("t"), Error);
}

TEST_CASE("substitute") {
    auto x = SparsePoly::variable(XYZ, "x"), y = SparsePoly::variable(XYZ, "y");
    CHECK(substitute(x * x, "x", x) == x * x);
    CHECK(substitute(x - y * y, "x", x + y * y) == x);
    CHECK_THROWS_AS(substitute(x, "t", x), Error);

    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i) {
        auto p = random_poly(rng, 8, 5), r = random_poly(rng, 8, 5), s = random_poly(rng, 3, 3);
        CHECK(substitute(p + r, "x", s) == substitute(p, "x", s) + substitute(r, "x", s));
        CHECK(substitute(p * r, "y", s) == substitute(p, "y", s) * substitute(r, "y", s));
    }
}

TEST_CASE("A12 quintic under the 6-jet") {
    auto Q = q2_quintic().set_one("z");
    auto jet = q2_jet();
    auto P = substitute(Q, "x", SparsePoly::variable(XYZ, "x") + jet.shift);
    std::vector<Rational> w{13, 2, 0};
    CHECK(weighted_order(P, w) == 26);
    auto init = initial_part(P, w);
    CHECK(init.coeff({2, 0, 0}) == 1);
    CHECK(init.coeff({0, 13, 0}) != 0);
    CHECK(init.terms().size() == 2);
}

TEST_CASE("ord_along") {
    auto Q = generic_curve("p2", {{0, 5, 0}, {4, 0, 1}});
    CHECK(ord_along(chart("p2", 2, {5, 4, 0}), Q) == 20);
    CHECK(ord_along(chart("p2", 2, {5, 4, 0}), generic_curve("p2", {{0, 0, 1}})) == 0);
    CHECK(ord_along(chart("p1425", 0, {0, 1, 6}), generic_curve("p1425", {{0, 0, 2}, {2, 12, 0}})) == 12);

    ChartValuation jet{"p2", 2, {13, 2, 0}, {q2_jet()}};
    CHECK(ord_along(jet, generic_curve("p2", {{1, 0, 0}})) == 4);
    CHECK(ord_along(jet, explicit_curve("p2", q2_quintic())) == 26);
    CHECK(ord_along(jet, explicit_curve("p2", SparsePoly::variable(XYZ, "y").pow(2) -
                                                  SparsePoly::variable(XYZ, "x") * SparsePoly::variable(XYZ, "z"))) == 10);
    CHECK_THROWS_AS(ord_along(jet, generic_curve("p114", {{2, 0, 0}})), Error);
    CHECK_THROWS_AS(generic_curve("p2", {{1, 0, 0}, {0, 2, 0}}), Error);

    // generic order is a lower bound for explicit orders on the same support
    auto expl = explicit_curve("p2", SparsePoly::monomial(XYZ, {0, 2, 0}) - SparsePoly::monomial(XYZ, {1, 0, 1}));
    auto gen = generic_curve("p2", {{0, 2, 0}, {1, 0, 1}});
    CHECK(ord_along(jet, gen) <= ord_along(jet, expl));

    // additivity and homogeneity
    auto two = Q + generic_curve("p2", {{1, 0, 0}}, 2);
    auto v = chart("p2", 2, {5, 4, 0});
    CHECK(ord_along(v, two) == 20 + 2 * 5);
    CHECK(ord_along(chart("p2", 2, {15, 12, 0}), Q) == 3 * ord_along(v, Q));
}

TEST_CASE("invariance_weights") {
    CHECK(invariance_weights({{0, 5}}, {{4, 0}}) == std::vector<LatticePoint>{{5, 4}});
    CHECK(invariance_weights({{1, 2}}, {{10, 0}}) == std::vector<LatticePoint>{{2, 9}});
    CHECK(invariance_weights({{1, 0}}, {{1, 0}}).empty());
}
