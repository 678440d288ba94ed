#include <doctest.h>

#include <numeric>

#include "kwall/toric.hpp"

using namespace kwall;
using namespace kwall::toric;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("weighted projective fans") {
    for (const char* id : {"p2", "p114", "p1425"}) {
        const auto& X = surface(id);
        LatticePoint sum{0, 0};
        for (int k = 0; k < 3; ++k) {
            CHECK(X.rays[k].primitive() == X.rays[k]);
            sum.u += X.weights[k] * X.rays[k].u;
            sum.v += X.weights[k] * X.rays[k].v;
            CHECK(X.cone_index(k) == X.weights[k]);
        }
        CHECK(sum.is_zero());
    }
    const auto& P2 = surface("p2");
    CHECK(P2.rays[0] == LatticePoint{1, 0});
    CHECK(P2.rays[1] == LatticePoint{0, 1});
    CHECK(P2.rays[2] == LatticePoint{-1, -1});
    const auto& P1425 = surface("p1425");
    CHECK(abs(det(P1425.rays[0], P1425.rays[1])) == 25);
    CHECK_THROWS_AS(surface("p123"), Error);
    CHECK_THROWS_AS(wps_fan(2, 2, 1), Error);
}

TEST_CASE("log discrepancy and orders") {
    const auto& P2 = surface("p2");
    CHECK(log_discrepancy(P2, chart_valuation(P2, 2, 1, 1)) == 2);
    auto v54 = chart_valuation(P2, 2, 5, 4);
    CHECK(ord_on_invariant_divisor(P2, v54, 0) == 5);
    CHECK(ord_on_invariant_divisor(P2, v54, 2) == 0);

    const auto& P114 = surface("p114");
    auto sing = chart_valuation(P114, 2, 1, 1).primitive(P114);
    CHECK(log_discrepancy(P114, sing) == q(1, 2));
    CHECK(ord_on_invariant_divisor(P114, sing, 0) == q(1, 4));

    const auto& P1425 = surface("p1425");
    auto s25 = chart_valuation(P1425, 2, 1, 4).primitive(P1425);
    CHECK(log_discrepancy(P1425, s25) == q(1, 5));
}

TEST_CASE("anticanonical volumes and lattice points") {
    for (const char* id : {"p2", "p114", "p1425"}) {
        const auto& X = surface(id);
        CHECK(anticanonical_volume(X) == 9);
        for (long m = 1; m <= 10; ++m) CHECK(lattice_point_count(X, m) == (3 * m + 1) * (3 * m + 2) / 2);
    }
}

TEST_CASE("S invariants from the parametric polytope") {
    const auto& P2 = surface("p2");
    CHECK(s_invariant(P2, chart_valuation(P2, 2, 1, 1)) == 2);
    for (long n1 = 1; n1 <= 12; ++n1)
        for (long n2 = 1; n2 <= 12; ++n2)
            if (std::gcd(n1, n2) == 1) CHECK(s_invariant(P2, chart_valuation(P2, 2, n1, n2)) == n1 + n2);

    const auto& P114 = surface("p114");
    CHECK(s_invariant(P114, divisor_valuation(P114, 0)) == 2);
    CHECK(s_invariant(P114, divisor_valuation(P114, 1)) == 2);
    CHECK(s_invariant(P114, divisor_valuation(P114, 2)) == q(1, 2));
    CHECK(s_invariant(P114, chart_valuation(P114, 0, 1, 6)) == 5);
    for (long n1 = 1; n1 <= 12; ++n1)
        for (long n2 = 1; n2 <= 12; ++n2)
            if (std::gcd(n1, n2) == 1)
                CHECK(s_invariant(P114, chart_valuation(P114, 0, n1, n2)) == 2 * n1 + q(n2, 2));

    const auto& P1425 = surface("p1425");
    CHECK(s_invariant(P1425, divisor_valuation(P1425, 0)) == 10);
    CHECK(s_invariant(P1425, divisor_valuation(P1425, 1)) == q(5, 2));
    CHECK(s_invariant(P1425, divisor_valuation(P1425, 2)) == q(2, 5));
    CHECK(s_invariant(P1425, chart_valuation(P1425, 2, 1, 4).primitive(P1425)) == q(4, 5));
    for (long m1 = 1; m1 <= 12; ++m1)
        for (long m2 = 1; m2 <= 12; ++m2)
            if (std::gcd(m1, m2) == 1)
                CHECK(s_invariant(P1425, chart_valuation(P1425, 0, m1, m2)) == q(25 * m1 + 4 * m2, 10));
    // the [0:1:0] point valuation r_x + r_z
    auto v = make_valuation(P1425, {P1425.rays[0].u + P1425.rays[2].u, P1425.rays[0].v + P1425.rays[2].v});
    CHECK(log_discrepancy(P1425, v) == 2);
    CHECK(s_invariant(P1425, v) == q(52, 5));
}

TEST_CASE("homogeneity and positivity") {
    for (const char* id : {"p2", "p114", "p1425"}) {
        const auto& X = surface(id);
        for (long u = -6; u <= 6; u += 3)
            for (long w = -7; w <= 7; w += 2) {
                auto v = make_valuation(X, {u, w});
                Rational A = log_discrepancy(X, v), S = s_invariant(X, v);
                CHECK(A > 0);
                CHECK(S > 0);
                auto v3 = make_valuation(X, {3 * u, 3 * w});
                CHECK(log_discrepancy(X, v3) == 3 * A);
                CHECK(s_invariant(X, v3) == 3 * S);
            }
    }
}
