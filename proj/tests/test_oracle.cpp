#include <doctest.h>

#include "kwall/oracle.hpp"

using namespace kwall;
using namespace kwall::oracle;

TEST_CASE("graded dimensions") {
    CHECK(graded_dim("p2", 1) == 10);
    CHECK(graded_dim("p114", 1) == 10);
    CHECK(graded_dim("x26", 1) == 10);
    for (long m = 1; m <= 10; ++m) {
        CHECK(graded_dim("x26", m) == (3 * m + 1) * (3 * m + 2) / 2);
        for (const char* s : {"p2", "p114", "p1425"})
            CHECK(graded_dim(s, m) == toric::lattice_point_count(toric::surface(s), m));
    }
    CHECK_THROWS_AS(graded_dim("p2", 0), Error);
    CHECK_THROWS_AS(graded_dim("p2", 201), Error);
    for (const auto& e : section_basis("x26", 3).basis) {
        CHECK(e[2] <= 1);
        CHECK(e[0] + 2 * e[1] + 13 * e[2] + 25 * e[3] == 45);
    }
}

TEST_CASE("filtered dimensions") {
    auto v = kstab::catalog_valuation("x26:quotient");
    CHECK(filtered_dim("x26", v, 1, 0) == 10);
    // basis: x^(15-2b) y^b (b <= 7), x^2 z, y z. Only y z has order 15/25 < 26/25.
    CHECK(filtered_dim("x26", v, 1, make_rational(26, 25)) == 9);
    CHECK(filtered_dim("x26", v, 1, 1000) == 0);
    Rational prev_t = 0;
    long prev = filtered_dim("x26", v, 4, 0);
    for (long k = 1; k <= 40; ++k) {
        Rational t = make_rational(k, 2);
        long f = filtered_dim("x26", v, 4, t);
        CHECK(f <= prev);
        prev = f;
    }
    CHECK_THROWS_AS(filtered_dim("p2", v, 1, 0), Error);
}

TEST_CASE("monomial S estimates converge") {
    auto blow = named_valuation("p2", "blowup");
    for (long m : {1, 5, 10}) CHECK(s_estimate("p2", blow, m) == 2);
    auto x26 = named_valuation("x26", "blowup");
    auto p1425 = named_valuation("p1425", "blowup");
    CHECK(p1425.S_X == make_rational(4, 5));
    // these approach the limit from above
    for (const auto* v : {&x26, &p1425}) {
        Rational last = 1000;
        for (long m : {5, 10, 20, 40}) {
            Rational s = s_estimate(v->surface, *v, m);
            CHECK(s <= last);
            CHECK(s > v->S_X);
            last = s;
        }
        CHECK(to_double(abs(Rational((last - v->S_X) / v->S_X))) <= 0.05);
    }
}

TEST_CASE("volume estimates") {
    auto blow = named_valuation("p2", "blowup");
    CHECK(vol_estimate("p2", blow, 0, 20) == make_rational(2 * graded_dim("p2", 20), 400));
    CHECK(to_double(vol_estimate("p2", blow, 0, 60)) == doctest::Approx(9).epsilon(0.06));
    // only the 3m+1 sections with i + j = 3m reach order 3m
    for (long m : {10, 30, 60}) CHECK(vol_estimate("p2", blow, 3, m) == make_rational(2 * (3 * m + 1), m * m));
}

TEST_CASE("jet oracle: modular rank profile agrees with exact elimination") {
    auto v = kstab::p2_jet_valuation();
    for (long m = 1; m <= 3; ++m) CHECK(jet_pivot_weights_modular(v, m) == jet_pivot_weights_exact(v, m));
    // monomials alone would give orders 4i + 2j; the jet raises the top orders
    auto w = jet_pivot_weights_exact(v, 2);
    CHECK(*std::max_element(w.begin(), w.end()) > 4 * 6);
}

TEST_CASE("jet oracle approaches 51/5") {
    auto v = kstab::p2_jet_valuation();
    Rational last = 0;
    for (long m : {4, 8, 16}) {
        Rational s = s_estimate("p2", v, m);
        CHECK(s >= last);
        CHECK(s < v.S_X);
        last = s;
    }
    CHECK(vol_estimate("p2", v, make_rational(78, 5), 16) < make_rational(1, 5));
}
