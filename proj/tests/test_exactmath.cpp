#include <doctest.h>

#include <random>

#include "kwall/exactmath.hpp"

using namespace kwall;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<HalfPlane> p2_anticanonical() {
    // <m,(1,0)> >= -1, <m,(0,1)> >= -1, <m,(-1,-1)> >= -1
    return {HalfPlane(1, 0, -1), HalfPlane(0, 1, -1), HalfPlane(-1, -1, -1)};
}

std::vector<HalfPlane> edges_to_halfplanes(const Polygon& p) {
    std::vector<HalfPlane> hs;
    const auto& v = p.vertices;
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        // inward normal of a ccw edge
        Rational nx = -(b.y - a.y), ny = b.x - a.x;
        hs.emplace_back(nx, ny, nx * a.x + ny * a.y);
    }
    return hs;
}

Rational riemann(const std::vector<HalfPlane>& hs, const Rational& t0, const Rational& t1, int n) {
    Rational h = (t1 - t0) / n, s = 0;
    for (int i = 0; i < n; ++i) s += slice_area(hs, t0 + h * (2 * i + 1) / 2);
    return s * h;
}

}  // namespace

TEST_CASE("rational formatting and parsing") {
    CHECK(to_string(q(6, 4)) == "3/2");
    CHECK(to_string(q(-4, 2)) == "-2");
    CHECK(parse_rational("-10/4") == q(-5, 2));
    CHECK(parse_rational(" 7 ") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(floor_of(q(-7, 2)) == -4);
    CHECK(ceil_of(q(-7, 2)) == -3);
}

TEST_CASE("rational field axioms on random triples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 500; ++i) {
        Rational a = q(num(rng), den(rng)), b = q(num(rng), den(rng)), c = q(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(mpz_class(gcd(a.get_num(), a.get_den())) == 1);
        CHECK(a.get_den() > 0);
    }
}

TEST_CASE("line normalization and display") {
    CHECK(display_line(normalize_line({q(63, 2), q(-115, 2), q(-11, 2)})) == "115a+11b=63");
    CHECK(display_line(normalize_line({0, 5, -3})) == "3b=5a");
    CHECK(display_line(normalize_line({0, 1, -1})) == "a=b");
    CHECK(display_line(normalize_line({0, -2, 1})) == "b=2a");
    CHECK(display_line(normalize_line({q(5, 2), q(-35, 6), q(17, 6)})) == "35a-17b=15");
    CHECK(display_line(normalize_line({-3, 7, -1})) == "7a-b=3");
    for (const char* s : {"115a+11b=63", "3b=5a", "a=b", "7b=a", "35a-17b=15", "15a+b=8", "7a-b=3"})
        CHECK(display_line(parse_line(s)) == s);
    CHECK(parse_line("5a = 3b") == parse_line("3b=5a"));
    CHECK_THROWS_AS(normalize_line({1, 0, 0}), Error);
}

TEST_CASE("lattice points") {
    LatticePoint p{6, -4};
    CHECK(p.primitive() == LatticePoint{3, -2});
    CHECK(p.primitive().primitive() == p.primitive());
    CHECK(det({1, 0}, {0, 1}) == 1);
}

TEST_CASE("polygon_from_halfplanes") {
    auto simplex = polygon_from_halfplanes({HalfPlane(1, 0, 0), HalfPlane(0, 1, 0), HalfPlane(-1, -1, -1)});
    REQUIRE(simplex);
    CHECK(simplex->vertices.size() == 3);
    CHECK(polygon_area(*simplex) == q(1, 2));

    CHECK_FALSE(polygon_from_halfplanes({HalfPlane(1, 0, 0), HalfPlane(0, 1, 0), HalfPlane(-1, 0, 1)}));
    // a segment has zero area
    CHECK_FALSE(polygon_from_halfplanes({HalfPlane(1, 0, 0), HalfPlane(-1, 0, 0), HalfPlane(0, 1, 0), HalfPlane(0, -1, -1)}));
    // a ray-shaped or line-shaped region has zero area too
    CHECK_FALSE(polygon_from_halfplanes({HalfPlane(1, 0, 0), HalfPlane(-1, 0, 0)}));
    CHECK_FALSE(polygon_from_halfplanes({HalfPlane(1, 0, 0), HalfPlane(-1, 0, 0), HalfPlane(0, 1, 0)}));

    CHECK_THROWS_AS(polygon_from_halfplanes({HalfPlane(1, 0, 0), HalfPlane(0, 1, 0)}), Error);
    CHECK_THROWS_AS(polygon_from_halfplanes({HalfPlane(1, 0, 0), HalfPlane(-1, 0, -1)}), Error);

    auto tri = polygon_from_halfplanes(p2_anticanonical());
    REQUIRE(tri);
    CHECK(polygon_area(*tri) == q(9, 2));

    // redundant constraints and collinear candidate vertices
    auto sq = polygon_from_halfplanes({HalfPlane(1, 0, 0), HalfPlane(0, 1, 0), HalfPlane(-1, 0, -2), HalfPlane(0, -1, -2),
                                       HalfPlane(-1, -1, -4), HalfPlane(1, 1, 0)});
    REQUIRE(sq);
    CHECK(sq->vertices.size() == 4);
    CHECK(polygon_area(*sq) == 4);
}

TEST_CASE("polygon re-derivation from edges reproduces vertices") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> c(-9, 9);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        std::vector<Point2> pts;
        for (int k = 0; k < 6; ++k) pts.push_back({q(c(rng), 1 + (c(rng) + 9) % 4), q(c(rng))});
        auto hull = convex_hull(pts);
        if (hull.size() < 3) continue;
        Polygon p{hull};
        auto back = polygon_from_halfplanes(edges_to_halfplanes(p));
        REQUIRE(back);
        auto a = p.vertices, b = back->vertices;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("polygon area is invariant under unimodular maps and translation") {
    auto tri = *polygon_from_halfplanes(p2_anticanonical());
    for (auto [m00, m01, m10, m11] : {std::array<long, 4>{1, 1, 0, 1}, {2, 1, 1, 1}, {0, -1, 1, 0}, {3, 5, 1, 2}}) {
        Polygon t;
        for (const auto& v : tri.vertices) t.vertices.push_back({m00 * v.x + m01 * v.y + q(1, 3), m10 * v.x + m11 * v.y - 7});
        t.vertices = convex_hull(t.vertices);
        CHECK(polygon_area(t) == q(9, 2));
    }
}

TEST_CASE("integrate_parametric_area") {
    // P^2 blown up at a smooth point: rays (1,0),(0,1),(-1,-1), E along (1,1)
    auto hs = p2_anticanonical();
    hs.emplace_back(1, 1, -2, 1);
    CHECK(integrate_parametric_area(hs, 0, q(3)) == 9);  // half of 9 - t^2 integrates to 9
    CHECK(2 * integrate_parametric_area(hs, 0, q(3)) == 18);
    CHECK(2 * integrate_parametric_area(hs, 0, std::nullopt) == 18);

    // constant family
    std::vector<HalfPlane> unit{HalfPlane(1, 0, 0), HalfPlane(0, 1, 0), HalfPlane(-1, -1, -1)};
    CHECK(integrate_parametric_area(unit, 0, q(1)) == q(1, 2));

    // (5,3)-weighted blowup of [0:0:1]: valuation point 5*(1,0) + 3*(0,1)
    auto w = p2_anticanonical();
    w.emplace_back(5, 3, -8, 1);
    CHECK(2 * integrate_parametric_area(w, 0, std::nullopt) == 72);

    // additivity
    CHECK(integrate_parametric_area(w, 0, q(4)) + integrate_parametric_area(w, q(4), q(11)) ==
          integrate_parametric_area(w, 0, q(11)));

    // Riemann-sum agreement
    for (const auto* fam : {&hs, &w}) {
        Rational top = fam == &hs ? q(3) : q(15);
        Rational exact = integrate_parametric_area(*fam, 0, top);
        Rational est = riemann(*fam, 0, top, 10000);
        CHECK(abs(est - exact) / exact < q(1, 1000));
    }
}

TEST_CASE("slab growing linearly in t") {
    std::vector<HalfPlane> lin{HalfPlane(1, 0, 0), HalfPlane(-1, 0, 0, -1), HalfPlane(0, 1, 0), HalfPlane(0, -1, -1)};
    CHECK(integrate_parametric_area(lin, 0, q(2)) == 2);
    CHECK(integrate_parametric_area(lin, q(2), 0) == -2);
}
