#include <doctest.h>

#include <random>

#include "kwall/gitslope.hpp"

using namespace kwall;
using namespace kwall::gitslope;

namespace {

QPoint qpoint(std::initializer_list<std::pair<int, long>> f6, std::initializer_list<std::pair<int, long>> f10) {
    QPoint q;
    for (auto& c : q.f6) c = 0;
    for (auto& c : q.f10) c = 0;
    for (auto [k, v] : f6) q.f6[k] = v;
    for (auto [k, v] : f10) q.f10[k] = v;
    return q;
}

LPoint lpoint(long a, long b, long c) { return {{Rational(a), Rational(b), Rational(c)}}; }

}  // namespace

TEST_CASE("state intervals") {
    CHECK(state_interval(qpoint({{0, 1}}, {})) == Interval{6, 6});
    CHECK(state_interval(qpoint({{0, 1}, {1, 1}}, {})) == Interval{-6, 6});
    CHECK(state_interval(lpoint(0, 1, 0)) == Interval{0, 0});
    CHECK(state_interval(qpoint({}, {{0, 3}, {10, 1}})) == Interval{-5, 5});
    CHECK_THROWS_AS(state_interval(qpoint({}, {})), Error);
    CHECK_THROWS_AS(state_interval(lpoint(0, 0, 0)), Error);
}

TEST_CASE("worked examples") {
    Rational a = make_rational(1, 3), b = make_rational(2, 7);
    CHECK(git_status(qpoint({{0, 1}, {1, 1}}, {}), lpoint(0, 1, 0), a, b) == GitStatus::Stable);
    CHECK(git_status(qpoint({{0, 1}}, {}), lpoint(0, 1, 0), a, b) == GitStatus::Unstable);
    // y^6 with x^5y^5, L = x^2: I = [2b - 6a, 2b]
    auto q = qpoint({{1, 1}}, {{5, 4}});
    CHECK(git_status(q, lpoint(1, 0, 0), 1, 2) == GitStatus::Stable);
    CHECK(git_status(q, lpoint(1, 0, 0), 1, 3) == GitStatus::StrictlySemistable);
    CHECK(git_status(q, lpoint(1, 0, 0), 1, 4) == GitStatus::Unstable);
    CHECK(git_status(qpoint({}, {{5, 1}}), lpoint(0, 1, 0), 1, 1) == GitStatus::PolystableStrict);
    CHECK_THROWS_AS(git_status(q, lpoint(1, 0, 0), 0, 1), Error);
}

TEST_CASE("fiber dimensions") {
    CHECK(eplus_fiber_dim(Side::Plus) == 12);
    CHECK(eplus_fiber_dim(Side::Minus) == 0);
    CHECK(fiber_dims_consistent());
}

TEST_CASE("GIT properties on random inputs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coin(0, 3), val(-3, 3), pos(1, 9);
    for (int trial = 0; trial < 2000; ++trial) {
        QPoint q = qpoint({}, {});
        for (auto& c : q.f6) c = coin(rng) ? 0 : val(rng);
        for (auto& c : q.f10) c = coin(rng) ? 0 : val(rng);
        LPoint l = lpoint(coin(rng) % 2 ? 0 : val(rng), coin(rng) % 2 ? 0 : val(rng), val(rng));
        bool qz = true, lz = true;
        for (auto& c : q.f6) qz &= c == 0;
        for (auto& c : q.f10) qz &= c == 0;
        for (auto& c : l.lambda) lz &= c == 0;
        if (qz || lz) continue;
        Rational a = make_rational(pos(rng), pos(rng)), b = make_rational(pos(rng), pos(rng));
        auto s = git_status(q, l, a, b);
        CHECK(git_status(q, l, a * 7, b * 7) == s);
        // scaling the points
        QPoint q2 = q;
        for (auto& c : q2.f6) c *= -2;
        for (auto& c : q2.f10) c *= make_rational(3, 5);
        CHECK(git_status(q2, l, a, b) == s);
        // swap x and y
        QPoint qs = q;
        std::swap(qs.f6[0], qs.f6[1]);
        for (int k = 0; k <= 10; ++k) qs.f10[k] = q.f10[10 - k];
        LPoint ls{{l.lambda[2], l.lambda[1], l.lambda[0]}};
        CHECK(git_status(qs, ls, a, b) == s);
        if (s == GitStatus::Stable) CHECK(is_polystable(s));
        if (is_polystable(s)) CHECK(is_semistable(s));
    }
}

TEST_CASE("point parsing") {
    auto q = parse_qpoint_json(R"({"f6": ["1", "0"], "f10": ["0","0","0","0","0","1/2","0","0","0","0","0"]})");
    CHECK(q.f10[5] == make_rational(1, 2));
    CHECK_THROWS_AS(parse_qpoint_json(R"({"f6": ["1"], "f10": []})"), Error);
    CHECK_THROWS_AS(parse_qpoint_json("{"), Error);
    CHECK(parse_lpoint("0,1,0").lambda[1] == 1);
    CHECK_THROWS_AS(parse_lpoint("1,2"), Error);
}
