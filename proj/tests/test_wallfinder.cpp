#include <doctest.h>

#include <set>

#include "kwall/serialize.hpp"
#include "kwall/wallfinder.hpp"

using namespace kwall;
using namespace kwall::wallfinder;

namespace {

std::set<std::string> displays(const std::vector<Wall>& ws) {
    std::set<std::string> out;
    for (const auto& w : ws) out.insert(w.display());
    return out;
}

const std::vector<Wall>& all_walls() {
    static const auto walls = enumerate_walls();
    return walls;
}

}  // namespace

TEST_CASE("clip keeps the admissible part of a line") {
    std::vector<Inequality> box{{{0, 1, 0}}, {{1, -1, 0}}, {{0, 0, 1}}, {{1, 0, -1}}};
    auto s = clip({make_rational(-1, 2), 1, 0}, box);
    REQUIRE(s);
    CHECK(s->p0 == Point2{make_rational(1, 2), 0});
    CHECK(s->p1 == Point2{make_rational(1, 2), 1});
    CHECK_FALSE(clip({-2, 1, 0}, box));
    // touching a corner only
    CHECK_FALSE(clip({-2, 1, 1}, box));
    box.push_back({{make_rational(-1, 2), 0, 1}, true});
    s = clip({make_rational(-1, 2), 1, 0}, box);
    REQUIRE(s);
    CHECK(s->open0);
    CHECK_FALSE(s->open1);
}

TEST_CASE("P2 walls") {
    EnumerationStats st;
    auto ws = enumerate_p2_walls(&st);
    CHECK(ws.size() == 13);
    std::set<std::string> expected{"2b=5a", "5b=11a", "b=2a", "7b=13a", "4b=7a", "3b=5a", "5b=8a",
                                   "7b=10a", "a=b", "8b=5a", "5b=2a", "4b=a", "7b=a"};
    CHECK(displays(ws) == expected);
    CHECK(st.unrealizable_l_orders > 0);
    std::map<std::string, std::string> witness{
        {"7b=a", "z(y^4+x^3z)"},  {"4b=a", "xy(y^3+xz^2)"},   {"5b=2a", "xz(y^3+x^2z)"},
        {"8b=5a", "y^5+x^3z^2"},  {"7b=10a", "y(y^4+x^3z)"},   {"5b=8a", "xy(y^3+x^2z)"},
        {"3b=5a", "y^5+x^4z"},    {"4b=7a", "x^2(y^3+xz^2)"},  {"7b=13a", "x(y^4+x^3z)"},
        {"b=2a", "x^2y(y^2+xz)"}, {"5b=11a", "x^2(y^3+x^2z)"}, {"2b=5a", "l1l2l3l4l5"},
        {"a=b", "zl1l2l3l4"}};
    for (const auto& w : ws) {
        INFO(w.display());
        CHECK(w.witness.Q_display == witness.at(w.display()));
        CHECK(w.kind == Kind::Horizontal);
    }
    for (const auto& w : ws)
        if (w.display() == "a=b") {
            bool flagged = false;
            for (const auto& a : w.alternates)
                flagged |= a.semistable_only && a.Q_display == "y^2(y^3+x^2z)";
            CHECK(flagged);
        }
}

TEST_CASE("P(1,1,4) walls, published and exhaustive") {
    auto ws = enumerate_p114_walls();
    CHECK(displays(ws) ==
          std::set<std::string>{"7a-b=3", "7a-4b=3", "35a-17b=15", "11a+b=6", "11a-2b=6", "11a-5b=6"});
    auto ex = enumerate_p114_walls(true);
    CHECK(ex.size() == 10);
    for (const char* extra : {"7a-13b=3", "7a-7b=3", "7a-5b=3", "7a-3b=3"}) CHECK(displays(ex).count(extra) == 1);
    for (const auto& w : ws) {
        if (w.display() == "7a-b=3") CHECK(w.witness.Q_display == "xyz^2");
        if (w.display() == "7a-4b=3") CHECK(w.witness.Q_display == "xyz(z+x^4)");
        if (w.display() == "35a-17b=15") {
            CHECK(w.witness.Q_display == "y(y^9+xz^2)");
            CHECK(w.witness.L_display == "x^2");
        }
    }
}

TEST_CASE("X26 and P(1,4,25) walls") {
    CHECK(displays(enumerate_x26_walls()) == std::set<std::string>{"45a-17b=24", "45a-7b=24", "15a+b=8"});
    auto ws = enumerate_p1425_walls();
    CHECK(displays(ws) == std::set<std::string>{"115a+11b=63", "115a-19b=63", "115a-49b=63", "95a+13b=54",
                                                "95a-17b=54", "95a-47b=54"});
    for (const auto& w : ws) CHECK(w.kind == Kind::VerticalIII);
}

TEST_CASE("every witness has beta vanishing on its wall and passes its filters") {
    for (const auto& w : all_walls()) {
        INFO(w.surface << " " << w.display());
        auto pw = w.witness.profile.wall();
        REQUIRE(pw);
        CHECK(*pw == w.line);
        CHECK(vertical_filter(w));
        auto m = w.segment.midpoint();
        CHECK(w.line.form()(m.x, m.y) == 0);
        for (const auto& h : w.witness.horizontal) CHECK(h(m.x, m.y) == 0);
        for (const auto& f : w.witness.filters) {
            if (f.strict)
                CHECK(f.f(m.x, m.y) > 0);
            else
                CHECK(f.f(m.x, m.y) >= 0);
        }
        for (const auto& a : w.alternates) CHECK(*a.profile.wall() == w.line);
    }
}

TEST_CASE("wall list is ordered, complete and idempotent") {
    const auto& ws = all_walls();
    CHECK(ws.size() == 28);
    CHECK(ws.front().surface == "p2");
    CHECK(ws.front().display() == "2b=5a");
    CHECK(ws.back().surface == "x26");
    auto again = enumerate_walls("all", 2);
    REQUIRE(again.size() == ws.size());
    for (size_t i = 0; i < ws.size(); ++i) CHECK(again[i].display() == ws[i].display());
    CHECK(emit_tables(again, "json") == emit_tables(ws, "json"));
    auto shuffled = ws;
    std::reverse(shuffled.begin(), shuffled.end());
    sort_walls(shuffled);
    for (size_t i = 0; i < ws.size(); ++i) CHECK(shuffled[i].display() == ws[i].display());
    CHECK_THROWS_AS(enumerate_walls("p3"), Error);
}

TEST_CASE("chamber decomposition satisfies Euler and matches sign vectors") {
    const auto& ws = all_walls();
    auto arr = chamber_decomposition(ws);
    CHECK(arr.euler_ok());
    for (const auto& c : arr.chambers) {
        bool inside = true;
        for (const auto& f : kstab::coefficient_domain()) inside &= f(c.sample.x, c.sample.y) > 0;
        CHECK(inside);
        for (const auto& l : arr.lines) CHECK(l.form()(c.sample.x, c.sample.y) != 0);
    }
    CHECK(arr.chambers.size() == 80);
    // the smallest chambers have area about 5e-6, so 10^5 samples can miss them
    CHECK(sign_vector_count(arr.lines, 100000, 7) <= 80);
    CHECK(sign_vector_count(arr.lines, 1000000, 1) == 80);

    auto small = chamber_decomposition(std::vector<IntegerLine>{parse_line("a=b")});
    CHECK(small.chambers.size() == 2);
    CHECK(small.euler_ok());
}

TEST_CASE("emitters") {
    const auto& ws = all_walls();
    auto csv = emit_tables(ws, "csv");
    CHECK(csv.rfind("surface,wall,Q,L\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 29);
    auto text = emit_tables(ws, "json");
    auto j = serialize::parse(text);
    std::vector<Wall> back;
    for (const auto& o : j) back.push_back(serialize::wall_from(o));
    CHECK(emit_tables(back, "json") == text);
    CHECK_THROWS_AS(emit_tables(ws, "xml"), Error);

    auto svg = emit_chamber_svg(chamber_decomposition(ws));
    size_t count = 0;
    for (size_t p = svg.find("class=\"wall\""); p != std::string::npos; p = svg.find("class=\"wall\"", p + 1)) ++count;
    CHECK(count == 28);
    for (const char* lab : {">3/7<", ">6/11<", ">8/15<", ">63/115<", ">54/95<"}) CHECK(svg.find(lab) != std::string::npos);
    auto ints = horizontal_intercepts(chamber_decomposition(ws).lines);
    CHECK(ints.size() == 5);
}
