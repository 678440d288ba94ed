#include <doctest.h>

#include "kwall/battery.hpp"
#include "kwall/errors.hpp"

using namespace kwall;
using namespace kwall::battery;

TEST_CASE("fast criteria pass") {
    for (int id : {1, 2, 3, 5, 6, 7, 8, 9}) {
        auto o = criterion(id);
        INFO(criterion_title(id) << ": " << o.detail);
        CHECK(o.pass);
    }
}

TEST_CASE("property suites") {
    auto suites = property_suites();
    CHECK(suites.size() == 5);
    for (const auto& s : suites) {
        INFO(s.name << ": " << s.outcome.detail);
        CHECK(s.outcome.pass);
    }
}

TEST_CASE("criterion ids") {
    CHECK_THROWS_AS(criterion(0), Error);
    CHECK_THROWS_AS(criterion_title(kCriteria + 1), Error);
}
