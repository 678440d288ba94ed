#pragma once

#include <string>
#include <vector>

namespace kwall::battery {

struct Outcome {
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

constexpr int kCriteria = 10;
std::string criterion_title(int id);
// runs acceptance criterion id (1..10) with its pinned tolerance and time limit
Outcome criterion(int id);

// property suites behind criterion 10
struct Suite {
    std::string name;
    Outcome outcome;
};
std::vector<Suite> property_suites();

}  // namespace kwall::battery
