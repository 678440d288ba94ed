// Acceptance run: one PASS/FAIL line per criterion, exit 1 on any failure.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "kwall/battery.hpp"

int main(int argc, char** argv) {
    using namespace kwall::battery;
    int first = 1, last = kCriteria;
    if (argc == 2) first = last = std::atoi(argv[1]);
    bool all = true;
    for (int id = first; id <= last; ++id) {
        auto o = criterion(id);
        all &= o.pass;
        std::printf("%s criterion %d (%s, %.2f s): %s\n", o.pass ? "PASS" : "FAIL", id, criterion_title(id).c_str(),
                    o.seconds, o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
