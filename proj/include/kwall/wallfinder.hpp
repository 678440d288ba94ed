#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kwall/kstab.hpp"

namespace kwall::wallfinder {

using curvealg::CurveSpec;

enum class Kind { Horizontal, VerticalI, VerticalII, VerticalIII };
std::string kind_name(Kind k);
Kind kind_from_name(const std::string& s);  // throws ParseError

// f >= 0, or f > 0 when strict
struct Inequality {
    LinearForm f;
    bool strict = false;
    std::string label;
};

struct Segment {
    Point2 p0, p1;
    bool open0 = false, open1 = false;  // endpoint fails a strict inequality
    Point2 midpoint() const { return {(p0.x + p1.x) / 2, (p0.y + p1.y) / 2}; }
};

// Part of {f = 0} satisfying every inequality; nullopt if empty or a point.
std::optional<Segment> clip(const LinearForm& line, const std::vector<Inequality>& ineqs);

struct Witness {
    CurveSpec Q, L;
    std::string Q_display, L_display;
    std::string source;     // enumeration branch
    std::string valuation;  // description of the valuation whose beta vanishes
    kstab::KProfile profile;
    std::vector<Inequality> filters;     // vertical divisors (strict) and surface constraints
    std::vector<LinearForm> horizontal;  // forms that must vanish on the wall
    bool semistable_only = false;        // some vertical beta vanishes on the wall
};

struct Wall {
    IntegerLine line;
    std::string surface;
    Kind kind = Kind::Horizontal;
    Witness witness;
    std::vector<Witness> alternates;
    Segment segment;
    std::vector<std::string> notes;

    std::string display() const { return display_line(line); }
};

struct EnumerationStats {
    long candidates = 0;
    long unrealizable_l_orders = 0;  // ord_E(L) values no reduced L can take
    long fake_lines = 0;             // rejected by vertical filters or constraints
};

std::vector<Wall> enumerate_p2_walls(EnumerationStats* stats = nullptr);
// exhaustive = false restricts the weighted-blowup case to binomial components
std::vector<Wall> enumerate_p114_walls(bool exhaustive = false, EnumerationStats* stats = nullptr);
std::vector<Wall> enumerate_x26_walls(EnumerationStats* stats = nullptr);
std::vector<Wall> enumerate_p1425_walls(EnumerationStats* stats = nullptr);

// filter in {p2, p114, p1425, x26, all}; jobs > 1 runs surfaces concurrently
std::vector<Wall> enumerate_walls(const std::string& filter = "all", int jobs = 1, bool exhaustive = false,
                                  std::map<std::string, EnumerationStats>* stats = nullptr);
void sort_walls(std::vector<Wall>& walls);

// the valuation a witness was found with, rebuilt from its description
kstab::Valuation witness_valuation(const Witness& w);

bool vertical_filter(const Wall& w, const std::vector<Inequality>& extra = {});

struct Chamber {
    std::vector<Point2> vertices;
    Point2 sample;
};

struct ChamberArrangement {
    std::vector<IntegerLine> lines;
    std::vector<Point2> domain;
    std::vector<Chamber> chambers;
    long vertices = 0, edges = 0;  // planar graph counts of the clipped arrangement

    bool euler_ok() const { return vertices - edges + static_cast<long>(chambers.size()) == 1; }
};

ChamberArrangement chamber_decomposition(const std::vector<IntegerLine>& lines);
ChamberArrangement chamber_decomposition(const std::vector<Wall>& walls);
// distinct sign vectors of n random rational points of the domain off all lines
long sign_vector_count(const std::vector<IntegerLine>& lines, long samples, unsigned seed = 1);

std::string emit_tables(const std::vector<Wall>& walls, const std::string& format);  // md, csv, json
std::string emit_chamber_svg(const ChamberArrangement& arr);

// a-axis intercept labels of the non-origin walls, as "p/q"
std::vector<Rational> horizontal_intercepts(const std::vector<IntegerLine>& lines);

}  // namespace kwall::wallfinder
