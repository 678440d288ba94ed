#pragma once

#include <array>
#include <string>
#include <utility>

#include "kwall/exactmath.hpp"

namespace kwall::gitslope {

// z^2 xy + z f6(x,y) + f10(x,y); f6 has only x^6, y^6; f10[k] is the coefficient of x^(10-k) y^k
struct QPoint {
    std::array<Rational, 2> f6;  // x^6, y^6
    std::array<Rational, 11> f10;
};

// l1 x^2 + l2 xy + l3 y^2
struct LPoint {
    std::array<Rational, 3> lambda;
};

enum class GitStatus { Stable, PolystableStrict, StrictlySemistable, Unstable };
std::string status_name(GitStatus s);
bool is_semistable(GitStatus s);
bool is_polystable(GitStatus s);

using Interval = std::pair<Rational, Rational>;

// normalized sigma'-weights (i - j)/w over the nonzero coordinates; throws ZeroPoint
Interval state_interval(const QPoint& q);
Interval state_interval(const LPoint& l);

// a, b > 0 (throws InvalidSlope)
GitStatus git_status(const QPoint& q, const LPoint& l, const Rational& a, const Rational& b);

enum class Side { Minus, Plus };
// fiber dimension of the exceptional locus over the type-I wall center
long eplus_fiber_dim(Side side);
// d- + d+ + 1 against the codimension 13 of the center
bool fiber_dims_consistent();

QPoint parse_qpoint_json(const std::string& text);  // {"f6": [..2], "f10": [..11]}, throws ParseError
LPoint parse_lpoint(const std::string& text);       // "l1,l2,l3"

}  // namespace kwall::gitslope
