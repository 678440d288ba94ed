#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "kwall/errors.hpp"

namespace kwall {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps it canonical after every operation

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);  // "p/q", q omitted when 1
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);  // accepts "p", "p/q", "-p/q"
double to_double(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

// c0 + ca*a + cb*b
struct LinearForm {
    Rational c0, ca, cb;

    LinearForm() = default;
    LinearForm(Rational c0_, Rational ca_, Rational cb_)
        : c0(std::move(c0_)), ca(std::move(ca_)), cb(std::move(cb_)) {}
    static LinearForm constant(const Rational& c) { return {c, 0, 0}; }

    Rational operator()(const Rational& a, const Rational& b) const { return c0 + ca * a + cb * b; }
    bool is_constant() const { return ca == 0 && cb == 0; }
    bool operator==(const LinearForm& o) const { return c0 == o.c0 && ca == o.ca && cb == o.cb; }
    bool operator!=(const LinearForm& o) const { return !(*this == o); }

    LinearForm operator+(const LinearForm& o) const { return {c0 + o.c0, ca + o.ca, cb + o.cb}; }
    LinearForm operator-(const LinearForm& o) const { return {c0 - o.c0, ca - o.ca, cb - o.cb}; }
    LinearForm operator-() const { return {-c0, -ca, -cb}; }
    LinearForm operator*(const Rational& s) const { return {c0 * s, ca * s, cb * s}; }
};

inline LinearForm operator*(const Rational& s, const LinearForm& f) { return f * s; }

// Integer multiple of f with gcd 1. If c0 != 0 the constant is made negative,
// otherwise cb (then ca) positive. Two forms with the same zero locus map to
// the same normalization.
struct IntegerLine {
    Integer c0, ca, cb;
    bool operator==(const IntegerLine& o) const { return c0 == o.c0 && ca == o.ca && cb == o.cb; }
    bool operator<(const IntegerLine& o) const;
    LinearForm form() const { return {Rational(c0), Rational(ca), Rational(cb)}; }
};
IntegerLine normalize_line(const LinearForm& f);
// "115a+11b=63", "2b=5a", "a=b"
std::string display_line(const IntegerLine& l);
// inverse of display_line (also accepts any "p a + q b = c" arrangement)
IntegerLine parse_line(const std::string& s);

struct LatticePoint {
    Integer u, v;
    LatticePoint primitive() const;
    bool is_zero() const { return u == 0 && v == 0; }
    bool operator==(const LatticePoint& o) const { return u == o.u && v == o.v; }
};
Integer det(const LatticePoint& p, const LatticePoint& q);

struct Point2 {
    Rational x, y;
    bool operator==(const Point2& o) const { return x == o.x && y == o.y; }
    bool operator<(const Point2& o) const { return x < o.x || (x == o.x && y < o.y); }
};

// {m : <m, normal> >= off0 + off1*t}
struct HalfPlane {
    Rational nx, ny;
    Rational off0, off1;

    HalfPlane(Rational nx_, Rational ny_, Rational off0_, Rational off1_ = 0);
    Rational offset(const Rational& t) const { return off0 + off1 * t; }
    bool contains(const Point2& p, const Rational& t = 0) const { return nx * p.x + ny * p.y >= offset(t); }
};

struct Polygon {
    std::vector<Point2> vertices;  // counterclockwise
};

// Empty when the intersection has zero area. Throws Error("UnboundedRegion")
// when the intersection is nonempty and unbounded.
std::optional<Polygon> polygon_from_halfplanes(const std::vector<HalfPlane>& hs, const Rational& t = 0);
Rational polygon_area(const Polygon& p);
// Convex hull, counterclockwise, collinear points dropped.
std::vector<Point2> convex_hull(std::vector<Point2> pts);

// Area of the t-slice, 0 when empty.
Rational slice_area(const std::vector<HalfPlane>& hs, const Rational& t);

// Parameter values in (lo, hi) where three constraint lines become concurrent
// or two parallel ones coincide. hi == nullopt means unbounded above.
std::vector<Rational> area_breakpoints(const std::vector<HalfPlane>& hs, const Rational& lo,
                                       const std::optional<Rational>& hi);

// Exact integral of the slice area over [t0, t1]; t1 = nullopt integrates up to
// the threshold where the slice becomes empty for good.
Rational integrate_parametric_area(const std::vector<HalfPlane>& hs, const Rational& t0,
                                   const std::optional<Rational>& t1);

}  // namespace kwall
