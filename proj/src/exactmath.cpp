#include "kwall/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace kwall {

Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto valid_int = [](const std::string& t) {
        size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        fail("ParseError", "not a rational: '" + raw + "'");
    if (num[0] == '+') num = num.substr(1);
    Integer d(den);
    if (d == 0) fail("ParseError", "zero denominator: '" + raw + "'");
    Rational q{Integer(num), d};
    q.canonicalize();
    return q;
}

double to_double(const Rational& q) { return q.get_d(); }

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// ---------------------------------------------------------------- lines

bool IntegerLine::operator<(const IntegerLine& o) const {
    if (c0 != o.c0) return c0 < o.c0;
    if (ca != o.ca) return ca < o.ca;
    return cb < o.cb;
}

IntegerLine normalize_line(const LinearForm& f) {
    if (f.is_constant()) fail("DegenerateLine", "linear form has no zero locus line");
    Integer l = 1;
    for (const Rational* c : {&f.c0, &f.ca, &f.cb}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c->get_den_mpz_t());
    IntegerLine r{Integer(f.c0 * l), Integer(f.ca * l), Integer(f.cb * l)};
    Integer g = 0;
    for (const Integer* c : {&r.c0, &r.ca, &r.cb}) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c->get_mpz_t());
    r.c0 /= g;
    r.ca /= g;
    r.cb /= g;
    bool flip = r.c0 != 0 ? r.c0 > 0 : (r.cb != 0 ? r.cb < 0 : r.ca < 0);
    if (flip) {
        r.c0 = -r.c0;
        r.ca = -r.ca;
        r.cb = -r.cb;
    }
    return r;
}

namespace {

// "5a", "-a", "+17b" style terms; `first` suppresses the leading '+'.
std::string term(const Integer& c, char var, bool first) {
    std::string s;
    if (c < 0)
        s = "-";
    else if (!first)
        s = "+";
    Integer m = abs(c);
    if (m != 1) s += m.get_str();
    s.push_back(var);
    return s;
}

}  // namespace

std::string display_line(const IntegerLine& l) {
    if (l.c0 == 0) {
        if (l.ca == -1 && l.cb == 1) return "a=b";
        if (l.cb > 0 && l.ca < 0) return term(l.cb, 'b', true) + "=" + term(-l.ca, 'a', true);
        std::string lhs;
        if (l.ca != 0) lhs = term(l.ca, 'a', true);
        if (l.cb != 0) lhs += term(l.cb, 'b', lhs.empty());
        return lhs + "=0";
    }
    std::string lhs;
    if (l.ca != 0) lhs = term(l.ca, 'a', true);
    if (l.cb != 0) lhs += term(l.cb, 'b', lhs.empty());
    return lhs + "=" + Integer(-l.c0).get_str();
}

IntegerLine parse_line(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto eq = s.find('=');
    if (eq == std::string::npos || s.find('=', eq + 1) != std::string::npos)
        fail("ParseError", "wall must look like '35a-17b=15': '" + raw + "'");
    LinearForm f;
    auto side = [&](const std::string& t, int sign) {
        if (t.empty()) fail("ParseError", "empty side in '" + raw + "'");
        size_t i = 0;
        while (i < t.size()) {
            size_t j = i + 1;
            while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
            std::string tok = t.substr(i, j - i);
            i = j;
            char var = tok.back();
            if (var == 'a' || var == 'b') {
                std::string c = tok.substr(0, tok.size() - 1);
                if (c.empty() || c == "+") c = "1";
                if (c == "-") c = "-1";
                Rational v = parse_rational(c) * sign;
                (var == 'a' ? f.ca : f.cb) += v;
            } else {
                f.c0 += parse_rational(tok) * sign;
            }
        }
    };
    side(s.substr(0, eq), 1);
    side(s.substr(eq + 1), -1);
    return normalize_line(f);
}

// ---------------------------------------------------------------- lattice

LatticePoint LatticePoint::primitive() const {
    if (is_zero()) return *this;
    Integer g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
    return {u / g, v / g};
}

Integer det(const LatticePoint& p, const LatticePoint& q) { return p.u * q.v - p.v * q.u; }

// ---------------------------------------------------------------- polygons

HalfPlane::HalfPlane(Rational nx_, Rational ny_, Rational off0_, Rational off1_)
    : nx(std::move(nx_)), ny(std::move(ny_)), off0(std::move(off0_)), off1(std::move(off1_)) {
    if (nx == 0 && ny == 0) fail("InvalidHalfPlane", "zero normal");
}

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool feasible(const std::vector<HalfPlane>& hs, const Point2& p, const Rational& t) {
    for (const auto& h : hs)
        if (!h.contains(p, t)) return false;
    return true;
}

}  // namespace

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point2> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

std::optional<Polygon> polygon_from_halfplanes(const std::vector<HalfPlane>& hs, const Rational& t) {
    std::vector<Point2> cand;
    for (size_t i = 0; i < hs.size(); ++i)
        for (size_t j = i + 1; j < hs.size(); ++j) {
            Rational d = hs[i].nx * hs[j].ny - hs[i].ny * hs[j].nx;
            if (d == 0) continue;
            Rational oi = hs[i].offset(t), oj = hs[j].offset(t);
            Point2 p{(oi * hs[j].ny - oj * hs[i].ny) / d, (hs[i].nx * oj - hs[j].nx * oi) / d};
            if (feasible(hs, p, t)) cand.push_back(p);
        }

    // Recession directions are perpendicular to some normal; check them all.
    std::vector<Point2> rec;
    for (const auto& h : hs)
        for (int s : {1, -1}) {
            Point2 d{-h.ny * s, h.nx * s};
            bool ok = true;
            for (const auto& g : hs)
                if (g.nx * d.x + g.ny * d.y < 0) {
                    ok = false;
                    break;
                }
            if (ok) rec.push_back(d);
        }
    bool bounded = !hs.empty() && rec.empty();
    if (!bounded) {
        bool positive_area = false;
        bool all_parallel = true;
        for (size_t i = 1; i < hs.size(); ++i)
            if (hs[0].nx * hs[i].ny - hs[0].ny * hs[i].nx != 0) all_parallel = false;
        if (hs.empty()) {
            positive_area = true;
        } else if (all_parallel) {
            // slab along n0: lower <= <n0,m> <= upper
            std::optional<Rational> lo, hi;
            Rational nn = hs[0].nx * hs[0].nx + hs[0].ny * hs[0].ny;
            for (const auto& h : hs) {
                Rational lam = (h.nx * hs[0].nx + h.ny * hs[0].ny) / nn;
                Rational bound = h.offset(t) / lam;
                if (lam > 0) {
                    if (!lo || bound > *lo) lo = bound;
                } else if (!hi || bound < *hi) {
                    hi = bound;
                }
            }
            positive_area = !lo || !hi || *lo < *hi;
        } else if (!cand.empty()) {
            for (size_t i = 0; i < rec.size() && !positive_area; ++i)
                for (size_t j = i + 1; j < rec.size(); ++j)
                    if (rec[i].x * rec[j].y - rec[i].y * rec[j].x != 0) positive_area = true;
            for (size_t i = 1; i < cand.size() && !positive_area; ++i) {
                Point2 e{cand[i].x - cand[0].x, cand[i].y - cand[0].y};
                if (e.x * rec[0].y - e.y * rec[0].x != 0) positive_area = true;
            }
        }
        if (positive_area) fail("UnboundedRegion", "half-plane intersection is unbounded");
        return std::nullopt;
    }
    auto hull = convex_hull(std::move(cand));
    if (hull.size() < 3) return std::nullopt;
    return Polygon{std::move(hull)};
}

Rational polygon_area(const Polygon& p) {
    Rational s = 0;
    const auto& v = p.vertices;
    for (size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        s += a.x * b.y - a.y * b.x;
    }
    s /= 2;
    return s < 0 ? Rational(-s) : s;
}

Rational slice_area(const std::vector<HalfPlane>& hs, const Rational& t) {
    auto p = polygon_from_halfplanes(hs, t);
    return p ? polygon_area(*p) : Rational(0);
}

std::vector<Rational> area_breakpoints(const std::vector<HalfPlane>& hs, const Rational& lo,
                                       const std::optional<Rational>& hi) {
    std::vector<Rational> out;
    auto keep = [&](const Rational& r) {
        if (r > lo && (!hi || r < *hi)) out.push_back(r);
    };
    const size_t n = hs.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const auto &a = hs[i], &b = hs[j];
            if (a.nx * b.ny - a.ny * b.nx == 0) {
                Rational lam = (b.nx * a.nx + b.ny * a.ny) / (a.nx * a.nx + a.ny * a.ny);
                Rational k0 = b.off0 - lam * a.off0, k1 = b.off1 - lam * a.off1;
                if (k1 != 0) keep(-k0 / k1);
                continue;
            }
            for (size_t k = j + 1; k < n; ++k) {
                const auto& c = hs[k];
                auto det3 = [&](const Rational& oa, const Rational& ob, const Rational& oc) -> Rational {
                    return a.nx * (b.ny * oc - ob * c.ny) - a.ny * (b.nx * oc - ob * c.nx) +
                           oa * (b.nx * c.ny - b.ny * c.nx);
                };
                Rational d0 = det3(a.off0, b.off0, c.off0);
                Rational d1 = det3(a.off1, b.off1, c.off1);
                if (d1 != 0) keep(-d0 / d1);
            }
        }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

Rational integrate_piece(const std::vector<HalfPlane>& hs, const Rational& l, const Rational& r) {
    Rational h = r - l;
    Rational f0 = slice_area(hs, l);
    Rational f1 = slice_area(hs, l + h / 4);
    Rational f2 = slice_area(hs, l + h / 2);
    Rational f3 = slice_area(hs, l + 3 * h / 4);
    Rational f4 = slice_area(hs, r);
    // quadratic through f0, f2, f4 evaluated at the quarter points
    Rational q1 = (3 * f0 + 6 * f2 - f4) / 8;
    Rational q3 = (-f0 + 6 * f2 + 3 * f4) / 8;
    if (q1 != f1 || q3 != f3)
        fail("NonPolynomialArea", "slice area is not quadratic on [" + to_string(l) + ", " + to_string(r) + "]");
    return h / 6 * (f0 + 4 * f2 + f4);
}

}  // namespace

Rational integrate_parametric_area(const std::vector<HalfPlane>& hs, const Rational& t0,
                                   const std::optional<Rational>& t1) {
    std::vector<Rational> bps = area_breakpoints(hs, t0, t1);
    Rational end;
    if (t1) {
        end = *t1;
        if (end < t0) return -integrate_parametric_area(hs, end, t0);
    } else {
        std::optional<Rational> found;
        for (size_t i = 0; i < bps.size() && !found; ++i) {
            if (slice_area(hs, bps[i]) != 0) continue;
            bool zero_after = slice_area(hs, bps.back() + 1) == 0;
            for (size_t j = i; j + 1 < bps.size() && zero_after; ++j)
                zero_after = slice_area(hs, (bps[j] + bps[j + 1]) / 2) == 0;
            if (zero_after) found = bps[i];
        }
        if (!found) {
            if (slice_area(hs, t0) == 0 && slice_area(hs, t0 + 1) == 0) return 0;
            fail("DivergentIntegral", "slice area never vanishes identically");
        }
        end = *found;
        bps.erase(std::find(bps.begin(), bps.end(), end), bps.end());
    }
    Rational total = 0, left = t0;
    for (const auto& b : bps) {
        total += integrate_piece(hs, left, b);
        left = b;
    }
    if (left < end) total += integrate_piece(hs, left, end);
    return total;
}

}  // namespace kwall
