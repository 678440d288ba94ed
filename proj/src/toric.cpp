#include "kwall/toric.hpp"

#include <map>

namespace kwall::toric {

int ToricSurface::coordinate(const std::string& name) const {
    for (int k = 0; k < 3; ++k)
        if (names[k] == name) return k;
    fail("UnknownVariable", "no coordinate '" + name + "' on " + id);
}

Integer ToricSurface::cone_index(int k) const {
    int i = (k + 1) % 3, j = (k + 2) % 3;
    return abs(det(rays[i], rays[j]));
}

std::vector<HalfPlane> ToricSurface::anticanonical_halfplanes() const {
    std::vector<HalfPlane> hs;
    for (const auto& r : rays) hs.emplace_back(Rational(r.u), Rational(r.v), -1);
    return hs;
}

ToricSurface wps_fan(long w0, long w1, long w2, const std::string& id, std::array<std::string, 3> names) {
    if (w0 <= 0 || w1 <= 0 || w2 <= 0) fail("NonPrimitiveSolution", "weights must be positive");
    Integer g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), Integer(w0).get_mpz_t(), Integer(w1).get_mpz_t());
    // two integral vectors spanning the kernel of w
    std::array<Integer, 3> k1{Integer(w1 / g), Integer(-w0 / g), 0};
    std::array<Integer, 3> k2{Integer(u * w2), Integer(v * w2), Integer(-g)};
    std::array<Integer, 3> c{k1[1] * k2[2] - k1[2] * k2[1], k1[2] * k2[0] - k1[0] * k2[2],
                             k1[0] * k2[1] - k1[1] * k2[0]};
    bool plus = c[0] == w0 && c[1] == w1 && c[2] == w2;
    bool minus = c[0] == -w0 && c[1] == -w1 && c[2] == -w2;
    if (!plus && !minus) fail("NonPrimitiveSolution", "kernel of the weight vector is not saturated");

    std::array<LatticePoint, 3> r;
    for (int k = 0; k < 3; ++k) {
        r[k] = {k1[k], k2[k]};
        if (!(r[k].primitive() == r[k]) || r[k].is_zero())
            fail("NonPrimitiveSolution", "ray " + std::to_string(k) + " is not primitive");
    }
    // normalise: the first unimodular pair goes to e1, e2
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Integer d = det(r[i], r[j]);
            if (abs(d) != 1) continue;
            // inverse of the matrix with columns r_i, r_j
            Integer a = r[j].v * d, b = -r[j].u * d, cc = -r[i].v * d, dd = r[i].u * d;
            ToricSurface X{id, {w0, w1, w2}, names, {}};
            for (int k = 0; k < 3; ++k) X.rays[k] = {a * r[k].u + b * r[k].v, cc * r[k].u + dd * r[k].v};
            return X;
        }
    return ToricSurface{id, {w0, w1, w2}, names, r};
}

const ToricSurface& surface(const std::string& id) {
    static const std::map<std::string, ToricSurface> catalog{
        {"p2", wps_fan(1, 1, 1, "p2")},
        {"p114", wps_fan(1, 1, 4, "p114")},
        {"p1425", wps_fan(1, 4, 25, "p1425")},
    };
    auto it = catalog.find(id);
    if (it == catalog.end()) fail("UnknownSurface", "no toric surface '" + id + "'");
    return it->second;
}

std::array<Rational, 3> ToricValuation::coordinate_orders() const {
    std::array<Rational, 3> o{0, 0, 0};
    o[i] = alpha;
    o[j] = beta;
    return o;
}

ToricValuation ToricValuation::primitive(const ToricSurface& X) const { return make_valuation(X, point.primitive()); }

ToricValuation make_valuation(const ToricSurface& X, const LatticePoint& p) {
    if (p.is_zero()) fail("ZeroPoint", "valuation point is the origin");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Integer d = det(X.rays[i], X.rays[j]);
            Rational alpha(Integer(p.u * X.rays[j].v - p.v * X.rays[j].u), d);
            Rational beta(Integer(X.rays[i].u * p.v - X.rays[i].v * p.u), d);
            alpha.canonicalize();
            beta.canonicalize();
            if (alpha >= 0 && beta >= 0) return {p, i, j, alpha, beta};
        }
    fail("ZeroPoint", "point lies in no cone");  // unreachable for a complete fan
}

ToricValuation chart_valuation(const ToricSurface& X, int k, long wi, long wj) {
    if (k < 0 || k > 2) fail("UnknownVariable", "chart index out of range");
    int i = k == 0 ? 1 : 0, j = k == 2 ? 1 : 2;
    LatticePoint p{wi * X.rays[i].u + wj * X.rays[j].u, wi * X.rays[i].v + wj * X.rays[j].v};
    return make_valuation(X, p);
}

ToricValuation divisor_valuation(const ToricSurface& X, int k) { return make_valuation(X, X.rays.at(k)); }

Rational log_discrepancy(const ToricSurface&, const ToricValuation& v) { return v.alpha + v.beta; }

Rational ord_on_invariant_divisor(const ToricSurface&, const ToricValuation& v, int ray) {
    return v.coordinate_orders().at(ray);
}

Rational anticanonical_volume(const ToricSurface& X) {
    auto p = polygon_from_halfplanes(X.anticanonical_halfplanes());
    return 2 * polygon_area(*p);
}

Rational s_invariant(const ToricSurface& X, const ToricValuation& v) {
    auto hs = X.anticanonical_halfplanes();
    hs.emplace_back(Rational(v.point.u), Rational(v.point.v), -log_discrepancy(X, v), 1);
    Rational integral = 2 * integrate_parametric_area(hs, 0, std::nullopt);
    return integral / anticanonical_volume(X);
}

long lattice_point_count(const ToricSurface& X, long m) {
    std::vector<HalfPlane> hs;
    for (const auto& r : X.rays) hs.emplace_back(Rational(r.u), Rational(r.v), -m);
    auto p = polygon_from_halfplanes(hs);
    Integer x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    for (const auto& q : p->vertices) {
        x0 = std::min<Integer>(x0, floor_of(q.x));
        x1 = std::max<Integer>(x1, ceil_of(q.x));
        y0 = std::min<Integer>(y0, floor_of(q.y));
        y1 = std::max<Integer>(y1, ceil_of(q.y));
    }
    long count = 0;
    for (long x = x0.get_si(); x <= x1.get_si(); ++x)
        for (long y = y0.get_si(); y <= y1.get_si(); ++y) {
            bool in = true;
            for (const auto& r : X.rays)
                if (r.u * x + r.v * y < -m) {
                    in = false;
                    break;
                }
            count += in;
        }
    return count;
}

}  // namespace kwall::toric
