#include "kwall/kstab.hpp"

#include <map>
#include <numeric>

namespace kwall::kstab {

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

Singularity cyclic(long r, long w) {
    return {r, w, is_T_singularity(r, w).milnor, q(4, r)};
}

// Solve M x = rhs exactly; M is small and assumed nonsingular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> M, std::vector<Rational> rhs) {
    const size_t n = rhs.size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) fail("IncompleteCandidates", "singular intersection matrix");
        std::swap(M[p], M[c]);
        std::swap(rhs[p], rhs[c]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c] == 0) continue;
            Rational f = M[r][c] / M[c][c];
            for (size_t k = c; k < n; ++k) M[r][k] -= f * M[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    for (size_t r = 0; r < n; ++r) rhs[r] /= M[r][r];
    return rhs;
}

Rational determinant(std::vector<std::vector<Rational>> M) {
    const size_t n = M.size();
    Rational d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && M[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(M[p], M[c]);
            d = -d;
        }
        d *= M[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            Rational f = M[r][c] / M[c][c];
            for (size_t k = c; k < n; ++k) M[r][k] -= f * M[c][k];
        }
    }
    return d;
}

}  // namespace

const std::vector<std::string>& surface_ids() {
    static const std::vector<std::string> ids{"p2", "p114", "x26", "p1425"};
    return ids;
}

const SurfaceDescriptor& descriptor(const std::string& id) {
    static const std::map<std::string, SurfaceDescriptor> table{
        {"p2", {"p2", 9, 1, {}, 5, 1, {1, 1, 1}, ""}},
        {"p114", {"p114", 9, 1, {cyclic(4, 1)}, 10, 2, {1, 1, 4}, ""}},
        {"p1425", {"p1425", 9, 1, {cyclic(25, 4), cyclic(4, 1)}, 50, 10, {1, 4, 25}, ""}},
        {"x26", {"x26", 9, 1, {cyclic(25, 4)}, 25, 5, {1, 2, 13, 25}, "xw = z^2 + y^13"}},
    };
    auto it = table.find(id);
    if (it == table.end()) fail("UnknownSurface", "no surface '" + id + "'");
    return it->second;
}

void PairConfig::validate() const {
    const auto& sd = descriptor(surface);
    if (Q.surface != surface || L.surface != surface) fail("CurveNotOnSurface", "curves must live on " + surface);
    if (Q.degree() != sd.q_degree)
        fail("InvalidCurve", "Q has degree " + to_string(Q.degree()) + ", expected " + std::to_string(sd.q_degree));
    if (L.degree() != sd.l_degree)
        fail("InvalidCurve", "L has degree " + to_string(L.degree()) + ", expected " + std::to_string(sd.l_degree));
}

namespace {

// quadratic part of Q in x, y as (coef x^2, coef xy, coef y^2); generic entries read as 1
std::optional<std::array<std::optional<Rational>, 3>> f2_part(const PairConfig& cfg) {
    if (cfg.surface != "p114") return std::nullopt;
    curvealg::SparsePoly prod = curvealg::SparsePoly::constant({"x", "y", "z"}, 1);
    bool generic = false;
    for (size_t k = 0; k < cfg.Q.components.size(); ++k) {
        generic = generic || cfg.Q.components[k].generic();
        prod = prod * cfg.Q.component_poly(k).pow(cfg.Q.components[k].mult);
    }
    std::array<std::optional<Rational>, 3> f{};
    bool any = false;
    for (const auto& [e, c] : prod.terms()) {
        if (e[2] != 2) continue;
        any = true;
        f[e[1]] = generic ? Rational(1) : c;  // e = (2-j, j, 2)
    }
    if (!any) return std::nullopt;
    return f;
}

}  // namespace

bool PairConfig::has_f2() const { return f2_part(*this).has_value(); }

bool PairConfig::rank_one_f2() const {
    auto f = f2_part(*this);
    if (!f) return false;
    bool generic = false;
    for (const auto& comp : Q.components) generic = generic || comp.generic();
    const auto& [a, b, c] = *f;
    if (generic) return !b && (a.has_value() != c.has_value());
    Rational A = a.value_or(0), B = b.value_or(0), C = c.value_or(0);
    return B * B - 4 * A * C == 0;
}

Rational Valuation::ord(const CurveSpec& c) const {
    if (c.surface != surface) fail("CurveNotOnSurface", "curve lives on " + c.surface + ", valuation on " + surface);
    if (kind == Kind::Jet) return curvealg::ord_along(*chart, c);
    return curvealg::monomial_order(coordinate_values, c);
}

Valuation toric_valuation(const std::string& surface, const toric::ToricValuation& v, const std::string& desc) {
    const auto& X = toric::surface(surface);
    Valuation r;
    r.kind = Valuation::Kind::Toric;
    r.surface = surface;
    auto o = v.coordinate_orders();
    r.coordinate_values.assign(o.begin(), o.end());
    r.A_X = toric::log_discrepancy(X, v);
    r.S_X = toric::s_invariant(X, v);
    r.description = desc.empty() ? "toric point (" + to_string(v.point.u) + "," + to_string(v.point.v) + ")" : desc;
    return r;
}

Valuation fixed_point_valuation(const std::string& surface, int k, long wi, long wj) {
    const auto& X = toric::surface(surface);
    std::string pt = k == 0 ? "[1:0:0]" : k == 1 ? "[0:1:0]" : "[0:0:1]";
    return toric_valuation(surface, toric::chart_valuation(X, k, wi, wj),
                           "wt(" + std::to_string(wi) + "," + std::to_string(wj) + ") at " + pt);
}

Valuation divisor_valuation(const std::string& surface, int k) {
    const auto& X = toric::surface(surface);
    return toric_valuation(surface, toric::divisor_valuation(X, k), "H_" + X.names[k]);
}

std::vector<std::string> catalog_names() { return {"x26:quotient", "p1425:[0:1:0]"}; }

Valuation catalog_valuation(const std::string& name) {
    if (name == "x26:quotient") {
        Valuation v;
        v.kind = Valuation::Kind::Catalog;
        v.surface = "x26";
        v.description = "quotient valuation at the 1/25(1,4) point, chart weights (2,13)/25";
        v.coordinate_values = {q(26, 25), q(2, 25), q(13, 25), 0};
        v.A_X = q(3, 5);
        v.S_X = q(27, 5);
        return v;
    }
    if (name == "p1425:[0:1:0]") {
        const auto& X = toric::surface("p1425");
        LatticePoint p{X.rays[0].u + X.rays[2].u, X.rays[0].v + X.rays[2].v};
        Valuation v = toric_valuation("p1425", toric::make_valuation(X, p), "r_x + r_z at [0:1:0]");
        v.kind = Valuation::Kind::Catalog;
        // catalogued constants; the toric engine must agree
        if (v.A_X != 2 || v.S_X != q(52, 5)) fail("UncatalogedValuation", "catalog mismatch at [0:1:0]");
        return v;
    }
    fail("UncatalogedValuation", "no catalog entry '" + name + "'");
}

Valuation p2_jet_valuation() {
    Valuation v;
    v.kind = Valuation::Kind::Jet;
    v.surface = "p2";
    v.description = "quasi-monomial wt(13,2) after x' = x - y^2 + y^5 - y^6/2 at [0:0:1]";
    v.chart = curvealg::ChartValuation{"p2", 2, {13, 2, 0}, {curvealg::q2_jet()}};
    v.A_X = 15;
    v.S_X = s_quasimonomial_p2(13, 2, a12_candidates());
    return v;
}

LinearForm sigma() { return {1, q(-5, 3), q(-1, 3)}; }

std::optional<IntegerLine> KProfile::wall() const {
    if (beta.is_constant()) return std::nullopt;
    return normalize_line(beta);
}

KProfile make_profile(const Rational& A_X, const Rational& ordQ, const Rational& ordL, const Rational& S_X,
                      const std::string& desc) {
    KProfile p;
    p.A = LinearForm(A_X, -ordQ, -ordL);
    p.S = sigma() * S_X;
    p.beta = p.A - p.S;
    p.valuation = desc;
    return p;
}

KProfile beta_profile(const PairConfig& cfg, const Valuation& v) {
    if (v.surface != cfg.surface) fail("CurveNotOnSurface", "valuation is not on " + cfg.surface);
    if (cfg.surface == "x26" && v.kind != Valuation::Kind::Catalog)
        fail("UncatalogedValuation", "X26 valuations must come from the catalog");
    cfg.validate();
    return make_profile(v.A_X, v.ord(cfg.Q), v.ord(cfg.L), v.S_X, v.description);
}

LinearForm futaki_line(const PairConfig& cfg, int k, long wi, long wj) {
    if (cfg.surface == "x26") return beta_profile(cfg, catalog_valuation("x26:quotient")).beta;
    return beta_profile(cfg, fixed_point_valuation(cfg.surface, k, wi, wj)).beta;
}

std::vector<Candidate> a12_candidates() { return {{1, 2}, {1, 4}, {2, 10}, {5, 26}}; }

Rational s_quasimonomial_p2(long n1, long n2, const std::vector<Candidate>& cands) {
    if (n1 <= 0 || n2 <= 0) fail("InvalidValuation", "weights must be positive");
    const Rational N(n1 * n2);
    const size_t nc = cands.size();
    auto dot = [&](size_t i, size_t j) -> Rational {
        return Rational(cands[i].degree * cands[j].degree) - Rational(cands[i].order * cands[j].order) / N;
    };
    std::vector<size_t> active;
    std::vector<bool> in(nc, false);
    Rational t0 = 0, integral = 0;
    for (;;) {
        const size_t m = active.size();
        std::vector<std::vector<Rational>> M(m, std::vector<Rational>(m));
        std::vector<Rational> r0(m), r1(m);
        for (size_t i = 0; i < m; ++i) {
            for (size_t j = 0; j < m; ++j) M[i][j] = dot(active[i], active[j]);
            r0[i] = 3 * cands[active[i]].degree;
            r1[i] = -Rational(cands[active[i]].order) / N;
        }
        for (size_t k = 1; k <= m; ++k) {
            std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) minor[i][j] = M[i][j];
            Rational d = determinant(minor);
            if ((k % 2 == 1 && d >= 0) || (k % 2 == 0 && d <= 0))
                fail("IncompleteCandidates", "peeled curves do not have negative definite intersection matrix");
        }
        std::vector<Rational> c0 = m ? solve(M, r0) : std::vector<Rational>{};
        std::vector<Rational> c1 = m ? solve(M, r1) : std::vector<Rational>{};
        for (size_t i = 0; i < m; ++i)
            if (c1[i] < 0) fail("IncompleteCandidates", "negative part shrinks along t");
        // vol(t) = v0 + v1 t + v2 t^2
        Rational v0 = 9, v1 = 0, v2 = -1 / N;
        for (size_t i = 0; i < m; ++i) {
            v0 -= c0[i] * r0[i];
            v1 -= c0[i] * r1[i] + c1[i] * r0[i];
            v2 -= c1[i] * r1[i];
        }
        auto vol = [&](const Rational& t) -> Rational { return v0 + v1 * t + v2 * t * t; };
        auto dvol = [&](const Rational& t) -> Rational { return v1 + 2 * v2 * t; };

        std::optional<Rational> t1;
        std::vector<size_t> entering;
        for (size_t k = 0; k < nc; ++k) {
            if (in[k]) continue;
            // P . C_k = g0 + g1 t
            Rational g0 = 3 * cands[k].degree, g1 = -Rational(cands[k].order) / N;
            for (size_t i = 0; i < m; ++i) {
                Rational mk = dot(active[i], k);
                g0 -= c0[i] * mk;
                g1 -= c1[i] * mk;
            }
            Rational at0 = g0 + g1 * t0;
            if (at0 < 0) fail("IncompleteCandidates", "candidate already negative at a phase start");
            if (g1 >= 0) continue;
            Rational root = -g0 / g1;
            if (root <= t0 && at0 > 0) continue;
            if (!t1 || root < *t1) {
                t1 = root;
                entering = {k};
            } else if (root == *t1) {
                entering.push_back(k);
            }
        }
        if (!t1) fail("IncompleteCandidates", "volume does not vanish at a phase boundary");
        Rational vend = vol(*t1);
        if (vend < 0) fail("IncompleteCandidates", "volume reaches 0 strictly inside a phase");
        if (dvol(t0) > 0 || dvol(*t1) > 0) fail("IncompleteCandidates", "volume is not monotone");
        Rational h = *t1 - t0;
        integral += h / 6 * (vol(t0) + 4 * vol((t0 + *t1) / 2) + vend);
        if (vend == 0) break;
        for (size_t k : entering) {
            if (dot(k, k) >= 0) fail("IncompleteCandidates", "curve to peel has non-negative self-intersection");
            in[k] = true;
            active.push_back(k);
        }
        t0 = *t1;
    }
    return integral / 9;
}

Rational lct_certificate(const PairConfig& cfg, const Valuation& v, const Rational& t) {
    if (t < 0) fail("InvalidSlope", "t must be non-negative");
    Rational o = v.ord(cfg.Q) + t * v.ord(cfg.L);
    if (o == 0) fail("DivisionByZero", "valuation has order 0 on Q + tL");
    return v.A_X / o;
}

std::vector<LinearForm> domain_constraints(const std::string& surface, bool rank_one) {
    if (surface == "p2") return {{0, 5, -2}, {3, -5, -1}};
    if (surface == "p114") {
        std::vector<LinearForm> c{{-3, 7, -1}};
        if (rank_one) c.push_back({-6, 11, 1});
        return c;
    }
    if (surface == "x26") return {{-8, 15, 1}};
    if (surface == "p1425") return {{-63, 115, 11}};
    fail("UnknownSurface", "no surface '" + surface + "'");
}

std::vector<LinearForm> coefficient_domain() { return {{0, 1, 0}, {0, 0, 1}, {3, -5, -1}, {0, 5, -2}}; }

long index_bound(const std::vector<std::pair<Rational, long>>& coeffs) {
    Rational s = 0, dmax = 0;
    for (const auto& [c, d] : coeffs) {
        s += c * d;
        Rational dd = d % 3 == 0 ? make_rational(2 * d, 3) : Rational(d);
        if (dd > dmax) dmax = dd;
    }
    if (s <= 0 || s >= 3) fail("CoefficientSumOutOfRange", "sum c_i d_i = " + to_string(s) + " not in (0,3)");
    Integer b = std::min(floor_of(3 / (3 - s)), floor_of(dmax));
    return std::max(1L, b.get_si());
}

std::set<std::string> local_volume_filter(const Rational& a, const Rational& b) {
    Rational lhs = (3 - 5 * a - b) * (3 - 5 * a - b);
    std::set<std::string> ok;
    for (const auto& id : surface_ids()) {
        bool pass = lhs <= q(9, 4) * 4;  // smooth points
        for (const auto& s : descriptor(id).singularities) pass = pass && lhs <= q(9, 4) * s.local_volume;
        if (pass) ok.insert(id);
    }
    return ok;
}

bool noether_check(const SurfaceDescriptor& sd) {
    Rational sum = sd.K2 + sd.picard_rank;
    for (const auto& s : sd.singularities) sum += s.milnor;
    return sum == 10;
}

TSingularity is_T_singularity(long r, long w) {
    if (r < 2 || w < 1 || w >= r || std::gcd(r, w) != 1) fail("InvalidType", "need 1 <= w < r coprime");
    long winv = 1;
    while ((winv * w) % r != 1) ++winv;
    for (long n = 1; n * n <= r; ++n) {
        if (r % (n * n)) continue;
        long d = r / (n * n);
        for (long a = 1; a <= std::max(1L, n - 1); ++a) {
            if (std::gcd(n, a) != 1) continue;
            long t = ((d * n * a - 1) % r + r) % r;
            if (t == w || t == winv) {
                TSingularity res;
                res.is_T = true;
                res.du_val = n == 1;
                res.d = d;
                res.n = n;
                res.a = a;
                res.milnor = d - 1;
                return res;
            }
        }
    }
    return {};
}

}  // namespace kwall::kstab
