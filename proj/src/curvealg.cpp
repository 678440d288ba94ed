#include "kwall/curvealg.hpp"

#include <algorithm>
#include <numeric>

namespace kwall::curvealg {

SparsePoly::SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

SparsePoly SparsePoly::constant(std::vector<std::string> vars, const Rational& c) {
    SparsePoly p(std::move(vars));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> vars, const std::string& name) {
    SparsePoly p(std::move(vars));
    Exponent e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(e, 1);
    return p;
}

SparsePoly SparsePoly::monomial(std::vector<std::string> vars, Exponent e, const Rational& c) {
    SparsePoly p(std::move(vars));
    p.add_term(e, c);
    return p;
}

int SparsePoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) fail("UnknownVariable", "'" + name + "' is not a ring variable");
    return static_cast<int>(it - vars_.begin());
}

Rational SparsePoly::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != vars_.size()) fail("UnknownVariable", "exponent length does not match the ring");
    for (int k : e)
        if (k < 0) fail("InvalidExponent", "negative exponent");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void SparsePoly::check_ring(const SparsePoly& o) const {
    if (vars_ != o.vars_) fail("UnknownVariable", "polynomials live in different rings");
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
    check_ring(o);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + o * Rational(-1); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    check_ring(o);
    SparsePoly r(vars_);
    Exponent e(vars_.size());
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
            r.add_term(e, c1 * c2);
        }
    return r;
}

SparsePoly SparsePoly::operator*(const Rational& s) const {
    SparsePoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

SparsePoly SparsePoly::pow(int n) const {
    if (n < 0) fail("InvalidExponent", "negative power");
    SparsePoly r = constant(vars_, 1), base = *this;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

SparsePoly SparsePoly::set_one(const std::string& name) const {
    int k = var_index(name);
    SparsePoly r(vars_);
    for (const auto& [key, c] : terms_) {
        Exponent e = key;
        e[k] = 0;
        r.add_term(e, c);
    }
    return r;
}

std::string SparsePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        Rational a = abs(c);
        std::string term;
        if (mono.empty())
            term = kwall::to_string(a);
        else if (a == 1)
            term = mono;
        else
            term = kwall::to_string(a) + "*" + mono;
        if (s.empty())
            s = c < 0 ? "-" + term : term;
        else
            s += (c < 0 ? "-" : "+") + term;
    }
    return s;
}

SparsePoly substitute(const SparsePoly& p, const std::string& var, const SparsePoly& replacement) {
    int k = p.var_index(var);
    if (replacement.vars() != p.vars()) fail("UnknownVariable", "replacement uses a different ring");
    // group by the power of var so each power of the replacement is built once
    std::map<int, SparsePoly> by_power;
    for (const auto& [key, c] : p.terms()) {
        Exponent e = key;
        int n = e[k];
        e[k] = 0;
        auto it = by_power.try_emplace(n, SparsePoly(p.vars())).first;
        it->second.add_term(e, c);
    }
    SparsePoly out(p.vars()), power = SparsePoly::constant(p.vars(), 1);
    int have = 0;
    for (const auto& [n, rest] : by_power) {
        while (have < n) {
            power = power * replacement;
            ++have;
        }
        out = out + rest * power;
    }
    return out;
}

Rational weighted_order(const SparsePoly& p, const std::vector<Rational>& w) {
    if (p.is_zero()) fail("ZeroPolynomialInChart", "the zero polynomial has no order");
    std::optional<Rational> best;
    for (const auto& [e, c] : p.terms()) {
        Rational o = 0;
        for (size_t k = 0; k < e.size(); ++k) o += w.at(k) * e[k];
        if (!best || o < *best) best = o;
    }
    return *best;
}

SparsePoly initial_part(const SparsePoly& p, const std::vector<Rational>& w) {
    Rational m = weighted_order(p, w);
    SparsePoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Rational o = 0;
        for (size_t k = 0; k < e.size(); ++k) o += w[k] * e[k];
        if (o == m) r.add_term(e, c);
    }
    return r;
}

const SurfaceCoordinates& coordinates(const std::string& surface) {
    static const std::map<std::string, SurfaceCoordinates> table{
        {"p2", {{"x", "y", "z"}, {1, 1, 1}}},
        {"p114", {{"x", "y", "z"}, {1, 1, 4}}},
        {"p1425", {{"x", "y", "z"}, {1, 4, 25}}},
        {"x26", {{"x", "y", "z", "w"}, {1, 2, 13, 25}}},
    };
    auto it = table.find(surface);
    if (it == table.end()) fail("UnknownSurface", "no surface '" + surface + "'");
    return it->second;
}

Rational CurveSpec::degree() const {
    const auto& sc = coordinates(surface);
    Rational total = 0;
    for (const auto& comp : components) {
        if (comp.support.empty()) fail("ZeroPolynomialInChart", "empty component");
        if (comp.mult < 1) fail("InvalidCurve", "multiplicity must be positive");
        if (comp.coeffs && comp.coeffs->size() != comp.support.size())
            fail("InvalidCurve", "coefficient count does not match support");
        std::optional<long> deg;
        for (const auto& e : comp.support) {
            if (e.size() != sc.weights.size()) fail("CurveNotOnSurface", "exponent length does not match " + surface);
            long d = 0;
            for (size_t k = 0; k < e.size(); ++k) d += sc.weights[k] * e[k];
            if (deg && *deg != d) fail("NotHomogeneous", "component is not weighted-homogeneous");
            deg = d;
        }
        total += Rational(*deg) * comp.mult;
    }
    return total;
}

SparsePoly CurveSpec::component_poly(size_t k) const {
    const auto& comp = components.at(k);
    SparsePoly p(coordinates(surface).names);
    for (size_t i = 0; i < comp.support.size(); ++i) p.add_term(comp.support[i], comp.coeffs ? (*comp.coeffs)[i] : Rational(1));
    return p;
}

CurveSpec generic_curve(const std::string& surface, std::vector<Exponent> support, int mult) {
    CurveSpec c{surface, {Component{std::move(support), std::nullopt, mult}}};
    c.degree();
    return c;
}

CurveSpec explicit_curve(const std::string& surface, const SparsePoly& p, int mult) {
    if (p.vars() != coordinates(surface).names) fail("CurveNotOnSurface", "ring does not match " + surface);
    Component comp;
    comp.mult = mult;
    comp.coeffs.emplace();
    for (const auto& [e, c] : p.terms()) {
        comp.support.push_back(e);
        comp.coeffs->push_back(c);
    }
    CurveSpec cs{surface, {comp}};
    cs.degree();
    return cs;
}

CurveSpec operator+(const CurveSpec& c, const CurveSpec& d) {
    if (c.surface != d.surface) fail("CurveNotOnSurface", "components on different surfaces");
    CurveSpec r = c;
    r.components.insert(r.components.end(), d.components.begin(), d.components.end());
    return r;
}

void ChartValuation::validate() const {
    const auto& sc = coordinates(surface);
    if (chart < 0 || chart >= static_cast<int>(sc.names.size())) fail("InvalidValuation", "chart out of range");
    if (weights.size() != sc.names.size()) fail("InvalidValuation", "one weight per coordinate expected");
    for (size_t k = 0; k < weights.size(); ++k) {
        if (static_cast<int>(k) == chart) {
            if (weights[k] != 0) fail("InvalidValuation", "chart coordinate must carry weight 0");
        } else if (weights[k] <= 0 && sc.names.size() == 3) {
            fail("InvalidValuation", "chart weights must be positive");
        }
    }
    for (const auto& j : jet) {
        int k = j.shift.var_index(j.var);
        if (k == chart) fail("InvalidValuation", "jet shifts the chart coordinate");
        for (const auto& [e, c] : j.shift.terms())
            if (e[k] != 0 || e[chart] != 0) fail("InvalidValuation", "jet shift must be triangular");
    }
}

Rational monomial_order(const std::vector<Rational>& values, const CurveSpec& c) {
    c.degree();
    Rational total = 0;
    for (const auto& comp : c.components) {
        std::optional<Rational> best;
        for (const auto& e : comp.support) {
            Rational o = 0;
            for (size_t k = 0; k < e.size(); ++k) o += values.at(k) * e[k];
            if (!best || o < *best) best = o;
        }
        total += *best * comp.mult;
    }
    return total;
}

Rational ord_along(const ChartValuation& v, const CurveSpec& c) {
    if (c.surface != v.surface) fail("CurveNotOnSurface", "curve lives on " + c.surface + ", valuation on " + v.surface);
    v.validate();
    if (v.jet.empty()) return monomial_order(v.weights, c);
    c.degree();
    const auto& names = coordinates(c.surface).names;
    auto transform = [&](const SparsePoly& p) {
        SparsePoly q = p.set_one(names[v.chart]);
        for (const auto& j : v.jet) q = substitute(q, j.var, SparsePoly::variable(q.vars(), j.var) + j.shift);
        return q;
    };
    Rational total = 0;
    for (size_t k = 0; k < c.components.size(); ++k) {
        const auto& comp = c.components[k];
        Rational o;
        if (comp.generic()) {
            // no cancellation between generic monomials
            std::optional<Rational> best;
            for (const auto& e : comp.support) {
                Rational m = weighted_order(transform(SparsePoly::monomial(names, e)), v.weights);
                if (!best || m < *best) best = m;
            }
            o = *best;
        } else {
            o = weighted_order(transform(c.component_poly(k)), v.weights);
        }
        total += o * comp.mult;
    }
    return total;
}

std::vector<LatticePoint> invariance_weights(const std::vector<std::array<int, 2>>& s1,
                                             const std::vector<std::array<int, 2>>& s2) {
    if (s1.empty() || s2.empty()) fail("InvalidCurve", "empty support");
    std::vector<LatticePoint> out;
    for (const auto& m : s1)
        for (const auto& n : s2) {
            long di = m[0] - n[0], dj = n[1] - m[1];  // di*n1 = dj*n2
            if (di * dj <= 0) continue;
            long g = std::gcd(std::labs(di), std::labs(dj));
            LatticePoint p{std::labs(dj) / g, std::labs(di) / g};
            if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
        }
    std::sort(out.begin(), out.end(), [](const LatticePoint& a, const LatticePoint& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    return out;
}

SparsePoly q2_quintic() {
    std::vector<std::string> v{"x", "y", "z"};
    auto x = SparsePoly::variable(v, "x"), y = SparsePoly::variable(v, "y"), z = SparsePoly::variable(v, "z");
    SparsePoly c = y * y - x * z;
    return c * c * (x * make_rational(1, 4) + y + z) - x * x * c * (x + y * Rational(2)) + x.pow(5);
}

Jet q2_jet() {
    std::vector<std::string> v{"x", "y", "z"};
    auto y = SparsePoly::variable(v, "y");
    return {"x", y.pow(2) - y.pow(5) + y.pow(6) * make_rational(1, 2)};
}

}  // namespace kwall::curvealg
