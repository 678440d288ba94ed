#include "kwall/serialize.hpp"

namespace kwall::serialize {

using curvealg::Component;
using curvealg::CurveSpec;
using wallfinder::Inequality;
using wallfinder::Segment;
using wallfinder::Wall;
using wallfinder::Witness;

json rational(const Rational& q) { return to_string(q); }

Rational rational_from(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    fail("ParseError", "expected a rational string, got " + j.dump());
}

json linear_form(const LinearForm& f) { return json::array({rational(f.c0), rational(f.ca), rational(f.cb)}); }

LinearForm linear_form_from(const json& j) {
    if (!j.is_array() || j.size() != 3) fail("ParseError", "linear form must be [c0, ca, cb]");
    return {rational_from(j[0]), rational_from(j[1]), rational_from(j[2])};
}

json curve(const CurveSpec& c) {
    json comps = json::array();
    for (const auto& comp : c.components) {
        json o;
        o["support"] = comp.support;
        if (comp.coeffs) {
            json cs = json::array();
            for (const auto& q : *comp.coeffs) cs.push_back(rational(q));
            o["coeffs"] = cs;
        } else {
            o["coeffs"] = "generic";
        }
        o["mult"] = comp.mult;
        comps.push_back(o);
    }
    json out;
    out["surface"] = c.surface;
    out["components"] = comps;
    return out;
}

CurveSpec curve_from(const json& j) {
    try {
        CurveSpec c;
        c.surface = j.at("surface").get<std::string>();
        curvealg::coordinates(c.surface);
        for (const auto& o : j.at("components")) {
            Component comp;
            comp.support = o.at("support").get<std::vector<curvealg::Exponent>>();
            const auto& cs = o.contains("coeffs") ? o.at("coeffs") : json("generic");
            if (cs.is_string()) {
                if (cs.get<std::string>() != "generic") fail("ParseError", "coeffs must be a list or \"generic\"");
            } else {
                comp.coeffs.emplace();
                for (const auto& q : cs) comp.coeffs->push_back(rational_from(q));
                for (const auto& q : *comp.coeffs)
                    if (q == 0) fail("ParseError", "explicit coefficients must be nonzero");
            }
            comp.mult = o.value("mult", 1);
            c.components.push_back(std::move(comp));
        }
        c.degree();
        return c;
    } catch (const json::exception& e) {
        fail("ParseError", std::string("bad curve: ") + e.what());
    }
}

json profile(const kstab::KProfile& p) {
    json o;
    o["A"] = linear_form(p.A);
    o["S"] = linear_form(p.S);
    o["beta"] = linear_form(p.beta);
    auto w = p.wall();
    o["wall"] = w ? json(display_line(*w)) : json(nullptr);
    if (!p.valuation.empty()) o["valuation"] = p.valuation;
    return o;
}

kstab::KProfile profile_from(const json& j) {
    kstab::KProfile p;
    p.A = linear_form_from(j.at("A"));
    p.S = linear_form_from(j.at("S"));
    p.beta = linear_form_from(j.at("beta"));
    p.valuation = j.value("valuation", "");
    return p;
}

namespace {

json point(const Point2& p) { return json::array({rational(p.x), rational(p.y)}); }
Point2 point_from(const json& j) { return {rational_from(j.at(0)), rational_from(j.at(1))}; }

json witness(const Witness& w) {
    json o;
    o["Q"] = curve(w.Q);
    o["L"] = curve(w.L);
    o["Q_display"] = w.Q_display;
    o["L_display"] = w.L_display;
    o["source"] = w.source;
    o["valuation"] = w.valuation;
    o["profile"] = profile(w.profile);
    json fs = json::array();
    for (const auto& f : w.filters) fs.push_back({{"form", linear_form(f.f)}, {"strict", f.strict}, {"label", f.label}});
    o["filters"] = fs;
    json hs = json::array();
    for (const auto& h : w.horizontal) hs.push_back(linear_form(h));
    o["horizontal"] = hs;
    o["semistable_only"] = w.semistable_only;
    return o;
}

Witness witness_from(const json& j) {
    Witness w;
    w.Q = curve_from(j.at("Q"));
    w.L = curve_from(j.at("L"));
    w.Q_display = j.at("Q_display").get<std::string>();
    w.L_display = j.at("L_display").get<std::string>();
    w.source = j.at("source").get<std::string>();
    w.valuation = j.at("valuation").get<std::string>();
    w.profile = profile_from(j.at("profile"));
    for (const auto& f : j.at("filters"))
        w.filters.push_back({linear_form_from(f.at("form")), f.at("strict").get<bool>(), f.at("label").get<std::string>()});
    for (const auto& h : j.at("horizontal")) w.horizontal.push_back(linear_form_from(h));
    w.semistable_only = j.at("semistable_only").get<bool>();
    return w;
}

}  // namespace

json wall(const Wall& w) {
    json o;
    o["surface"] = w.surface;
    o["line"] = json::array({w.line.c0.get_si(), w.line.ca.get_si(), w.line.cb.get_si()});
    o["display"] = w.display();
    o["Q"] = curve(w.witness.Q);
    o["L"] = curve(w.witness.L);
    o["segment"] = json::array({point(w.segment.p0), point(w.segment.p1)});
    o["segment_open"] = json::array({w.segment.open0, w.segment.open1});
    o["kind"] = wallfinder::kind_name(w.kind);
    o["witness"] = witness(w.witness);
    json alts = json::array();
    for (const auto& a : w.alternates) alts.push_back(witness(a));
    o["alternates"] = alts;
    o["notes"] = w.notes;
    return o;
}

Wall wall_from(const json& j) {
    try {
        Wall w;
        w.surface = j.at("surface").get<std::string>();
        const auto& l = j.at("line");
        w.line = normalize_line({Rational(l.at(0).get<long>()), Rational(l.at(1).get<long>()), Rational(l.at(2).get<long>())});
        if (display_line(w.line) != j.at("display").get<std::string>()) fail("ParseError", "display does not match line");
        w.witness = witness_from(j.at("witness"));
        w.segment.p0 = point_from(j.at("segment").at(0));
        w.segment.p1 = point_from(j.at("segment").at(1));
        w.segment.open0 = j.at("segment_open").at(0).get<bool>();
        w.segment.open1 = j.at("segment_open").at(1).get<bool>();
        w.kind = wallfinder::kind_from_name(j.at("kind").get<std::string>());
        for (const auto& a : j.at("alternates")) w.alternates.push_back(witness_from(a));
        w.notes = j.at("notes").get<std::vector<std::string>>();
        return w;
    } catch (const json::exception& e) {
        fail("ParseError", std::string("bad wall: ") + e.what());
    }
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail("ParseError", e.what());
    }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace kwall::serialize
