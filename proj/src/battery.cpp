#include "kwall/battery.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "kwall/gitslope.hpp"
#include "kwall/oracle.hpp"
#include "kwall/serialize.hpp"
#include "kwall/wallfinder.hpp"

namespace kwall::battery {

namespace {

using wallfinder::Wall;

// pinned limits and tolerances
constexpr double kWallSeconds = 10;
constexpr double kSSeconds = 5;
constexpr double kA12Seconds = 1;
constexpr double kOracleSeconds = 120;
constexpr double kCheckSeconds = 120;
constexpr long kOracleLevel = 40;
const Rational kOracleTolerance = make_rational(1, 20);
constexpr long kChamberSamples = 1000000;
constexpr long kGoldenChambers = 80;

const std::map<std::string, std::set<std::string>>& expected_walls() {
    static const std::map<std::string, std::set<std::string>> w{
        {"p2",
         {"2b=5a", "5b=11a", "b=2a", "7b=13a", "4b=7a", "3b=5a", "5b=8a", "7b=10a", "a=b", "8b=5a", "5b=2a",
          "4b=a", "7b=a"}},
        {"p114", {"7a-b=3", "35a-17b=15", "7a-4b=3", "11a+b=6", "11a-2b=6", "11a-5b=6"}},
        {"p1425", {"115a+11b=63", "115a-19b=63", "115a-49b=63", "95a+13b=54", "95a-17b=54", "95a-47b=54"}},
        {"x26", {"45a-17b=24", "45a-7b=24", "15a+b=8"}},
    };
    return w;
}

const std::vector<Wall>& walls() {
    static const auto w = wallfinder::enumerate_walls();
    return w;
}

struct Log {
    std::ostringstream os;
    bool ok = true;
    void fail(const std::string& what) {
        if (!ok) os << "; ";
        ok = false;
        os << what;
    }
    bool expect(bool cond, const std::string& what) {
        if (!cond) fail(what);
        return cond;
    }
};

Outcome timed(const std::function<Outcome()>& body, double limit) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const Error& e) {
        o = {false, e.what()};
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.seconds > limit) {
        o.pass = false;
        std::ostringstream os;
        os << o.detail << "; took " << o.seconds << " s, limit " << limit << " s";
        o.detail = os.str();
    }
    return o;
}

Outcome finish(Log& log, const std::string& ok_detail) { return {log.ok, log.ok ? ok_detail : log.os.str()}; }

Outcome wall_tables() {
    auto ws = wallfinder::enumerate_walls();
    Log log;
    std::map<std::string, std::set<std::string>> got;
    for (const auto& w : ws) got[w.surface].insert(w.display());
    for (const auto& [s, lines] : expected_walls()) {
        for (const auto& l : lines) log.expect(got[s].count(l), s + " misses " + l);
        for (const auto& l : got[s]) log.expect(lines.count(l), s + " has extra " + l);
    }
    log.expect(ws.size() == 28, "expected 28 walls, got " + std::to_string(ws.size()));
    return finish(log, "28 walls, per surface 13/6/6/3 (p2/p114/p1425/x26), all lines exact");
}

Outcome s_battery() {
    Log log;
    long checked = 0;
    const auto& P2 = toric::surface("p2");
    const auto& P114 = toric::surface("p114");
    const auto& P1425 = toric::surface("p1425");
    for (long n1 = 1; n1 <= 12; ++n1)
        for (long n2 = 1; n2 <= 12; ++n2) {
            if (std::gcd(n1, n2) != 1) continue;
            std::string w = "(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
            for (int k = 0; k < 3; ++k, ++checked)
                log.expect(toric::s_invariant(P2, toric::chart_valuation(P2, k, n1, n2)) == n1 + n2, "p2 wt" + w);
            log.expect(toric::s_invariant(P114, toric::chart_valuation(P114, 0, n1, n2)) == 2 * n1 + make_rational(n2, 2),
                       "p114 E wt" + w);
            log.expect(toric::s_invariant(P1425, toric::chart_valuation(P1425, 0, n1, n2)) ==
                           make_rational(25 * n1 + 4 * n2, 10),
                       "p1425 E wt" + w);
            checked += 2;
        }
    auto div = [](const toric::ToricSurface& X, int k) -> Rational {
        return toric::s_invariant(X, toric::divisor_valuation(X, k));
    };
    log.expect(div(P114, 0) == 2, "p114 H_x");
    log.expect(div(P114, 1) == 2, "p114 H_y");
    log.expect(div(P114, 2) == make_rational(1, 2), "p114 H_z");
    log.expect(div(P1425, 0) == 10, "p1425 H_x");
    log.expect(div(P1425, 1) == make_rational(5, 2), "p1425 H_y");
    log.expect(toric::s_invariant(P1425, toric::chart_valuation(P1425, 2, 1, 4).primitive(P1425)) == make_rational(4, 5),
               "p1425 blowup at the 1/5 point");
    return finish(log, std::to_string(checked + 6) + " S values exact");
}

Outcome a12() {
    Log log;
    auto Q2 = curvealg::q2_quintic();
    auto jet = curvealg::q2_jet();
    const auto& vars = Q2.vars();
    auto shifted = curvealg::substitute(Q2.set_one("z"), "x", curvealg::SparsePoly::variable(vars, "x") + jet.shift);
    std::vector<Rational> w{13, 2, 0};
    Rational ord = curvealg::weighted_order(shifted, w);
    auto init = curvealg::initial_part(shifted, w);
    log.expect(ord == 26, "weighted order " + to_string(ord) + " != 26");
    log.expect(init.coeff({0, 13, 0}) != 0, "no y^13 term in the initial part");
    log.expect(init.coeff({2, 0, 0}) != 0, "no x'^2 term in the initial part");
    Rational s = kstab::s_quasimonomial_p2(13, 2, kstab::a12_candidates());
    log.expect(s == make_rational(51, 5), "S = " + to_string(s));
    kstab::PairConfig cfg{"p2", curvealg::explicit_curve("p2", Q2), curvealg::generic_curve("p2", {{1, 0, 0}})};
    auto prof = kstab::beta_profile(cfg, kstab::p2_jet_valuation());
    auto wall = prof.wall();
    log.expect(wall && display_line(*wall) == "15a+b=8", "wall " + (wall ? display_line(*wall) : std::string("none")));
    return finish(log, "order 26, initial part x'^2 and y^13, S = 51/5, wall 15a+b=8");
}

Outcome oracle_convergence() {
    Log log;
    struct Case {
        std::string surface, valuation;
        Rational target;
    };
    const std::vector<Case> cases{{"p2", "blowup", 2},
                                  {"p2", "jet", make_rational(51, 5)},
                                  {"x26", "x26:quotient", make_rational(27, 5)},
                                  {"p1425", "prim(1,4)@2", make_rational(4, 5)}};
    std::ostringstream detail;
    for (const auto& c : cases) {
        auto v = oracle::named_valuation(c.surface, c.valuation);
        log.expect(v.S_X == c.target, c.surface + " " + c.valuation + " target mismatch");
        Rational s = oracle::s_estimate(c.surface, v, kOracleLevel);
        Rational err = abs(Rational((s - c.target) / c.target));
        log.expect(err <= kOracleTolerance, c.surface + " " + c.valuation + " rel err " + std::to_string(to_double(err)));
        if (!detail.str().empty()) detail << ", ";
        detail << c.surface << " " << c.valuation << " " << std::fixed << std::setprecision(2) << 100 * to_double(err)
               << "%";
    }
    return finish(log, "relative errors at m = 40: " + detail.str());
}

Outcome volumes() {
    Log log;
    for (const char* s : {"p2", "p114", "p1425"})
        log.expect(toric::anticanonical_volume(toric::surface(s)) == 9, std::string(s) + " volume");
    for (long m = 1; m <= 10; ++m)
        log.expect(oracle::graded_dim("x26", m) == (3 * m + 1) * (3 * m + 2) / 2, "x26 dim at m=" + std::to_string(m));
    return finish(log, "2*area = 9 on three toric surfaces; X26 dims match for m <= 10");
}

Outcome noether_t() {
    Log log;
    for (const auto& id : kstab::surface_ids()) log.expect(kstab::noether_check(kstab::descriptor(id)), "noether " + id);
    log.expect(kstab::is_T_singularity(25, 4).is_T, "1/25(1,4)");
    log.expect(kstab::is_T_singularity(4, 1).is_T, "1/4(1,1)");
    log.expect(!kstab::is_T_singularity(5, 1).is_T, "1/5(1,1)");
    return finish(log, "Noether on four surfaces; T: (25,4) yes, (4,1) yes, (5,1) no");
}

Outcome lct() {
    Log log;
    long n = 0;
    for (const auto& w : walls()) {
        if (w.surface != "p2") continue;
        ++n;
        Rational t = Rational(-w.line.ca) / Rational(w.line.cb);
        auto v = wallfinder::witness_valuation(w.witness);
        Rational c = kstab::lct_certificate({"p2", w.witness.Q, w.witness.L}, v, t);
        log.expect(c == 3 / (5 + t), w.display() + ": " + to_string(c) + " != 3/(5+t)");
    }
    log.expect(n == 13, "expected 13 p2 walls");
    return finish(log, "A/ord = 3/(5+t) on all 13 p2 walls");
}

Outcome constraints() {
    Log log;
    auto has = [](const std::vector<LinearForm>& fs, const LinearForm& f) {
        for (const auto& g : fs)
            if (g == f) return true;
        return false;
    };
    log.expect(has(kstab::domain_constraints("p2"), {0, 5, -2}), "5a >= 2b");
    log.expect(has(kstab::domain_constraints("p114"), {-3, 7, -1}), "7a-b >= 3");
    log.expect(has(kstab::domain_constraints("p114", true), {-6, 11, 1}), "11a+b >= 6");
    log.expect(has(kstab::domain_constraints("x26"), {-8, 15, 1}), "15a+b >= 8");
    log.expect(has(kstab::domain_constraints("p1425"), {-63, 115, 11}), "115a+11b >= 63");
    for (const auto& w : walls())
        for (const auto& p : {w.segment.p0, w.segment.p1}) {
            for (const auto& f : kstab::domain_constraints(w.surface))
                log.expect(f(p.x, p.y) >= 0, w.surface + " " + w.display() + " leaves its constraint region");
            for (const auto& f : kstab::coefficient_domain())
                log.expect(f(p.x, p.y) >= 0, w.surface + " " + w.display() + " leaves the domain");
        }
    return finish(log, "five constraints exact; all 28 segments inside their regions");
}

Outcome git() {
    using namespace gitslope;
    Log log;
    auto qpoint = [](std::initializer_list<std::pair<int, long>> f6, std::initializer_list<std::pair<int, long>> f10) {
        QPoint q;
        for (auto& c : q.f6) c = 0;
        for (auto& c : q.f10) c = 0;
        for (auto [k, v] : f6) q.f6[k] = v;
        for (auto [k, v] : f10) q.f10[k] = v;
        return q;
    };
    const LPoint xy{{0, 1, 0}}, x2{{1, 0, 0}};
    const Rational a = make_rational(1, 3), b = make_rational(2, 7);
    log.expect(state_interval(qpoint({{0, 1}, {1, 1}}, {})) == Interval{-6, 6}, "interval of x^6+y^6");
    log.expect(git_status(qpoint({{0, 1}, {1, 1}}, {}), xy, a, b) == GitStatus::Stable, "x^6+y^6 with xy");
    log.expect(git_status(qpoint({{0, 1}}, {}), xy, a, b) == GitStatus::Unstable, "x^6 with xy");
    log.expect(git_status(qpoint({}, {{5, 1}}), xy, 1, 1) == GitStatus::PolystableStrict, "x^5y^5 with xy");
    // y^6 + x^5y^5 with x^2: I = [2b - 6a, 2b]
    auto q = qpoint({{1, 1}}, {{5, 4}});
    for (long ia = 1; ia <= 4; ++ia)
        for (long ib = 1; ib <= 16; ++ib) {
            GitStatus want = 2 * ib < 6 * ia    ? GitStatus::Stable
                             : 2 * ib == 6 * ia ? GitStatus::StrictlySemistable
                                                : GitStatus::Unstable;
            log.expect(git_status(q, x2, ia, ib) == want,
                       "y^6+x^5y^5 with x^2 at (" + std::to_string(ia) + "," + std::to_string(ib) + ")");
        }
    log.expect(eplus_fiber_dim(Side::Plus) == 12 && eplus_fiber_dim(Side::Minus) == 0, "fiber dims");
    log.expect(fiber_dims_consistent(), "d- + d+ + 1 != 13");
    return finish(log, "worked examples match; d+ = 12, d- = 0, d- + d+ + 1 = 13");
}

Outcome suites_outcome() {
    auto suites = property_suites();
    Log log;
    for (const auto& s : suites) log.expect(s.outcome.pass, s.name + ": " + s.outcome.detail);
    return finish(log, std::to_string(suites.size()) + " property suites pass");
}

// ---------------------------------------------------------------- suites

Outcome beta_identity() {
    Log log;
    long n = 0;
    for (const auto& w : walls()) {
        std::vector<const wallfinder::Witness*> all{&w.witness};
        for (const auto& a : w.alternates) all.push_back(&a);
        for (const auto* wit : all) {
            ++n;
            const auto& p = wit->profile;
            Rational A_X = p.A.c0, S_X = p.S.c0, ordQ = -p.A.ca, ordL = -p.A.cb;
            LinearForm expect{A_X - S_X, 5 * S_X / 3 - ordQ, S_X / 3 - ordL};
            log.expect(p.beta == p.A - p.S, w.display() + ": beta != A - S");
            log.expect(p.beta == expect, w.display() + ": coefficient identity");
            auto v = wallfinder::witness_valuation(*wit);
            auto again = kstab::beta_profile({wit->Q.surface, wit->Q, wit->L}, v);
            log.expect(again.beta == p.beta, w.display() + ": recomputed beta differs");
        }
    }
    return finish(log, std::to_string(n) + " witnesses");
}

Outcome homogeneity() {
    Log log;
    static const std::regex wt(R"(wt\((\d+),(\d+)\) at \[(\d):(\d):(\d)\])");
    long n = 0;
    for (const auto& w : walls()) {
        if (w.surface == "x26") continue;
        const auto& X = toric::surface(w.surface);
        const auto& v = w.witness.valuation;
        LatticePoint p;
        std::smatch m;
        if (std::regex_match(v, m, wt)) {
            int k = m[3] == "1" ? 0 : m[4] == "1" ? 1 : 2;
            p = toric::chart_valuation(X, k, std::stol(m[1]), std::stol(m[2])).point;
        } else if (v.rfind("H_", 0) == 0) {
            p = X.rays[X.coordinate(v.substr(2))];
        } else {
            continue;
        }
        kstab::PairConfig cfg{w.surface, w.witness.Q, w.witness.L};
        auto base = kstab::beta_profile(cfg, kstab::toric_valuation(w.surface, toric::make_valuation(X, p)));
        log.expect(base.beta == w.witness.profile.beta, w.display() + ": lattice point does not reproduce beta");
        for (long k : {2, 3, 7}) {
            auto vk = kstab::toric_valuation(w.surface, toric::make_valuation(X, {k * p.u, k * p.v}));
            log.expect(kstab::beta_profile(cfg, vk).beta == base.beta * Rational(k),
                       w.display() + ": beta not homogeneous at k=" + std::to_string(k));
        }
        ++n;
    }
    log.expect(n >= 20, "only " + std::to_string(n) + " toric witnesses");
    return finish(log, "beta_{kv} = k beta_v for k = 2, 3, 7 on " + std::to_string(n) + " toric witnesses");
}

Outcome sign_flip() {
    Log log;
    const Rational eps = make_rational(1, 10000);
    for (const auto& w : walls()) {
        auto m = w.segment.midpoint();
        const auto& beta = w.witness.profile.beta;
        Rational na(w.line.ca), nb(w.line.cb);
        Rational plus = beta(m.x + eps * na, m.y + eps * nb), minus = beta(m.x - eps * na, m.y - eps * nb);
        log.expect(beta(m.x, m.y) == 0, w.display() + ": beta nonzero at the midpoint");
        log.expect((plus > 0 && minus < 0) || (plus < 0 && minus > 0), w.display() + ": no sign change");
    }
    return finish(log, "beta changes sign across all 28 walls");
}

Outcome euler() {
    Log log;
    auto arr = wallfinder::chamber_decomposition(walls());
    log.expect(arr.euler_ok(), "V - E + F != 1");
    long sv = wallfinder::sign_vector_count(arr.lines, kChamberSamples, 1);
    log.expect(static_cast<long>(arr.chambers.size()) == kGoldenChambers,
               "chambers " + std::to_string(arr.chambers.size()));
    log.expect(sv == kGoldenChambers, "sign vectors " + std::to_string(sv));
    std::ostringstream os;
    os << "V=" << arr.vertices << " E=" << arr.edges << " F=" << arr.chambers.size() << ", sign vectors " << sv;
    return finish(log, os.str());
}

Outcome idempotence() {
    Log log;
    auto text = wallfinder::emit_tables(walls(), "json");
    auto again = wallfinder::enumerate_walls("all", 2);
    log.expect(wallfinder::emit_tables(again, "json") == text, "second enumeration differs");
    std::reverse(again.begin(), again.end());
    wallfinder::sort_walls(again);
    log.expect(wallfinder::emit_tables(again, "json") == text, "sort is not canonical");
    std::vector<Wall> back;
    for (const auto& o : serialize::parse(text)) back.push_back(serialize::wall_from(o));
    log.expect(wallfinder::emit_tables(back, "json") == text, "JSON round trip differs");
    return finish(log, "enumeration, ordering and JSON round trip stable");
}

}  // namespace

std::string criterion_title(int id) {
    static const std::vector<std::string> t{"wall tables",
                                            "S closed-form battery",
                                            "A12 quintic",
                                            "oracle convergence",
                                            "anticanonical volumes",
                                            "Noether and T-checks",
                                            "lct certificates",
                                            "existence constraints",
                                            "GIT",
                                            "property suites"};
    if (id < 1 || id > kCriteria) fail("InvalidCriterion", "criteria are numbered 1.." + std::to_string(kCriteria));
    return t[id - 1];
}

Outcome criterion(int id) {
    switch (id) {
        case 1: return timed(wall_tables, kWallSeconds);
        case 2: return timed(s_battery, kSSeconds);
        case 3: return timed(a12, kA12Seconds);
        case 4: return timed(oracle_convergence, kOracleSeconds);
        case 5: return timed(volumes, kCheckSeconds);
        case 6: return timed(noether_t, kCheckSeconds);
        case 7: return timed(lct, kCheckSeconds);
        case 8: return timed(constraints, kCheckSeconds);
        case 9: return timed(git, kCheckSeconds);
        case 10: return timed(suites_outcome, kCheckSeconds);
    }
    fail("InvalidCriterion", "criteria are numbered 1.." + std::to_string(kCriteria));
}

std::vector<Suite> property_suites() {
    return {{"beta identity", timed(beta_identity, kCheckSeconds)},
            {"valuation homogeneity", timed(homogeneity, kCheckSeconds)},
            {"sign flip across walls", timed(sign_flip, kCheckSeconds)},
            {"arrangement Euler relation", timed(euler, kCheckSeconds)},
            {"enumeration idempotence", timed(idempotence, kCheckSeconds)}};
}

}  // namespace kwall::battery
