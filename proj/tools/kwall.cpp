#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "kwall/battery.hpp"
#include "kwall/gitslope.hpp"
#include "kwall/oracle.hpp"
#include "kwall/serialize.hpp"
#include "kwall/wallfinder.hpp"

using namespace kwall;

namespace {

enum Exit { Ok = 0, Usage = 2, Domain = 3, Battery = 4 };

struct Globals {
    std::string format = "md";
    std::string out;
    int jobs = 1;
};

// errors the user fixes by changing the input rather than the mathematics
bool is_usage_error(const std::string& kind) {
    return kind == "ParseError" || kind == "IOError" || kind == "UnknownFormat" || kind == "InvalidSlope" ||
           kind == "InvalidLevel";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IOError", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_out(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f || !(f << text)) fail("IOError", "cannot write " + g.out);
}

std::pair<Rational, Rational> parse_slope(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) fail("ParseError", "slope must be 'a,b', got '" + s + "'");
    return {parse_rational(s.substr(0, comma)), parse_rational(s.substr(comma + 1))};
}

int cmd_tables(const Globals& g, const std::string& surface, bool exhaustive) {
    std::map<std::string, wallfinder::EnumerationStats> stats;
    auto walls = wallfinder::enumerate_walls(surface, g.jobs, exhaustive, &stats);
    auto text = wallfinder::emit_tables(walls, g.format);
    if (g.format == "md") {
        long unrealizable = 0;
        for (const auto& [s, st] : stats) unrealizable += st.unrealizable_l_orders;
        text += "\n" + std::to_string(walls.size()) + " walls; " + std::to_string(unrealizable) +
                " candidate L orders skipped as unrealizable by a reduced L.\n";
    }
    write_out(g, text);
    return Ok;
}

int cmd_beta(const Globals& g, const std::string& config, const std::string& valuation, const std::string& slope) {
    auto j = serialize::parse(read_file(config));
    kstab::PairConfig cfg;
    try {
        cfg.surface = j.at("surface").get<std::string>();
        cfg.Q = serialize::curve_from(j.at("Q"));
        cfg.L = serialize::curve_from(j.at("L"));
    } catch (const serialize::json::exception& e) {
        fail("ParseError", std::string("pair config: ") + e.what());
    }
    cfg.validate();
    auto prof = kstab::beta_profile(cfg, oracle::named_valuation(cfg.surface, valuation));
    auto o = serialize::profile(prof);
    if (!slope.empty()) {
        auto [a, b] = parse_slope(slope);
        Rational v = prof.beta(a, b);
        o["slope"] = {to_string(a), to_string(b)};
        o["beta_at_slope"] = to_string(v);
        o["sign"] = v > 0 ? "positive" : v < 0 ? "negative" : "zero";
    }
    write_out(g, serialize::dump(o));
    return Ok;
}

int cmd_s(const Globals& g, const std::string& surface, const std::string& valuation) {
    auto v = oracle::named_valuation(surface, valuation);
    serialize::json o;
    o["surface"] = surface;
    o["valuation"] = v.description;
    o["A"] = to_string(v.A_X);
    o["S"] = to_string(v.S_X);
    write_out(g, serialize::dump(o));
    return Ok;
}

serialize::json point_json(const Point2& p) { return {to_string(p.x), to_string(p.y)}; }

int cmd_chambers(const Globals& g, const std::string& svg, bool as_json) {
    auto walls = wallfinder::enumerate_walls("all", g.jobs);
    auto arr = wallfinder::chamber_decomposition(walls);
    if (!svg.empty()) {
        std::ofstream f(svg);
        if (!f || !(f << wallfinder::emit_chamber_svg(arr))) fail("IOError", "cannot write " + svg);
    }
    if (as_json) {
        serialize::json o;
        auto lines = serialize::json::array();
        for (const auto& l : arr.lines) lines.push_back(display_line(l));
        o["lines"] = lines;
        o["vertices"] = arr.vertices;
        o["edges"] = arr.edges;
        o["chambers"] = arr.chambers.size();
        o["euler"] = arr.euler_ok();
        auto cells = serialize::json::array();
        for (const auto& c : arr.chambers) {
            serialize::json cell;
            cell["sample"] = point_json(c.sample);
            auto vs = serialize::json::array();
            for (const auto& p : c.vertices) vs.push_back(point_json(p));
            cell["vertices"] = vs;
            cells.push_back(cell);
        }
        o["cells"] = cells;
        write_out(g, serialize::dump(o));
    } else if (svg.empty() || !g.out.empty()) {
        std::ostringstream os;
        os << arr.lines.size() << " lines, " << arr.chambers.size() << " chambers, V = " << arr.vertices
           << ", E = " << arr.edges << ", Euler " << (arr.euler_ok() ? "holds" : "FAILS") << "\n";
        write_out(g, os.str());
    }
    return arr.euler_ok() ? Ok : Battery;
}

int cmd_oracle(const Globals& g, const std::string& surface, const std::string& valuation, long m) {
    if (m < 1 || m > 200) fail("InvalidLevel", "m must lie in 1..200");
    auto v = oracle::named_valuation(surface, valuation);
    std::vector<long> ms;
    for (long k = 1; k <= 4; ++k)
        if (long mk = m * k / 4; mk >= 1 && (ms.empty() || ms.back() != mk)) ms.push_back(mk);
    write_out(g, oracle::report_json(oracle::s_report(surface, v, ms)));
    return Ok;
}

int cmd_git(const Globals& g, const std::string& slope, const std::string& qfile, const std::string& l) {
    auto [a, b] = parse_slope(slope);
    auto q = gitslope::parse_qpoint_json(read_file(qfile));
    auto s = gitslope::git_status(q, gitslope::parse_lpoint(l), a, b);
    write_out(g, gitslope::status_name(s) + "\n");
    return gitslope::is_semistable(s) ? Ok : Domain;
}

int cmd_lct(const Globals& g, const std::string& wall) {
    auto line = parse_line(wall);
    for (const auto& w : wallfinder::enumerate_walls("p2")) {
        if (!(w.line == line)) continue;
        Rational t = Rational(-w.line.ca) / Rational(w.line.cb);
        auto c = kstab::lct_certificate({"p2", w.witness.Q, w.witness.L}, wallfinder::witness_valuation(w.witness), t);
        Rational want = 3 / (5 + t);
        bool ok = c == want;
        write_out(g, "certificate " + to_string(c) + (ok ? " == " : " != ") + "3/(5+" + to_string(t) +
                         "): " + (ok ? "PASS" : "FAIL") + "\n");
        return ok ? Ok : Battery;
    }
    fail("UnknownWall", "'" + wall + "' is not a P^2 wall");
}

int cmd_check(const Globals& g, int only) {
    std::ostringstream os;
    bool all = true;
    int first = only ? only : 1, last = only ? only : battery::kCriteria;
    for (int id = first; id <= last; ++id) {
        auto o = battery::criterion(id);
        all &= o.pass;
        os << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << battery::criterion_title(id)
           << "): " << o.detail << "\n";
        if (id == battery::kCriteria && !o.pass)
            for (const auto& s : battery::property_suites())
                os << "  " << (s.outcome.pass ? "pass" : "FAIL") << " " << s.name << ": " << s.outcome.detail << "\n";
    }
    write_out(g, os.str());
    return all ? Ok : Battery;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Walls and chambers of K-moduli of plane quintics with a line"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "tables format: md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
    app.add_option("--out", g.out, "write output here instead of stdout");
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);

    std::string surface = "all", valuation = "blowup", config, slope, svg, qfile, lpoint, wall;
    bool exhaustive = false, as_json = false;
    long m = 40;
    int only = 0;

    auto* tables = app.add_subcommand("tables", "critical lines per surface");
    tables->add_option("--surface", surface)->check(CLI::IsMember({"p2", "p114", "p1425", "x26", "all"}));
    tables->add_flag("--exhaustive", exhaustive, "search P(1,1,4) weighted blowups beyond the binomial components");

    auto* beta = app.add_subcommand("beta", "A, S and beta of a pair configuration");
    beta->add_option("config", config, "pair configuration JSON")->required();
    beta->add_option("--valuation", valuation);
    beta->add_option("--slope", slope, "a,b as rationals");

    auto* s = app.add_subcommand("s", "log discrepancy and S of a named valuation");
    s->add_option("--surface", surface)->required();
    s->add_option("--valuation", valuation);

    auto* chambers = app.add_subcommand("chambers", "chamber decomposition of the coefficient domain");
    chambers->add_option("--svg", svg, "write the figure here");
    chambers->add_flag("--json", as_json);

    auto* orc = app.add_subcommand("oracle", "section-counting estimate of S");
    orc->add_option("--surface", surface)->required();
    orc->add_option("--valuation", valuation);
    orc->add_option("--m", m, "largest level");

    auto* git = app.add_subcommand("git", "GIT status with slope");
    git->add_option("--slope", slope)->required();
    git->add_option("--q-json", qfile)->required();
    git->add_option("--l", lpoint)->required();

    auto* lct = app.add_subcommand("lct", "lct certificate of a P^2 wall");
    lct->add_option("--wall", wall)->required();

    auto* check = app.add_subcommand("check", "full invariant battery");
    check->add_option("--criterion", only)->check(CLI::Range(1, battery::kCriteria));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (*tables) return cmd_tables(g, surface, exhaustive);
        if (*beta) return cmd_beta(g, config, valuation, slope);
        if (*s) return cmd_s(g, surface, valuation);
        if (*chambers) return cmd_chambers(g, svg, as_json);
        if (*orc) return cmd_oracle(g, surface, valuation, m);
        if (*git) return cmd_git(g, slope, qfile, lpoint);
        if (*lct) return cmd_lct(g, wall);
        if (*check) return cmd_check(g, only);
    } catch (const Error& e) {
        std::cerr << "kwall: " << e.what() << "\n";
        return is_usage_error(e.kind()) ? Usage : Domain;
    }
    return Usage;
}
