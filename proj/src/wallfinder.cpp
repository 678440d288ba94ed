#include "kwall/wallfinder.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <mutex>
#include <random>
#include <regex>
#include <set>
#include <sstream>

#include "kwall/serialize.hpp"

namespace kwall::wallfinder {

using curvealg::Exponent;
using curvealg::generic_curve;
using kstab::make_profile;

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Horizontal: return "Horizontal";
        case Kind::VerticalI: return "VerticalI";
        case Kind::VerticalII: return "VerticalII";
        case Kind::VerticalIII: return "VerticalIII";
    }
    return "";
}

Kind kind_from_name(const std::string& s) {
    for (Kind k : {Kind::Horizontal, Kind::VerticalI, Kind::VerticalII, Kind::VerticalIII})
        if (kind_name(k) == s) return k;
    fail("ParseError", "unknown wall kind '" + s + "'");
}

std::optional<Segment> clip(const LinearForm& line, const std::vector<Inequality>& ineqs) {
    if (line.is_constant()) return std::nullopt;
    // p(s) = base + s*dir
    Point2 base = line.cb != 0 ? Point2{0, Rational(-line.c0 / line.cb)} : Point2{Rational(-line.c0 / line.ca), 0};
    Point2 dir{line.cb, Rational(-line.ca)};
    std::optional<Rational> lo, hi;
    bool lo_open = false, hi_open = false;
    for (const auto& q : ineqs) {
        Rational c = q.f(base.x, base.y);
        Rational k = q.f.ca * dir.x + q.f.cb * dir.y;
        if (k == 0) {
            if (c < 0 || (q.strict && c == 0)) return std::nullopt;
            continue;
        }
        Rational s = -c / k;
        if (k > 0) {
            if (!lo || s > *lo || (s == *lo && q.strict)) {
                lo = s;
                lo_open = q.strict;
            }
        } else if (!hi || s < *hi || (s == *hi && q.strict)) {
            hi = s;
            hi_open = q.strict;
        }
    }
    if (!lo || !hi || *lo >= *hi) return std::nullopt;
    auto at = [&](const Rational& s) -> Point2 { return {base.x + s * dir.x, base.y + s * dir.y}; };
    Segment seg{at(*lo), at(*hi), lo_open, hi_open};
    if (seg.p1 < seg.p0) {
        std::swap(seg.p0, seg.p1);
        std::swap(seg.open0, seg.open1);
    }
    return seg;
}

namespace {

std::vector<Inequality> domain_inequalities() {
    std::vector<Inequality> out;
    const char* labels[] = {"a>=0", "b>=0", "5a+b<=3", "2b<=5a"};
    auto dom = kstab::coefficient_domain();
    for (size_t i = 0; i < dom.size(); ++i) out.push_back({dom[i], false, labels[i]});
    return out;
}

// a > 0, b > 0 and 5a + b < 3 are strict for pairs; 5a >= 2b is closed
bool in_pair_domain(const Point2& p) {
    auto dom = kstab::coefficient_domain();
    for (size_t i = 0; i < 3; ++i)
        if (dom[i](p.x, p.y) <= 0) return false;
    return dom[3](p.x, p.y) >= 0;
}

bool admissible(const LinearForm& line, const std::vector<Inequality>& filters) {
    auto ineqs = domain_inequalities();
    ineqs.insert(ineqs.end(), filters.begin(), filters.end());
    auto seg = clip(line, ineqs);
    return seg && in_pair_domain(seg->midpoint());
}

bool same_locus(const LinearForm& f, const IntegerLine& l) {
    return !f.is_constant() && normalize_line(f) == l;
}

std::vector<Inequality> constraints(const std::string& surface, bool rank_one = false) {
    std::vector<Inequality> out;
    for (const auto& f : kstab::domain_constraints(surface, rank_one)) out.push_back({f, false, "surface constraint"});
    return out;
}

Inequality vertical(const std::string& label, long ordQ, long ordL, const Rational& S) {
    return {make_profile(1, ordQ, ordL, S).beta, true, "beta(" + label + ")>0"};
}

std::string monomial_string(const std::vector<std::string>& names, const Exponent& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        s += names[i];
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

// monomial gcd times the remaining terms, by ascending x then descending y
std::string support_display(const std::string& surface, std::vector<Exponent> support) {
    const auto& names = curvealg::coordinates(surface).names;
    if (support.size() == 1) return monomial_string(names, support[0]);
    Exponent g = support[0];
    for (const auto& e : support)
        for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
    for (auto& e : support)
        for (size_t i = 0; i < g.size(); ++i) e[i] -= g[i];
    std::sort(support.begin(), support.end(), [](const Exponent& p, const Exponent& q) {
        if (p[0] != q[0]) return p[0] < q[0];
        return p[1] > q[1];
    });
    std::string inner;
    for (const auto& e : support) inner += (inner.empty() ? "" : "+") + monomial_string(names, e);
    std::string head = monomial_string(names, g);
    return head == "1" ? inner : head + "(" + inner + ")";
}

const kstab::Valuation& cached_fixed_point(const std::string& surface, int k, long wi, long wj) {
    static std::mutex mu;
    static std::map<std::tuple<std::string, int, long, long>, kstab::Valuation> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(surface, k, wi, wj);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, kstab::fixed_point_valuation(surface, k, wi, wj)).first;
    return it->second;
}

struct Candidate {
    Witness w;
    std::vector<long> key;  // smaller is preferred as the primary witness
};

class Collector {
public:
    Collector(std::string surface, Kind kind, EnumerationStats* stats)
        : surface_(std::move(surface)), kind_(kind), stats_(stats) {}

    void offer(Candidate c, const LinearForm& line, const kstab::Valuation& v) {
        ++stats_->candidates;
        if (line.is_constant()) {
            ++stats_->fake_lines;
            return;
        }
        IntegerLine il = normalize_line(line);
        for (const auto& h : c.w.horizontal)
            if (!h.is_constant() && !same_locus(h, il)) {
                ++stats_->fake_lines;
                return;
            }
        if (admissible(il.form(), c.w.filters)) {
            attach_profile(c, il, v);
            walls_[il].push_back(std::move(c));
            return;
        }
        bool relaxed = false;
        for (auto& f : c.w.filters)
            if (f.strict && same_locus(f.f, il)) {
                f.strict = false;
                relaxed = true;
            }
        if (relaxed && admissible(il.form(), c.w.filters)) {
            attach_profile(c, il, v);
            c.w.semistable_only = true;
            semi_[il].push_back(std::move(c));
            return;
        }
        ++stats_->fake_lines;
    }

    std::vector<Wall> finish() {
        std::vector<Wall> out;
        for (auto& [line, cands] : walls_) {
            std::stable_sort(cands.begin(), cands.end(),
                             [](const Candidate& p, const Candidate& q) { return p.key < q.key; });
            Wall w;
            w.line = line;
            w.surface = surface_;
            w.kind = kind_;
            w.witness = cands[0].w;
            std::set<std::pair<std::string, std::string>> seen{{w.witness.Q_display, w.witness.L_display}};
            for (size_t i = 1; i < cands.size(); ++i)
                if (seen.insert({cands[i].w.Q_display, cands[i].w.L_display}).second)
                    w.alternates.push_back(cands[i].w);
            auto& semi = semi_[line];
            std::stable_sort(semi.begin(), semi.end(),
                             [](const Candidate& p, const Candidate& q) { return p.key < q.key; });
            long flagged = 0;
            for (const auto& s : semi)
                if (seen.insert({s.w.Q_display, s.w.L_display}).second) {
                    w.alternates.push_back(s.w);
                    ++flagged;
                }
            if (flagged)
                w.notes.push_back(std::to_string(flagged) +
                                  " strictly semistable witnesses (a vertical beta vanishes on the wall) kept as "
                                  "flagged alternates");
            auto ineqs = domain_inequalities();
            ineqs.insert(ineqs.end(), w.witness.filters.begin(), w.witness.filters.end());
            w.segment = *clip(line.form(), ineqs);
            out.push_back(std::move(w));
        }
        return out;
    }

private:
    void attach_profile(Candidate& c, const IntegerLine& il, const kstab::Valuation& v) {
        c.w.profile = kstab::beta_profile({surface_, c.w.Q, c.w.L}, v);
        c.w.valuation = v.description;
        auto pw = c.w.profile.wall();
        if (!pw || !(*pw == il))
            fail("InternalInvariant", "beta of " + c.w.Q_display + " along " + v.description +
                                          " does not vanish on " + display_line(il));
    }

    std::string surface_;
    Kind kind_;
    EnumerationStats* stats_;
    std::map<IntegerLine, std::vector<Candidate>> walls_, semi_;
};

template <class T>
std::vector<std::vector<T>> subsets(const std::vector<T>& items, size_t min_size) {
    std::vector<std::vector<T>> out;
    const size_t n = items.size();
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        std::vector<T> s;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1UL << i)) s.push_back(items[i]);
        if (s.size() >= min_size) out.push_back(std::move(s));
    }
    return out;
}

void append_support(std::vector<long>& key, const std::vector<Exponent>& support) {
    for (const auto& e : support) key.insert(key.end(), e.begin(), e.end());
}

Exponent min_exponent(const std::vector<Exponent>& support) {
    Exponent g = support[0];
    for (const auto& e : support)
        for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], e[i]);
    return g;
}

void add_note(std::vector<Wall>& walls, const std::string& display, const std::string& note) {
    for (auto& w : walls)
        if (w.display() == display) w.notes.push_back(note);
}

EnumerationStats& sink(EnumerationStats* stats, EnumerationStats& local) { return stats ? *stats : local; }

// ---------------------------------------------------------------- P^2

void p2_futaki(Collector& col, EnumerationStats& st) {
    std::vector<std::array<int, 2>> mons;
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j) mons.push_back({i, j});
    std::set<std::pair<long, long>> ratios;
    for (size_t p = 0; p < mons.size(); ++p)
        for (size_t q = p + 1; q < mons.size(); ++q)
            for (const auto& w : curvealg::invariance_weights({mons[p]}, {mons[q]}))
                if (w.u != w.v && w.u > 0 && w.v > 0) ratios.insert({w.u.get_si(), w.v.get_si()});

    const std::vector<std::string> lnames{"x", "y", "z"};
    for (auto [n1, n2] : ratios) {
        std::map<long, std::vector<Exponent>> classes;
        for (auto [i, j] : mons) classes[i * n1 + j * n2].push_back({i, j, 5 - i - j});
        const auto& val = cached_fixed_point("p2", 2, n1, n2);
        for (const auto& [w, members] : classes) {
            if (members.size() < 2) continue;
            for (const auto& support : subsets(members, 2)) {
                Exponent g = min_exponent(support);
                std::set<long> lorders{0, n1, n2, 2 * n1, 2 * n2};
                for (long o : lorders) {
                    int li = o == 0 ? 2 : o == n1 ? 0 : o == n2 ? 1 : -1;
                    if (li < 0) {
                        ++st.unrealizable_l_orders;
                        continue;
                    }
                    Exponent le{0, 0, 0};
                    le[li] = 1;
                    Candidate c;
                    c.w.Q = generic_curve("p2", support);
                    c.w.L = generic_curve("p2", {le});
                    c.w.Q_display = support_display("p2", support);
                    c.w.L_display = lnames[li];
                    c.w.source = "futaki wt(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
                    for (int h = 0; h < 3; ++h) c.w.filters.push_back(vertical("H_" + lnames[h], g[h], le[h], 1));
                    c.w.filters.push_back(
                        {(kstab::sigma() * make_rational(-1, std::max(n1, n2)) + LinearForm{1, -1, 0}), true,
                         "beta(orbit closure)>0"});
                    LinearForm line = make_profile(n1 + n2, w, o, n1 + n2).beta;
                    c.w.horizontal.push_back(line);
                    c.key = {1, li == 2 ? 0 : 1, n1 > n2 ? 0 : 1, static_cast<long>(support.size())};
                    append_support(c.key, support);
                    col.offer(std::move(c), line, val);
                }
            }
        }
    }
}

void p2_equal_weight(Collector& col) {
    const auto& val = cached_fixed_point("p2", 2, 1, 1);
    for (int k = 0; k <= 4; ++k) {
        std::vector<Exponent> binary;
        for (int i = 0; i <= 5 - k; ++i) binary.push_back({i, 5 - k - i, 0});
        for (int li : {2, 0}) {
            Candidate c;
            c.w.Q = generic_curve("p2", binary);
            if (k > 0) c.w.Q = generic_curve("p2", {{0, 0, 1}}, k) + c.w.Q;
            Exponent le{0, 0, 0};
            le[li] = 1;
            c.w.L = generic_curve("p2", {le});
            std::string lines;
            for (int i = 1; i <= 5 - k; ++i) lines += "l" + std::to_string(i);
            c.w.Q_display = (k == 0 ? "" : k == 1 ? "z" : "z^" + std::to_string(k)) + lines;
            c.w.L_display = li == 2 ? "z" : "x";
            c.w.source = "equal weights at [0:0:1]";
            c.w.filters.push_back(vertical("l_i", 1, 0, 1));
            if (li == 0) c.w.filters.push_back(vertical("L", 0, 1, 1));
            LinearForm line = make_profile(2, 5 - k, li == 0 ? 1 : 0, 2).beta;
            c.w.horizontal = {line, make_profile(1, k, li == 2 ? 1 : 0, 1).beta};
            c.key = {0, li == 2 ? 0 : 1, k};
            col.offer(std::move(c), line, val);
        }
    }
}

void p2_toric(Collector& col) {
    const auto& val = kstab::divisor_valuation("p2", 0);
    const std::vector<std::string> names{"x", "y", "z"};
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; i + j <= 5; ++j) {
            Exponent e{i, j, 5 - i - j};
            for (int li = 0; li < 3; ++li) {
                Exponent le{0, 0, 0};
                le[li] = 1;
                std::vector<LinearForm> forms;
                for (int h = 0; h < 3; ++h) forms.push_back(make_profile(1, e[h], le[h], 1).beta);
                Candidate c;
                c.w.Q = generic_curve("p2", {e});
                c.w.L = generic_curve("p2", {le});
                c.w.Q_display = support_display("p2", {e});
                c.w.L_display = names[li];
                c.w.source = "toric";
                c.w.horizontal = forms;
                c.key = {2, li};
                append_support(c.key, {e});
                col.offer(std::move(c), forms[0], val);
            }
        }
}

// ---------------------------------------------------------------- P(1,1,4)

const std::vector<Exponent> kP114L{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}};

std::vector<Exponent> p114_monomials() {
    std::vector<Exponent> out;
    for (int g = 0; 4 * g <= 10; ++g)
        for (int b = 0; b + 4 * g <= 10; ++b) out.push_back({10 - b - 4 * g, b, g});
    return out;
}

// rank of the z^2 coefficient of generic Q with this support: 0 when missing
int f2_rank(const std::vector<Exponent>& support) {
    std::vector<Exponent> f2;
    for (const auto& e : support)
        if (e[2] == 2) f2.push_back(e);
    if (f2.empty()) return 0;
    if (f2.size() == 1 && f2[0][1] != 1) return 1;
    return 2;
}

void p114_toric(Collector& col) {
    const auto& val = kstab::divisor_valuation("p114", 0);
    for (const auto& e : p114_monomials()) {
        int rank = f2_rank({e});
        if (rank == 0) continue;
        for (size_t li = 0; li < kP114L.size(); ++li) {
            const auto& le = kP114L[li];
            Candidate c;
            c.w.Q = generic_curve("p114", {e});
            c.w.L = generic_curve("p114", {le});
            c.w.Q_display = support_display("p114", {e});
            c.w.L_display = support_display("p114", {le});
            c.w.source = "toric";
            c.w.horizontal = {make_profile(1, e[0], le[0], 2).beta, make_profile(1, e[1], le[1], 2).beta,
                              make_profile(1, e[2], 0, make_rational(1, 2)).beta};
            c.w.filters = constraints("p114", rank == 1);
            c.key = {0, static_cast<long>(li)};
            col.offer(std::move(c), c.w.horizontal[0], val);
        }
    }
}

// one-parameter subgroup scaling y: Q = y^k F(x, z)
void p114_scaling_y(Collector& col) {
    const auto& val = kstab::divisor_valuation("p114", 1);
    for (int k = 0; k <= 2; ++k) {
        std::vector<Exponent> members;
        for (const auto& e : p114_monomials())
            if (e[1] == k) members.push_back(e);
        for (const auto& support : subsets(members, 2)) {
            int rank = f2_rank(support);
            if (rank == 0) continue;
            Exponent g = min_exponent(support);
            int zmax = 0;
            for (const auto& e : support) zmax = std::max(zmax, e[2]);
            for (size_t li = 0; li < kP114L.size(); ++li) {
                const auto& le = kP114L[li];
                Candidate c;
                c.w.Q = generic_curve("p114", support);
                c.w.L = generic_curve("p114", {le});
                c.w.Q_display = support_display("p114", support);
                c.w.L_display = support_display("p114", {le});
                c.w.source = "y-scaling";
                c.w.filters = constraints("p114", rank == 1);
                c.w.filters.push_back(vertical("H_x", g[0], le[0], 2));
                c.w.filters.push_back(vertical("H_z", g[2], 0, make_rational(1, 2)));
                if (zmax > g[2]) c.w.filters.push_back(vertical("z+cx^4", 1, 0, make_rational(1, 2)));
                LinearForm line = make_profile(1, k, le[1], 2).beta;
                c.w.horizontal = {line};
                c.key = {2, static_cast<long>(support.size())};
                append_support(c.key, support);
                c.key.push_back(static_cast<long>(li));
                col.offer(std::move(c), line, val);
            }
        }
    }
}

// one-parameter subgroup scaling z: Q = z^2 f2(x, y); lines through [0:0:1] by label
void p114_scaling_z(Collector& col) {
    const auto& val = kstab::divisor_valuation("p114", 2);
    struct LChoice {
        std::string display;
        std::map<std::string, int> mult;  // label -> order of L along that line
        curvealg::CurveSpec spec;
    };
    auto line_spec = [](const std::string& label, int mult) -> curvealg::CurveSpec {
        if (label == "x") return generic_curve("p114", {{1, 0, 0}}, mult);
        if (label == "y") return generic_curve("p114", {{0, 1, 0}}, mult);
        return generic_curve("p114", {{1, 0, 0}, {0, 1, 0}}, mult);
    };
    for (int rank : {2, 1}) {
        std::map<std::string, int> qmult =
            rank == 2 ? std::map<std::string, int>{{"x", 1}, {"y", 1}} : std::map<std::string, int>{{"x", 2}};
        curvealg::CurveSpec Q = generic_curve("p114", {rank == 2 ? Exponent{1, 1, 2} : Exponent{2, 0, 2}});
        std::vector<LChoice> ls{
            {"x^2", {{"x", 2}}, line_spec("x", 2)},
            {"xl1", {{"x", 1}, {"l1", 1}}, line_spec("x", 1) + line_spec("l1", 1)},
            {"l1^2", {{"l1", 2}}, line_spec("l1", 2)},
            {"l1l2", {{"l1", 1}, {"l2", 1}}, generic_curve("p114", {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}})},
        };
        if (rank == 2) ls.insert(ls.begin() + 1, {"xy", {{"x", 1}, {"y", 1}}, generic_curve("p114", {{1, 1, 0}})});
        for (size_t li = 0; li < ls.size(); ++li) {
            const auto& L = ls[li];
            Candidate c;
            c.w.Q = Q;
            c.w.L = L.spec;
            c.w.Q_display = rank == 2 ? "xyz^2" : "x^2z^2";
            c.w.L_display = L.display;
            c.w.source = "z-scaling";
            c.w.filters = constraints("p114", rank == 1);
            std::set<std::string> labels{"generic line"};
            for (const auto& [l, m] : qmult) labels.insert(l);
            for (const auto& [l, m] : L.mult) labels.insert(l);
            for (const auto& l : labels) {
                int oq = qmult.count(l) ? qmult.at(l) : 0;
                int ol = L.mult.count(l) ? L.mult.at(l) : 0;
                c.w.filters.push_back(vertical(l, oq, ol, 2));
            }
            LinearForm line = make_profile(1, 2, 0, make_rational(1, 2)).beta;
            c.w.horizontal = {line};
            c.key = {1, rank == 2 ? 0 : 1, static_cast<long>(li)};
            col.offer(std::move(c), line, val);
        }
    }
}

const std::string kOutsideScope = ", beyond the binomial components";

// weighted blowups at [1:0:0], chart weights (n1, n2) on (y, z)
void p114_blowup(Collector& col, bool exhaustive) {
    auto mons = p114_monomials();
    std::set<std::pair<long, long>> weights;
    for (size_t p = 0; p < mons.size(); ++p)
        for (size_t q = p + 1; q < mons.size(); ++q)
            for (const auto& w : curvealg::invariance_weights({{mons[p][1], mons[p][2]}}, {{mons[q][1], mons[q][2]}}))
                if (w.u > 0 && w.v > 0 && w.v != 4 * w.u) weights.insert({w.u.get_si(), w.v.get_si()});
    for (auto [n1, n2] : weights) {
        long deg = std::max(4 * n1, n2);
        std::map<long, std::vector<Exponent>> classes;
        for (const auto& e : mons) classes[e[1] * n1 + e[2] * n2].push_back(e);
        const auto& val = cached_fixed_point("p114", 0, n1, n2);
        for (const auto& [w, members] : classes) {
            if (members.size() < 2) continue;
            for (const auto& support : subsets(members, 2)) {
                int rank = f2_rank(support);
                if (rank == 0) continue;
                Exponent g = min_exponent(support);
                int zmax = 0;
                for (const auto& e : support) zmax = std::max(zmax, e[2]);
                long factors = (zmax - g[2]) / n1;
                bool in_scope = factors == 1 && n2 > 4 * n1 && n2 != 5 && n2 != 7 && n2 != 8;
                if (!exhaustive && !in_scope) continue;
                for (size_t li = 0; li < kP114L.size(); ++li) {
                    const auto& le = kP114L[li];
                    Candidate c;
                    c.w.Q = generic_curve("p114", support);
                    c.w.L = generic_curve("p114", {le});
                    c.w.Q_display = support_display("p114", support);
                    c.w.L_display = support_display("p114", {le});
                    c.w.source = "weighted blowup wt(" + std::to_string(n1) + "," + std::to_string(n2) + ")" +
                                 (in_scope ? "" : kOutsideScope);
                    c.w.filters = constraints("p114", rank == 1);
                    c.w.filters.push_back(vertical("H_x", g[0], le[0], 2));
                    c.w.filters.push_back(vertical("H_y", g[1], le[1], 2));
                    c.w.filters.push_back(vertical("H_z", g[2], 0, make_rational(1, 2)));
                    if (factors > 0) c.w.filters.push_back(vertical("orbit closure", 1, 0, make_rational(2, deg)));
                    LinearForm line = make_profile(n1 + n2, w, le[1] * n1, make_rational(4 * n1 + n2, 2)).beta;
                    c.w.horizontal = {line};
                    c.key = {3, static_cast<long>(support.size())};
                    append_support(c.key, support);
                    c.key.push_back(static_cast<long>(li));
                    col.offer(std::move(c), line, val);
                }
            }
        }
    }
}

// ---------------------------------------------------------------- P(1,4,25)

void p1425_blowup(Collector& col) {
    std::vector<Exponent> mons;
    for (int g = 0; 25 * g <= 50; ++g)
        for (int b = 0; 4 * b + 25 * g <= 50; ++b) mons.push_back({50 - 4 * b - 25 * g, b, g});
    const Exponent z2{0, 0, 2};
    std::set<std::pair<long, long>> weights;
    for (const auto& e : mons) {
        if (e == z2) continue;
        for (const auto& w : curvealg::invariance_weights({{0, 2}}, {{e[1], e[2]}}))
            if (w.u > 0 && w.v > 0) weights.insert({w.u.get_si(), w.v.get_si()});
    }
    const std::vector<Exponent> ls{{2, 2, 0}, {6, 1, 0}, {10, 0, 0}};
    for (auto [m1, m2] : weights) {
        long deg = std::max(25 * m1, 4 * m2);
        std::vector<Exponent> others;
        for (const auto& e : mons)
            if (e != z2 && e[1] * m1 + e[2] * m2 == 2 * m2) others.push_back(e);
        const auto& val = cached_fixed_point("p1425", 0, m1, m2);
        for (auto support : subsets(others, 1)) {
            support.insert(support.begin(), z2);
            Exponent g = min_exponent(support);
            long factors = (2 - g[2]) / m1;
            bool has_gcd = g != Exponent{0, 0, 0};
            for (size_t li = 0; li < ls.size(); ++li) {
                const auto& le = ls[li];
                Candidate c;
                c.w.Q = generic_curve("p1425", support);
                c.w.L = generic_curve("p1425", {le});
                c.w.Q_display = support_display("p1425", support);
                c.w.L_display = support_display("p1425", {le});
                c.w.source = "weighted blowup wt(" + std::to_string(m1) + "," + std::to_string(m2) + ")";
                c.w.filters = constraints("p1425");
                c.w.filters.push_back(vertical("H_x", g[0], le[0], 10));
                c.w.filters.push_back(vertical("H_y", g[1], le[1], make_rational(5, 2)));
                c.w.filters.push_back(vertical("H_z", g[2], 0, make_rational(2, 5)));
                if (factors > 0) c.w.filters.push_back(vertical("orbit closure", 1, 0, make_rational(10, deg)));
                LinearForm line = make_profile(m1 + m2, 2 * m2, le[1] * m1, make_rational(25 * m1 + 4 * m2, 10)).beta;
                c.w.horizontal = {line};
                c.key = {static_cast<long>(support.size()), has_gcd ? 1 : 0};
                append_support(c.key, support);
                c.key.push_back(static_cast<long>(li));
                col.offer(std::move(c), line, val);
            }
        }
    }
}

}  // namespace

std::vector<Wall> enumerate_p2_walls(EnumerationStats* stats) {
    EnumerationStats local;
    auto& st = sink(stats, local);
    Collector col("p2", Kind::Horizontal, &st);
    p2_equal_weight(col);
    p2_futaki(col, st);
    p2_toric(col);
    auto walls = col.finish();
    add_note(walls, "2b=5a",
             "the witness zxy(x+l1y)(y+l2x) with L=z often quoted for this wall is z times four concurrent lines "
             "and lies on a=b; the witness here is five concurrent lines with L=z");
    add_note(walls, "7b=13a",
             "the polynomial xy(y^3+x^2z) sometimes quoted here belongs to 5b=8a; witness x(y^4+x^3z)");
    add_note(walls, "a=b",
             "y^2(y^3+x^2z) with L=z, also quoted for this wall, is only strictly semistable: beta(H_y) vanishes "
             "on the wall");
    return walls;
}

std::vector<Wall> enumerate_p114_walls(bool exhaustive, EnumerationStats* stats) {
    EnumerationStats local;
    Collector col("p114", Kind::VerticalI, &sink(stats, local));
    p114_toric(col);
    p114_scaling_z(col);
    p114_scaling_y(col);
    p114_blowup(col, exhaustive);
    auto walls = col.finish();
    add_note(walls, "7a-4b=3", "the family z^2xy+lzx^5y carries a modulus l; stored with generic coefficients");
    for (auto& w : walls) {
        const auto& src = w.witness.source;
        if (src.size() >= kOutsideScope.size() && src.compare(src.size() - kOutsideScope.size(), kOutsideScope.size(), kOutsideScope) == 0)
            w.notes.push_back("found only by the exhaustive weighted-blowup search");
    }
    return walls;
}

std::vector<Wall> enumerate_x26_walls(EnumerationStats* stats) {
    EnumerationStats local;
    Collector col("x26", Kind::VerticalII, &sink(stats, local));
    auto val = kstab::catalog_valuation("x26:quotient");
    const std::vector<Exponent> ls{{5, 0, 0, 0}, {3, 1, 0, 0}, {1, 2, 0, 0}};
    for (size_t li = 0; li < ls.size(); ++li) {
        Candidate c;
        c.w.Q = generic_curve("x26", {{0, 0, 0, 1}});
        c.w.L = generic_curve("x26", {ls[li]});
        c.w.Q_display = "w";
        c.w.L_display = support_display("x26", {ls[li]});
        c.w.source = "quotient valuation";
        c.w.filters = constraints("x26");
        LinearForm line = kstab::beta_profile({"x26", c.w.Q, c.w.L}, val).beta;
        c.w.horizontal = {line};
        c.key = {static_cast<long>(li)};
        col.offer(std::move(c), line, val);
    }
    return col.finish();
}

std::vector<Wall> enumerate_p1425_walls(EnumerationStats* stats) {
    EnumerationStats local;
    Collector col("p1425", Kind::VerticalIII, &sink(stats, local));
    p1425_blowup(col);
    return col.finish();
}

namespace {

int surface_rank(const std::string& s) {
    static const std::vector<std::string> order{"p2", "p114", "p1425", "x26"};
    auto it = std::find(order.begin(), order.end(), s);
    return static_cast<int>(it - order.begin());
}

std::optional<Rational> a_intercept(const IntegerLine& l) {
    if (l.ca == 0) return std::nullopt;
    return Rational(Rational(-l.c0) / Rational(l.ca));
}

std::optional<Rational> cot(const IntegerLine& l) {
    // direction (cb, -ca), flipped to positive b
    if (l.ca == 0) return std::nullopt;
    return Rational(Rational(-l.cb) / Rational(l.ca));
}

bool opt_less(const std::optional<Rational>& p, const std::optional<Rational>& q) {
    if (!p || !q) return p.has_value() && !q.has_value();
    return *p < *q;
}

}  // namespace

void sort_walls(std::vector<Wall>& walls) {
    std::stable_sort(walls.begin(), walls.end(), [](const Wall& p, const Wall& q) {
        int sp = surface_rank(p.surface), sq = surface_rank(q.surface);
        if (sp != sq) return sp < sq;
        auto ip = a_intercept(p.line), iq = a_intercept(q.line);
        if (ip != iq) return opt_less(ip, iq);
        auto cp = cot(p.line), cq = cot(q.line);
        if (cp != cq) return opt_less(cp, cq);
        return p.line < q.line;
    });
}

std::vector<Wall> enumerate_walls(const std::string& filter, int jobs, bool exhaustive,
                                  std::map<std::string, EnumerationStats>* stats) {
    std::vector<std::string> ids;
    if (filter == "all")
        ids = {"p2", "p114", "p1425", "x26"};
    else if (filter == "p2" || filter == "p114" || filter == "p1425" || filter == "x26")
        ids = {filter};
    else
        fail("UnknownSurface", "no surface '" + filter + "'");
    std::map<std::string, EnumerationStats> local;
    for (const auto& id : ids) local[id];
    auto run = [exhaustive, &local](const std::string& id) -> std::vector<Wall> {
        EnumerationStats* st = &local.at(id);
        if (id == "p2") return enumerate_p2_walls(st);
        if (id == "p114") return enumerate_p114_walls(exhaustive, st);
        if (id == "p1425") return enumerate_p1425_walls(st);
        return enumerate_x26_walls(st);
    };
    std::vector<Wall> out;
    if (jobs > 1 && ids.size() > 1) {
        std::vector<std::future<std::vector<Wall>>> fs;
        for (const auto& id : ids) fs.push_back(std::async(std::launch::async, run, id));
        for (auto& f : fs) {
            auto w = f.get();
            out.insert(out.end(), w.begin(), w.end());
        }
    } else {
        for (const auto& id : ids) {
            auto w = run(id);
            out.insert(out.end(), w.begin(), w.end());
        }
    }
    sort_walls(out);
    if (stats) *stats = local;
    return out;
}

kstab::Valuation witness_valuation(const Witness& w) {
    const std::string& surface = w.Q.surface;
    static const std::regex wt(R"(wt\((\d+),(\d+)\) at \[(\d):(\d):(\d)\])");
    std::smatch m;
    if (std::regex_match(w.valuation, m, wt)) {
        int k = m[3] == "1" ? 0 : m[4] == "1" ? 1 : 2;
        return kstab::fixed_point_valuation(surface, k, std::stol(m[1]), std::stol(m[2]));
    }
    if (w.valuation.rfind("H_", 0) == 0)
        return kstab::divisor_valuation(surface, toric::surface(surface).coordinate(w.valuation.substr(2)));
    for (const auto& name : kstab::catalog_names()) {
        auto v = kstab::catalog_valuation(name);
        if (v.surface == surface && v.description == w.valuation) return v;
    }
    fail("UncatalogedValuation", "cannot rebuild valuation '" + w.valuation + "'");
}

bool vertical_filter(const Wall& w, const std::vector<Inequality>& extra) {
    auto filters = w.witness.filters;
    filters.insert(filters.end(), extra.begin(), extra.end());
    return admissible(w.line.form(), filters);
}

// ---------------------------------------------------------------- chambers

namespace {

std::vector<Point2> domain_polygon() {
    std::vector<HalfPlane> hs;
    for (const auto& f : kstab::coefficient_domain()) hs.emplace_back(f.ca, f.cb, Rational(-f.c0));
    return polygon_from_halfplanes(hs)->vertices;
}

// cut a convex polygon by f; returns the parts with f >= 0 and f <= 0 (those with area)
std::vector<std::vector<Point2>> split(const std::vector<Point2>& poly, const LinearForm& f) {
    bool pos = false, neg = false;
    for (const auto& p : poly) {
        Rational s = f(p.x, p.y);
        pos |= s > 0;
        neg |= s < 0;
    }
    if (!pos || !neg) return {poly};
    std::vector<Point2> P, N;
    for (size_t i = 0; i < poly.size(); ++i) {
        const auto& p = poly[i];
        const auto& q = poly[(i + 1) % poly.size()];
        Rational sp = f(p.x, p.y), sq = f(q.x, q.y);
        if (sp >= 0) P.push_back(p);
        if (sp <= 0) N.push_back(p);
        if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
            Rational t = sp / (sp - sq);
            Point2 r{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
            P.push_back(r);
            N.push_back(r);
        }
    }
    return {P, N};
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
    Rational cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
    if (cross != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

}  // namespace

ChamberArrangement chamber_decomposition(const std::vector<IntegerLine>& lines_in) {
    ChamberArrangement arr;
    std::set<IntegerLine> uniq(lines_in.begin(), lines_in.end());
    arr.lines.assign(uniq.begin(), uniq.end());
    arr.domain = domain_polygon();

    std::vector<std::vector<Point2>> cells{arr.domain};
    for (const auto& l : arr.lines) {
        std::vector<std::vector<Point2>> next;
        for (const auto& c : cells)
            for (auto& part : split(c, l.form())) next.push_back(std::move(part));
        cells = std::move(next);
    }
    for (const auto& c : cells) {
        Chamber ch;
        ch.vertices = c;
        Rational sx = 0, sy = 0;
        for (const auto& p : c) {
            sx += p.x;
            sy += p.y;
        }
        ch.sample = {sx / static_cast<long>(c.size()), sy / static_cast<long>(c.size())};
        arr.chambers.push_back(std::move(ch));
    }

    // planar graph of the clipped arrangement
    auto dom = domain_inequalities();
    std::vector<Segment> segs;
    std::set<IntegerLine> edge_lines;
    for (const auto& f : kstab::coefficient_domain()) edge_lines.insert(normalize_line(f));
    for (const auto& l : arr.lines)
        if (!edge_lines.count(l))
            if (auto s = clip(l.form(), dom)) segs.push_back(*s);
    const size_t n = arr.domain.size();
    for (size_t i = 0; i < n; ++i) segs.push_back({arr.domain[i], arr.domain[(i + 1) % n]});
    std::set<Point2> pts(arr.domain.begin(), arr.domain.end());
    for (const auto& s : segs) {
        pts.insert(s.p0);
        pts.insert(s.p1);
    }
    for (size_t i = 0; i < arr.lines.size(); ++i)
        for (size_t j = i + 1; j < arr.lines.size(); ++j) {
            const auto& p = arr.lines[i];
            const auto& q = arr.lines[j];
            Integer d = p.ca * q.cb - p.cb * q.ca;
            if (d == 0) continue;
            Point2 x{Rational(Integer(p.cb * q.c0 - q.cb * p.c0)) / Rational(d),
                     Rational(Integer(q.ca * p.c0 - p.ca * q.c0)) / Rational(d)};
            bool inside = true;
            for (const auto& f : kstab::coefficient_domain()) inside &= f(x.x, x.y) >= 0;
            if (inside) pts.insert(x);
        }
    arr.vertices = static_cast<long>(pts.size());
    for (const auto& s : segs) {
        long k = 0;
        for (const auto& p : pts) k += on_segment(p, s.p0, s.p1);
        arr.edges += k - 1;
    }
    return arr;
}

ChamberArrangement chamber_decomposition(const std::vector<Wall>& walls) {
    std::vector<IntegerLine> lines;
    for (const auto& w : walls) lines.push_back(w.line);
    return chamber_decomposition(lines);
}

long sign_vector_count(const std::vector<IntegerLine>& lines, long samples, unsigned seed) {
    // a = 3A/(5D), b = B/D with integers 0 <= A, B <= D; signs are evaluated on 5D * form
    const long D = 1L << 20;
    std::vector<std::array<__int128, 3>> forms;
    for (const auto& l : lines) {
        if (!l.c0.fits_slong_p() || !l.ca.fits_slong_p() || !l.cb.fits_slong_p())
            fail("Overflow", "line coefficients too large for the sampler");
        forms.push_back({l.c0.get_si(), l.ca.get_si(), l.cb.get_si()});
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> u(0, D);
    std::set<std::string> seen;
    std::string sig(lines.size(), ' ');
    for (long i = 0; i < samples; ++i) {
        __int128 A = u(rng), B = u(rng);
        if (A <= 0 || B <= 0 || 3 * D - 3 * A - B <= 0 || 3 * A - 2 * B <= 0) continue;
        bool on_line = false;
        for (size_t k = 0; k < forms.size(); ++k) {
            __int128 v = 5 * D * forms[k][0] + 3 * A * forms[k][1] + 5 * B * forms[k][2];
            on_line |= v == 0;
            sig[k] = v > 0 ? '+' : '-';
        }
        if (!on_line) seen.insert(sig);
    }
    return static_cast<long>(seen.size());
}

std::vector<Rational> horizontal_intercepts(const std::vector<IntegerLine>& lines) {
    std::set<Rational> out;
    for (const auto& l : lines)
        if (l.c0 != 0)
            if (auto a = a_intercept(l)) out.insert(*a);
    return {out.begin(), out.end()};
}

std::string emit_tables(const std::vector<Wall>& walls, const std::string& format) {
    std::ostringstream os;
    if (format == "csv") {
        os << "surface,wall,Q,L\n";
        for (const auto& w : walls)
            os << w.surface << ',' << w.display() << ',' << w.witness.Q_display << ',' << w.witness.L_display << '\n';
    } else if (format == "json") {
        auto arr = serialize::json::array();
        for (const auto& w : walls) arr.push_back(serialize::wall(w));
        os << serialize::dump(arr);
    } else if (format == "md") {
        std::string current;
        for (const auto& w : walls) {
            if (w.surface != current) {
                if (!current.empty()) os << '\n';
                current = w.surface;
                os << "## " << current << "\n\n| wall | Q | L | kind | valuation |\n|---|---|---|---|---|\n";
            }
            os << "| " << w.display() << " | " << w.witness.Q_display << " | " << w.witness.L_display << " | "
               << kind_name(w.kind) << " | " << w.witness.valuation << " |\n";
        }
        bool any_notes = false;
        for (const auto& w : walls)
            for (const auto& n : w.notes) {
                if (!any_notes) os << "\nNotes:\n\n";
                any_notes = true;
                os << "- " << w.surface << " " << w.display() << ": " << n << '\n';
            }
    } else {
        fail("UnknownFormat", "unknown format '" + format + "'");
    }
    return os.str();
}

std::string emit_chamber_svg(const ChamberArrangement& arr) {
    const double W = 800, H = 600, margin = 50;
    const double sx = (W - 2 * margin) / 0.6, sy = (H - 2 * margin) / 1.0;
    auto X = [&](const Rational& a) { return margin + to_double(a) * sx; };
    auto Y = [&](const Rational& b) { return H - margin - to_double(b) * sy; };
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
    os << "<polygon class=\"domain\" fill=\"#f4f4f4\" stroke=\"black\" points=\"";
    for (size_t i = 0; i < arr.domain.size(); ++i)
        os << (i ? " " : "") << X(arr.domain[i].x) << ',' << Y(arr.domain[i].y);
    os << "\"/>\n";
    auto dom = domain_inequalities();
    for (const auto& l : arr.lines)
        if (auto s = clip(l.form(), dom))
            os << "<line class=\"wall\" stroke=\"#1f4e99\" stroke-width=\"1\" x1=\"" << X(s->p0.x) << "\" y1=\""
               << Y(s->p0.y) << "\" x2=\"" << X(s->p1.x) << "\" y2=\"" << Y(s->p1.y) << "\"><title>"
               << display_line(l) << "</title></line>\n";
    for (const auto& a : horizontal_intercepts(arr.lines))
        os << "<text class=\"intercept\" font-size=\"11\" text-anchor=\"middle\" x=\"" << X(a) << "\" y=\""
           << H - margin + 16 << "\">" << to_string(a) << "</text>\n";
    os << "<text font-size=\"12\" x=\"" << W - margin << "\" y=\"" << H - margin + 32 << "\">a</text>\n";
    os << "<text font-size=\"12\" x=\"" << margin - 20 << "\" y=\"" << margin << "\">b</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace kwall::wallfinder
