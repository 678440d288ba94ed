#include "kwall/gitslope.hpp"

#include <optional>
#include <sstream>

#include "kwall/serialize.hpp"

namespace kwall::gitslope {

std::string status_name(GitStatus s) {
    switch (s) {
        case GitStatus::Stable: return "stable";
        case GitStatus::PolystableStrict: return "polystable-strict";
        case GitStatus::StrictlySemistable: return "strictly-semistable";
        case GitStatus::Unstable: return "unstable";
    }
    return "";
}

bool is_semistable(GitStatus s) { return s != GitStatus::Unstable; }
bool is_polystable(GitStatus s) { return s == GitStatus::Stable || s == GitStatus::PolystableStrict; }

namespace {

struct Hull {
    std::optional<Rational> lo, hi;
    void add(const Rational& w) {
        if (!lo || w < *lo) lo = w;
        if (!hi || w > *hi) hi = w;
    }
    Interval get(const char* what) const {
        if (!lo) fail("ZeroPoint", std::string(what) + " has no nonzero coordinate");
        return {*lo, *hi};
    }
};

}  // namespace

Interval state_interval(const QPoint& q) {
    Hull h;
    if (q.f6[0] != 0) h.add(6);
    if (q.f6[1] != 0) h.add(-6);
    for (int k = 0; k <= 10; ++k)
        if (q.f10[k] != 0) h.add(make_rational(10 - 2 * k, 2));
    return h.get("Q point");
}

Interval state_interval(const LPoint& l) {
    Hull h;
    for (int k = 0; k < 3; ++k)
        if (l.lambda[k] != 0) h.add(2 - 2 * k);
    return h.get("L point");
}

GitStatus git_status(const QPoint& q, const LPoint& l, const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) fail("InvalidSlope", "slope entries must be positive");
    auto [q0, q1] = state_interval(q);
    auto [l0, l1] = state_interval(l);
    Rational lo = a * q0 + b * l0, hi = a * q1 + b * l1;
    if (lo > 0 || hi < 0) return GitStatus::Unstable;
    if (lo == 0 && hi == 0) return GitStatus::PolystableStrict;
    if (lo < 0 && hi > 0) return GitStatus::Stable;
    return GitStatus::StrictlySemistable;
}

// Over the center (Q, L) = (z^2xy, xy): the plus side is P'_10 x {xy}, the minus side a point.
long eplus_fiber_dim(Side side) { return side == Side::Plus ? 12 : 0; }

bool fiber_dims_consistent() { return eplus_fiber_dim(Side::Minus) + eplus_fiber_dim(Side::Plus) + 1 == 13; }

QPoint parse_qpoint_json(const std::string& text) {
    auto j = serialize::parse(text);
    QPoint q;
    try {
        const auto& f6 = j.at("f6");
        const auto& f10 = j.at("f10");
        if (f6.size() != 2 || f10.size() != 11) fail("ParseError", "f6 needs 2 entries and f10 needs 11");
        for (int k = 0; k < 2; ++k) q.f6[k] = serialize::rational_from(f6[k]);
        for (int k = 0; k < 11; ++k) q.f10[k] = serialize::rational_from(f10[k]);
    } catch (const serialize::json::exception& e) {
        fail("ParseError", std::string("bad Q point: ") + e.what());
    }
    return q;
}

LPoint parse_lpoint(const std::string& text) {
    LPoint l;
    std::stringstream ss(text);
    std::string item;
    int k = 0;
    while (std::getline(ss, item, ',')) {
        if (k == 3) fail("ParseError", "L point needs three entries");
        l.lambda[k++] = parse_rational(item);
    }
    if (k != 3) fail("ParseError", "L point needs three entries");
    return l;
}

}  // namespace kwall::gitslope
