#include "kwall/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <regex>

#include "kwall/serialize.hpp"

namespace kwall::oracle {

namespace {

void check_level(long m) {
    if (m < 1) fail("InvalidLevel", "level m must be >= 1");
    if (m > 200) fail("InvalidLevel", "level m above the guard 200");
}

}  // namespace

SectionBasis section_basis(const std::string& surface, long m) {
    check_level(m);
    SectionBasis sb{surface, m, {}};
    const auto& w = curvealg::coordinates(surface).weights;
    if (surface == "x26") {
        const long D = 15 * m;
        for (long d = 0; 25 * d <= D; ++d)
            for (long c = 0; c <= 1 && 25 * d + 13 * c <= D; ++c)
                for (long b = 0; 25 * d + 13 * c + 2 * b <= D; ++b)
                    sb.basis.push_back({static_cast<int>(D - 25 * d - 13 * c - 2 * b), static_cast<int>(b),
                                        static_cast<int>(c), static_cast<int>(d)});
        return sb;
    }
    const long D = m * (w[0] + w[1] + w[2]);
    for (long k = 0; w[2] * k <= D; ++k)
        for (long j = 0; w[2] * k + w[1] * j <= D; ++j) {
            long rest = D - w[2] * k - w[1] * j;
            if (rest % w[0] == 0)
                sb.basis.push_back({static_cast<int>(rest / w[0]), static_cast<int>(j), static_cast<int>(k)});
        }
    return sb;
}

long graded_dim(const std::string& surface, long m) { return static_cast<long>(section_basis(surface, m).basis.size()); }

// ---------------------------------------------------------------- jet matrix

namespace {

constexpr long kPrime = 1000003;

long mod(long a) {
    a %= kPrime;
    return a < 0 ? a + kPrime : a;
}

long modpow(long b, long e) {
    long r = 1;
    b = mod(b);
    while (e) {
        if (e & 1) r = r * b % kPrime;
        b = b * b % kPrime;
        e >>= 1;
    }
    return r;
}

long modinv(long a) { return modpow(a, kPrime - 2); }

struct Fp {
    long v = 0;
    Fp operator+(const Fp& o) const { return {(v + o.v) % kPrime}; }
    Fp operator*(const Fp& o) const { return {v * o.v % kPrime}; }
};

long mod_of(const Rational& q) {
    long n = mod(Integer(q.get_num() % kPrime).get_si());
    long d = mod(Integer(q.get_den() % kPrime).get_si());
    if (d == 0) fail("InternalInvariant", "denominator divisible by the oracle prime");
    return n * modinv(d) % kPrime;
}

// Jet data: chart = 2 (z = 1), shift of x by g(y), weights (wx, wy).
struct JetSetup {
    long wx = 0, wy = 0;
    std::vector<Rational> g;  // coefficients of g(y)
};

JetSetup jet_setup(const kstab::Valuation& v) {
    if (v.kind != kstab::Valuation::Kind::Jet || !v.chart || v.surface != "p2")
        fail("UnsupportedValuation", "jet oracle needs a jet valuation on p2");
    const auto& cv = *v.chart;
    if (cv.chart != 2 || cv.jet.size() != 1 || cv.jet[0].var != "x")
        fail("UnsupportedValuation", "jet oracle supports one shift of x in the chart z = 1");
    JetSetup js;
    if (cv.weights[0].get_den() != 1 || cv.weights[1].get_den() != 1)
        fail("UnsupportedValuation", "jet weights must be integers");
    js.wx = cv.weights[0].get_num().get_si();
    js.wy = cv.weights[1].get_num().get_si();
    for (const auto& [e, c] : cv.jet[0].shift.terms()) {
        if (e[0] != 0 || e[2] != 0) fail("UnsupportedValuation", "jet shift must be a polynomial in y");
        if (static_cast<size_t>(e[1]) >= js.g.size()) js.g.resize(e[1] + 1, Rational(0));
        js.g[e[1]] = c;
    }
    if (js.g.empty() || js.g[0] != 0) fail("UnsupportedValuation", "jet shift must vanish at the point");
    return js;
}

// Columns x'^p y^q sorted by weight, up to the cutoff.
struct Columns {
    std::vector<std::pair<long, long>> pq;
    std::vector<long> weight;
    std::map<std::pair<long, long>, long> index;
};

Columns jet_columns(const JetSetup& js, long d, long cutoff) {
    std::vector<std::tuple<long, long, long>> cols;
    const long qmax = d * static_cast<long>(js.g.size());
    for (long p = 0; p <= d; ++p)
        for (long q = 0; q <= qmax; ++q) {
            long w = js.wx * p + js.wy * q;
            if (w <= cutoff) cols.emplace_back(w, p, q);
        }
    std::sort(cols.begin(), cols.end());
    Columns c;
    for (auto [w, p, q] : cols) {
        c.index[{p, q}] = static_cast<long>(c.pq.size());
        c.pq.push_back({p, q});
        c.weight.push_back(w);
    }
    return c;
}

// Entries of (x' + g)^i y^j: coefficient of x'^k y^(j + s) is binom(i,k) [y^s] g^(i-k).
template <class T, class Conv, class Set>
void fill_jet_rows(const JetSetup& js, long d, const Columns& cols, Conv conv, Set set) {
    std::vector<std::vector<T>> gpow{{conv(Rational(1))}};
    std::vector<T> g;
    for (const auto& c : js.g) g.push_back(conv(c));
    for (long t = 1; t <= d; ++t) {
        const auto& prev = gpow.back();
        std::vector<T> next(prev.size() + g.size() - 1, conv(Rational(0)));
        for (size_t a = 0; a < prev.size(); ++a)
            for (size_t b = 0; b < g.size(); ++b) next[a + b] = next[a + b] + prev[a] * g[b];
        gpow.push_back(std::move(next));
    }
    std::vector<std::vector<T>> binom(d + 1);
    for (long i = 0; i <= d; ++i) {
        binom[i].assign(i + 1, conv(Rational(1)));
        for (long k = 1; k < i; ++k) binom[i][k] = binom[i - 1][k - 1] + binom[i - 1][k];
    }
    long row = 0;
    for (long i = 0; i <= d; ++i)
        for (long j = 0; i + j <= d; ++j, ++row)
            for (long k = 0; k <= i; ++k) {
                const auto& gp = gpow[i - k];
                for (size_t s = 0; s < gp.size(); ++s) {
                    auto it = cols.index.find({k, j + static_cast<long>(s)});
                    if (it == cols.index.end()) continue;
                    set(row, it->second, binom[i][k] * gp[s]);
                }
            }
}

// first weight cutoff tried; callers grow it until the rank is full
long jet_cutoff(const JetSetup& js, long m) { return (js.wx + js.wy + 1) * m; }

// ------------------------------------------------ modular column rank profile

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
constexpr double kP = static_cast<double>(kPrime);
constexpr long kChunk = 4096;  // k * (p-1)^2 < 2^53

void reduce(Eigen::Ref<Mat> M) { M.array() -= kP * (M.array() / kP).floor(); }

// C -= A * B (mod p)
void gemm_sub(Eigen::Ref<Mat> C, const Eigen::Ref<const Mat>& A, const Eigen::Ref<const Mat>& B) {
    Mat T;
    for (long k = 0; k < A.cols(); k += kChunk) {
        long kk = std::min(kChunk, static_cast<long>(A.cols()) - k);
        T.noalias() = A.middleCols(k, kk) * B.middleRows(k, kk);
        reduce(T);
        C -= T;
        C.array() += kP * (C.array() < 0).cast<double>();
    }
}

class ModularLU {
public:
    explicit ModularLU(Mat a) : A(std::move(a)) {}

    void run() { factor(0, A.cols()); }

    Mat A;
    long rank = 0;
    std::vector<long> pivots;  // pivot columns in order

private:
    void factor(long c0, long c1) {
        const long n = A.rows();
        if (rank == n) return;
        if (c1 - c0 == 1) {
            long r = rank;
            while (r < n && A(r, c0) == 0) ++r;
            if (r == n) return;
            if (r != rank) A.row(r).swap(A.row(rank));
            double inv = static_cast<double>(modinv(static_cast<long>(A(rank, c0))));
            if (rank + 1 < n) {
                auto col = A.block(rank + 1, c0, n - rank - 1, 1);
                col *= inv;
                reduce(col);
            }
            pivots.push_back(c0);
            ++rank;
            return;
        }
        const long mid = (c0 + c1) / 2;
        const long r0 = rank;
        const size_t k0 = pivots.size();
        factor(c0, mid);
        const long k = rank - r0;
        if (k > 0 && mid < c1) {
            Mat L(rank - r0 + (n - rank), k);
            for (long s = 0; s < k; ++s) L.col(s) = A.block(r0, pivots[k0 + s], n - r0, 1);
            auto X = A.block(r0, mid, k, c1 - mid);
            trsm(L.topRows(k), X, 0, k);
            if (rank < n) gemm_sub(A.block(rank, mid, n - rank, c1 - mid), L.bottomRows(n - rank), X);
        }
        factor(mid, c1);
    }

    // X <- L^{-1} X, L unit lower triangular (strict lower part read)
    void trsm(const Eigen::Ref<const Mat>& L, Eigen::Ref<Mat> X, long t0, long t1) {
        if (t1 - t0 <= 32) {
            for (long s = t0; s < t1; ++s)
                for (long t = s + 1; t < t1; ++t) {
                    double l = L(t, s);
                    if (l == 0) continue;
                    X.row(t) -= (X.row(s).array() * l).matrix();
                    auto row = X.row(t);
                    row.array() -= kP * (row.array() / kP).floor();
                }
            return;
        }
        const long mid = (t0 + t1) / 2;
        trsm(L, X, t0, mid);
        gemm_sub(X.middleRows(mid, t1 - mid), L.block(mid, t0, t1 - mid, mid - t0), X.middleRows(t0, mid - t0));
        trsm(L, X, mid, t1);
    }
};

}  // namespace

std::vector<long> jet_pivot_weights_modular(const kstab::Valuation& v, long m) {
    check_level(m);
    auto js = jet_setup(v);
    const long d = 3 * m;
    const long n = (d + 1) * (d + 2) / 2;
    for (long cutoff = jet_cutoff(js, m);; cutoff += cutoff / 4) {
        auto cols = jet_columns(js, d, cutoff);
        Mat A = Mat::Zero(n, static_cast<long>(cols.pq.size()));
        fill_jet_rows<Fp>(
            js, d, cols, [](const Rational& q) { return Fp{mod_of(q)}; },
            [&](long r, long c, Fp val) { A(r, c) = static_cast<double>((static_cast<long>(A(r, c)) + val.v) % kPrime); });
        ModularLU lu(std::move(A));
        lu.run();
        if (lu.rank < n) continue;
        std::vector<long> out;
        for (long c : lu.pivots) out.push_back(cols.weight[c]);
        return out;
    }
}

std::vector<long> jet_pivot_weights_exact(const kstab::Valuation& v, long m) {
    check_level(m);
    if (m > 4) fail("InvalidLevel", "exact jet elimination is limited to m <= 4");
    auto js = jet_setup(v);
    const long d = 3 * m;
    // the top order of a degree-d section is at most d * wx
    auto cols = jet_columns(js, d, d * js.wx);
    const long n = (d + 1) * (d + 2) / 2;
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(cols.pq.size(), Rational(0)));
    fill_jet_rows<Rational>(
        js, d, cols, [](const Rational& q) { return q; },
        [&](long r, long c, const Rational& val) { A[r][c] += val; });
    std::vector<long> out;
    long rank = 0;
    for (size_t c = 0; c < cols.pq.size() && rank < n; ++c) {
        long r = rank;
        while (r < n && A[r][c] == 0) ++r;
        if (r == n) continue;
        std::swap(A[r], A[rank]);
        for (long i = rank + 1; i < n; ++i) {
            if (A[i][c] == 0) continue;
            Rational f = A[i][c] / A[rank][c];
            for (size_t cc = c; cc < cols.pq.size(); ++cc) A[i][cc] -= f * A[rank][cc];
        }
        out.push_back(cols.weight[c]);
        ++rank;
    }
    if (rank != n) fail("InternalInvariant", "jet matrix lost rank below the weight cutoff");
    return out;
}

std::vector<Rational> adapted_orders(const kstab::Valuation& v, long m) {
    std::vector<Rational> out;
    if (v.kind == kstab::Valuation::Kind::Jet) {
        for (long w : jet_pivot_weights_modular(v, m)) out.push_back(Rational(w));
    } else {
        auto sb = section_basis(v.surface, m);
        for (const auto& e : sb.basis) {
            Rational o = 0;
            for (size_t i = 0; i < e.size(); ++i) o += v.coordinate_values.at(i) * e[i];
            out.push_back(o);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void check_surface(const std::string& surface, const kstab::Valuation& v) {
    if (surface != v.surface) fail("SurfaceMismatch", "valuation lives on " + v.surface + ", not " + surface);
}

}  // namespace

long filtered_dim(const std::string& surface, const kstab::Valuation& v, long m, const Rational& threshold) {
    check_surface(surface, v);
    auto o = adapted_orders(v, m);
    return static_cast<long>(o.end() - std::lower_bound(o.begin(), o.end(), threshold));
}

Rational s_estimate(const std::string& surface, const kstab::Valuation& v, long m) {
    check_surface(surface, v);
    auto o = adapted_orders(v, m);
    Rational sum = 0;
    for (const auto& q : o) sum += q;
    return sum / Rational(m * static_cast<long>(o.size()));
}

Rational vol_estimate(const std::string& surface, const kstab::Valuation& v, const Rational& t, long m) {
    if (t < 0) fail("InvalidThreshold", "t must be >= 0");
    return Rational(2 * filtered_dim(surface, v, m, t * m)) / Rational(m * m);
}

kstab::Valuation named_valuation(const std::string& surface, const std::string& name) {
    std::string n = name;
    if (n == "blowup") {
        if (surface == "p2") n = "wt(1,1)@2";
        else if (surface == "p114") n = "prim(1,1)@2";
        else if (surface == "p1425") n = "prim(1,4)@2";
        else if (surface == "x26") n = "x26:quotient";
        else fail("UnknownSurface", "no surface '" + surface + "'");
    }
    if (n == "jet") {
        if (surface != "p2") fail("UnsupportedValuation", "the jet valuation lives on p2");
        return kstab::p2_jet_valuation();
    }
    if (n.rfind("H_", 0) == 0) return kstab::divisor_valuation(surface, toric::surface(surface).coordinate(n.substr(2)));
    std::smatch mt;
    static const std::regex wt(R"((wt|prim)\((\d+),(\d+)\)@([012]))");
    if (std::regex_match(n, mt, wt)) {
        int k = std::stoi(mt[4]);
        long wi = std::stol(mt[2]), wj = std::stol(mt[3]);
        if (wi <= 0 || wj <= 0) fail("InvalidValuation", "weights must be positive");
        if (mt[1] == "wt") return kstab::fixed_point_valuation(surface, k, wi, wj);
        const auto& X = toric::surface(surface);
        auto tv = toric::chart_valuation(X, k, wi, wj).primitive(X);
        return kstab::toric_valuation(surface, tv, "primitive " + n);
    }
    auto v = kstab::catalog_valuation(n);
    check_surface(surface, v);
    return v;
}

Report s_report(const std::string& surface, const kstab::Valuation& v, const std::vector<long>& ms) {
    Report r{surface, v.description, ms, {}, v.S_X, 0};
    for (long m : ms) r.S_m.push_back(s_estimate(surface, v, m));
    if (!ms.empty() && r.target != 0) r.rel_err = abs(Rational((r.S_m.back() - r.target) / r.target));
    return r;
}

std::string report_json(const Report& r) {
    serialize::json o;
    o["surface"] = r.surface;
    o["valuation"] = r.valuation;
    o["m"] = r.ms;
    auto s = serialize::json::array();
    for (const auto& q : r.S_m) s.push_back(to_string(q));
    o["S_m"] = s;
    o["target"] = to_string(r.target);
    o["rel_err_at_max_m"] = to_string(r.rel_err);
    return serialize::dump(o);
}

}  // namespace kwall::oracle
