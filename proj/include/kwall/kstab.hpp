#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kwall/curvealg.hpp"
#include "kwall/exactmath.hpp"
#include "kwall/toric.hpp"

namespace kwall::kstab {

using curvealg::CurveSpec;

struct Singularity {
    long r = 1, w = 0;  // 1/r(1,w)
    long milnor = 0;
    Rational local_volume;
};

struct SurfaceDescriptor {
    std::string id;
    Rational K2;
    int picard_rank = 1;
    std::vector<Singularity> singularities;
    long q_degree = 0, l_degree = 0;
    std::vector<long> ambient_weights;
    std::string relation;  // X26 only
};

const std::vector<std::string>& surface_ids();  // p2, p114, x26, p1425
const SurfaceDescriptor& descriptor(const std::string& id);

struct PairConfig {
    std::string surface;
    CurveSpec Q, L;

    void validate() const;  // degree bookkeeping
    // P(1,1,4): quadratic part f2 of Q (the z^2 coefficient)
    bool has_f2() const;
    bool rank_one_f2() const;
};

struct Valuation {
    enum class Kind { Toric, Catalog, Jet };
    Kind kind = Kind::Toric;
    std::string surface;
    std::string description;
    std::vector<Rational> coordinate_values;  // monomial orders (Toric, Catalog)
    std::optional<curvealg::ChartValuation> chart;  // Jet
    Rational A_X, S_X;

    Rational ord(const CurveSpec& c) const;
};

Valuation toric_valuation(const std::string& surface, const toric::ToricValuation& v, const std::string& desc = "");
// weights (wi, wj) on the coordinates other than k at the fixed point {coordinate k != 0}
Valuation fixed_point_valuation(const std::string& surface, int k, long wi, long wj);
Valuation divisor_valuation(const std::string& surface, int k);
// "x26:quotient" and "p1425:[0:1:0]"; throws UncatalogedValuation
Valuation catalog_valuation(const std::string& name);
std::vector<std::string> catalog_names();
// weights (13,2) after the 6-jet on P^2
Valuation p2_jet_valuation();

// 1 - 5a/3 - b/3
LinearForm sigma();

struct KProfile {
    LinearForm A, S, beta;
    std::string valuation;

    std::optional<IntegerLine> wall() const;
};

KProfile make_profile(const Rational& A_X, const Rational& ordQ, const Rational& ordL, const Rational& S_X,
                      const std::string& desc = "");
KProfile beta_profile(const PairConfig& cfg, const Valuation& v);
// beta of the weighted blowup induced by a one-parameter subgroup fixing {coordinate k != 0}
LinearForm futaki_line(const PairConfig& cfg, int k, long wi, long wj);

struct Candidate {
    long degree = 1;
    long order = 1;
};
// S of the quasi-monomial valuation with weights (n1, n2) on P^2 by Zariski
// chamber peeling of the candidate curves.
Rational s_quasimonomial_p2(long n1, long n2, const std::vector<Candidate>& candidates);
std::vector<Candidate> a12_candidates();

Rational lct_certificate(const PairConfig& cfg, const Valuation& v, const Rational& t);

std::vector<LinearForm> domain_constraints(const std::string& surface, bool rank_one = false);
// the coefficient polygon {a >= 0, b >= 0, 3 - 5a - b >= 0, 5a - 2b >= 0}
std::vector<LinearForm> coefficient_domain();

long index_bound(const std::vector<std::pair<Rational, long>>& coeffs);
std::set<std::string> local_volume_filter(const Rational& a, const Rational& b);
bool noether_check(const SurfaceDescriptor& sd);

struct TSingularity {
    bool is_T = false;
    bool du_val = false;
    long d = 0, n = 0, a = 0;
    long milnor = 0;
};
TSingularity is_T_singularity(long r, long w);

}  // namespace kwall::kstab
