#pragma once

#include <array>
#include <string>
#include <vector>

#include "kwall/exactmath.hpp"

namespace kwall::toric {

// Fan of P(w0,w1,w2). Ray k is the divisor {coordinate k = 0}.
struct ToricSurface {
    std::string id;
    std::array<long, 3> weights;
    std::array<std::string, 3> names;
    std::array<LatticePoint, 3> rays;

    int coordinate(const std::string& name) const;  // throws UnknownVariable
    // order of the quotient singularity at the fixed point where only
    // coordinate k is nonzero, i.e. |det| of the two other rays
    Integer cone_index(int k) const;
    std::vector<HalfPlane> anticanonical_halfplanes() const;
};

ToricSurface wps_fan(long w0, long w1, long w2, const std::string& id = "",
                     std::array<std::string, 3> names = {"x", "y", "z"});

// "p2", "p114", "p1425"; throws UnknownSurface otherwise.
const ToricSurface& surface(const std::string& id);

// A lattice point in the cone spanned by rays i < j: point = alpha*r_i + beta*r_j.
struct ToricValuation {
    LatticePoint point;
    int i = 0, j = 1;
    Rational alpha, beta;

    // orders of the three coordinate divisors (0 off the cone)
    std::array<Rational, 3> coordinate_orders() const;
    ToricValuation primitive(const ToricSurface& X) const;
};

ToricValuation make_valuation(const ToricSurface& X, const LatticePoint& p);
// Monomial valuation centred at the fixed point {coordinate k != 0} with weights
// (wi, wj) on the remaining coordinates in increasing index order.
ToricValuation chart_valuation(const ToricSurface& X, int k, long wi, long wj);
ToricValuation divisor_valuation(const ToricSurface& X, int k);

Rational log_discrepancy(const ToricSurface& X, const ToricValuation& v);
Rational ord_on_invariant_divisor(const ToricSurface& X, const ToricValuation& v, int ray);
Rational anticanonical_volume(const ToricSurface& X);
// (1/vol) * integral over t >= 0 of vol(-K - tE), boundary free
Rational s_invariant(const ToricSurface& X, const ToricValuation& v);
// number of lattice points of the m-th anticanonical polytope
long lattice_point_count(const ToricSurface& X, long m);

}  // namespace kwall::toric
