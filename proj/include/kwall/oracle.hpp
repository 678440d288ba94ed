#pragma once

#include <string>
#include <vector>

#include "kwall/kstab.hpp"

namespace kwall::oracle {

using curvealg::Exponent;

// Monomial basis of H^0(-mK). X26 uses the normal form with z-exponent <= 1.
struct SectionBasis {
    std::string surface;
    long m = 1;
    std::vector<Exponent> basis;
};

SectionBasis section_basis(const std::string& surface, long m);  // throws InvalidLevel, UnknownSurface
long graded_dim(const std::string& surface, long m);

// Orders of a basis adapted to the filtration, ascending. Monomial valuations
// are diagonal on the section basis; a jet valuation on P^2 is handled by the
// column rank profile of the substituted basis (modulo a large prime).
std::vector<Rational> adapted_orders(const kstab::Valuation& v, long m);

long filtered_dim(const std::string& surface, const kstab::Valuation& v, long m, const Rational& threshold);
Rational s_estimate(const std::string& surface, const kstab::Valuation& v, long m);
// 2 * filtered_dim(t*m) / m^2
Rational vol_estimate(const std::string& surface, const kstab::Valuation& v, const Rational& t, long m);

// Pivot column weights of the jet matrix at level m: exact rational
// elimination (small m only) and the modular blocked version.
std::vector<long> jet_pivot_weights_exact(const kstab::Valuation& v, long m);
std::vector<long> jet_pivot_weights_modular(const kstab::Valuation& v, long m);

// "blowup" (default per surface), "H_x", "wt(n1,n2)@k", "prim(n1,n2)@k", "jet",
// or a catalog name; k is the index of the nonzero coordinate of the fixed point
kstab::Valuation named_valuation(const std::string& surface, const std::string& name);

struct Report {
    std::string surface, valuation;
    std::vector<long> ms;
    std::vector<Rational> S_m;
    Rational target, rel_err;
};
Report s_report(const std::string& surface, const kstab::Valuation& v, const std::vector<long>& ms);
std::string report_json(const Report& r);

}  // namespace kwall::oracle
