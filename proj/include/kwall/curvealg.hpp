#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kwall/exactmath.hpp"

namespace kwall::curvealg {

using Exponent = std::vector<int>;

class SparsePoly {
public:
    explicit SparsePoly(std::vector<std::string> vars = {});

    static SparsePoly constant(std::vector<std::string> vars, const Rational& c);
    static SparsePoly variable(std::vector<std::string> vars, const std::string& name);
    static SparsePoly monomial(std::vector<std::string> vars, Exponent e, const Rational& c = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    int var_index(const std::string& name) const;  // throws UnknownVariable
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Exponent& e) const;

    void add_term(const Exponent& e, const Rational& c);
    SparsePoly operator+(const SparsePoly& o) const;
    SparsePoly operator-(const SparsePoly& o) const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly operator*(const Rational& s) const;
    SparsePoly pow(int n) const;
    bool operator==(const SparsePoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    // value 1 for the named variable; the ring keeps the variable
    SparsePoly set_one(const std::string& name) const;
    std::string to_string() const;

private:
    void check_ring(const SparsePoly& o) const;
    std::vector<std::string> vars_;
    std::map<Exponent, Rational> terms_;
};

SparsePoly substitute(const SparsePoly& p, const std::string& var, const SparsePoly& replacement);

// min over terms of <w, e>; throws ZeroPolynomialInChart on the zero polynomial
Rational weighted_order(const SparsePoly& p, const std::vector<Rational>& w);
SparsePoly initial_part(const SparsePoly& p, const std::vector<Rational>& w);

// Coordinate names and weights of the catalog surfaces.
struct SurfaceCoordinates {
    std::vector<std::string> names;
    std::vector<long> weights;
};
const SurfaceCoordinates& coordinates(const std::string& surface);  // throws UnknownSurface

struct Component {
    std::vector<Exponent> support;
    std::optional<std::vector<Rational>> coeffs;  // nullopt: generic coefficients
    int mult = 1;

    bool generic() const { return !coeffs; }
};

struct CurveSpec {
    std::string surface;
    std::vector<Component> components;

    Rational degree() const;  // throws NotHomogeneous
    SparsePoly component_poly(size_t k) const;  // generic coefficients read as 1
};

CurveSpec generic_curve(const std::string& surface, std::vector<Exponent> support, int mult = 1);
CurveSpec explicit_curve(const std::string& surface, const SparsePoly& p, int mult = 1);
CurveSpec operator+(const CurveSpec& c, const CurveSpec& d);  // union of components

// x -> x + shift, shift a polynomial in the other chart variables
struct Jet {
    std::string var;
    SparsePoly shift;
};

// Monomial valuation in the chart {chart coordinate = 1}: weights are indexed by
// surface coordinate and the chart coordinate carries weight 0.
struct ChartValuation {
    std::string surface;
    int chart = 0;
    std::vector<Rational> weights;
    std::vector<Jet> jet;

    void validate() const;
};

// Order of each component (generic: bare minimum over support), times
// multiplicity, summed. Explicit components with a jet are expanded first.
Rational ord_along(const ChartValuation& v, const CurveSpec& c);
// same without a chart: order given by values on the coordinates
Rational monomial_order(const std::vector<Rational>& coordinate_values, const CurveSpec& c);

// Primitive positive (n1, n2) making two chart monomials equally weighted.
std::vector<LatticePoint> invariance_weights(const std::vector<std::array<int, 2>>& support1,
                                             const std::vector<std::array<int, 2>>& support2);

// The A12 quintic and its 6-jet shift x -> x + y^2 - y^5 + y^6/2 (chart z = 1).
SparsePoly q2_quintic();
Jet q2_jet();

}  // namespace kwall::curvealg
