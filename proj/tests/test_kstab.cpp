#include <doctest.h>

#include "kwall/kstab.hpp"

using namespace kwall;
using namespace kwall::kstab;
using curvealg::generic_curve;

namespace {
Rational q(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("surface descriptors") {
    for (const auto& id : surface_ids()) {
        CHECK(noether_check(descriptor(id)));
        for (const auto& s : descriptor(id).singularities) CHECK(is_T_singularity(s.r, s.w).is_T);
    }
    auto t = is_T_singularity(25, 4);
    CHECK(t.is_T);
    CHECK(t.d == 1);
    CHECK(t.n == 5);
    CHECK(t.a == 1);
    CHECK(t.milnor == 0);
    CHECK(is_T_singularity(4, 1).is_T);
    CHECK_FALSE(is_T_singularity(5, 1).is_T);
    CHECK(is_T_singularity(5, 4).du_val);
    CHECK(is_T_singularity(5, 4).milnor == 4);
    CHECK_THROWS_AS(is_T_singularity(4, 2), Error);
}

TEST_CASE("beta profiles from the paper's proofs") {
    PairConfig p2{"p2", generic_curve("p2", {{0, 5, 0}, {4, 0, 1}}), generic_curve("p2", {{0, 0, 1}})};
    auto prof = beta_profile(p2, fixed_point_valuation("p2", 2, 5, 4));
    CHECK(prof.beta == LinearForm(0, -5, 3));
    CHECK(display_line(*prof.wall()) == "3b=5a");
    CHECK(prof.beta == prof.A - prof.S);

    PairConfig x26{"x26", generic_curve("x26", {{0, 0, 0, 1}}), generic_curve("x26", {{1, 2, 0, 0}})};
    auto px = beta_profile(x26, catalog_valuation("x26:quotient"));
    CHECK(px.beta == LinearForm(q(-24, 5), 9, q(3, 5)));
    CHECK(display_line(*px.wall()) == "15a+b=8");
    CHECK_THROWS_AS(catalog_valuation("x26:elsewhere"), Error);

    PairConfig p1425{"p1425", generic_curve("p1425", {{0, 0, 2}, {2, 12, 0}}), generic_curve("p1425", {{2, 2, 0}})};
    auto v16 = fixed_point_valuation("p1425", 0, 1, 6);
    CHECK(v16.S_X == q(49, 10));
    auto pp = beta_profile(p1425, v16);
    CHECK(pp.beta == LinearForm(q(21, 10), q(-23, 6), q(-11, 30)));
    CHECK(display_line(*pp.wall()) == "115a+11b=63");

    PairConfig p114{"p114", generic_curve("p114", {{1, 1, 2}}), generic_curve("p114", {{1, 1, 0}})};
    CHECK(display_line(*beta_profile(p114, divisor_valuation("p114", 0)).wall()) == "7a-b=3");
}

TEST_CASE("futaki lines") {
    PairConfig p2{"p2", generic_curve("p2", {{0, 5, 0}, {4, 0, 1}}), generic_curve("p2", {{0, 0, 1}})};
    CHECK(futaki_line(p2, 2, 5, 4) == LinearForm(0, -5, 3));

    PairConfig p114{"p114", generic_curve("p114", {{1, 1, 2}, {0, 10, 0}}), generic_curve("p114", {{2, 0, 0}})};
    CHECK(futaki_line(p114, 0, 2, 9) == LinearForm(q(5, 2), q(-35, 6), q(17, 6)));

    PairConfig p1425{"p1425", generic_curve("p1425", {{0, 0, 2}, {2, 12, 0}}), generic_curve("p1425", {{10, 0, 0}})};
    CHECK(display_line(normalize_line(futaki_line(p1425, 0, 1, 6))) == "115a-49b=63");
}

TEST_CASE("quasi-monomial S on P^2") {
    CHECK(s_quasimonomial_p2(13, 2, a12_candidates()) == q(51, 5));
    CHECK(s_quasimonomial_p2(1, 1, {{1, 1}}) == 2);
    CHECK_THROWS_AS(s_quasimonomial_p2(13, 2, {{1, 2}, {1, 4}, {2, 10}}), Error);

    auto v = p2_jet_valuation();
    PairConfig cfg{"p2", curvealg::explicit_curve("p2", curvealg::q2_quintic()), generic_curve("p2", {{1, 0, 0}})};
    auto prof = beta_profile(cfg, v);
    CHECK(v.ord(cfg.Q) == 26);
    CHECK(v.ord(cfg.L) == 4);
    CHECK(prof.A == LinearForm(15, -26, -4));
    CHECK(display_line(*prof.wall()) == "15a+b=8");
}

TEST_CASE("lct certificates") {
    PairConfig cfg{"p2", generic_curve("p2", {{0, 5, 0}, {4, 0, 1}}), generic_curve("p2", {{0, 0, 1}})};
    CHECK(lct_certificate(cfg, fixed_point_valuation("p2", 2, 5, 4), q(5, 3)) == q(9, 20));
    CHECK(q(9, 20) == 3 / (5 + q(5, 3)));
    PairConfig c2{"p2", generic_curve("p2", {{0, 5, 0}, {3, 0, 2}}), generic_curve("p2", {{0, 0, 1}})};
    CHECK(lct_certificate(c2, fixed_point_valuation("p2", 2, 5, 3), q(5, 8)) == 3 / (5 + q(5, 8)));
    PairConfig smooth{"p2", generic_curve("p2", {{5, 0, 0}, {0, 5, 0}, {0, 1, 4}}), generic_curve("p2", {{1, 0, 0}})};
    auto ord = fixed_point_valuation("p2", 2, 1, 1);
    CHECK(lct_certificate(smooth, ord, 0) > q(3, 5));
    PairConfig miss{"p2", generic_curve("p2", {{0, 0, 5}}), generic_curve("p2", {{0, 0, 1}})};
    CHECK_THROWS_AS(lct_certificate(miss, ord, 1), Error);
}

TEST_CASE("constraints, index bound and local volumes") {
    CHECK(domain_constraints("p2") == std::vector<LinearForm>{{0, 5, -2}, {3, -5, -1}});
    CHECK(domain_constraints("p114", true).size() == 2);
    CHECK(domain_constraints("p114", true)[1] == LinearForm(-6, 11, 1));
    CHECK(domain_constraints("x26") == std::vector<LinearForm>{{-8, 15, 1}});
    CHECK(domain_constraints("p1425") == std::vector<LinearForm>{{-63, 115, 11}});

    CHECK(index_bound({{q(1, 2), 5}, {q(1, 4), 1}}) == 5);
    CHECK(index_bound({{q(1, 5), 5}, {q(1, 5), 1}}) == 1);
    CHECK(index_bound({{q(1, 1000000), 5}, {q(1, 1000000), 1}}) == 1);
    CHECK_THROWS_AS(index_bound({{q(1), 5}}), Error);

    CHECK(local_volume_filter(q(1, 5), q(1, 5)) == std::set<std::string>{"p2"});
    CHECK(local_volume_filter(q(1, 2), q(1, 4)).size() == 4);
    CHECK(local_volume_filter(q(599, 1000), 0).size() == 4);
}

TEST_CASE("P(1,1,4) quadratic part rank") {
    PairConfig r2{"p114", generic_curve("p114", {{1, 1, 2}}), generic_curve("p114", {{1, 1, 0}})};
    CHECK(r2.has_f2());
    CHECK_FALSE(r2.rank_one_f2());
    PairConfig r1{"p114", generic_curve("p114", {{2, 0, 2}, {0, 6, 1}}), generic_curve("p114", {{0, 2, 0}})};
    CHECK(r1.rank_one_f2());
    PairConfig none{"p114", generic_curve("p114", {{0, 10, 0}, {6, 0, 1}}), generic_curve("p114", {{0, 2, 0}})};
    CHECK_FALSE(none.has_f2());
}

TEST_CASE("homogeneity of profiles") {
    PairConfig cfg{"p2", generic_curve("p2", {{0, 5, 0}, {4, 0, 1}}), generic_curve("p2", {{0, 0, 1}})};
    const auto& X = toric::surface("p2");
    auto v = toric::chart_valuation(X, 2, 5, 4);
    auto v3 = toric::make_valuation(X, {3 * v.point.u, 3 * v.point.v});
    auto p1 = beta_profile(cfg, toric_valuation("p2", v));
    auto p3 = beta_profile(cfg, toric_valuation("p2", v3));
    CHECK(p3.beta == p1.beta * 3);
    CHECK(*p3.wall() == *p1.wall());
}
