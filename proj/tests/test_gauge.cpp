#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "gaugework/expr/parser.hpp"
#include "gaugework/gauge/gg.hpp"
#include "gaugework/gauge/residual.hpp"

using namespace gaugework::gauge;
using gaugework::expr::indexed;
using gaugework::expr::parse_expr;
using gaugework::models::build_f_model;
using gaugework::models::LMode;

namespace {

RationalFunction P(std::string_view text) { return parse_expr(text); }

ConstraintModel so3_aux() { return build_f_model(gaugework::lie::so3_structure(), LMode::AdjointAuxiliary, "so3"); }
ConstraintModel so3_zero() { return build_f_model(gaugework::lie::so3_structure(), LMode::Zero, "so3-zero"); }
ConstraintModel so4_zero() { return build_f_model(gaugework::lie::so4_structure(), LMode::Zero, "so4-zero"); }

Assignment point_of(const ConstraintModel& m, std::vector<int> q, std::vector<int> p) {
    Assignment a;
    auto qs = m.coordinates();
    auto ps = m.momenta();
    for (std::size_t i = 0; i < qs.size(); ++i) a[qs[i]] = q.at(i);
    for (std::size_t i = 0; i < ps.size(); ++i) a[ps[i]] = p.at(i);
    return a;
}

bool proportional(const RationalVector& v, const RationalVector& w) {
    if (v.size() != w.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[i] * w[j] != v[j] * w[i]) return false;
        }
    }
    return true;
}

// Is w in the span of `basis`? Rank test over the rationals.
bool in_span(const std::vector<RationalVector>& basis, const RationalVector& w) {
    auto with = basis;
    with.push_back(w);
    return gaugework::poisson::rank(with) == gaugework::poisson::rank(basis);
}

}  // namespace

// --------------------------------------------------------------------------
// Faddeev-Popov determinant

TEST(FpDeterminant, So3WithP1ReducesToMinusQ3L1) {
    auto m = so3_aux();
    auto g = so3_gauge(m, OmegaN::P1);
    auto r = fp_determinant(m, g, so3_reduction(m), so3_combined_surface(m, g), 1);
    EXPECT_EQ(r.reduced, P("-q3*(qp2*pp3 - qp3*pp2)"));
    EXPECT_EQ(r.reduced, -P("q3") * m.l[0]);
    ASSERT_EQ(r.samples.size(), 20u);
    EXPECT_TRUE(r.agrees());
    EXPECT_TRUE(r.nonzero_at_samples());
    for (const auto& s : r.samples) {
        for (const auto& phi : m.phis()) EXPECT_EQ(phi.evaluate(s.point), 0);
        for (const auto& w : g.exprs()) EXPECT_EQ(w.evaluate(s.point), 0);
    }
}

TEST(FpDeterminant, So3WithPhi1IsWeaklyZero) {
    auto m = so3_aux();
    auto g = so3_gauge(m, OmegaN::Phi1);
    auto r = fp_determinant(m, g, so3_reduction(m), so3_combined_surface(m, g), 1);
    EXPECT_FALSE(r.raw.is_zero());
    EXPECT_TRUE(r.vanishes_at_samples());
    EXPECT_TRUE(r.agrees());
    EXPECT_EQ(r.samples.size(), 20u);
}

TEST(FpDeterminant, CoordinateGaugesVanishWithoutL) {
    auto m = so3_zero();
    std::vector<GaugeChoice> gauges = {
        {{{"q1", P("q1")}, {"q2", P("q2")}, {"q3", P("q3")}}},
        {{{"q1", P("q1")}, {"q2-q3", P("q2 - q3")}, {"q1*q3+q2", P("q1*q3 + q2")}}},
        {{{"q1^2", P("q1^2")}, {"q2*q3", P("q2*q3")}, {"q3+q1", P("q3 + q1")}}},
    };
    for (const auto& g : gauges) {
        auto r = fp_determinant(m, g, {}, constraint_surface(m), 4);
        EXPECT_EQ(r.samples.size(), 20u);
        EXPECT_TRUE(r.vanishes_at_samples()) << g.omegas[1].name;
    }
}

TEST(FpDeterminant, ConstraintsAsTheirOwnGaugeAreWeaklyZero) {
    auto m = so3_aux();
    GaugeChoice g;
    for (const auto& c : m.constraints) g.omegas.push_back(c);
    auto r = fp_determinant(m, g, {}, constraint_surface(m), 2);
    EXPECT_TRUE(r.vanishes_at_samples());
}

TEST(FpDeterminant, GaugeCountMustMatch) {
    auto m = so3_aux();
    GaugeChoice g{{{"q1", P("q1")}}};
    EXPECT_THROW(fp_determinant(m, g, {}, constraint_surface(m), 1), gaugework::poisson::NotSquare);
}

TEST(FpDeterminant, Deterministic) {
    auto m = so3_aux();
    auto g = so3_gauge(m, OmegaN::P1);
    auto a = fp_determinant(m, g, so3_reduction(m), so3_combined_surface(m, g), 9);
    auto b = fp_determinant(m, g, so3_reduction(m), so3_combined_surface(m, g), 9);
    ASSERT_EQ(a.samples.size(), b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) EXPECT_EQ(a.samples[i].point, b.samples[i].point);
}

// --------------------------------------------------------------------------
// residual symmetry

TEST(Residual, So3VacuumMatchesExplicitJacobian) {
    auto m = so3_zero();
    const int a = 2;
    auto ns = residual_null_space(m, point_of(m, {0, 0, a}, {0, 0, 0}));
    EXPECT_EQ(ns.constraints, 3u);
    EXPECT_EQ(ns.rank, 2u);
    ASSERT_EQ(ns.I(), 1u);
    EXPECT_TRUE(proportional(ns.null_vectors[0], {0, 0, 1}));
    // Columns q1 q2 q3 p1 p2 p3.
    gaugework::poisson::RationalMatrix expected = {
        {0, 0, 0, 0, -a, 0},
        {0, 0, 0, a, 0, 0},
        {0, 0, 0, 0, 0, 0},
    };
    EXPECT_EQ(ns.jacobian, expected);
}

TEST(Residual, So3GenericVacuumNullVectorIsQ) {
    auto m = so3_zero();
    auto ns = residual_null_space(m, point_of(m, {3, -1, 2}, {0, 0, 0}));
    ASSERT_EQ(ns.I(), 1u);
    EXPECT_TRUE(proportional(ns.null_vectors[0], {3, -1, 2}));
}

TEST(Residual, So4TwoNullVectors) {
    auto m = so4_zero();
    std::vector<int> q = {2, -3, 1, 5, 4, -1};
    auto ns = residual_null_space(m, point_of(m, q, {0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(ns.rank, 4u);
    ASSERT_EQ(ns.I(), 2u);
    RationalVector lambda(q.begin(), q.end());
    RationalVector lambda2 = {q[3], -q[4], q[5], q[0], -q[1], q[2]};
    EXPECT_TRUE(annihilates(ns.jacobian, lambda));
    EXPECT_TRUE(annihilates(ns.jacobian, lambda2));
    EXPECT_TRUE(in_span(ns.null_vectors, lambda));
    EXPECT_TRUE(in_span(ns.null_vectors, lambda2));
}

TEST(Residual, StationaryPointHasFullNullSpace) {
    auto m = so4_zero();
    auto ns = residual_null_space(m, point_of(m, {0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(ns.rank, 0u);
    EXPECT_EQ(ns.I(), 6u);
    EXPECT_TRUE(ns.stationary());
}

TEST(Residual, RankNullityAtRandomPoints) {
    std::mt19937_64 rng(17);
    for (const auto& m : {so3_zero(), so4_zero(), so3_aux()}) {
        for (int t = 0; t < 10; ++t) {
            Assignment pt;
            for (auto s : m.chart.symbols()) pt[s] = static_cast<int>(rng() % 7) - 3;
            auto ns = residual_null_space(m, pt);
            EXPECT_EQ(ns.rank + ns.I(), ns.constraints);
            for (const auto& v : ns.null_vectors) EXPECT_TRUE(annihilates(ns.jacobian, v));
        }
    }
}

TEST(ResidualAction, VanishesForNullVector) {
    auto m = so3_zero();
    auto pt = point_of(m, {0, 0, 1}, {0, 0, 0});
    auto check = residual_action_check(m, pt, {0, 0, 1});
    EXPECT_EQ(check.functions, 6u + 21u);
    EXPECT_TRUE(check.pass());
}

TEST(ResidualAction, NonNullVectorLeavesWitness) {
    auto m = so3_zero();
    auto pt = point_of(m, {0, 0, 1}, {0, 0, 0});
    auto check = residual_action_check(m, pt, {1, 0, 0});
    EXPECT_FALSE(check.pass());
    EXPECT_FALSE(check.witness.empty());
}

TEST(ResidualAction, So4BothNullVectors) {
    auto m = so4_zero();
    std::vector<int> q = {1, 2, -2, 3, -1, 4};
    auto pt = point_of(m, q, {0, 0, 0, 0, 0, 0});
    EXPECT_TRUE(residual_action_check(m, pt, RationalVector(q.begin(), q.end())).pass());
    EXPECT_TRUE(residual_action_check(m, pt, {q[3], -q[4], q[5], q[0], -q[1], q[2]}).pass());
}

TEST(ConjectureProbe, So3AlwaysOne) {
    auto r = conjecture_probe(gaugework::lie::so3_structure(), 50, 1);
    EXPECT_EQ(r.algebra, "so3");
    EXPECT_EQ(r.trials.size(), 50u);
    EXPECT_EQ(r.histogram.at(1), 50u);
    EXPECT_TRUE(r.matches());
}

TEST(ConjectureProbe, So4AlwaysTwo) {
    auto r = conjecture_probe(gaugework::lie::so4_structure(), 50, 1);
    EXPECT_EQ(r.expected, 2u);
    EXPECT_EQ(r.histogram.size(), 1u);
    EXPECT_EQ(r.histogram.at(2), 50u);
    EXPECT_TRUE(r.matches());
}

// --------------------------------------------------------------------------
// simulator

namespace {

GGConfig generic_start() {
    GGConfig c;
    c.q = {1.05, 0.1, -0.2};
    c.p = {0.0, 0.3, 0.1};
    return c;
}

}  // namespace

TEST(GeorgiGlashow, VacuumIsFixed) {
    GGConfig c;
    c.steps = 100;
    auto t = simulate_gg(c);
    for (const auto& s : t.states) {
        EXPECT_EQ(s.q, (Vec3{0, 0, 1}));
        EXPECT_EQ(s.p, (Vec3{0, 0, 0}));
    }
}

TEST(GeorgiGlashow, ConservationAtStandardParameters) {
    auto t = simulate_gg(generic_start());
    ASSERT_EQ(t.states.size(), 10001u);
    EXPECT_LE(t.energy_drift(), 1e-6);
    EXPECT_LE(t.angular_momentum_drift(), 1e-10);
}

TEST(GeorgiGlashow, Reversible) { EXPECT_LE(reversibility_error(generic_start()), 1e-9); }

TEST(GeorgiGlashow, NonFiniteStateDetected) {
    GGConfig c;
    c.q = {1e80, 0, 0};
    c.steps = 10;
    EXPECT_THROW(simulate_gg(c), NonFiniteState);
}

TEST(GeorgiGlashow, RejectsNonPositiveTimestep) {
    GGConfig c;
    c.timestep = 0;
    EXPECT_THROW(simulate_gg(c), std::invalid_argument);
}

TEST(GeorgiGlashow, TrajectoryStream) {
    GGConfig c = generic_start();
    c.steps = 2;
    std::ostringstream out;
    write_trajectory(out, simulate_gg(c));
    std::string text = out.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), "step,q1,q2,q3,p1,p2,p3,energy,L1,L2,L3");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 4);
}

// --------------------------------------------------------------------------
// orbit averages

TEST(OrbitAverage, ChargedFieldAveragesToZero) {
    std::map<Symbol, double> pt = {{indexed("q", 1), 0.8}, {indexed("q", 2), -0.6}, {indexed("q", 3), 0.0}};
    Vec3 axis{0, 0, 1};
    EXPECT_LE(std::abs(orbit_average(P("q1"), pt, axis)), 1e-12);
    EXPECT_LE(std::abs(orbit_average(P("q2"), pt, axis)), 1e-12);
    EXPECT_NEAR(orbit_average(P("q1^2 + q2^2"), pt, axis), 1.0, 1e-12);
}

TEST(OrbitAverage, InvariantsKeepTheirValue) {
    std::map<Symbol, double> pt = {{indexed("q", 1), 0.3}, {indexed("q", 2), 0.4}, {indexed("q", 3), 1.2},
                                   {indexed("p", 1), -0.5}, {indexed("p", 2), 0.25}, {indexed("p", 3), 0.1}};
    Vec3 axis{0, 0, 1};
    auto inv = P("q1*p1 + q2*p2 + q3*p3");
    double pointwise = 0.3 * -0.5 + 0.4 * 0.25 + 1.2 * 0.1;
    EXPECT_NEAR(orbit_average(inv, pt, axis), pointwise, 1e-12);
    EXPECT_NEAR(orbit_average(P("q3"), pt, axis), 1.2, 1e-12);
}

TEST(OrbitAverage, PointOnAxisIsFixed) {
    std::map<Symbol, double> pt = {{indexed("q", 1), 0.0}, {indexed("q", 2), 0.0}, {indexed("q", 3), 2.0}};
    Vec3 axis{0, 0, 1};
    EXPECT_NEAR(orbit_average(P("q3^3 + q1"), pt, axis), 8.0, 1e-12);
}

TEST(OrbitAverage, RotationAboutTiltedAxisPreservesLength) {
    Vec3 axis{1 / std::sqrt(3.0), 1 / std::sqrt(3.0), 1 / std::sqrt(3.0)};
    Vec3 v{0.2, -0.7, 0.5};
    auto r = rotate(v, axis, 1.1);
    EXPECT_NEAR(r[0] * r[0] + r[1] * r[1] + r[2] * r[2], 0.04 + 0.49 + 0.25, 1e-14);
    auto back = rotate(r, axis, -1.1);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(back[i], v[i], 1e-14);
}
