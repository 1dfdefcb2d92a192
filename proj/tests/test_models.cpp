#include <gtest/gtest.h>

#include "gaugework/expr/parser.hpp"
#include "gaugework/models/sampling.hpp"

using namespace gaugework::models;
using gaugework::expr::parse_expr;
using gaugework::expr::indexed;

namespace {

RationalFunction P(std::string_view text) { return parse_expr(text); }

}  // namespace

TEST(FModel, So3AuxiliaryMatchesExplicitForm) {
    auto m = build_f_model(gaugework::lie::so3_structure(), LMode::AdjointAuxiliary, "so3");
    ASSERT_EQ(m.constraints.size(), 3u);
    EXPECT_EQ(m.phi(1), P("q2*p3 - q3*p2 + qp2*pp3 - qp3*pp2"));
    EXPECT_EQ(m.phi(2), P("q3*p1 - q1*p3 + qp3*pp1 - qp1*pp3"));
    EXPECT_EQ(m.phi(3), P("q1*p2 - q2*p1 + qp1*pp2 - qp2*pp1"));
    EXPECT_EQ(m.chart.size(), 6u);
    EXPECT_EQ(m.constraints[0].name, "phi1");
}

TEST(FModel, So3ZeroMode) {
    auto m = build_f_model(gaugework::lie::so3_structure(), LMode::Zero);
    EXPECT_EQ(m.phi(1), P("q2*p3 - q3*p2"));
    EXPECT_EQ(m.chart.size(), 3u);
    EXPECT_TRUE(m.l[0].is_zero());
}

TEST(FModel, So4Phi2) {
    auto m = build_f_model(gaugework::lie::so4_structure(), LMode::AdjointAuxiliary);
    EXPECT_EQ(m.phi(2) - m.l[1], P("q1*p3 - q3*p1 + q4*p6 - q6*p4"));
    EXPECT_EQ(m.chart.size(), 12u);
}

TEST(FModel, RejectsInvalidAlgebra) {
    gaugework::lie::StructureConstants f(3);
    f.set_raw(1, 2, 3, 1);
    EXPECT_THROW(build_f_model(f, LMode::Zero), InvalidStructureConstants);
}

TEST(Closure, AllThreeBuilders) {
    auto so3 = verify_closure(build_f_model(gaugework::lie::so3_structure(), LMode::AdjointAuxiliary));
    EXPECT_EQ(so3.pairs.size(), 3u);
    EXPECT_TRUE(so3.pass());
    auto so4 = verify_closure(build_f_model(gaugework::lie::so4_structure(), LMode::AdjointAuxiliary));
    EXPECT_EQ(so4.pairs.size(), 15u);
    EXPECT_TRUE(so4.pass());
    auto higgs = verify_closure(build_higgs_model());
    EXPECT_EQ(higgs.pairs.size(), 3u);
    EXPECT_TRUE(higgs.pass());
}

TEST(Closure, ReportsResidualWhenScaleIsWrong) {
    auto m = build_higgs_model();
    m.bracket_scale = 1;
    auto r = verify_closure(m);
    EXPECT_FALSE(r.pass());
    EXPECT_EQ(r.pairs[0].residual, m.phi(3));
}

TEST(Closure, So4AgreesWithPointEvaluation) {
    auto m = build_f_model(gaugework::lie::so4_structure(), LMode::AdjointAuxiliary);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Assignment pt;
        for (Symbol s : m.chart.symbols()) pt[s] = draw_nonzero(rng);
        for (int a = 1; a <= 6; ++a) {
            for (int b = a + 1; b <= 6; ++b) {
                auto lhs = gaugework::poisson::poisson_bracket(m.phi(a), m.phi(b), m.chart).evaluate(pt);
                BigRational rhs = 0;
                for (int c = 1; c <= 6; ++c) rhs += m.algebra.at(a, b, c) * m.phi(c).evaluate(pt);
                EXPECT_EQ(lhs, rhs);
            }
        }
    }
}

TEST(Closure, AuxiliaryBlockCloses) {
    for (const auto& f : {gaugework::lie::so3_structure(), gaugework::lie::so4_structure()}) {
        auto m = build_f_model(f, LMode::AdjointAuxiliary);
        for (int a = 1; a <= f.dim(); ++a) {
            for (int b = 1; b <= f.dim(); ++b) {
                RationalFunction expected;
                for (int c = 1; c <= f.dim(); ++c) expected += RationalFunction(f.at(a, b, c)) * m.l[static_cast<std::size_t>(c - 1)];
                EXPECT_EQ(gaugework::poisson::poisson_bracket(m.l[static_cast<std::size_t>(a - 1)],
                                                              m.l[static_cast<std::size_t>(b - 1)], m.chart),
                          expected);
            }
        }
    }
}

TEST(Higgs, VectorFormAndContractions) {
    auto m = build_higgs_model();
    EXPECT_EQ(m.phi(1), P("q2*p3 - q3*p2 + q0*p1 - p0*q1"));
    EXPECT_EQ(m.phi(2), P("q3*p1 - q1*p3 + q0*p2 - p0*q2"));
    EXPECT_EQ(m.phi(3), P("q1*p2 - q2*p1 + q0*p3 - p0*q3"));
    RationalFunction q_dot_phi = P("q1") * m.phi(1) + P("q2") * m.phi(2) + P("q3") * m.phi(3);
    EXPECT_EQ(q_dot_phi, P("q0*(q1*p1 + q2*p2 + q3*p3) - p0*(q1^2 + q2^2 + q3^2)"));
    RationalFunction p_dot_phi = P("p1") * m.phi(1) + P("p2") * m.phi(2) + P("p3") * m.phi(3);
    // p.(q x p) = 0, so p.phi = q0 p^2 - p0 (q.p).
    EXPECT_EQ(p_dot_phi, P("q0*(p1^2 + p2^2 + p3^2) - p0*(q1*p1 + q2*p2 + q3*p3)"));
}

TEST(Sampling, So3SurfacePointSolvesMomenta) {
    auto m = build_f_model(gaugework::lie::so3_structure(), LMode::AdjointAuxiliary);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        // The momentum block [q x] has rank 2 and q.phi = q.L carries no p,
        // so one auxiliary momentum joins the solve set.
        auto pt = sample_surface_point(m, {Symbol("p1"), Symbol("p2"), Symbol("p3"), Symbol("pp1")}, seed);
        for (const auto& phi : m.phis()) EXPECT_EQ(phi.evaluate(pt.values), 0);
        EXPECT_EQ(pt.values.size(), 12u);
    }
}

TEST(Sampling, So3MomentaAloneAreInconsistent) {
    auto m = build_f_model(gaugework::lie::so3_structure(), LMode::AdjointAuxiliary);
    EXPECT_THROW(sample_surface_point(m, {Symbol("p1"), Symbol("p2"), Symbol("p3")}, 1), SamplingError);
}

TEST(Sampling, DeterministicForSeed) {
    auto m = build_f_model(gaugework::lie::so3_structure(), LMode::AdjointAuxiliary);
    std::vector<Symbol> solve{Symbol("p1"), Symbol("p2"), Symbol("p3"), Symbol("pp1")};
    EXPECT_EQ(sample_surface_point(m, solve, 42).values, sample_surface_point(m, solve, 42).values);
}

TEST(Sampling, StationaryPinRejected) {
    auto m = build_f_model(gaugework::lie::so3_structure(), LMode::Zero);
    LocusRequest req;
    req.equations = m.phis();
    req.variables = m.chart.symbols();
    req.solve_for = m.momenta();
    req.stationary_coordinates = m.coordinates();
    req.pinned = {{Symbol("q1"), 0}, {Symbol("q2"), 0}, {Symbol("q3"), 0}};
    std::mt19937_64 rng(1);
    try {
        sample_locus(req, rng);
        FAIL() << "expected StationaryPoint";
    } catch (const SamplingError& e) {
        EXPECT_EQ(e.kind(), SamplingErrorKind::StationaryPoint);
    }
}

TEST(Sampling, InconsistentSystemIsSingular) {
    LocusRequest req;
    req.equations = {P("p1 - 1"), P("p1 - 2")};
    req.variables = {Symbol("p1")};
    req.solve_for = {Symbol("p1")};
    std::mt19937_64 rng(1);
    try {
        sample_locus(req, rng);
        FAIL() << "expected SingularSolve";
    } catch (const SamplingError& e) {
        EXPECT_EQ(e.kind(), SamplingErrorKind::SingularSolve);
    }
}

TEST(Sampling, PartialLocusFamily) {
    // Two equations in six auxiliary momenta: rank-2 affine solve, rest drawn.
    auto m = build_f_model(gaugework::lie::so4_structure(), LMode::AdjointAuxiliary);
    RationalFunction psi1;
    for (int a = 1; a <= 6; ++a) psi1 += RationalFunction::symbol(indexed("q", a)) * m.l[static_cast<std::size_t>(a - 1)];
    RationalFunction psi4 = P("q1") * m.l[3] - P("q2") * m.l[4] + P("q3") * m.l[5] + P("q4") * m.l[0] -
                            P("q5") * m.l[1] + P("q6") * m.l[2];
    LocusRequest req;
    req.equations = {psi1, psi4};
    req.variables = m.chart.symbols();
    req.solve_for = m.auxiliary_momenta();
    auto pts = sample_locus_points(req, 20, 3);
    for (const auto& pt : pts) {
        EXPECT_EQ(psi1.evaluate(pt.values), 0);
        EXPECT_EQ(psi4.evaluate(pt.values), 0);
    }
}

TEST(Sampling, ChartConditionsHonored) {
    LocusRequest req;
    req.equations = {P("q1*p1 - 1")};
    req.variables = {Symbol("q1"), Symbol("q2"), Symbol("p1")};
    req.solve_for = {Symbol("p1")};
    req.nonzero = {P("q1 - q2")};
    for (const auto& pt : sample_locus_points(req, 30, 9)) {
        EXPECT_NE(pt.values.at(Symbol("q1")), pt.values.at(Symbol("q2")));
        EXPECT_EQ(pt.values.at(Symbol("q1")) * pt.values.at(Symbol("p1")), 1);
        ASSERT_EQ(pt.conditions.size(), 1u);
    }
}
