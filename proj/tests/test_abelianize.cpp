#include <gtest/gtest.h>

#include <memory>

#include "gaugework/abelianize/abelian_set.hpp"
#include "gaugework/abelianize/so4_parts.hpp"
#include "gaugework/expr/errors.hpp"
#include "gaugework/expr/parser.hpp"
#include "gaugework/poisson/bracket.hpp"

using namespace gaugework::abelianize;
using gaugework::expr::indexed;
using gaugework::expr::parse_expr;
using gaugework::models::build_f_model;
using gaugework::models::build_higgs_model;
using gaugework::models::LMode;

namespace {

RationalFunction P(std::string_view text) { return parse_expr(text); }

const BracketEntry& entry(const std::vector<BracketEntry>& table, const std::string& a, const std::string& b) {
    for (const auto& e : table) {
        if (e.left == a && e.right == b) return e;
    }
    throw std::runtime_error("no bracket entry " + a + "," + b);
}

bool all_identities_pass(const AbelianSet& s) {
    bool ok = true;
    for (const auto& id : s.identities) {
        EXPECT_TRUE(id.pass()) << s.label << ": " << id.name << " residual " << id.residual.render();
        ok = ok && id.pass();
    }
    return ok;
}

// R1, R2 as printed for the SO(4) relations.
const RationalFunction& r1() {
    static const RationalFunction v = P("(q1^3 + 3*q1*q4^2)/(q1^2 - q4^2)^3");
    return v;
}
const RationalFunction& r2() {
    static const RationalFunction v = P("(q4^3 + 3*q4*q1^2)/(q1^2 - q4^2)^3");
    return v;
}

}  // namespace

// --------------------------------------------------------------------------
// weak-zero checker

class WeakZero : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        model_ = std::make_unique<ConstraintModel>(build_f_model(gaugework::lie::so4_structure(),
                                                                 LMode::AdjointAuxiliary, "so4"));
        parts_ = std::make_unique<So4Parts>(so4_parts(model_->l));
        locus_ = std::make_unique<WeakLocus>();
        locus_->gens = {parts_->psi1, parts_->psi4};
        locus_->variables = model_->chart.symbols();
        for (int i = 1; i <= 6; ++i) locus_->solve_for.push_back(indexed("pp", i));
        locus_->nonzero = {P("q1"), parts_->d, parts_->rho_minus, parts_->rho_plus};
    }
    static void TearDownTestSuite() {
        locus_.reset();
        parts_.reset();
        model_.reset();
    }
    static std::unique_ptr<ConstraintModel> model_;
    static std::unique_ptr<So4Parts> parts_;
    static std::unique_ptr<WeakLocus> locus_;
};
std::unique_ptr<ConstraintModel> WeakZero::model_;
std::unique_ptr<So4Parts> WeakZero::parts_;
std::unique_ptr<WeakLocus> WeakZero::locus_;

TEST_F(WeakZero, CombinationOfGeneratorsPasses) {
    auto b = r1() * parts_->psi1 - r2() * parts_->psi4;
    auto report = weak_zero_check(b, *locus_, 7);
    EXPECT_TRUE(report.pass);
    EXPECT_EQ(report.witnesses.size(), 20u);
    for (const auto& w : report.witnesses) {
        EXPECT_EQ(parts_->psi1.evaluate(w), 0);
        EXPECT_EQ(parts_->psi4.evaluate(w), 0);
    }
    EXPECT_FALSE(report.counterexample.has_value());
}

TEST_F(WeakZero, NonvanishingCoordinateFailsWithWitness) {
    auto report = weak_zero_check(P("q1"), *locus_, 7);
    EXPECT_FALSE(report.pass);
    ASSERT_TRUE(report.counterexample.has_value());
    ASSERT_TRUE(report.counter_value.has_value());
    EXPECT_NE(*report.counter_value, 0);
    EXPECT_EQ(P("q1").evaluate(*report.counterexample), *report.counter_value);
}

TEST_F(WeakZero, DeterministicInSeed) {
    auto a = weak_zero_check(parts_->psi1, *locus_, 3);
    auto b = weak_zero_check(parts_->psi1, *locus_, 3);
    EXPECT_EQ(a.witnesses, b.witnesses);
}

TEST_F(WeakZero, CoefficientSolverRecoversCombination) {
    auto b = r1() * parts_->psi1 - r2() * parts_->psi4;
    std::set<Symbol> basis;
    for (int i = 1; i <= 6; ++i) {
        basis.insert(indexed("pp", i));
        basis.insert(indexed("p", i));
        basis.insert(indexed("qp", i));
    }
    auto c = combination_coefficients(b, locus_->gens, basis);
    ASSERT_TRUE(c.has_value());
    ASSERT_EQ(c->size(), 2u);
    EXPECT_EQ((*c)[0], r1());
    EXPECT_EQ((*c)[1], -r2());
    EXPECT_FALSE(combination_coefficients(P("q1"), locus_->gens, basis).has_value());
}

// --------------------------------------------------------------------------
// SO(3)

TEST(So3, ExplicitSetOnQ3Chart) {
    auto m = build_f_model(gaugework::lie::so3_structure(), LMode::AdjointAuxiliary, "so3");
    auto s = abelianize_so3(m, 3);
    ASSERT_EQ(s.psis.size(), 3u);
    EXPECT_EQ(s.psi(1), -m.phi(1) / P("q3"));
    EXPECT_EQ(s.psi(3), P("q1")*m.l[0] + P("q2")*m.l[1] + P("q3")*m.l[2]);
    auto expected2 = m.phi(2) / P("q3") - P("q2/(q3*(q2^2 + q3^2))") * s.psi(3);
    EXPECT_EQ(s.psi(2), expected2);
    ASSERT_EQ(s.chart_conditions.size(), 2u);
    EXPECT_EQ(s.chart_conditions[0], P("q3"));
    EXPECT_EQ(s.chart_conditions[1], P("q2^2 + q3^2"));
}

TEST(So3, IntermediateIdentities) {
    auto m = build_f_model(gaugework::lie::so3_structure(), LMode::AdjointAuxiliary, "so3");
    auto s = abelianize_so3(m, 3);
    EXPECT_TRUE(all_identities_pass(s));
    auto psi2_old = m.phi(2) / P("q3");
    auto old_bracket = gaugework::poisson::poisson_bracket(s.psi(1), psi2_old, m.chart);
    EXPECT_EQ(old_bracket, -s.psi(3) / P("q3^3"));
    auto k = P("q2/(q3*(q2^2 + q3^2))");
    EXPECT_EQ(gaugework::poisson::poisson_bracket(s.psi(1), k, m.chart), P("-1/q3^3"));
}

class So3Charts : public ::testing::TestWithParam<int> {};

TEST_P(So3Charts, FinalBracketsVanishIdentically) {
    auto m = build_f_model(gaugework::lie::so3_structure(), LMode::AdjointAuxiliary, "so3");
    auto s = abelianize_so3(m, GetParam());
    ASSERT_EQ(s.bracket_report.size(), 3u);
    for (const auto& e : s.bracket_report) {
        EXPECT_EQ(e.status, BracketStatus::IdenticallyZero) << e.left << "," << e.right;
        EXPECT_TRUE(e.value.is_zero());
    }
    EXPECT_TRUE(s.brackets_vanish());
    EXPECT_TRUE(all_identities_pass(s));
    EXPECT_EQ(entry(s.intermediate_brackets, "psi1", "psi2").status, BracketStatus::Nonzero);
}

TEST_P(So3Charts, EquivalentToOriginalConstraints) {
    auto m = build_f_model(gaugework::lie::so3_structure(), LMode::AdjointAuxiliary, "so3");
    auto s = abelianize_so3(m, GetParam());
    auto eq = check_equivalence(s, m, 11);
    EXPECT_TRUE(eq.exact());
    EXPECT_EQ(eq.points.size(), 20u);
    EXPECT_TRUE(eq.det_nonzero());
    for (const auto& p : eq.points) {
        for (const auto& c : s.chart_conditions) EXPECT_NE(c.evaluate(p), 0);
    }
}

INSTANTIATE_TEST_SUITE_P(Chart, So3Charts, ::testing::Values(1, 2, 3));

TEST(So3, Chart1IsCyclicImageOfChart3) {
    auto m = build_f_model(gaugework::lie::so3_structure(), LMode::AdjointAuxiliary, "so3");
    auto s = abelianize_so3(m, 1);
    EXPECT_EQ(s.chart_conditions[0], P("q1"));
    EXPECT_EQ(s.psi(1), -m.phi(2) / P("q1"));
}

TEST(So3, RequiresNonzeroL) {
    auto zero = build_f_model(gaugework::lie::so3_structure(), LMode::Zero, "so3-zero");
    try {
        abelianize_so3(zero);
        FAIL() << "expected AbelianizeError";
    } catch (const AbelianizeError& e) {
        EXPECT_EQ(e.kind(), AbelianizeErrorKind::LIsZero);
    }
}

TEST(So3, RejectsOtherAlgebra) {
    auto so4 = build_f_model(gaugework::lie::so4_structure(), LMode::AdjointAuxiliary);
    EXPECT_THROW(abelianize_so3(so4), AbelianizeError);
}

// --------------------------------------------------------------------------
// SO(4)

class So4 : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        model_ = std::make_unique<ConstraintModel>(build_f_model(gaugework::lie::so4_structure(),
                                                                 LMode::AdjointAuxiliary, "so4"));
        set_ = std::make_unique<AbelianSet>(abelianize_so4(*model_));
    }
    static void TearDownTestSuite() {
        set_.reset();
        model_.reset();
    }
    static std::unique_ptr<ConstraintModel> model_;
    static std::unique_ptr<AbelianSet> set_;
};
std::unique_ptr<ConstraintModel> So4::model_;
std::unique_ptr<AbelianSet> So4::set_;

TEST_F(So4, Psi1IsQDotL) {
    RationalFunction qdotl;
    for (int a = 1; a <= 6; ++a) qdotl += RationalFunction::symbol(indexed("q", a)) * model_->l[a - 1];
    EXPECT_EQ(set_->psi(1), qdotl);
}

TEST_F(So4, ChartConditionsCoverDenominators) {
    ASSERT_EQ(set_->chart_conditions.size(), 4u);
    EXPECT_EQ(set_->chart_conditions[0], P("q1"));
    EXPECT_EQ(set_->chart_conditions[1], P("q1^2 - q4^2"));
    EXPECT_EQ(set_->chart_conditions[2], P("(q1 - q4)^2 + (q2 + q5)^2"));
    EXPECT_EQ(set_->chart_conditions[3], P("(q1 + q4)^2 + (q2 - q5)^2"));
}

TEST_F(So4, PreRedefinitionRelationsHoldExactly) {
    EXPECT_TRUE(all_identities_pass(*set_));
    const auto& pre = set_->intermediate;
    auto br = [&](int a, int b) {
        return gaugework::poisson::poisson_bracket(pre[a - 1].expr, pre[b - 1].expr, model_->chart);
    };
    const auto& psi1 = pre[0].expr;
    const auto& psi4 = pre[3].expr;
    EXPECT_EQ(br(3, 2), r1() * psi1 - r2() * psi4);
    EXPECT_EQ(br(2, 6), r2() * psi1 - r1() * psi4);
}

TEST_F(So4, EverythingCommutesWithPsi1AndPsi4) {
    for (const auto& e : set_->bracket_report) {
        if (e.left == "psi1" || e.left == "psi4" || e.right == "psi1" || e.right == "psi4") {
            EXPECT_EQ(e.status, BracketStatus::IdenticallyZero) << e.left << "," << e.right;
        }
    }
}

TEST_F(So4, IntermediateTableStatuses) {
    ASSERT_EQ(set_->intermediate_brackets.size(), 15u);
    const auto& t = set_->intermediate_brackets;
    auto c23 = entry(t, "psi2", "psi3");
    ASSERT_EQ(c23.status, BracketStatus::WeaklyZero);
    ASSERT_EQ(c23.coefficients.size(), 2u);
    EXPECT_EQ(c23.coefficients[0], -r1());
    EXPECT_EQ(c23.coefficients[1], r2());
    auto c26 = entry(t, "psi2", "psi6");
    ASSERT_EQ(c26.status, BracketStatus::WeaklyZero);
    EXPECT_EQ(c26.coefficients[0], r2());
    EXPECT_EQ(c26.coefficients[1], -r1());
}

TEST_F(So4, FinalTableIsWeaklyAbelian) {
    const auto& t = set_->bracket_report;
    ASSERT_EQ(t.size(), 15u);
    EXPECT_TRUE(set_->brackets_vanish());
    std::set<std::pair<std::string, std::string>> weak = {
        {"psi2", "psi3"}, {"psi2", "psi6"}, {"psi3", "psi5"}, {"psi5", "psi6"}};
    for (const auto& e : t) {
        if (weak.count({e.left, e.right})) {
            EXPECT_EQ(e.status, BracketStatus::WeaklyZero) << e.left << "," << e.right;
            EXPECT_EQ(e.witnesses.size(), 20u);
        } else {
            EXPECT_EQ(e.status, BracketStatus::IdenticallyZero) << e.left << "," << e.right;
        }
    }
    auto c23 = entry(t, "psi2", "psi3").coefficients;
    ASSERT_EQ(c23.size(), 2u);
    EXPECT_EQ(c23[0], RationalFunction(-2) * r1());
    EXPECT_EQ(c23[1], RationalFunction(2) * r2());
    auto c56 = entry(t, "psi5", "psi6").coefficients;
    ASSERT_EQ(c56.size(), 2u);
    EXPECT_EQ(c56[0], RationalFunction(2) * r1());
    EXPECT_EQ(c56[1], RationalFunction(-2) * r2());
}

TEST_F(So4, EquivalentToOriginalConstraints) {
    auto eq = check_equivalence(*set_, *model_, 5);
    EXPECT_TRUE(eq.exact());
    EXPECT_EQ(eq.det_values.size(), 20u);
    EXPECT_TRUE(eq.det_nonzero());
}

TEST_F(So4, ParameterMap) {
    auto pm = solve_parameter_map(*model_, *set_);
    ASSERT_EQ(pm.eta.size(), 6u);
    ASSERT_EQ(pm.theta.size(), 6u);
    EXPECT_FALSE(pm.system_determinant.is_zero());
    std::size_t deltas = 0;
    for (const auto& c : pm.coordinate_checks) {
        EXPECT_TRUE(c.pass()) << c.name;
        if (c.name.rfind("delta_A q", 0) == 0) ++deltas;
    }
    EXPECT_EQ(deltas, 6u);
    EXPECT_EQ(pm.coordinate_checks.size(), 6u + 16u);
    ASSERT_EQ(pm.solved_momentum_checks.size(), 2u);
    for (const auto& c : pm.solved_momentum_checks) EXPECT_TRUE(c.pass()) << c.name;
    EXPECT_EQ(pm.momentum_checks.size(), 6u);
    for (const auto& [name, r] : pm.momentum_checks) {
        EXPECT_TRUE(r.pass) << name;
        EXPECT_EQ(r.witnesses.size(), 20u);
    }
    gaugework::expr::Bindings zero;
    for (auto t : pm.theta) zero[t] = RationalFunction(0);
    for (const auto& e : pm.eta) EXPECT_TRUE(e.substitute(zero).is_zero());
}

TEST(So4Errors, RequiresNonzeroL) {
    auto zero = build_f_model(gaugework::lie::so4_structure(), LMode::Zero);
    EXPECT_THROW(abelianize_so4(zero), AbelianizeError);
}

// --------------------------------------------------------------------------
// epsilon limit

TEST(EpsilonLimit, AllIdentitiesExact) {
    auto r = epsilon_limit_check();
    EXPECT_GE(r.checks.size(), 10u);
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass()) << c.name << ": " << c.residual.render();
    EXPECT_TRUE(r.pass());
}

// --------------------------------------------------------------------------
// Higgs

TEST(Higgs, CandidateAndBrackets) {
    auto m = build_higgs_model();
    auto s = higgs_abelian_candidate(m);
    ASSERT_EQ(s.psis.size(), 3u);
    EXPECT_EQ(s.psi(1), P("q0*p1 - p0*q1"));
    EXPECT_EQ(s.psi(3), P("q0*p3 - p0*q3"));
    EXPECT_TRUE(all_identities_pass(s));
    const auto& c = gaugework::poisson::poisson_bracket;
    EXPECT_EQ(c(P("q2"), s.psi(2), m.chart), P("q0"));
    EXPECT_TRUE(c(P("q1"), s.psi(2), m.chart).is_zero());
    auto b12 = c(s.psi(1), s.psi(2), m.chart);
    EXPECT_EQ(b12, P("q1*p2 - q2*p1"));
    for (const auto& e : s.bracket_report) {
        EXPECT_EQ(e.status, BracketStatus::WeaklyZero) << e.left << "," << e.right;
    }
    auto c12 = entry(s.bracket_report, "psi1", "psi2").coefficients;
    ASSERT_EQ(c12.size(), 3u);
    EXPECT_EQ(c12[0], P("-q2/q0"));
    EXPECT_EQ(c12[1], P("q1/q0"));
    EXPECT_TRUE(c12[2].is_zero());
    auto eq = check_equivalence(s, m, 2);
    EXPECT_TRUE(eq.exact());
    EXPECT_TRUE(eq.det_nonzero());
}
