#include <gtest/gtest.h>

#include <cmath>

#include "gaugework/expr/errors.hpp"
#include "gaugework/expr/parser.hpp"
#include "support/random_expr.hpp"

using namespace gaugework::expr;
using gaugework::testing::ExprGen;

namespace {

RationalFunction P(std::string_view text) { return parse_expr(text); }

std::vector<Symbol> test_symbols() {
    return {Symbol("q1"), Symbol("q2"), Symbol("q3"), Symbol("p1"), Symbol("p2"), Symbol("p3")};
}

// Evaluates at a point, or returns nullopt if a denominator vanishes there.
std::optional<BigRational> try_eval(const RationalFunction& f, const Assignment& point) {
    try {
        return f.evaluate(point);
    } catch (const ExprError& e) {
        if (e.kind() == ExprErrorKind::DenominatorVanishesAtPoint) return std::nullopt;
        throw;
    }
}

}  // namespace

TEST(Symbol, OrderFollowsChartFamilies) {
    EXPECT_LT(Symbol("q1"), Symbol("q2"));
    EXPECT_LT(Symbol("q9"), Symbol("q10"));
    EXPECT_LT(Symbol("q6"), Symbol("p1"));
    EXPECT_LT(Symbol("p6"), Symbol("qp1"));
    EXPECT_LT(Symbol("qp3"), Symbol("pp1"));
    EXPECT_LT(Symbol("pp3"), Symbol("th1"));
    EXPECT_LT(Symbol("th1"), Symbol("eps"));
    EXPECT_EQ(Symbol("q0"), Symbol("q0"));
    EXPECT_THROW(Symbol("1x"), std::invalid_argument);
}

TEST(Rational, ParseAndRender) {
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-7")), "-7");
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Parse, PaperGeneratorHasUnitDenominator) {
    RationalFunction f = P("q2*p3 - q3*p2");
    EXPECT_TRUE(f.is_polynomial());
    EXPECT_TRUE(f.denominator() == Polynomial(1));
    Polynomial expected = Polynomial::variable(Symbol("q2")) * Polynomial::variable(Symbol("p3")) -
                          Polynomial::variable(Symbol("q3")) * Polynomial::variable(Symbol("p2"));
    EXPECT_TRUE(f.numerator() == expected);
    EXPECT_EQ(f.render(), "q2*p3 - q3*p2");
}

TEST(Parse, ZeroIsZeroElement) {
    RationalFunction z = P("0");
    EXPECT_TRUE(z.is_zero());
    EXPECT_TRUE(z.denominator() == Polynomial(1));
    EXPECT_EQ(z.render(), "0");
}

TEST(Parse, SelfQuotientEqualsOne) {
    RationalFunction f = P("(q1^2 - q4^2)/(q1^2 - q4^2)");
    EXPECT_TRUE(cross_multiplication_equal(f, P("1")));
    EXPECT_TRUE(f == P("1"));
}

TEST(Parse, PrecedenceAndUnaryMinus) {
    EXPECT_TRUE(P("-q1^2") == -P("q1*q1"));
    EXPECT_TRUE(P("2*3^2") == P("18"));
    EXPECT_TRUE(P("1 - 2 - 3") == P("-4"));
    EXPECT_TRUE(P("12/2/3") == P("2"));
    EXPECT_TRUE(P("--q1") == P("q1"));
    EXPECT_TRUE(P("(q1+q2)^0") == P("1"));
}

TEST(Parse, Errors) {
    std::set<Symbol> scope{Symbol("q1"), Symbol("p1")};
    try {
        parse_expr("q1 + zz", scope);
        FAIL() << "expected UnknownSymbol";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ExprErrorKind::UnknownSymbol);
        EXPECT_EQ(e.position(), 5u);
    }
    try {
        parse_expr("q1 * (p1 + ", scope);
        FAIL() << "expected SyntaxError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ExprErrorKind::SyntaxError);
    }
    try {
        parse_expr("q1/(3-3)", scope);
        FAIL() << "expected DivisionByZeroLiteral";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ExprErrorKind::DivisionByZeroLiteral);
        EXPECT_EQ(e.position(), 2u);
    }
    EXPECT_THROW(parse_expr("q1 p1", scope), ParseError);
    EXPECT_THROW(parse_expr("q1^-2", scope), ParseError);
    EXPECT_THROW(parse_expr("", scope), ParseError);
}

TEST(IsZero, Examples) {
    EXPECT_TRUE(is_zero(P("q1*p2 - q1*p2")));
    EXPECT_TRUE(is_zero(P("(q2^2 + q3^2)^2 - (q2^2+q3^2)*(q2^2+q3^2)")));
    EXPECT_FALSE(is_zero(P("q1*p2 - q2*p1")));
}

TEST(Diff, Examples) {
    EXPECT_TRUE(diff(P("q2*p3 - q3*p2"), Symbol("p3")) == P("q2"));
    EXPECT_TRUE(diff(P("7/3"), Symbol("q1")).is_zero());
    EXPECT_TRUE(diff(P("q1*p2"), Symbol("q1")) == P("p2"));
}

TEST(Diff, QuotientRuleAgainstDifferenceQuotient) {
    RationalFunction f = P("q2/(q3*(q2^2+q3^2))");
    RationalFunction expected = P("(q3^2 - q2^2)/(q3*(q2^2+q3^2)^2)");
    RationalFunction got = diff(f, Symbol("q2"));
    EXPECT_TRUE(got == expected);

    // Independent check: central difference quotient with an exact tiny step.
    ExprGen gen(11, {Symbol("q2"), Symbol("q3")});
    const BigRational h(1, 1000000000);
    for (int trial = 0; trial < 20; ++trial) {
        Assignment at = gen.point();
        Assignment plus = at;
        Assignment minus = at;
        plus[Symbol("q2")] += h;
        minus[Symbol("q2")] -= h;
        BigRational ratio = (f.evaluate(plus) - f.evaluate(minus)) / (2 * h);
        BigRational diff_value = ratio - expected.evaluate(at);
        double err = std::fabs(diff_value.get_d());
        EXPECT_LT(err, 1e-9) << "trial " << trial;
    }
}

TEST(Substitute, EmptyBindingsIsIdentity) {
    RationalFunction f = P("(q1 + p2)/(q3 - 2)");
    EXPECT_EQ(substitute(f, {}).render(), f.render());
}

TEST(Substitute, ForcedSingularity) {
    RationalFunction f = P("1/(q1 - q4)");
    try {
        substitute(f, {{Symbol("q1"), P("q4")}});
        FAIL();
    } catch (const ExprError& e) {
        EXPECT_EQ(e.kind(), ExprErrorKind::IdenticallyZeroDenominator);
    }
}

TEST(Substitute, SimultaneousAndRational) {
    RationalFunction f = P("q1*p1 + q2");
    RationalFunction g = substitute(f, {{Symbol("q1"), P("q2")}, {Symbol("q2"), P("1/q1")}});
    EXPECT_TRUE(g == P("q2*p1 + 1/q1"));
}

TEST(Substitute, ShiftOntoDegenerateChart) {
    // p3 solved from the phi2/phi5 pair has denominator q1^2 - q4^2; with
    // q1 -> q4 + eps the cleared relation picks up the factor eps*(2*q4 + eps).
    RationalFunction cleared =
        P("(q1^2-q4^2)*p3 - ((q3*q1 - q4*q6)*p1 + (q6*q1 - q4*q3)*p4 - (q1*L2 + q4*L5))");
    RationalFunction shifted = substitute(cleared, {{Symbol("q1"), P("q4 + eps")}});
    RationalFunction expected =
        P("eps*(2*q4 + eps)*p3 - ((q3*(q4+eps) - q4*q6)*p1 + (q6*(q4+eps) - q4*q3)*p4 - ((q4+eps)*L2 + q4*L5))");
    EXPECT_TRUE(shifted == expected);
}

TEST(Eval, Examples) {
    Assignment point{{Symbol("q2"), 1}, {Symbol("q3"), 2}, {Symbol("p2"), 3}, {Symbol("p3"), 5}};
    EXPECT_EQ(eval_point(P("q2*p3 - q3*p2"), point), BigRational(-1));
    EXPECT_EQ(eval_point(P("0"), point), BigRational(0));
    Assignment singular{{Symbol("q1"), 2}, {Symbol("q4"), 2}};
    try {
        eval_point(P("1/(q1^2 - q4^2)"), singular);
        FAIL();
    } catch (const ExprError& e) {
        EXPECT_EQ(e.kind(), ExprErrorKind::DenominatorVanishesAtPoint);
    }
    EXPECT_THROW(eval_point(P("q9"), point), ExprError);
}

TEST(Render, CanonicalForms) {
    EXPECT_EQ(P("p2*q2 + 3/2*q1^2 - 1").render(), "3/2*q1^2 + q2*p2 - 1");
    EXPECT_EQ(P("1/(2*q3)").render(), "(1/2)/(q3)");
    EXPECT_EQ(P("-q1/(q3^2 + q2)").render(), "(-q1)/(q3^2 + q2)");
}

// --- properties ------------------------------------------------------------

class ExprProperties : public ::testing::Test {
protected:
    static constexpr int kIterations = 60;
    ExprGen gen{20240917, test_symbols()};
};

TEST_F(ExprProperties, RingAxioms) {
    for (int i = 0; i < kIterations; ++i) {
        RationalFunction f = gen.rational(), g = gen.rational(), h = gen.rational();
        EXPECT_TRUE(((f + g) + h - (f + (g + h))).is_zero());
        EXPECT_TRUE((f * g - g * f).is_zero());
        EXPECT_TRUE((f * (g + h) - (f * g + f * h)).is_zero());
        EXPECT_TRUE(cross_multiplication_equal(f * (g + h), f * g + f * h));
    }
}

TEST_F(ExprProperties, DivisionInvertsMultiplication) {
    for (int i = 0; i < kIterations; ++i) {
        RationalFunction f = gen.rational(), g = gen.rational();
        if (g.is_zero()) continue;
        EXPECT_TRUE((f * g / g - f).is_zero());
    }
}

TEST_F(ExprProperties, RenderRoundTrip) {
    for (int i = 0; i < kIterations; ++i) {
        RationalFunction f = gen.rational(4, 3);
        RationalFunction back = parse_expr(f.render());
        EXPECT_TRUE(back == f) << f.render();
        EXPECT_EQ(back.render(), parse_expr(back.render()).render());
    }
}

TEST_F(ExprProperties, DiffLinearityAndLeibniz) {
    for (int i = 0; i < kIterations; ++i) {
        RationalFunction f = gen.rational(), g = gen.rational();
        Symbol s = test_symbols()[static_cast<std::size_t>(i) % 6];
        EXPECT_TRUE((diff(f + g * BigRational(3, 2), s) - diff(f, s) - diff(g, s) * BigRational(3, 2)).is_zero());
        EXPECT_TRUE((diff(f * g, s) - diff(f, s) * g - f * diff(g, s)).is_zero());
    }
}

TEST_F(ExprProperties, EvaluationHomomorphism) {
    for (int i = 0; i < kIterations; ++i) {
        RationalFunction f = gen.rational(), g = gen.rational();
        Assignment at = gen.point();
        auto vf = try_eval(f, at);
        auto vg = try_eval(g, at);
        if (!vf || !vg) continue;
        EXPECT_EQ(*try_eval(f + g, at), *vf + *vg);
        EXPECT_EQ(*try_eval(f - g, at), *vf - *vg);
        EXPECT_EQ(*try_eval(f * g, at), *vf * *vg);
        if (*vg != 0) {
            auto q = try_eval(f / g, at);
            if (q) EXPECT_EQ(*q, *vf / *vg);
        }
    }
}

TEST_F(ExprProperties, ZeroImpliesZeroAtPoints) {
    for (int i = 0; i < 10; ++i) {
        RationalFunction f = gen.rational(), g = gen.rational();
        RationalFunction zero = (f + g) * (f - g) - (f * f - g * g);
        ASSERT_TRUE(zero.is_zero());
        int checked = 0;
        for (int k = 0; k < 40 && checked < 20; ++k) {
            Assignment at = gen.point();
            auto v = try_eval(zero, at);
            if (!v) continue;
            EXPECT_EQ(*v, 0);
            ++checked;
        }
        EXPECT_EQ(checked, 20);
    }
}

TEST_F(ExprProperties, SubstitutionCommutesWithEvaluation) {
    for (int i = 0; i < kIterations; ++i) {
        RationalFunction f = gen.rational();
        RationalFunction b = gen.rational(2, 1);
        Assignment at = gen.point();
        RationalFunction g;
        try {
            g = substitute(f, {{Symbol("q1"), b}});
        } catch (const ExprError&) {
            continue;
        }
        auto bv = try_eval(b, at);
        if (!bv) continue;
        Assignment shifted = at;
        shifted[Symbol("q1")] = *bv;
        auto lhs = try_eval(g, at);
        auto rhs = try_eval(f, shifted);
        if (lhs && rhs) EXPECT_EQ(*lhs, *rhs);
    }
}
