#include <algorithm>

#include "gaugework/abelianize/abelian_set.hpp"
#include "gaugework/abelianize/so4_parts.hpp"

namespace gaugework::abelianize {

namespace {

using expr::indexed;

void require_so4(const ConstraintModel& m) {
    if (m.kind != models::ModelKind::FModel || m.algebra != lie::so4_structure() || m.constraints.size() != 6) {
        throw AbelianizeError(AbelianizeErrorKind::UnsupportedModel, "model '" + m.name + "' is not an so(4) f-model");
    }
    bool l_zero = std::all_of(m.l.begin(), m.l.end(), [](const RationalFunction& l) { return l.is_zero(); });
    if (m.l_mode == models::LMode::Zero || l_zero) {
        throw AbelianizeError(AbelianizeErrorKind::LIsZero,
                              "every L_a vanishes, so the constraints are not Abelianizable; see the residual command");
    }
}

}  // namespace

So4Parts so4_parts(const std::vector<RationalFunction>& l) {
    auto q = [](int i) { return RationalFunction::symbol(indexed("q", i)); };
    auto p = [](int i) { return RationalFunction::symbol(indexed("p", i)); };
    auto L = [&](int i) { return l.at(static_cast<std::size_t>(i - 1)); };
    So4Parts s;
    s.d = q(1) * q(1) - q(4) * q(4);
    const RationalFunction& d = s.d;
    s.psi1 = RationalFunction();
    for (int a = 1; a <= 6; ++a) s.psi1 += q(a) * L(a);
    s.psi3 = p(3) - (q(3) * q(1) - q(4) * q(6)) / d * p(1) - (q(6) * q(1) - q(4) * q(3)) / d * p(4) +
             (q(1) * L(2) + q(4) * L(5)) / d;
    s.psi6 = p(6) - (q(6) * q(1) - q(4) * q(3)) / d * p(1) - (q(3) * q(1) - q(4) * q(6)) / d * p(4) -
             (q(1) * L(5) + q(4) * L(2)) / d;
    s.psi2 = p(2) - (q(2) * q(1) + q(4) * q(5)) / d * p(1) + (q(5) * q(1) + q(4) * q(2)) / d * p(4) -
             (q(1) * L(3) - q(4) * L(6)) / d;
    s.psi5 = p(5) - (q(5) * q(1) + q(4) * q(2)) / d * p(1) + (q(2) * q(1) + q(4) * q(5)) / d * p(4) +
             (q(1) * L(6) - q(4) * L(3)) / d;
    s.psi4 = q(1) * L(4) + q(4) * L(1) - q(2) * L(5) - q(5) * L(2) + q(6) * L(3) + q(3) * L(6);

    RationalFunction minus = q(1) - q(4);
    RationalFunction plus = q(1) + q(4);
    s.rho_minus = minus * minus + (q(2) + q(5)).pow(2);
    s.rho_plus = plus * plus + (q(2) - q(5)).pow(2);
    RationalFunction a = (q(2) + q(5)) / minus / s.rho_minus;
    RationalFunction b = (q(2) - q(5)) / plus / s.rho_plus;
    s.s1 = (a + b) / RationalFunction(2);
    s.s2 = (a - b) / RationalFunction(2);
    s.r1 = (q(1).pow(3) + RationalFunction(3) * q(1) * q(4) * q(4)) / d.pow(3);
    s.r2 = (q(4).pow(3) + RationalFunction(3) * q(4) * q(1) * q(1)) / d.pow(3);
    return s;
}

AbelianSet abelianize_so4(const ConstraintModel& m, const AbelianizeOptions& options) {
    require_so4(m);
    So4Parts s = so4_parts(m.l);
    auto q = [](int i) { return RationalFunction::symbol(indexed("q", i)); };
    const RationalFunction& d = s.d;

    RationalFunction psi3_new = s.psi3 + s.s1 * s.psi1 - s.s2 * s.psi4;
    RationalFunction psi6_new = s.psi6 - s.s2 * s.psi1 + s.s1 * s.psi4;

    AbelianSet set;
    set.label = "so4 chart q1";
    set.intermediate = {{"psi1", s.psi1}, {"psi2", s.psi2}, {"psi3", s.psi3},
                        {"psi4", s.psi4}, {"psi5", s.psi5}, {"psi6", s.psi6}};
    set.psis = {{"psi1", s.psi1}, {"psi2", s.psi2}, {"psi3", psi3_new},
                {"psi4", s.psi4}, {"psi5", s.psi5}, {"psi6", psi6_new}};
    set.chart_conditions = {q(1), d, s.rho_minus, s.rho_plus};

    // Rows of C against phi1..phi6.
    std::vector<std::vector<RationalFunction>> rows(6, std::vector<RationalFunction>(6));
    for (int b = 1; b <= 6; ++b) rows[0][static_cast<std::size_t>(b - 1)] = q(b);
    rows[3] = {q(4), -q(5), q(6), q(1), -q(2), q(3)};
    rows[2][1] = q(1) / d;
    rows[2][4] = q(4) / d;
    rows[5][1] = -q(4) / d;
    rows[5][4] = -q(1) / d;
    rows[1][2] = -q(1) / d;
    rows[1][5] = q(4) / d;
    rows[4][2] = -q(4) / d;
    rows[4][5] = q(1) / d;
    auto row3 = rows[2];
    auto row6 = rows[5];
    for (std::size_t b = 0; b < 6; ++b) {
        rows[2][b] = row3[b] + s.s1 * rows[0][b] - s.s2 * rows[3][b];
        rows[5][b] = row6[b] - s.s2 * rows[0][b] + s.s1 * rows[3][b];
    }
    set.c_matrix = ExprMatrix(6, 6);
    for (std::size_t a = 0; a < 6; ++a) {
        for (std::size_t b = 0; b < 6; ++b) set.c_matrix.at(a, b) = rows[a][b];
    }

    auto bracket = [&](const RationalFunction& f, const RationalFunction& g) { return poisson::poisson_bracket(f, g, m.chart); };
    set.identities.push_back({"{psi2, psi5}", bracket(s.psi2, s.psi5)});
    set.identities.push_back({"{psi3, psi6}", bracket(s.psi3, s.psi6)});
    set.identities.push_back({"{psi3, psi2} - (R1 psi1 - R2 psi4)", bracket(s.psi3, s.psi2) - (s.r1 * s.psi1 - s.r2 * s.psi4)});
    set.identities.push_back({"{psi5, psi6} - (R1 psi1 - R2 psi4)", bracket(s.psi5, s.psi6) - (s.r1 * s.psi1 - s.r2 * s.psi4)});
    set.identities.push_back({"{psi2, psi6} - (R2 psi1 - R1 psi4)", bracket(s.psi2, s.psi6) - (s.r2 * s.psi1 - s.r1 * s.psi4)});
    set.identities.push_back({"{psi3, psi5} - (R2 psi1 - R1 psi4)", bracket(s.psi3, s.psi5) - (s.r2 * s.psi1 - s.r1 * s.psi4)});
    for (const auto& [name, psi] : set.psis) {
        set.identities.push_back({"{" + name + ", psi1}", bracket(psi, s.psi1)});
        set.identities.push_back({"{" + name + ", psi4}", bracket(psi, s.psi4)});
    }

    set.weak_locus.gens = {s.psi1, s.psi4};
    set.weak_locus.variables = m.chart.symbols();
    set.weak_locus.solve_for = m.auxiliary_momenta();
    set.weak_locus.nonzero = set.chart_conditions;
    std::set<Symbol> basis = m.chart.symbol_set();
    for (int i = 1; i <= 6; ++i) basis.erase(indexed("q", i));
    set.intermediate_brackets = bracket_table(set.intermediate, m.chart, &set.weak_locus, basis, options);
    set.bracket_report = bracket_table(set.psis, m.chart, &set.weak_locus, basis, options);
    return set;
}

}  // namespace gaugework::abelianize
