#include <algorithm>

#include "gaugework/abelianize/abelian_set.hpp"

namespace gaugework::abelianize {

namespace {

using expr::indexed;

RationalFunction sym(std::string_view prefix, int i) { return RationalFunction::symbol(indexed(prefix, i)); }

// Cyclic relabelling i -> i+shift (mod 3) of every indexed family.
int rotate(int i, int shift) { return (i - 1 + shift) % 3 + 1; }

expr::Bindings rotation(int shift) {
    expr::Bindings b;
    if (shift == 0) return b;
    for (std::string_view prefix : {"q", "p", "qp", "pp"}) {
        for (int i = 1; i <= 3; ++i) b.emplace(indexed(prefix, i), sym(prefix, rotate(i, shift)));
    }
    return b;
}

void require_so3(const ConstraintModel& m) {
    if (m.kind != models::ModelKind::FModel || m.algebra != lie::so3_structure() || m.constraints.size() != 3) {
        throw AbelianizeError(AbelianizeErrorKind::UnsupportedModel, "model '" + m.name + "' is not an so(3) f-model");
    }
    bool l_zero = std::all_of(m.l.begin(), m.l.end(), [](const RationalFunction& l) { return l.is_zero(); });
    if (m.l_mode == models::LMode::Zero || l_zero) {
        throw AbelianizeError(AbelianizeErrorKind::LIsZero,
                              "every L_a vanishes, so the constraints are not Abelianizable; see the residual command");
    }
}

}  // namespace

AbelianSet abelianize_so3(const ConstraintModel& m, int chart_index, const AbelianizeOptions& options) {
    require_so3(m);
    if (chart_index < 1 || chart_index > 3) {
        throw AbelianizeError(AbelianizeErrorKind::InvalidChart, "so(3) chart index must be 1, 2 or 3");
    }
    // Built on q3 != 0, then relabelled so q3 becomes q_chart.
    int shift = chart_index % 3;
    auto relabel = rotation(shift);
    auto moved = [&](const RationalFunction& f) { return shift == 0 ? f : f.substitute(relabel); };

    // Relabelling maps phi_a to phi_{a+shift}, so the chart-3 formulas apply
    // verbatim to the model constraints.
    std::vector<RationalFunction> phi3 = m.phis();
    RationalFunction q1 = sym("q", 1), q2 = sym("q", 2), q3 = sym("q", 3);
    RationalFunction rho = q2 * q2 + q3 * q3;
    RationalFunction k = q2 / (q3 * rho);

    RationalFunction psi1 = -phi3[0] / q3;
    RationalFunction psi2_old = phi3[1] / q3;
    RationalFunction psi3 = q1 * phi3[0] + q2 * phi3[1] + q3 * phi3[2];
    RationalFunction psi2 = psi2_old - k * psi3;

    // Rows of C against (phi1, phi2, phi3) on chart 3.
    std::vector<std::vector<RationalFunction>> c3{
        {-RationalFunction(1) / q3, RationalFunction(), RationalFunction()},
        {-k * q1, RationalFunction(1) / q3 - k * q2, -k * q3},
        {q1, q2, q3},
    };

    AbelianSet set;
    set.label = "so3 chart q" + std::to_string(chart_index);
    set.psis = {{"psi1", moved(psi1)}, {"psi2", moved(psi2)}, {"psi3", moved(psi3)}};
    set.intermediate = {{"psi1", moved(psi1)}, {"psi2", moved(psi2_old)}, {"psi3", moved(psi3)}};
    set.chart_conditions = {moved(q3), moved(rho)};
    set.c_matrix = ExprMatrix(3, 3);
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            const auto& entry = c3[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
            set.c_matrix.at(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(rotate(b, shift) - 1)) = moved(entry);
        }
    }

    const auto& chart = m.chart;
    auto bracket = [&](const RationalFunction& f, const RationalFunction& g) { return poisson::poisson_bracket(f, g, chart); };
    RationalFunction mq3 = moved(q3);
    set.identities.push_back({"{psi1, psi2_old} + psi3/q^3", bracket(moved(psi1), moved(psi2_old)) + moved(psi3) / mq3.pow(3)});
    set.identities.push_back({"{psi1, psi3}", bracket(moved(psi1), moved(psi3))});
    set.identities.push_back({"{psi2_old, psi3}", bracket(moved(psi2_old), moved(psi3))});
    set.identities.push_back({"{psi1, k} + 1/q^3", bracket(moved(psi1), moved(k)) + RationalFunction(1) / mq3.pow(3)});

    set.intermediate_brackets = bracket_table(set.intermediate, chart, nullptr, {}, options);
    set.bracket_report = bracket_table(set.psis, chart, nullptr, {}, options);
    return set;
}

}  // namespace gaugework::abelianize
