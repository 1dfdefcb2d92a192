#include "gaugework/poisson/bracket.hpp"

namespace gaugework::poisson {

RationalFunction poisson_bracket(const RationalFunction& f, const RationalFunction& g, const CanonicalChart& chart) {
    if (f.is_constant() || g.is_constant()) return {};
    auto fs = f.symbols();
    auto gs = g.symbols();
    RationalFunction sum;
    for (const auto& [q, p] : chart.pairs()) {
        if (fs.contains(q) && gs.contains(p)) sum += f.derivative(q) * g.derivative(p);
        if (fs.contains(p) && gs.contains(q)) sum -= f.derivative(p) * g.derivative(q);
    }
    return sum;
}

ExprMatrix bracket_matrix(const std::vector<RationalFunction>& a, const std::vector<RationalFunction>& b,
                          const CanonicalChart& chart) {
    ExprMatrix out(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out.at(i, j) = poisson_bracket(a[i], b[j], chart);
    }
    return out;
}

ExprMatrix jacobian(const std::vector<RationalFunction>& constraints, const CanonicalChart& chart) {
    auto cols = chart.symbols();
    ExprMatrix out(constraints.size(), cols.size());
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(i, j) = constraints[i].derivative(cols[j]);
    }
    return out;
}

}  // namespace gaugework::poisson
