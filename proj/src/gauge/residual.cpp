#include "gaugework/gauge/residual.hpp"

#include <random>

#include "gaugework/poisson/bracket.hpp"

namespace gaugework::gauge {

NullSpaceResult residual_null_space(const ConstraintModel& m, const Assignment& point) {
    NullSpaceResult out;
    out.constraints = m.constraints.size();
    out.jacobian = poisson::jacobian(m.phis(), m.chart).evaluate(point);
    out.rank = poisson::rank(out.jacobian);
    out.null_vectors = poisson::left_null_space(out.jacobian);
    return out;
}

bool annihilates(const poisson::RationalMatrix& jacobian, const RationalVector& lambda) {
    if (jacobian.empty()) return true;
    if (lambda.size() != jacobian.size()) return false;
    for (std::size_t c = 0; c < jacobian.front().size(); ++c) {
        BigRational s = 0;
        for (std::size_t r = 0; r < jacobian.size(); ++r) s += lambda[r] * jacobian[r][c];
        if (s != 0) return false;
    }
    return true;
}

std::vector<NamedExpr> action_test_functions(const ConstraintModel& m) {
    auto symbols = m.chart.symbols();
    std::vector<NamedExpr> out;
    for (Symbol s : symbols) out.push_back({s.name(), RationalFunction::symbol(s)});
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        for (std::size_t j = i; j < symbols.size(); ++j) {
            auto name = i == j ? symbols[i].name() + "^2" : symbols[i].name() + "*" + symbols[j].name();
            out.push_back({name, RationalFunction::symbol(symbols[i]) * RationalFunction::symbol(symbols[j])});
        }
    }
    return out;
}

ActionCheck residual_action_check(const ConstraintModel& m, const Assignment& point, const RationalVector& lambda) {
    auto phis = m.phis();
    if (lambda.size() != phis.size()) throw std::invalid_argument("residual_action_check: lambda has wrong length");
    // Gauge generator G = sum lambda_a phi_a with lambda frozen at the point.
    RationalFunction generator;
    for (std::size_t a = 0; a < phis.size(); ++a) {
        if (lambda[a] != 0) generator += RationalFunction(lambda[a]) * phis[a];
    }
    ActionCheck out;
    auto family = action_test_functions(m);
    out.functions = family.size();
    for (const auto& eta : family) {
        BigRational v = poisson::poisson_bracket(eta.expr, generator, m.chart).evaluate(point);
        if (v < 0) v = -v;
        if (v > out.max_abs) {
            out.max_abs = v;
            out.witness = eta.name;
        }
    }
    return out;
}

bool ProbeReport::matches() const {
    if (!expected) return false;
    for (const auto& t : trials) {
        if (t.I != *expected) return false;
    }
    return !trials.empty();
}

std::optional<std::size_t> known_algebra_rank(const lie::StructureConstants& f) {
    if (f == lie::so3_structure()) return 1;
    if (f == lie::so4_structure()) return 2;
    return std::nullopt;
}

ProbeReport conjecture_probe(const lie::StructureConstants& f, std::size_t trials, std::uint64_t seed) {
    auto m = models::build_f_model(f, models::LMode::Zero);
    ProbeReport out;
    out.expected = known_algebra_rank(f);
    if (f == lie::so3_structure()) out.algebra = "so3";
    else if (f == lie::so4_structure()) out.algebra = "so4";
    else out.algebra = "unknown";

    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        ProbeTrial trial;
        // Every draw is nonzero, so q = 0 never occurs.
        for (Symbol q : m.coordinates()) trial.point[q] = models::draw_nonzero(rng);
        for (Symbol p : m.momenta()) trial.point[p] = 0;
        auto ns = residual_null_space(m, trial.point);
        trial.rank = ns.rank;
        trial.I = ns.I();
        ++out.histogram[trial.I];
        out.trials.push_back(std::move(trial));
    }
    return out;
}

}  // namespace gaugework::gauge
