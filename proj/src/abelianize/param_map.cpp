#include "gaugework/abelianize/abelian_set.hpp"

namespace gaugework::abelianize {

GaugeParamMap solve_parameter_map(const ConstraintModel& m, const AbelianSet& abelian, std::uint64_t seed,
                                  std::size_t count) {
    if (m.algebra != lie::so4_structure() || abelian.psis.size() != 6) {
        throw AbelianizeError(AbelianizeErrorKind::UnsupportedModel, "parameter map is defined for the so(4) set");
    }
    using expr::indexed;
    auto q = [](int i) { return RationalFunction::symbol(indexed("q", i)); };
    auto p = [](int i) { return RationalFunction::symbol(indexed("p", i)); };
    auto bracket = [&](const RationalFunction& f, const RationalFunction& g) { return poisson::poisson_bracket(f, g, m.chart); };

    GaugeParamMap map;
    for (int a = 1; a <= 6; ++a) map.theta.push_back(indexed("th", a));
    auto delta_a = [&](const RationalFunction& f) {
        RationalFunction out;
        for (int a = 1; a <= 6; ++a) out += RationalFunction::symbol(map.theta[static_cast<std::size_t>(a - 1)]) * bracket(f, m.phi(a));
        return out;
    };
    auto delta_na = [&](const RationalFunction& f) {
        RationalFunction out;
        for (int a = 1; a <= 6; ++a) {
            const RationalFunction& eta = map.eta[static_cast<std::size_t>(a - 1)];
            if (!eta.is_zero()) out += eta * bracket(f, abelian.psi(a));
        }
        return out;
    };

    const std::vector<int> fixing{2, 3, 5, 6};
    map.eta.assign(6, RationalFunction());
    for (int a : fixing) {
        for (int b : fixing) {
            RationalFunction expected = a == b ? RationalFunction(1) : RationalFunction();
            map.coordinate_checks.push_back({"{q" + std::to_string(a) + ", psi" + std::to_string(b) + "} - delta",
                                             bracket(q(a), abelian.psi(b)) - expected});
        }
        map.eta[static_cast<std::size_t>(a - 1)] = delta_a(q(a));
    }

    // eta1, eta4 from matching the transformations of p3 and p6.
    RationalFunction rhs3 = delta_a(p(3)) - delta_na(p(3));
    RationalFunction rhs6 = delta_a(p(6)) - delta_na(p(6));
    RationalFunction m00 = bracket(p(3), abelian.psi(1)), m01 = bracket(p(3), abelian.psi(4));
    RationalFunction m10 = bracket(p(6), abelian.psi(1)), m11 = bracket(p(6), abelian.psi(4));
    map.system_determinant = m00 * m11 - m01 * m10;
    if (map.system_determinant.is_zero()) {
        throw AbelianizeError(AbelianizeErrorKind::SingularParameterSystem,
                              "the (p3, p6) system for eta1, eta4 is singular");
    }
    map.eta[0] = (rhs3 * m11 - m01 * rhs6) / map.system_determinant;
    map.eta[3] = (m00 * rhs6 - rhs3 * m10) / map.system_determinant;

    for (int a = 1; a <= 6; ++a) {
        map.coordinate_checks.push_back({"delta_A q" + std::to_string(a) + " - delta_nA q" + std::to_string(a),
                                         delta_a(q(a)) - delta_na(q(a))});
    }

    WeakLocus surface;
    surface.gens = m.phis();
    surface.variables = m.chart.symbols();
    surface.variables.insert(surface.variables.end(), map.theta.begin(), map.theta.end());
    surface.solve_for = m.momenta();
    auto aux = m.auxiliary_momenta();
    surface.solve_for.insert(surface.solve_for.end(), aux.begin(), aux.end());
    surface.nonzero = abelian.chart_conditions;
    surface.nonzero.push_back(map.system_determinant);
    for (int a : {3, 6}) {
        map.solved_momentum_checks.push_back({"delta_A p" + std::to_string(a) + " - delta_nA p" + std::to_string(a),
                                              delta_a(p(a)) - delta_na(p(a))});
    }
    // The other momenta give very large symbolic differences; their pieces
    // are evaluated separately at each point instead.
    for (int a : {3, 6, 1, 2, 4, 5}) {
        RationalFunction da = delta_a(p(a));
        std::vector<RationalFunction> pieces;
        for (int b = 1; b <= 6; ++b) pieces.push_back(bracket(p(a), abelian.psi(b)));
        auto value = [&](const expr::Assignment& pt) {
            BigRational v = da.evaluate(pt);
            for (std::size_t b = 0; b < 6; ++b) {
                if (map.eta[b].is_zero() || pieces[b].is_zero()) continue;
                v -= map.eta[b].evaluate(pt) * pieces[b].evaluate(pt);
            }
            return v;
        };
        map.momentum_checks.emplace_back("delta_A p" + std::to_string(a) + " - delta_nA p" + std::to_string(a),
                                         weak_zero_check(value, surface, seed + static_cast<std::uint64_t>(a), count));
    }
    return map;
}

}  // namespace gaugework::abelianize
