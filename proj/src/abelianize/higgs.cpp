#include "gaugework/abelianize/abelian_set.hpp"

namespace gaugework::abelianize {

namespace {

using expr::indexed;

RationalFunction cross(int i, const std::vector<RationalFunction>& a, const std::vector<RationalFunction>& b) {
    RationalFunction out;
    for (int j = 1; j <= 3; ++j) {
        for (int k = 1; k <= 3; ++k) {
            int e = lie::levi_civita(i, j, k);
            if (e != 0) out += RationalFunction(e) * a[static_cast<std::size_t>(j - 1)] * b[static_cast<std::size_t>(k - 1)];
        }
    }
    return out;
}

}  // namespace

AbelianSet higgs_abelian_candidate(const ConstraintModel& m, const AbelianizeOptions& options) {
    if (m.kind != models::ModelKind::Higgs) {
        throw AbelianizeError(AbelianizeErrorKind::UnsupportedModel, "model '" + m.name + "' is not the higgs model");
    }
    auto q = [](int i) { return RationalFunction::symbol(indexed("q", i)); };
    auto p = [](int i) { return RationalFunction::symbol(indexed("p", i)); };
    auto n = [](int i) { return RationalFunction::symbol(indexed("n", i)); };
    std::vector<RationalFunction> qv{q(1), q(2), q(3)};
    std::vector<RationalFunction> nv{n(1), n(2), n(3)};
    RationalFunction norm = q(0) * q(0) + q(1) * q(1) + q(2) * q(2) + q(3) * q(3);

    AbelianSet set;
    set.label = "higgs chart q0";
    std::vector<RationalFunction> psi;
    for (int i = 1; i <= 3; ++i) {
        psi.push_back(q(0) * p(i) - p(0) * q(i));
        set.psis.push_back({"psi" + std::to_string(i), psi.back()});
    }
    set.chart_conditions = {q(0), norm};

    // C = (q0^2 I - q0 [q x] + q q^T) / (q0^2 + q^2), the inverse of I + [q x]/q0.
    set.c_matrix = ExprMatrix(3, 3);
    for (int i = 1; i <= 3; ++i) {
        for (int k = 1; k <= 3; ++k) {
            RationalFunction cross_entry;
            for (int j = 1; j <= 3; ++j) {
                int e = lie::levi_civita(i, j, k);
                if (e != 0) cross_entry += RationalFunction(e) * q(j);
            }
            RationalFunction entry = q(i) * q(k) - q(0) * cross_entry;
            if (i == k) entry += q(0) * q(0);
            set.c_matrix.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1)) = entry / norm;
        }
    }

    auto bracket = [&](const RationalFunction& f, const RationalFunction& g) { return poisson::poisson_bracket(f, g, m.chart); };
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            RationalFunction expected = i == j ? q(0) : RationalFunction();
            set.identities.push_back({"{q" + std::to_string(i) + ", psi" + std::to_string(j) + "} - q0 delta",
                                      bracket(q(i), psi[static_cast<std::size_t>(j - 1)]) - expected});
        }
    }
    RationalFunction gen_phi;
    RationalFunction gen_psi;
    for (int j = 1; j <= 3; ++j) {
        RationalFunction n_prime = n(j) + cross(j, nv, qv) / q(0);
        gen_phi += n(j) * m.phi(j);
        gen_psi += n_prime * psi[static_cast<std::size_t>(j - 1)];
    }
    for (int i = 1; i <= 3; ++i) {
        std::string idx = std::to_string(i);
        RationalFunction delta_phi = bracket(q(i), gen_phi);
        set.identities.push_back({"delta q" + idx + " - ((n x q)" + idx + " + q0 n" + idx + ")",
                                  delta_phi - (cross(i, nv, qv) + q(0) * n(i))});
        set.identities.push_back({"{q" + idx + ", n.phi} - {q" + idx + ", n'.psi}", delta_phi - bracket(q(i), gen_psi)});
    }
    for (int i = 1; i <= 3; ++i) {
        for (int j = i + 1; j <= 3; ++j) {
            std::string tag = "{psi" + std::to_string(i) + ", psi" + std::to_string(j) + "}";
            RationalFunction b = bracket(psi[static_cast<std::size_t>(i - 1)], psi[static_cast<std::size_t>(j - 1)]);
            set.identities.push_back({tag + " - (q" + std::to_string(i) + " p" + std::to_string(j) + " - q" +
                                          std::to_string(j) + " p" + std::to_string(i) + ")",
                                      b - (q(i) * p(j) - q(j) * p(i))});
            RationalFunction closed;
            for (int k = 1; k <= 3; ++k) {
                int e = lie::levi_civita(i, j, k);
                if (e != 0) closed += RationalFunction(e) * cross(k, qv, psi) / q(0);
            }
            set.identities.push_back({tag + " - eps (q x psi)/q0", b - closed});
        }
    }

    set.weak_locus.gens = psi;
    set.weak_locus.variables = m.chart.symbols();
    set.weak_locus.solve_for = {indexed("p", 1), indexed("p", 2), indexed("p", 3)};
    set.weak_locus.nonzero = set.chart_conditions;
    std::set<Symbol> basis;
    for (int i = 0; i <= 3; ++i) basis.insert(indexed("p", i));
    set.bracket_report = bracket_table(set.psis, m.chart, &set.weak_locus, basis, options);
    return set;
}

}  // namespace gaugework::abelianize
