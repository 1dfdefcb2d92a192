#include "gaugework/gauge/fp.hpp"

#include "gaugework/expr/errors.hpp"
#include "gaugework/poisson/bracket.hpp"

namespace gaugework::gauge {

namespace {

RationalFunction sym(const char* prefix, int i) { return RationalFunction::symbol(expr::indexed(prefix, i)); }

bool is_so3_model(const ConstraintModel& m) {
    return m.kind == models::ModelKind::FModel && m.algebra == lie::so3_structure();
}

}  // namespace

std::vector<RationalFunction> GaugeChoice::exprs() const {
    std::vector<RationalFunction> out;
    for (const auto& o : omegas) out.push_back(o.expr);
    return out;
}

const char* to_string(OmegaN w) { return w == OmegaN::P1 ? "p1" : "phi1"; }

GaugeChoice so3_gauge(const ConstraintModel& m, OmegaN last) {
    if (!is_so3_model(m)) throw std::invalid_argument("so3_gauge: model is not the so(3) f-model");
    GaugeChoice g;
    g.omegas.push_back({"q1", sym("q", 1)});
    g.omegas.push_back({"q2", sym("q", 2)});
    if (last == OmegaN::P1) g.omegas.push_back({"p1", sym("p", 1)});
    else g.omegas.push_back({"phi1", m.phi(1)});
    return g;
}

Reduction so3_reduction(const ConstraintModel& m) {
    if (!is_so3_model(m)) throw std::invalid_argument("so3_reduction: model is not the so(3) f-model");
    const auto q3 = sym("q", 3);
    return {
        {expr::indexed("q", 1), RationalFunction(0)},
        {expr::indexed("q", 2), RationalFunction(0)},
        {expr::indexed("p", 2), m.l[0] / q3},
        {expr::indexed("p", 1), -m.l[1] / q3},
    };
}

models::LocusRequest constraint_surface(const ConstraintModel& m) {
    models::LocusRequest req;
    req.equations = m.phis();
    req.variables = m.chart.symbols();
    req.solve_for = m.momenta();
    if (m.l_mode == models::LMode::AdjointAuxiliary) req.solve_for.push_back(m.auxiliary_momenta().front());
    req.stationary_coordinates = m.coordinates();
    return req;
}

models::LocusRequest so3_combined_surface(const ConstraintModel& m, const GaugeChoice& g) {
    models::LocusRequest req;
    req.equations = m.phis();
    for (const auto& w : g.omegas) req.equations.push_back(w.expr);
    req.variables = m.chart.symbols();
    req.solve_for = m.momenta();
    req.pinned[expr::indexed("q", 1)] = 0;
    req.pinned[expr::indexed("q", 2)] = 0;
    // With q along the third axis the surface also needs L2 = L3 = 0; the
    // auxiliary pair 1 is pinned so that L stays along the first axis.
    if (m.l_mode == models::LMode::AdjointAuxiliary) {
        req.pinned[expr::indexed("qp", 1)] = 0;
        req.pinned[expr::indexed("pp", 1)] = 0;
    }
    req.nonzero = {sym("q", 3)};
    if (!m.l[0].is_zero()) req.nonzero.push_back(m.l[0]);
    req.stationary_coordinates = m.coordinates();
    return req;
}

bool FpResult::agrees() const {
    for (const auto& s : samples) {
        if (s.direct != s.reduced) return false;
    }
    return true;
}

bool FpResult::vanishes_at_samples() const {
    for (const auto& s : samples) {
        if (s.direct != 0) return false;
    }
    return true;
}

bool FpResult::nonzero_at_samples() const {
    for (const auto& s : samples) {
        if (s.direct == 0) return false;
    }
    return !samples.empty();
}

FpResult fp_determinant(const ConstraintModel& m, const GaugeChoice& g, const Reduction& reduction,
                        const models::LocusRequest& surface, std::uint64_t seed, std::size_t count) {
    auto phis = m.phis();
    if (g.omegas.size() != phis.size()) throw poisson::NotSquare(g.omegas.size(), phis.size());
    auto matrix = poisson::bracket_matrix(g.exprs(), phis, m.chart);

    FpResult out;
    out.raw = poisson::det(matrix);
    out.reduced = out.raw;
    for (const auto& [s, value] : reduction) out.reduced = out.reduced.substitute({{s, value}});

    for (auto& p : models::sample_locus_points(surface, count, seed)) {
        FpSample sample;
        sample.point = p.values;
        sample.direct = poisson::det_rational(matrix.evaluate(p.values));
        sample.reduced = out.reduced.evaluate(p.values);
        out.samples.push_back(std::move(sample));
    }
    return out;
}

}  // namespace gaugework::gauge
