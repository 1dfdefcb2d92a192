#include "gaugework/models/model.hpp"

#include <algorithm>

namespace gaugework::models {

using expr::indexed;

const char* to_string(LMode mode) { return mode == LMode::Zero ? "zero" : "adjoint-auxiliary"; }

const char* to_string(ModelKind kind) { return kind == ModelKind::FModel ? "f-model" : "higgs"; }

std::optional<LMode> parse_l_mode(std::string_view text) {
    if (text == "zero") return LMode::Zero;
    if (text == "adjoint-auxiliary") return LMode::AdjointAuxiliary;
    return std::nullopt;
}

std::optional<ModelKind> parse_model_kind(std::string_view text) {
    if (text == "f-model") return ModelKind::FModel;
    if (text == "higgs") return ModelKind::Higgs;
    return std::nullopt;
}

std::vector<RationalFunction> ConstraintModel::phis() const {
    std::vector<RationalFunction> out;
    for (const auto& c : constraints) out.push_back(c.expr);
    return out;
}

std::vector<Symbol> ConstraintModel::coordinates() const {
    auto all = chart.coordinates();
    return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(primary_pairs)};
}

std::vector<Symbol> ConstraintModel::momenta() const {
    auto all = chart.momenta();
    return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(primary_pairs)};
}

std::vector<Symbol> ConstraintModel::auxiliary_momenta() const {
    auto all = chart.momenta();
    return {all.begin() + static_cast<std::ptrdiff_t>(primary_pairs), all.end()};
}

CanonicalChart ConstraintModel::primary_chart() const {
    std::vector<CanonicalChart::Pair> pairs(chart.pairs().begin(),
                                            chart.pairs().begin() + static_cast<std::ptrdiff_t>(primary_pairs));
    return CanonicalChart(std::move(pairs));
}

namespace {

RationalFunction generator(const StructureConstants& f, int a, std::string_view q, std::string_view p) {
    RationalFunction out;
    for (const auto& [t, v] : f.entries()) {
        if (t[0] != a) continue;
        out += RationalFunction(v) * RationalFunction::symbol(indexed(q, t[1])) * RationalFunction::symbol(indexed(p, t[2]));
    }
    return out;
}

}  // namespace

ConstraintModel build_f_model(const StructureConstants& f, LMode mode, std::string name) {
    auto validity = lie::check_structure(f);
    if (!validity.ok()) throw InvalidStructureConstants(validity.describe());
    int n = f.dim();
    ConstraintModel m;
    m.name = std::move(name);
    m.kind = ModelKind::FModel;
    m.algebra = f;
    m.l_mode = mode;
    m.primary_pairs = static_cast<std::size_t>(n);
    m.chart = poisson::numbered_chart("q", "p", 1, n);
    if (mode == LMode::AdjointAuxiliary) m.chart = m.chart.extended(poisson::numbered_chart("qp", "pp", 1, n));
    for (int a = 1; a <= n; ++a) {
        RationalFunction l = mode == LMode::AdjointAuxiliary ? generator(f, a, "qp", "pp") : RationalFunction();
        m.constraints.push_back({"phi" + std::to_string(a), generator(f, a, "q", "p") + l});
        m.l.push_back(std::move(l));
    }
    return m;
}

ConstraintModel build_higgs_model() {
    ConstraintModel m;
    m.name = "higgs";
    m.kind = ModelKind::Higgs;
    m.algebra = lie::so3_structure();
    m.bracket_scale = 2;
    m.l_mode = LMode::Zero;
    m.primary_pairs = 4;
    m.chart = poisson::numbered_chart("q", "p", 0, 4);
    auto eta = lie::thooft_eta();
    for (int i = 1; i <= 3; ++i) {
        RationalFunction phi;
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                int e = eta(i, a, b);
                if (e == 0) continue;
                phi -= RationalFunction(e) * RationalFunction::symbol(indexed("p", a)) * RationalFunction::symbol(indexed("q", b));
            }
        }
        m.constraints.push_back({"phi" + std::to_string(i), phi});
        m.l.emplace_back();
    }
    return m;
}

bool ClosureReport::pass() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const PairResidual& r) { return r.pass(); });
}

ClosureReport verify_closure(const ConstraintModel& m) {
    ClosureReport report;
    int n = static_cast<int>(m.constraints.size());
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            RationalFunction expected;
            for (int c = 1; c <= n && c <= m.algebra.dim(); ++c) {
                if (a > m.algebra.dim() || b > m.algebra.dim()) break;
                BigRational f = m.algebra.at(a, b, c);
                if (f != 0) expected += RationalFunction(f * m.bracket_scale) * m.phi(c);
            }
            report.pairs.push_back({a, b, poisson::poisson_bracket(m.phi(a), m.phi(b), m.chart) - expected});
        }
    }
    return report;
}

}  // namespace gaugework::models
