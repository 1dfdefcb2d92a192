#include "gaugework/abelianize/abelian_set.hpp"

#include <algorithm>
#include <random>

#include "gaugework/expr/errors.hpp"

namespace gaugework::abelianize {

using expr::Monomial;
using expr::Polynomial;

const char* to_string(AbelianizeErrorKind kind) {
    switch (kind) {
        case AbelianizeErrorKind::LIsZero:
            return "LIsZero";
        case AbelianizeErrorKind::UnsupportedModel:
            return "UnsupportedModel";
        case AbelianizeErrorKind::SingularParameterSystem:
            return "SingularParameterSystem";
        case AbelianizeErrorKind::InvalidChart:
            return "InvalidChart";
    }
    return "?";
}

const char* to_string(BracketStatus status) {
    switch (status) {
        case BracketStatus::IdenticallyZero:
            return "identically-zero";
        case BracketStatus::WeaklyZero:
            return "weakly-zero";
        case BracketStatus::Nonzero:
            return "nonzero";
    }
    return "?";
}

WeakZeroReport weak_zero_check(const RationalFunction& b, const WeakLocus& locus, std::uint64_t seed,
                               std::size_t count) {
    return weak_zero_check([&](const Assignment& pt) { return b.evaluate(pt); }, locus, seed, count);
}

WeakZeroReport weak_zero_check(const std::function<BigRational(const Assignment&)>& value, const WeakLocus& locus,
                               std::uint64_t seed, std::size_t count) {
    models::LocusRequest req;
    req.equations = locus.gens;
    req.variables = locus.variables;
    req.solve_for = locus.solve_for;
    req.nonzero = locus.nonzero;
    std::mt19937_64 rng(seed);
    WeakZeroReport report;
    report.pass = true;
    int outside = 0;
    while (report.witnesses.size() < count) {
        auto pt = models::sample_locus(req, rng);
        BigRational v;
        try {
            v = value(pt.values);
        } catch (const expr::ExprError& e) {
            if (e.kind() != expr::ExprErrorKind::DenominatorVanishesAtPoint) throw;
            // Outside the domain of the quantity; draw again.
            if (++outside > req.max_attempts) {
                throw models::SamplingError(models::SamplingErrorKind::SingularSolve,
                                            "quantity undefined at every sampled point");
            }
            continue;
        }
        if (v != 0) {
            report.pass = false;
            report.counterexample = pt.values;
            report.counter_value = v;
            return report;
        }
        report.witnesses.push_back(std::move(pt.values));
    }
    return report;
}

namespace {

// Coefficients of f's numerator over basis monomials, divided by f's denominator.
std::map<Monomial, RationalFunction, expr::LeadingFirst> split(const RationalFunction& f, const std::set<Symbol>& basis) {
    std::map<Monomial, RationalFunction, expr::LeadingFirst> out;
    RationalFunction inv_den = RationalFunction(1) / RationalFunction(f.denominator());
    for (auto& [m, c] : f.numerator().coefficients_over(basis)) out.emplace(m, RationalFunction(c) * inv_den);
    return out;
}

bool touches(const RationalFunction& f, const std::set<Symbol>& basis) {
    for (const auto& fac : f.denominator_factors()) {
        for (Symbol s : fac.poly.symbols()) {
            if (basis.contains(s)) return true;
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<RationalFunction>> combination_coefficients(const RationalFunction& b,
                                                                      const std::vector<RationalFunction>& gens,
                                                                      const std::set<Symbol>& basis) {
    if (gens.empty() || touches(b, basis)) return std::nullopt;
    for (const auto& g : gens) {
        if (touches(g, basis)) return std::nullopt;
    }
    auto target = split(b, basis);
    std::vector<std::map<Monomial, RationalFunction, expr::LeadingFirst>> cols;
    std::set<Monomial, expr::LeadingFirst> rows;
    for (const auto& [m, c] : target) rows.insert(m);
    for (const auto& g : gens) {
        cols.push_back(split(g, basis));
        for (const auto& [m, c] : cols.back()) rows.insert(m);
    }
    auto entry = [&](std::size_t col, const Monomial& m) {
        auto it = cols[col].find(m);
        return it == cols[col].end() ? RationalFunction() : it->second;
    };

    // Pick rows greedily by rank growth at a random numeric point.
    std::set<Symbol> others;
    for (const auto& c : cols) {
        for (const auto& [m, f] : c) {
            auto s = f.symbols();
            others.insert(s.begin(), s.end());
        }
    }
    std::mt19937_64 rng(12345);
    std::vector<Monomial> chosen;
    for (int attempt = 0; attempt < 20 && chosen.size() < gens.size(); ++attempt) {
        Assignment pt;
        for (Symbol s : others) pt[s] = models::draw_nonzero(rng);
        chosen.clear();
        poisson::RationalMatrix numeric;
        try {
            for (const auto& m : rows) {
                std::vector<BigRational> row;
                for (std::size_t k = 0; k < gens.size(); ++k) row.push_back(entry(k, m).evaluate(pt));
                auto trial = numeric;
                trial.push_back(row);
                if (poisson::rank(trial) > numeric.size()) {
                    numeric = std::move(trial);
                    chosen.push_back(m);
                    if (chosen.size() == gens.size()) break;
                }
            }
        } catch (const expr::ExprError&) {
            chosen.clear();
        }
    }
    if (chosen.size() < gens.size()) return std::nullopt;

    std::size_t k = gens.size();
    ExprMatrix a(k, k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) a.at(r, c) = entry(c, chosen[r]);
    }
    RationalFunction d = poisson::det(a);
    if (d.is_zero()) return std::nullopt;
    std::vector<RationalFunction> coeffs;
    for (std::size_t c = 0; c < k; ++c) {
        ExprMatrix ac = a;
        for (std::size_t r = 0; r < k; ++r) {
            auto it = target.find(chosen[r]);
            ac.at(r, c) = it == target.end() ? RationalFunction() : it->second;
        }
        coeffs.push_back(poisson::det(ac) / d);
    }
    RationalFunction rest = b;
    for (std::size_t i = 0; i < k; ++i) rest -= coeffs[i] * gens[i];
    if (!rest.is_zero()) return std::nullopt;
    return coeffs;
}

std::vector<BracketEntry> bracket_table(const std::vector<NamedExpr>& set, const poisson::CanonicalChart& chart,
                                        const WeakLocus* locus, const std::set<Symbol>& coefficient_basis,
                                        const AbelianizeOptions& options) {
    std::vector<BracketEntry> out;
    std::uint64_t pair_index = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j, ++pair_index) {
            BracketEntry e;
            e.left = set[i].name;
            e.right = set[j].name;
            e.value = poisson::poisson_bracket(set[i].expr, set[j].expr, chart);
            if (e.value.is_zero()) {
                e.status = BracketStatus::IdenticallyZero;
            } else if (locus != nullptr && options.weak_checks) {
                auto w = weak_zero_check(e.value, *locus, options.seed + pair_index, options.weak_points);
                e.status = w.pass ? BracketStatus::WeaklyZero : BracketStatus::Nonzero;
                e.witnesses = std::move(w.witnesses);
                e.counterexample = std::move(w.counterexample);
                if (!coefficient_basis.empty()) {
                    if (auto c = combination_coefficients(e.value, locus->gens, coefficient_basis)) e.coefficients = *c;
                }
            }
            out.push_back(std::move(e));
        }
    }
    return out;
}

bool AbelianSet::brackets_vanish() const {
    return std::all_of(bracket_report.begin(), bracket_report.end(),
                       [](const BracketEntry& e) { return e.status != BracketStatus::Nonzero; });
}

bool EquivalenceReport::exact() const {
    return std::all_of(residuals.begin(), residuals.end(), [](const RationalFunction& r) { return r.is_zero(); });
}

bool EquivalenceReport::det_nonzero() const {
    return !det_values.empty() &&
           std::all_of(det_values.begin(), det_values.end(), [](const BigRational& v) { return v != 0; });
}

EquivalenceReport check_equivalence(const AbelianSet& set, const ConstraintModel& m, std::uint64_t seed,
                                    std::size_t count) {
    EquivalenceReport report;
    auto phis = m.phis();
    for (std::size_t a = 0; a < set.psis.size(); ++a) {
        RationalFunction r = set.psis[a].expr;
        for (std::size_t b = 0; b < phis.size(); ++b) {
            if (!set.c_matrix.at(a, b).is_zero()) r -= set.c_matrix.at(a, b) * phis[b];
        }
        report.residuals.push_back(std::move(r));
    }
    models::LocusRequest req;
    req.variables = m.chart.symbols();
    req.nonzero = set.chart_conditions;
    std::mt19937_64 rng(seed);
    while (report.points.size() < count) {
        auto pt = models::sample_locus(req, rng);
        poisson::RationalMatrix c;
        try {
            c = set.c_matrix.evaluate(pt.values);
        } catch (const expr::ExprError& e) {
            if (e.kind() != expr::ExprErrorKind::DenominatorVanishesAtPoint) throw;
            continue;
        }
        report.det_values.push_back(poisson::det_rational(std::move(c)));
        report.points.push_back(std::move(pt.values));
    }
    return report;
}

bool LimitReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass(); });
}

}  // namespace gaugework::abelianize
