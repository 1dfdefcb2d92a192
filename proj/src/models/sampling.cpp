#include "gaugework/models/sampling.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "gaugework/expr/errors.hpp"
#include "gaugework/poisson/matrix.hpp"

namespace gaugework::models {

int draw_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-9, 8);
    int v = dist(rng);
    return v >= 0 ? v + 1 : v;
}

namespace {

struct Prepared {
    std::vector<RationalFunction> equations;
    // d equation_k / d unknown_j
    std::vector<std::vector<RationalFunction>> slopes;
};

// Solves the affine system at `point` (unknowns unset). Draws free unknowns.
bool solve_affine(const Prepared& prep, const std::vector<Symbol>& unknowns, Assignment& point, std::mt19937_64& rng) {
    Assignment at_zero = point;
    for (Symbol u : unknowns) at_zero[u] = 0;
    std::size_t rows = prep.equations.size();
    std::size_t cols = unknowns.size();
    poisson::RationalMatrix aug(rows, std::vector<BigRational>(cols + 1));
    try {
        for (std::size_t k = 0; k < rows; ++k) {
            for (std::size_t j = 0; j < cols; ++j) aug[k][j] = prep.slopes[k][j].evaluate(at_zero);
            aug[k][cols] = -prep.equations[k].evaluate(at_zero);
        }
    } catch (const expr::ExprError& e) {
        if (e.kind() == expr::ExprErrorKind::DenominatorVanishesAtPoint) return false;
        throw;
    }
    auto e = poisson::rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == cols) return false;
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    for (std::size_t j = 0; j < cols; ++j) {
        if (!is_pivot[j]) point[unknowns[j]] = draw_nonzero(rng);
    }
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        BigRational v = e.reduced[r][cols];
        for (std::size_t j = 0; j < cols; ++j) {
            if (!is_pivot[j] && e.reduced[r][j] != 0) v -= e.reduced[r][j] * point[unknowns[j]];
        }
        point[unknowns[e.pivots[r]]] = v;
    }
    return true;
}

bool nonzero_at(const RationalFunction& f, const Assignment& point) {
    try {
        return f.evaluate(point) != 0;
    } catch (const expr::ExprError& e) {
        if (e.kind() == expr::ExprErrorKind::DenominatorVanishesAtPoint) return false;
        throw;
    }
}

bool vanishes_at(const RationalFunction& f, const Assignment& point) {
    try {
        return f.evaluate(point) == 0;
    } catch (const expr::ExprError& e) {
        if (e.kind() == expr::ExprErrorKind::DenominatorVanishesAtPoint) return false;
        throw;
    }
}

}  // namespace

PhasePoint sample_locus(const LocusRequest& request, std::mt19937_64& rng) {
    if (!request.stationary_coordinates.empty() &&
        std::all_of(request.stationary_coordinates.begin(), request.stationary_coordinates.end(), [&](Symbol s) {
            auto it = request.pinned.find(s);
            return it != request.pinned.end() && it->second == 0;
        })) {
        throw SamplingError(SamplingErrorKind::StationaryPoint, "all coordinates pinned to zero");
    }

    Prepared prep;
    prep.equations = request.equations;
    for (const auto& eq : request.equations) {
        std::vector<RationalFunction> row;
        for (Symbol u : request.solve_for) row.push_back(eq.derivative(u));
        prep.slopes.push_back(std::move(row));
    }

    PhasePoint out;
    for (int attempt = 0; attempt < request.max_attempts; ++attempt) {
        Assignment point = request.pinned;
        for (Symbol s : request.variables) {
            if (point.contains(s)) continue;
            if (std::find(request.solve_for.begin(), request.solve_for.end(), s) != request.solve_for.end()) continue;
            point[s] = draw_nonzero(rng);
        }
        // Conditions on drawn symbols only; the rest are checked after solving.
        bool ok = std::all_of(request.nonzero.begin(), request.nonzero.end(), [&](const RationalFunction& c) {
            auto syms = c.symbols();
            bool bound = std::all_of(syms.begin(), syms.end(), [&](Symbol s) { return point.contains(s); });
            return !bound || nonzero_at(c, point);
        });
        if (ok) ok = solve_affine(prep, request.solve_for, point, rng);
        if (ok) {
            // Exact back-substitution; also rejects systems that were not affine.
            ok = std::all_of(request.equations.begin(), request.equations.end(),
                             [&](const RationalFunction& eq) { return vanishes_at(eq, point); });
        }
        if (ok) {
            ok = std::all_of(request.nonzero.begin(), request.nonzero.end(),
                             [&](const RationalFunction& c) { return nonzero_at(c, point); });
        }
        if (!ok) {
            ++out.rejected;
            continue;
        }
        out.values = std::move(point);
        for (const auto& c : request.nonzero) out.conditions.emplace_back(c.render(), true);
        return out;
    }
    throw SamplingError(SamplingErrorKind::SingularSolve,
                        "no admissible point after " + std::to_string(request.max_attempts) + " draws");
}

std::vector<PhasePoint> sample_locus_points(const LocusRequest& request, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<PhasePoint> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample_locus(request, rng));
    return out;
}

PhasePoint sample_surface_point(const ConstraintModel& m, const std::vector<Symbol>& solve_for, std::uint64_t seed) {
    LocusRequest req;
    req.equations = m.phis();
    req.variables = m.chart.symbols();
    req.solve_for = solve_for;
    req.stationary_coordinates = m.coordinates();
    std::mt19937_64 rng(seed);
    return sample_locus(req, rng);
}

}  // namespace gaugework::models
