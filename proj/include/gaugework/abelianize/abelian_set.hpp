#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaugework/models/sampling.hpp"

namespace gaugework::abelianize {

using expr::Assignment;
using expr::BigRational;
using expr::RationalFunction;
using expr::Symbol;
using models::ConstraintModel;
using models::NamedExpr;
using poisson::ExprMatrix;

enum class AbelianizeErrorKind { LIsZero, UnsupportedModel, SingularParameterSystem, InvalidChart };

const char* to_string(AbelianizeErrorKind kind);

class AbelianizeError : public std::runtime_error {
public:
    AbelianizeError(AbelianizeErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    AbelianizeErrorKind kind() const { return kind_; }

private:
    AbelianizeErrorKind kind_;
};

/// Locus gens = 0 plus everything needed to sample it.
struct WeakLocus {
    std::vector<RationalFunction> gens;
    std::vector<Symbol> variables;
    std::vector<Symbol> solve_for;
    std::vector<RationalFunction> nonzero;
};

struct WeakZeroReport {
    bool pass = false;
    std::vector<Assignment> witnesses;
    std::optional<Assignment> counterexample;
    std::optional<BigRational> counter_value;
};

/// Evaluates b at `count` sampled points of the locus; passes iff every
/// value is exactly zero. Throws SamplingError if the locus can't be sampled.
WeakZeroReport weak_zero_check(const RationalFunction& b, const WeakLocus& locus, std::uint64_t seed,
                               std::size_t count = 20);

/// Same, for a quantity given by an evaluator. The evaluator may throw
/// ExprError(DenominatorVanishesAtPoint) to have the point redrawn.
WeakZeroReport weak_zero_check(const std::function<BigRational(const Assignment&)>& value, const WeakLocus& locus,
                               std::uint64_t seed, std::size_t count = 20);

/// Coefficients c with b = sum c_i gens_i exactly, sought as functions of the
/// symbols outside `basis`, by matching coefficients of basis monomials.
std::optional<std::vector<RationalFunction>> combination_coefficients(const RationalFunction& b,
                                                                      const std::vector<RationalFunction>& gens,
                                                                      const std::set<Symbol>& basis);

enum class BracketStatus { IdenticallyZero, WeaklyZero, Nonzero };
const char* to_string(BracketStatus status);

struct BracketEntry {
    std::string left;
    std::string right;
    RationalFunction value;
    BracketStatus status = BracketStatus::Nonzero;
    std::vector<Assignment> witnesses;
    std::optional<Assignment> counterexample;
    /// Exact b = sum c_i gens_i when found.
    std::vector<RationalFunction> coefficients;
};

/// A named exact identity; residual must be the zero function.
struct IdentityCheck {
    std::string name;
    RationalFunction residual;
    bool pass() const { return residual.is_zero(); }
};

struct EquivalenceReport {
    std::vector<RationalFunction> residuals;  // psi_a - sum C_ab phi_b
    std::vector<Assignment> points;
    std::vector<BigRational> det_values;
    bool exact() const;
    bool det_nonzero() const;
};

struct AbelianSet {
    std::string label;
    std::vector<NamedExpr> psis;
    ExprMatrix c_matrix;
    std::vector<RationalFunction> chart_conditions;
    std::vector<BracketEntry> bracket_report;
    /// Set before the final redefinition, with its bracket table.
    std::vector<NamedExpr> intermediate;
    std::vector<BracketEntry> intermediate_brackets;
    std::vector<IdentityCheck> identities;
    /// Locus used for weak checks of the final brackets.
    WeakLocus weak_locus;

    const RationalFunction& psi(int a) const { return psis.at(static_cast<std::size_t>(a - 1)).expr; }
    bool brackets_vanish() const;
};

struct AbelianizeOptions {
    std::uint64_t seed = 1;
    std::size_t weak_points = 20;
    bool weak_checks = true;
};

/// Classifies every pair a < b of `set` against `locus`.
std::vector<BracketEntry> bracket_table(const std::vector<NamedExpr>& set, const poisson::CanonicalChart& chart,
                                        const WeakLocus* locus, const std::set<Symbol>& coefficient_basis,
                                        const AbelianizeOptions& options);

/// psi = C phi residuals, plus det C at sampled points where every chart
/// condition is nonzero.
EquivalenceReport check_equivalence(const AbelianSet& set, const ConstraintModel& m, std::uint64_t seed,
                                    std::size_t count = 20);

/// chart_index names the coordinate assumed nonzero (1, 2 or 3).
AbelianSet abelianize_so3(const ConstraintModel& m, int chart_index = 3, const AbelianizeOptions& options = {});
AbelianSet abelianize_so4(const ConstraintModel& m, const AbelianizeOptions& options = {});
AbelianSet higgs_abelian_candidate(const ConstraintModel& m, const AbelianizeOptions& options = {});

struct LimitReport {
    std::vector<IdentityCheck> checks;
    bool pass() const;
};

/// Boundary consistency of the SO(4) solution at q1 = +-q4 as exact
/// identities in eps.
LimitReport epsilon_limit_check();

struct GaugeParamMap {
    std::vector<Symbol> theta;
    std::vector<RationalFunction> eta;  // eta_1..eta_6
    std::vector<IdentityCheck> coordinate_checks;
    /// delta_A p - delta_nA p for the momenta used to solve eta1, eta4.
    std::vector<IdentityCheck> solved_momentum_checks;
    /// Momentum matches checked at sampled surface points.
    std::vector<std::pair<std::string, WeakZeroReport>> momentum_checks;
    RationalFunction system_determinant;
};

GaugeParamMap solve_parameter_map(const ConstraintModel& m, const AbelianSet& abelian, std::uint64_t seed = 1,
                                  std::size_t count = 20);

}  // namespace gaugework::abelianize
