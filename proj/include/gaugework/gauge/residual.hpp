#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gaugework/gauge/fp.hpp"
#include "gaugework/poisson/matrix.hpp"

namespace gaugework::gauge {

using RationalVector = std::vector<BigRational>;

struct NullSpaceResult {
    std::size_t constraints = 0;  // A
    std::size_t rank = 0;
    std::vector<RationalVector> null_vectors;  // left null vectors of the Jacobian
    poisson::RationalMatrix jacobian;          // A x (chart symbols)

    std::size_t I() const { return null_vectors.size(); }
    /// Every gradient vanishes here, so every direction is residual.
    bool stationary() const { return rank == 0; }
};

/// Throws expr::ExprError(UnboundSymbol) if the point misses a chart symbol.
NullSpaceResult residual_null_space(const ConstraintModel& m, const Assignment& point);

/// lambda . J == 0 exactly.
bool annihilates(const poisson::RationalMatrix& jacobian, const RationalVector& lambda);

struct ActionCheck {
    std::size_t functions = 0;  // size of the test family
    BigRational max_abs = 0;
    std::string witness;        // test function attaining max_abs, if nonzero
    bool pass() const { return max_abs == 0; }
};

/// Chart symbols and every quadratic monomial in them.
std::vector<NamedExpr> action_test_functions(const ConstraintModel& m);

/// max |sum_a lambda_a {eta, phi_a}| at the point over the test family.
ActionCheck residual_action_check(const ConstraintModel& m, const Assignment& point, const RationalVector& lambda);

struct ProbeTrial {
    Assignment point;
    std::size_t rank = 0;
    std::size_t I = 0;
};

struct ProbeReport {
    std::string algebra;                 // "so3", "so4" or "unknown"
    std::optional<std::size_t> expected;  // rank of the Lie algebra when known
    std::vector<ProbeTrial> trials;
    std::map<std::size_t, std::size_t> histogram;  // I -> count

    bool matches() const;
};

/// so3 -> 1, so4 -> 2, otherwise nothing.
std::optional<std::size_t> known_algebra_rank(const lie::StructureConstants& f);

/// Random nonzero q, p = 0, L = 0; records I per trial.
ProbeReport conjecture_probe(const lie::StructureConstants& f, std::size_t trials, std::uint64_t seed);

}  // namespace gaugework::gauge
