#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gaugework/models/sampling.hpp"

namespace gaugework::gauge {

using expr::Assignment;
using expr::BigRational;
using expr::RationalFunction;
using expr::Symbol;
using models::ConstraintModel;
using models::NamedExpr;

/// Gauge conditions omega_a, one per constraint.
struct GaugeChoice {
    std::vector<NamedExpr> omegas;
    std::vector<RationalFunction> exprs() const;
};

/// Which function closes the SO(3) gauge (q1, q2, omega_3).
enum class OmegaN { P1, Phi1 };
const char* to_string(OmegaN w);

/// (q1, q2, p1) or (q1, q2, phi1) on the three-constraint model.
GaugeChoice so3_gauge(const ConstraintModel& m, OmegaN last);

/// Ordered substitutions; each right side may use symbols bound earlier.
using Reduction = std::vector<std::pair<Symbol, RationalFunction>>;

/// q1 = q2 = 0, then p2 = L1/q3, p1 = -L2/q3.
Reduction so3_reduction(const ConstraintModel& m);

/// Points where both the constraints and the gauge conditions vanish:
/// q1 = q2 = 0 with q3 != 0, and L1 != 0 when L is present.
models::LocusRequest so3_combined_surface(const ConstraintModel& m, const GaugeChoice& g);

/// Plain constraint surface phi = 0, solved for the primary momenta (plus
/// pp1 when an auxiliary block is present).
models::LocusRequest constraint_surface(const ConstraintModel& m);

struct FpSample {
    Assignment point;
    BigRational direct;   // det of the bracket matrix evaluated at the point
    BigRational reduced;  // reduced expression at the point
};

struct FpResult {
    expr::RationalFunction raw;      // det{omega_a, phi_b}
    expr::RationalFunction reduced;  // raw after the reduction
    std::vector<FpSample> samples;

    bool agrees() const;
    bool vanishes_at_samples() const;
    bool nonzero_at_samples() const;
};

/// Throws NotSquare if the gauge count differs from the constraint count.
FpResult fp_determinant(const ConstraintModel& m, const GaugeChoice& g, const Reduction& reduction,
                        const models::LocusRequest& surface, std::uint64_t seed, std::size_t count = 20);

}  // namespace gaugework::gauge
