#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaugework/models/model.hpp"

namespace gaugework::models {

using expr::Assignment;

enum class SamplingErrorKind { SingularSolve, StationaryPoint };

class SamplingError : public std::runtime_error {
public:
    SamplingError(SamplingErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind == SamplingErrorKind::SingularSolve ? "SingularSolve" : "StationaryPoint") +
                             ": " + what),
          kind_(kind) {}
    SamplingErrorKind kind() const { return kind_; }

private:
    SamplingErrorKind kind_;
};

struct PhasePoint {
    Assignment values;
    /// Rendered chart condition and whether it is nonzero here.
    std::vector<std::pair<std::string, bool>> conditions;
    /// Draws rejected before this point was accepted.
    int rejected = 0;
};

/// A locus {equations = 0} with some symbols solved for, some pinned, and
/// the rest drawn from integers in [-9, 9] without 0.
struct LocusRequest {
    std::vector<RationalFunction> equations;
    std::vector<Symbol> variables;  // every symbol the point must bind
    std::vector<Symbol> solve_for;  // equations must be affine in these
    Assignment pinned;
    std::vector<RationalFunction> nonzero;  // chart conditions
    /// Rejected as stationary if all of these are zero after pinning.
    std::vector<Symbol> stationary_coordinates;
    int max_attempts = 100;
};

/// Throws SamplingError: StationaryPoint when the pins force every
/// stationary coordinate to zero, SingularSolve after max_attempts failures.
PhasePoint sample_locus(const LocusRequest& request, std::mt19937_64& rng);

std::vector<PhasePoint> sample_locus_points(const LocusRequest& request, std::size_t count, std::uint64_t seed);

/// Point with every constraint of `m` zero, solved for `solve_for`.
PhasePoint sample_surface_point(const ConstraintModel& m, const std::vector<Symbol>& solve_for, std::uint64_t seed);

int draw_nonzero(std::mt19937_64& rng);

}  // namespace gaugework::models
