#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaugework/expr/rational_function.hpp"

namespace gaugework::gauge {

using Vec3 = std::array<double, 3>;

class NonFiniteState : public std::runtime_error {
public:
    NonFiniteState(std::size_t step, const std::string& what)
        : std::runtime_error("NonFiniteState at step " + std::to_string(step) + ": " + what), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

/// Triplet Higgs with V(q) = (q^2 - a^2)^2 and unit mass.
struct GGConfig {
    expr::BigRational a = 1;
    expr::BigRational timestep{1, 1000};
    std::size_t steps = 10000;
    Vec3 q{0.0, 0.0, 1.0};
    Vec3 p{0.0, 0.0, 0.0};
};

struct GGState {
    std::size_t step = 0;
    Vec3 q{};
    Vec3 p{};
    double energy = 0.0;
    Vec3 angular_momentum{};  // q x p
};

struct Trajectory {
    std::vector<GGState> states;  // step 0 .. steps

    /// max |E - E0| / |E0|, absolute when E0 == 0.
    double energy_drift() const;
    /// max |L - L0| / |L0|, absolute when L0 == 0.
    double angular_momentum_drift() const;
};

double gg_potential(const Vec3& q, double a);
double gg_energy(const Vec3& q, const Vec3& p, double a);

/// Leapfrog (kick-drift-kick). Throws NonFiniteState on overflow or NaN.
Trajectory simulate_gg(const GGConfig& cfg);

/// Runs cfg forward, then the same number of steps with the momentum
/// reversed; returns max relative deviation of the end state from the start.
double reversibility_error(const GGConfig& cfg);

/// Header line then one line per state: step, q1..q3, p1..p3, energy, L1..L3.
void write_trajectory(std::ostream& out, const Trajectory& t);

/// Rotation by `angle` about unit `axis`.
Vec3 rotate(const Vec3& v, const Vec3& axis, double angle);

/// Average of `observable` over the U(1) orbit of the point about `axis`,
/// using `samples` equally spaced angles. Both the q and the p triple are
/// rotated; symbols outside q1..q3, p1..p3 are held fixed.
double orbit_average(const expr::RationalFunction& observable, const std::map<expr::Symbol, double>& point,
                     const Vec3& axis, std::size_t samples = 64);

}  // namespace gaugework::gauge
