#include "gaugework/gauge/gg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>

namespace gaugework::gauge {

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 force(const Vec3& q, double a) {
    double s = -4.0 * (dot(q, q) - a * a);
    return {s * q[0], s * q[1], s * q[2]};
}

bool finite(const Vec3& v) { return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]); }

GGState make_state(std::size_t step, const Vec3& q, const Vec3& p, double a) {
    return {step, q, p, gg_energy(q, p, a), cross(q, p)};
}

void integrate(Vec3& q, Vec3& p, double a, double dt, std::size_t steps, std::vector<GGState>* record) {
    for (std::size_t n = 1; n <= steps; ++n) {
        Vec3 f = force(q, a);
        for (int i = 0; i < 3; ++i) p[i] += 0.5 * dt * f[i];
        for (int i = 0; i < 3; ++i) q[i] += dt * p[i];
        f = force(q, a);
        for (int i = 0; i < 3; ++i) p[i] += 0.5 * dt * f[i];
        if (!finite(q) || !finite(p)) throw NonFiniteState(n, "state overflowed");
        if (record) record->push_back(make_state(n, q, p, a));
    }
}

}  // namespace

double gg_potential(const Vec3& q, double a) {
    double r = dot(q, q) - a * a;
    return r * r;
}

double gg_energy(const Vec3& q, const Vec3& p, double a) { return 0.5 * dot(p, p) + gg_potential(q, a); }

double Trajectory::energy_drift() const {
    if (states.empty()) return 0.0;
    double e0 = states.front().energy;
    double scale = e0 == 0.0 ? 1.0 : std::abs(e0);
    double worst = 0.0;
    for (const auto& s : states) worst = std::max(worst, std::abs(s.energy - e0) / scale);
    return worst;
}

double Trajectory::angular_momentum_drift() const {
    if (states.empty()) return 0.0;
    const Vec3& l0 = states.front().angular_momentum;
    double scale = norm(l0) == 0.0 ? 1.0 : norm(l0);
    double worst = 0.0;
    for (const auto& s : states) {
        Vec3 d{s.angular_momentum[0] - l0[0], s.angular_momentum[1] - l0[1], s.angular_momentum[2] - l0[2]};
        worst = std::max(worst, norm(d) / scale);
    }
    return worst;
}

Trajectory simulate_gg(const GGConfig& cfg) {
    if (cfg.timestep <= 0) throw std::invalid_argument("simulate_gg: timestep must be positive");
    const double a = cfg.a.get_d();
    const double dt = cfg.timestep.get_d();
    Trajectory t;
    t.states.reserve(cfg.steps + 1);
    Vec3 q = cfg.q;
    Vec3 p = cfg.p;
    if (!finite(q) || !finite(p)) throw NonFiniteState(0, "initial state is not finite");
    t.states.push_back(make_state(0, q, p, a));
    integrate(q, p, a, dt, cfg.steps, &t.states);
    return t;
}

double reversibility_error(const GGConfig& cfg) {
    const double a = cfg.a.get_d();
    const double dt = cfg.timestep.get_d();
    Vec3 q = cfg.q;
    Vec3 p = cfg.p;
    integrate(q, p, a, dt, cfg.steps, nullptr);
    for (double& x : p) x = -x;
    integrate(q, p, a, dt, cfg.steps, nullptr);
    for (double& x : p) x = -x;
    double scale = std::max(1.0, std::max(norm(cfg.q), norm(cfg.p)));
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        worst = std::max(worst, std::abs(q[i] - cfg.q[i]) / scale);
        worst = std::max(worst, std::abs(p[i] - cfg.p[i]) / scale);
    }
    return worst;
}

void write_trajectory(std::ostream& out, const Trajectory& t) {
    out << "step,q1,q2,q3,p1,p2,p3,energy,L1,L2,L3\n";
    auto old_flags = out.flags();
    auto old_precision = out.precision();
    out << std::setprecision(17);
    for (const auto& s : t.states) {
        out << s.step;
        for (double v : s.q) out << ',' << v;
        for (double v : s.p) out << ',' << v;
        out << ',' << s.energy;
        for (double v : s.angular_momentum) out << ',' << v;
        out << '\n';
    }
    out.flags(old_flags);
    out.precision(old_precision);
}

Vec3 rotate(const Vec3& v, const Vec3& axis, double angle) {
    // Rodrigues: v cos + (k x v) sin + k (k.v)(1 - cos).
    double c = std::cos(angle);
    double s = std::sin(angle);
    Vec3 kxv = cross(axis, v);
    double kv = dot(axis, v);
    Vec3 out;
    for (int i = 0; i < 3; ++i) out[i] = v[i] * c + kxv[i] * s + axis[i] * kv * (1.0 - c);
    return out;
}

double orbit_average(const expr::RationalFunction& observable, const std::map<expr::Symbol, double>& point,
                     const Vec3& axis, std::size_t samples) {
    if (samples == 0) throw std::invalid_argument("orbit_average: samples must be positive");
    double len = norm(axis);
    if (len == 0.0) throw std::invalid_argument("orbit_average: axis must be nonzero");
    Vec3 k{axis[0] / len, axis[1] / len, axis[2] / len};

    auto triple = [&](const char* prefix) {
        Vec3 v{};
        for (int i = 0; i < 3; ++i) {
            auto it = point.find(expr::indexed(prefix, i + 1));
            v[i] = it == point.end() ? 0.0 : it->second;
        }
        return v;
    };
    const Vec3 q = triple("q");
    const Vec3 p = triple("p");

    double total = 0.0;
    for (std::size_t n = 0; n < samples; ++n) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(n) / static_cast<double>(samples);
        Vec3 rq = rotate(q, k, angle);
        Vec3 rp = rotate(p, k, angle);
        expr::Assignment at;
        for (const auto& [s, v] : point) at[s] = expr::BigRational(v);
        for (int i = 0; i < 3; ++i) {
            at[expr::indexed("q", i + 1)] = expr::BigRational(rq[i]);
            at[expr::indexed("p", i + 1)] = expr::BigRational(rp[i]);
        }
        total += observable.evaluate(at).get_d();
    }
    return total / static_cast<double>(samples);
}

}  // namespace gaugework::gauge
