#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "gaugework/abelianize/abelian_set.hpp"
#include "gaugework/abelianize/so4_parts.hpp"
#include "gaugework/expr/errors.hpp"
#include "gaugework/expr/parser.hpp"
#include "gaugework/gauge/gg.hpp"
#include "gaugework/gauge/residual.hpp"
#include "model_file.hpp"

namespace gaugework::cli {

using expr::Assignment;
using expr::BigRational;
using expr::RationalFunction;
using expr::Symbol;
using models::ConstraintModel;

namespace {

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string fixed(double v) {
    char buf[64];
    // Large magnitudes would print dozens of digits in %f.
    std::snprintf(buf, sizeof buf, std::abs(v) < 1e6 ? "%.12f" : "%.12e", v);
    return buf;
}

std::string vec_text(const std::vector<BigRational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
    return out + ")";
}

std::string vec3_text(const gauge::Vec3& v) { return "(" + fixed(v[0]) + ", " + fixed(v[1]) + ", " + fixed(v[2]) + ")"; }

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    for (auto& s : out) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    }
    return out;
}

struct Loaded {
    ModelSpec spec;
    ConstraintModel model;
};

Loaded load(const std::string& path) {
    Loaded out;
    out.spec = load_model_spec(path);
    out.model = build_model(out.spec, path);
    return out;
}

bool l_vanishes(const ConstraintModel& m) {
    for (const auto& l : m.l) {
        if (!l.is_zero()) return false;
    }
    return true;
}

bool is_so3(const ConstraintModel& m) {
    return m.kind == models::ModelKind::FModel && m.algebra == lie::so3_structure();
}

bool is_so4(const ConstraintModel& m) {
    return m.kind == models::ModelKind::FModel && m.algebra == lie::so4_structure();
}

// --------------------------------------------------------------------------
// abelianize helpers

void add_bracket_rows(ReportDocument& r, const std::string& prefix, const std::vector<abelianize::BracketEntry>& table,
                      bool graded) {
    using abelianize::BracketStatus;
    for (const auto& e : table) {
        Status st = Status::Info;
        if (graded) st = e.status == BracketStatus::Nonzero ? Status::Fail : Status::Pass;
        auto& rec = r.add(prefix + "{" + e.left + ", " + e.right + "}", st);
        rec.add("status", abelianize::to_string(e.status));
        if (e.status == BracketStatus::Nonzero) rec.add("residual", e.value.render());
        if (!e.coefficients.empty()) {
            for (std::size_t i = 0; i < e.coefficients.size(); ++i) {
                rec.add("c" + std::to_string(i + 1), e.coefficients[i].render());
            }
        }
        if (e.counterexample) rec.witnesses.push_back(witness(*e.counterexample));
        if (graded) {
            for (const auto& w : e.witnesses) rec.witnesses.push_back(witness(w));
        }
    }
}

void add_identities(ReportDocument& r, const std::vector<abelianize::IdentityCheck>& ids, const std::string& prefix) {
    for (const auto& id : ids) {
        auto& rec = r.add(prefix + id.name, id.pass() ? Status::Pass : Status::Fail);
        rec.add("residual", id.residual.render());
    }
}

// --------------------------------------------------------------------------
// fp-det helpers

void add_fp_record(ReportDocument& r, const std::string& name, const gauge::FpResult& res, bool expect_vanishing,
                   bool primary) {
    Status st;
    std::string verdict;
    if (res.vanishes_at_samples()) {
        if (expect_vanishing) {
            st = Status::Info;
            verdict = "non-Abelianizable signature: vanishes at every sampled surface point";
        } else {
            st = Status::Fail;
            verdict = res.raw.is_zero() ? "identically zero: the gauge is not admissible"
                                        : "weakly zero: vanishes on the surface, the gauge is not admissible";
        }
    } else if (res.nonzero_at_samples()) {
        st = expect_vanishing ? Status::Fail : Status::Pass;
        verdict = "nonzero at every sampled surface point";
    } else {
        st = Status::Fail;
        verdict = "vanishes at some sampled points only";
    }
    if (!primary) st = Status::Info;
    auto& rec = r.add(name, st);
    rec.add("verdict", verdict);
    rec.add("det", res.raw.render());
    rec.add("reduced", res.reduced.render());
    std::size_t zeros = 0;
    for (const auto& s : res.samples) zeros += s.direct == 0 ? 1 : 0;
    rec.add("samples", std::to_string(res.samples.size()));
    rec.add("zero at", std::to_string(zeros));
    if (!res.samples.empty()) rec.witnesses.push_back(witness(res.samples.front().point));

    auto& agree = r.add(name + ": reduction matches direct evaluation", res.agrees() ? Status::Pass : Status::Fail);
    agree.add("samples", std::to_string(res.samples.size()));
}

Assignment parse_point(const ConstraintModel& m, const std::string& text) {
    Assignment point;
    auto allowed = m.chart.symbol_set();
    for (const auto& item : split_commas(text)) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("point entry '" + item + "' is not of the form symbol=value");
        std::string name = item.substr(0, eq);
        name.erase(name.find_last_not_of(" \t") + 1);
        if (!expr::is_valid_symbol_name(name)) throw UsageError("bad symbol name '" + name + "' in point");
        Symbol s(name);
        if (!allowed.count(s)) throw UsageError("symbol '" + name + "' is not in the model chart");
        point[s] = parse_number(item.substr(eq + 1));
    }
    std::string missing;
    for (Symbol s : m.chart.symbols()) {
        if (!point.count(s)) missing += (missing.empty() ? "" : ", ") + s.name();
    }
    if (!missing.empty()) throw UsageError("underspecified point: missing " + missing);
    return point;
}

gauge::Vec3 parse_vec3(const std::string& text, const std::string& what) {
    auto parts = split_commas(text);
    if (parts.size() != 3) throw UsageError(what + " needs three comma-separated numbers");
    gauge::Vec3 v{};
    for (int i = 0; i < 3; ++i) {
        v[i] = parse_number(parts[i]).get_d();
        if (!std::isfinite(v[i])) throw UsageError(what + " is not finite");
    }
    return v;
}

}  // namespace

BigRational parse_number(const std::string& raw) {
    static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
    static const std::regex decimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
    std::smatch m;
    if (std::regex_match(raw, m, fraction)) {
        expr::BigInt den(m[2].str(), 10);
        if (den == 0) throw UsageError("zero denominator in '" + raw + "'");
        std::string num = m[1].str();
        if (num.front() == '+') num.erase(0, 1);
        BigRational v(expr::BigInt(num, 10), den);
        v.canonicalize();
        return v;
    }
    if (std::regex_match(raw, m, decimal) && (m[2].length() > 0 || m[3].length() > 0)) {
        std::string digits = m[2].str() + m[3].str();
        BigRational v(expr::BigInt(digits.empty() ? "0" : digits, 10));
        long exponent = -static_cast<long>(m[3].length());
        if (m[4].matched) {
            if (m[4].length() > 6) throw UsageError("exponent out of range in '" + raw + "'");
            exponent += std::stol(m[4].str());
        }
        if (exponent > 400 || exponent < -400) throw UsageError("exponent out of range in '" + raw + "'");
        expr::BigInt ten = 1;
        for (long i = 0; i < std::abs(exponent); ++i) ten *= 10;
        if (exponent >= 0) v *= ten;
        else v /= ten;
        v.canonicalize();
        return m[1].str() == "-" ? BigRational(-v) : v;
    }
    throw UsageError("'" + raw + "' is not a number");
}

int exit_code(const ReportDocument& report) { return report.overall() == Status::Pass ? 0 : 1; }

// --------------------------------------------------------------------------

ReportDocument cmd_verify(const VerifyArgs& args, const GlobalOptions&) {
    if (args.suite != "all" && args.suite != "closure" && args.suite != "structure") {
        throw UsageError("unknown suite '" + args.suite + "' (closure, structure, all)");
    }
    ReportDocument r;
    r.command = "verify " + args.suite;
    auto spec = load_model_spec(args.model_file);
    r.model = spec.name;

    const auto& f = spec.kind == models::ModelKind::Higgs ? lie::so3_structure() : spec.algebra;
    auto validity = lie::check_structure(f);
    if (args.suite != "closure") {
        r.add("structure constants: antisymmetry", validity.antisymmetric ? Status::Pass : Status::Fail)
            .add("detail", validity.describe());
        r.add("structure constants: Jacobi identity", validity.jacobi ? Status::Pass : Status::Fail)
            .add("detail", validity.describe());
        if (spec.kind == models::ModelKind::Higgs) {
            auto t = lie::check_thooft(lie::thooft_eta());
            auto& rec = r.add("'t Hooft symbol algebra", t.antisymmetric && t.commutation ? Status::Pass : Status::Fail);
            rec.add("checked", std::to_string(t.checked));
        }
    }
    if (args.suite == "structure") return r;
    if (!validity.ok()) {
        r.add("closure", Status::Fail).add("detail", "skipped: structure constants are invalid");
        return r;
    }

    auto m = build_model(spec, args.model_file);
    if (m.bracket_scale != 1) r.add("bracket scale", Status::Info).add("scale", m.bracket_scale.get_str());
    auto closure = models::verify_closure(m);
    for (const auto& p : closure.pairs) {
        auto& rec = r.add("closure {phi" + std::to_string(p.a) + ", phi" + std::to_string(p.b) + "}",
                          p.pass() ? Status::Pass : Status::Fail);
        rec.add("residual", p.residual.render());
    }
    return r;
}

ReportDocument cmd_abelianize(const AbelianizeArgs& args, const GlobalOptions& global) {
    if (args.chart < 1 || args.chart > 3) throw UsageError("--chart must be 1, 2 or 3");
    ReportDocument r;
    r.command = "abelianize";
    auto loaded = load(args.model_file);
    const auto& m = loaded.model;
    r.model = m.name;

    abelianize::AbelianizeOptions opts;
    opts.seed = global.seed;
    opts.weak_checks = args.weak_checks;
    opts.weak_points = args.weak_points;

    abelianize::AbelianSet set;
    try {
        if (m.kind == models::ModelKind::Higgs) set = abelianize::higgs_abelian_candidate(m, opts);
        else if (is_so3(m)) set = abelianize::abelianize_so3(m, args.chart, opts);
        else if (is_so4(m)) set = abelianize::abelianize_so4(m, opts);
        else throw abelianize::AbelianizeError(abelianize::AbelianizeErrorKind::UnsupportedModel,
                                               "only the so3, so4 and higgs constructions are available");
    } catch (const abelianize::AbelianizeError& e) {
        auto& rec = r.add("abelianize", Status::Fail);
        rec.add("error", e.what());
        if (e.kind() == abelianize::AbelianizeErrorKind::LIsZero) {
            rec.add("hint", "L vanishes, so no Abelian equivalent exists; run `residual " + args.model_file +
                                " --random` to inspect the residual gauge symmetry");
        }
        return r;
    }

    r.add("construction", Status::Info).add("label", set.label);
    for (const auto& psi : set.psis) r.add(psi.name, Status::Info).add("expr", psi.expr.render());
    {
        auto& rec = r.add("chart conditions (nonzero)", Status::Info);
        for (std::size_t i = 0; i < set.chart_conditions.size(); ++i) {
            rec.add("c" + std::to_string(i + 1), set.chart_conditions[i].render());
        }
    }
    if (args.emit_c_matrix) {
        auto& rec = r.add("C matrix (psi = C phi)", Status::Info);
        for (std::size_t i = 0; i < set.c_matrix.rows(); ++i) {
            std::string row = "[";
            for (std::size_t j = 0; j < set.c_matrix.cols(); ++j) row += (j ? ", " : "") + set.c_matrix.at(i, j).render();
            rec.add("row" + std::to_string(i + 1), row + "]");
        }
    }
    if (is_so4(m)) {
        auto parts = abelianize::so4_parts(m.l);
        r.add("R1, R2", Status::Info).add("R1", parts.r1.render()).add("R2", parts.r2.render());
    }
    add_identities(r, set.identities, "identity: ");
    add_bracket_rows(r, "before redefinition: ", set.intermediate_brackets, false);
    add_bracket_rows(r, "", set.bracket_report, true);

    auto eq = abelianize::check_equivalence(set, m, global.seed);
    r.add("equivalence psi = C phi", eq.exact() ? Status::Pass : Status::Fail)
        .add("residuals", std::to_string(eq.residuals.size()));
    {
        auto& rec = r.add("det C nonzero at sampled points", eq.det_nonzero() ? Status::Pass : Status::Fail);
        rec.add("points", std::to_string(eq.points.size()));
        if (!eq.det_values.empty()) rec.add("first value", eq.det_values.front().get_str());
        if (!eq.points.empty()) rec.witnesses.push_back(witness(eq.points.front()));
    }

    if (args.epsilon_limit) {
        if (!is_so4(m)) throw UsageError("--epsilon-limit applies to the so4 model only");
        add_identities(r, abelianize::epsilon_limit_check().checks, "eps limit: ");
    }
    if (args.param_map) {
        if (!is_so4(m)) throw UsageError("--param-map applies to the so4 model only");
        auto pm = abelianize::solve_parameter_map(m, set, global.seed);
        {
            auto& rec = r.add("parameter map", Status::Info);
            for (std::size_t a = 0; a < pm.eta.size(); ++a) rec.add("eta" + std::to_string(a + 1), pm.eta[a].render());
            rec.add("system determinant", pm.system_determinant.render());
        }
        add_identities(r, pm.coordinate_checks, "parameter map: ");
        add_identities(r, pm.solved_momentum_checks, "parameter map: ");
        for (const auto& [name, w] : pm.momentum_checks) {
            auto& rec = r.add("parameter map (weak): " + name, w.pass ? Status::Pass : Status::Fail);
            rec.add("points", std::to_string(w.witnesses.size()));
            if (w.counterexample) rec.witnesses.push_back(witness(*w.counterexample));
        }
    }
    return r;
}

ReportDocument cmd_fp_det(const FpDetArgs& args, const GlobalOptions& global) {
    if (args.omega_n != "p1" && args.omega_n != "phi1") throw UsageError("--omega-n must be p1 or phi1");
    if (args.samples == 0) throw UsageError("--samples must be positive");
    ReportDocument r;
    r.command = "fp-det";
    auto loaded = load(args.model_file);
    const auto& m = loaded.model;
    r.model = m.name;
    const bool expect_vanishing = m.kind == models::ModelKind::FModel && l_vanishes(m);

    if (!args.gauge) {
        if (!is_so3(m)) throw UsageError("the default gauge needs the so3 model; pass --gauge");
        auto primary = args.omega_n == "p1" ? gauge::OmegaN::P1 : gauge::OmegaN::Phi1;
        auto other = primary == gauge::OmegaN::P1 ? gauge::OmegaN::Phi1 : gauge::OmegaN::P1;
        for (auto which : {primary, other}) {
            auto g = gauge::so3_gauge(m, which);
            auto res = gauge::fp_determinant(m, g, gauge::so3_reduction(m), gauge::so3_combined_surface(m, g),
                                             global.seed, args.samples);
            std::string label = std::string("FP determinant, omega = (q1, q2, ") + gauge::to_string(which) + ")";
            add_fp_record(r, label, res, expect_vanishing, which == primary);
        }
        r.add("reduction", Status::Info).add("substitutions", "q1 = 0, q2 = 0, p2 = L1/q3, p1 = -L2/q3");
        return r;
    }

    std::set<Symbol> extra;
    expr::Bindings phi_bindings;
    for (std::size_t a = 0; a < m.constraints.size(); ++a) {
        Symbol s(m.constraints[a].name);
        extra.insert(s);
        phi_bindings[s] = m.constraints[a].expr;
    }
    gauge::GaugeChoice g;
    for (const auto& text : split_commas(*args.gauge)) {
        try {
            g.omegas.push_back({text, poisson::parse_on(m.chart, text, extra).substitute(phi_bindings)});
        } catch (const expr::ExprError& e) {
            throw UsageError("gauge function '" + text + "': " + e.what());
        }
    }
    if (g.omegas.size() != m.constraints.size()) {
        throw UsageError("gauge has " + std::to_string(g.omegas.size()) + " functions, the model has " +
                         std::to_string(m.constraints.size()) + " constraints");
    }
    try {
        auto res = gauge::fp_determinant(m, g, {}, gauge::constraint_surface(m), global.seed, args.samples);
        add_fp_record(r, "FP determinant", res, expect_vanishing, true);
    } catch (const models::SamplingError& e) {
        r.add("FP determinant", Status::Fail).add("error", e.what());
    }
    auto& rec = r.add("gauge", Status::Info);
    for (std::size_t a = 0; a < g.omegas.size(); ++a) rec.add("omega" + std::to_string(a + 1), g.omegas[a].expr.render());
    return r;
}

ReportDocument cmd_residual(const ResidualArgs& args, const GlobalOptions& global) {
    if (!args.point && !args.random) throw UsageError("residual needs --point or --random");
    if (args.random && args.trials == 0) throw UsageError("--trials must be positive");
    ReportDocument r;
    r.command = "residual";
    auto loaded = load(args.model_file);
    const auto& m = loaded.model;
    r.model = m.name;

    if (args.point) {
        auto point = parse_point(m, *args.point);
        auto ns = gauge::residual_null_space(m, point);
        {
            auto& rec = r.add("Jacobian rank", Status::Info);
            rec.add("A", std::to_string(ns.constraints));
            rec.add("rank", std::to_string(ns.rank));
            rec.add("I", std::to_string(ns.I()));
            rec.witnesses.push_back(witness(point));
        }
        r.add("rank + I = A", ns.rank + ns.I() == ns.constraints ? Status::Pass : Status::Fail);
        if (ns.stationary()) r.add("stationary point", Status::Info).add("detail", "every constraint gradient vanishes");
        for (std::size_t i = 0; i < ns.null_vectors.size(); ++i) {
            const auto& v = ns.null_vectors[i];
            auto tag = "null vector " + std::to_string(i + 1);
            r.add(tag, gauge::annihilates(ns.jacobian, v) ? Status::Pass : Status::Fail).add("lambda", vec_text(v));
            auto act = gauge::residual_action_check(m, point, v);
            auto& rec = r.add(tag + ": action on test functions", act.pass() ? Status::Pass : Status::Fail);
            rec.add("functions", std::to_string(act.functions));
            rec.add("max |delta eta|", act.max_abs.get_str());
            if (!act.pass()) rec.add("witness", act.witness);
        }
    }
    if (args.random) {
        auto probe = gauge::conjecture_probe(m.algebra, args.trials, global.seed);
        auto& rec = r.add("residual symmetry probe (q random, p = 0, L = 0)",
                          !probe.expected ? Status::Info : probe.matches() ? Status::Pass : Status::Fail);
        rec.add("algebra", probe.algebra);
        rec.add("trials", std::to_string(probe.trials.size()));
        if (probe.expected) rec.add("algebra rank", std::to_string(*probe.expected));
        for (const auto& [i, n] : probe.histogram) rec.add("I = " + std::to_string(i), std::to_string(n));
    }
    return r;
}

ReportDocument cmd_demo_gg(const DemoArgs& args, const GlobalOptions&) {
    gauge::GGConfig cfg;
    cfg.a = parse_number(args.a);
    cfg.timestep = parse_number(args.dt);
    if (cfg.a <= 0) throw UsageError("--a must be positive");
    if (cfg.timestep <= 0) throw UsageError("--dt must be positive");
    if (args.steps == 0) throw UsageError("--steps must be positive");
    cfg.steps = args.steps;
    cfg.q = parse_vec3(args.q, "--q");
    cfg.p = parse_vec3(args.p, "--p");

    ReportDocument r;
    r.command = "demo-gg";
    r.model = "georgi-glashow";
    {
        auto& rec = r.add("configuration", Status::Info);
        rec.add("a", cfg.a.get_str());
        rec.add("dt", cfg.timestep.get_str());
        rec.add("steps", std::to_string(cfg.steps));
        rec.add("q", vec3_text(cfg.q));
        rec.add("p", vec3_text(cfg.p));
    }
    try {
        auto t = gauge::simulate_gg(cfg);
        if (args.trajectory_path) {
            std::ofstream out(*args.trajectory_path, std::ios::binary);
            if (!out) throw UsageError("cannot write " + *args.trajectory_path);
            gauge::write_trajectory(out, t);
        }
        double de = t.energy_drift();
        double dl = t.angular_momentum_drift();
        double rev = gauge::reversibility_error(cfg);
        r.add("energy drift", de <= 1e-6 ? Status::Pass : Status::Fail)
            .add("relative", sci(de))
            .add("bound", "1e-6")
            .add("E0", sci(t.states.front().energy));
        r.add("angular momentum drift", dl <= 1e-10 ? Status::Pass : Status::Fail).add("relative", sci(dl)).add("bound", "1e-10");
        r.add("reversibility", rev <= 1e-9 ? Status::Pass : Status::Fail).add("relative", sci(rev)).add("bound", "1e-9");
        const auto& first = t.states.front();
        bool vacuum_start = first.energy == 0.0 && first.p == gauge::Vec3{};
        if (vacuum_start) {
            double dev = 0.0;
            for (const auto& s : t.states) {
                for (int i = 0; i < 3; ++i) {
                    dev = std::max({dev, std::abs(s.q[i] - first.q[i]), std::abs(s.p[i] - first.p[i])});
                }
            }
            r.add("vacuum start: trajectory constant", dev <= 1e-12 ? Status::Pass : Status::Fail)
                .add("max deviation", sci(dev))
                .add("bound", "1e-12");
        }
        const auto& last = t.states.back();
        r.add("final state", Status::Info).add("q", vec3_text(last.q)).add("p", vec3_text(last.p));
    } catch (const gauge::NonFiniteState& e) {
        r.add("integration", Status::Fail).add("error", e.what());
    }
    return r;
}

ReportDocument cmd_orbit_average(const OrbitArgs& args, const GlobalOptions&) {
    if (args.samples == 0) throw UsageError("--samples must be positive");
    auto q = parse_vec3(args.point, "--point");
    auto axis = parse_vec3(args.axis, "--axis");
    double len = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    if (len == 0.0) throw UsageError("--axis must be nonzero");
    gauge::Vec3 k{axis[0] / len, axis[1] / len, axis[2] / len};

    // Frame (u, v) orthogonal to the axis; u from the basis vector least aligned with it.
    int pick = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(k[i]) < std::abs(k[pick])) pick = i;
    }
    gauge::Vec3 u{};
    u[pick] = 1.0;
    double proj = k[pick];
    for (int i = 0; i < 3; ++i) u[i] -= proj * k[i];
    double ul = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    for (auto& x : u) x /= ul;
    gauge::Vec3 v{k[1] * u[2] - k[2] * u[1], k[2] * u[0] - k[0] * u[2], k[0] * u[1] - k[1] * u[0]};

    auto linear = [](const gauge::Vec3& w) {
        RationalFunction f;
        for (int i = 0; i < 3; ++i) {
            f += RationalFunction(BigRational(w[i])) * RationalFunction::symbol(expr::indexed("q", i + 1));
        }
        return f;
    };
    RationalFunction z1 = linear(u);
    RationalFunction z2 = linear(v);
    RationalFunction zz = z1 * z1 + z2 * z2;

    std::map<Symbol, double> point;
    for (int i = 0; i < 3; ++i) point[expr::indexed("q", i + 1)] = q[i];
    expr::Assignment exact;
    for (const auto& [s, x] : point) exact[s] = BigRational(x);

    double a1 = gauge::orbit_average(z1, point, k, args.samples);
    double a2 = gauge::orbit_average(z2, point, k, args.samples);
    double azz = gauge::orbit_average(zz, point, k, args.samples);
    double pointwise = zz.evaluate(exact).get_d();

    ReportDocument r;
    r.command = "demo-gg orbit-average";
    r.model = "georgi-glashow";
    r.add("configuration", Status::Info)
        .add("point", vec3_text(q))
        .add("axis", vec3_text(k))
        .add("frame u", vec3_text(u))
        .add("frame v", vec3_text(v))
        .add("samples", std::to_string(args.samples));
    double mod = std::hypot(a1, a2);
    r.add("<z> = <z1 + i z2> vanishes", mod <= 1e-12 ? Status::Pass : Status::Fail)
        .add("<z1>", sci(a1))
        .add("<z2>", sci(a2))
        .add("bound", "1e-12");
    r.add("<z zbar> equals pointwise value", std::abs(azz - pointwise) <= 1e-12 ? Status::Pass : Status::Fail)
        .add("<z zbar>", fixed(azz))
        .add("pointwise", fixed(pointwise))
        .add("bound", "1e-12");
    return r;
}

}  // namespace gaugework::cli
