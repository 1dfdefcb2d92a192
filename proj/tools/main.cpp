// gaugework command-line driver.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "gaugework/abelianize/abelian_set.hpp"
#include "gaugework/expr/errors.hpp"
#include "model_file.hpp"

using namespace gaugework::cli;

namespace {

// Writes next to the target and renames, so readers never see half a report.
bool write_atomically(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return false;
        out << content;
        if (!out) return false;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    return !ec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gaugework: exact Poisson-bracket workbench for constrained gauge systems"};
    app.require_subcommand(1);

    GlobalOptions global;
    std::string format = "text";
    std::string out_path;
    app.add_option("--seed", global.seed, "Seed for every sampled point")->capture_default_str();
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--out", out_path, "Write the report here instead of stdout");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check structure constants and constraint closure");
    verify_cmd->add_option("model", verify.model_file, "Model file")->required();
    verify_cmd->add_option("suite", verify.suite, "closure, structure or all")->capture_default_str();

    AbelianizeArgs abel;
    auto* abel_cmd = app.add_subcommand("abelianize", "Build the Abelian equivalent constraint set");
    abel_cmd->add_option("model", abel.model_file, "Model file")->required();
    abel_cmd->add_option("--chart", abel.chart, "SO(3): index of the coordinate assumed nonzero")->capture_default_str();
    abel_cmd->add_flag("--emit-c-matrix", abel.emit_c_matrix, "Include the matrix C with psi = C phi");
    abel_cmd->add_flag("--weak-checks,!--no-weak-checks", abel.weak_checks, "Sample the locus for nonzero brackets");
    abel_cmd->add_option("--weak-points", abel.weak_points, "Points per weak check")->capture_default_str();
    abel_cmd->add_flag("--param-map", abel.param_map, "SO(4): solve and verify the gauge-parameter map");
    abel_cmd->add_flag("--epsilon-limit", abel.epsilon_limit, "SO(4): boundary identities in eps");

    FpDetArgs fp;
    auto* fp_cmd = app.add_subcommand("fp-det", "Faddeev-Popov determinant for a gauge choice");
    fp_cmd->add_option("model", fp.model_file, "Model file")->required();
    fp_cmd->add_option("--gauge", fp.gauge, "Comma-separated gauge functions (phi1.. name constraints)");
    fp_cmd->add_option("--omega-n", fp.omega_n, "Last SO(3) gauge condition")
        ->check(CLI::IsMember({"p1", "phi1"}))
        ->capture_default_str();
    fp_cmd->add_option("--samples", fp.samples, "Surface points to evaluate")->capture_default_str();

    ResidualArgs res;
    auto* res_cmd = app.add_subcommand("residual", "Jacobian null space and residual gauge symmetry");
    res_cmd->add_option("model", res.model_file, "Model file")->required();
    res_cmd->add_option("--point", res.point, "Phase-space point, e.g. \"q1=0,q2=0,q3=1,p1=0,p2=0,p3=0\"");
    res_cmd->add_flag("--random", res.random, "Probe random vacuum configurations");
    res_cmd->add_option("--trials", res.trials, "Probe trials")->capture_default_str();

    DemoArgs demo;
    auto* demo_cmd = app.add_subcommand("demo-gg", "Georgi-Glashow toy model: leapfrog run or orbit averages");
    demo_cmd->add_option("--a", demo.a, "Vacuum radius")->capture_default_str();
    demo_cmd->add_option("--dt", demo.dt, "Timestep")->capture_default_str();
    demo_cmd->add_option("--steps", demo.steps, "Number of steps")->capture_default_str();
    demo_cmd->add_option("--q", demo.q, "Initial q1,q2,q3")->capture_default_str();
    demo_cmd->add_option("--p", demo.p, "Initial p1,p2,p3")->capture_default_str();
    demo_cmd->add_option("--trajectory", demo.trajectory_path, "Write the trajectory as CSV");
    OrbitArgs orbit;
    auto* orbit_cmd = demo_cmd->add_subcommand("orbit-average", "Average charged and neutral observables over U(1)");
    orbit_cmd->add_option("--point", orbit.point, "q1,q2,q3")->capture_default_str();
    orbit_cmd->add_option("--axis", orbit.axis, "Rotation axis")->capture_default_str();
    orbit_cmd->add_option("--samples", orbit.samples, "Angles on the circle")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ReportDocument report;
    try {
        if (*verify_cmd) report = cmd_verify(verify, global);
        else if (*abel_cmd) report = cmd_abelianize(abel, global);
        else if (*fp_cmd) report = cmd_fp_det(fp, global);
        else if (*res_cmd) report = cmd_residual(res, global);
        else if (*orbit_cmd) report = cmd_orbit_average(orbit, global);
        else report = cmd_demo_gg(demo, global);
    } catch (const ModelFileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const gaugework::expr::ExprError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const gaugework::models::InvalidStructureConstants& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        // Sampling exhaustion, non-finite integration and the like.
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    std::string text = format == "json" ? report.to_json() : report.to_text();
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
    } else if (!write_atomically(out_path, text)) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return 2;
    }
    return exit_code(report);
}
