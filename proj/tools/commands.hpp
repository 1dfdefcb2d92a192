#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "report.hpp"

namespace gaugework::cli {

/// Bad arguments or input; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::uint64_t seed = 1;
};

struct VerifyArgs {
    std::string model_file;
    std::string suite = "all";  // closure, structure, all
};

struct AbelianizeArgs {
    std::string model_file;
    int chart = 3;
    bool emit_c_matrix = false;
    bool weak_checks = true;
    std::size_t weak_points = 20;
    bool param_map = false;
    bool epsilon_limit = false;
};

struct FpDetArgs {
    std::string model_file;
    /// Comma-separated gauge functions; phi1.. name the constraints.
    std::optional<std::string> gauge;
    std::string omega_n = "p1";
    std::size_t samples = 20;
};

struct ResidualArgs {
    std::string model_file;
    /// "q1=0, q2=0, ..." binding every chart symbol.
    std::optional<std::string> point;
    bool random = false;
    std::size_t trials = 50;
};

struct DemoArgs {
    std::string a = "1";
    std::string dt = "1/1000";
    std::size_t steps = 10000;
    std::string q = "1.05,0.1,-0.2";
    std::string p = "0,0.3,0.1";
    std::optional<std::string> trajectory_path;
};

struct OrbitArgs {
    std::string point = "0.8,-0.6,0";
    std::string axis = "0,0,1";
    std::size_t samples = 64;
};

/// Each command returns its report; exit code is 0 iff the report passes.
/// Model-file problems raise ModelFileError and argument problems UsageError.
ReportDocument cmd_verify(const VerifyArgs& args, const GlobalOptions& global);
ReportDocument cmd_abelianize(const AbelianizeArgs& args, const GlobalOptions& global);
ReportDocument cmd_fp_det(const FpDetArgs& args, const GlobalOptions& global);
ReportDocument cmd_residual(const ResidualArgs& args, const GlobalOptions& global);
ReportDocument cmd_demo_gg(const DemoArgs& args, const GlobalOptions& global);
ReportDocument cmd_orbit_average(const OrbitArgs& args, const GlobalOptions& global);

int exit_code(const ReportDocument& report);

/// Decimal ("-0.25", "1e-3") or fraction ("1/1000") text as an exact rational.
expr::BigRational parse_number(const std::string& text);

}  // namespace gaugework::cli
