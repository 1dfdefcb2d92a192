#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gaugework/models/model.hpp"

namespace gaugework::cli {

/// Load failure with a 1-based position when one is known.
class ModelFileError : public std::runtime_error {
public:
    ModelFileError(const std::string& file, std::size_t line, std::size_t column, const std::string& message);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A model file as written, before the builder runs.
///
///   {
///     "name": "so3",
///     "builder": "f-model" | "higgs",
///     "dimension": 3,
///     "structure_constants": [[1, 2, 3, "1"]],
///     "l_mode": "zero" | "adjoint-auxiliary",
///     "bracket_scale": "1",                       optional
///     "chart": {"pairs": [["q1", "p1"], ...],
///               "auxiliary": [["qp1", "pp1"], ...]},  optional, checked
///     "constraints": [{"name": "phi1", "expr": "..."}]   optional override
///   }
struct ModelSpec {
    std::string name;
    models::ModelKind kind = models::ModelKind::FModel;
    lie::StructureConstants algebra;
    models::LMode l_mode = models::LMode::Zero;
    std::optional<expr::BigRational> bracket_scale;
    std::optional<std::vector<std::pair<std::string, std::string>>> chart_pairs;
    std::optional<std::vector<std::pair<std::string, std::string>>> auxiliary_pairs;
    std::vector<std::pair<std::string, std::string>> constraint_overrides;
    /// Positions of the override expressions in the source text, for diagnostics.
    std::vector<std::pair<std::size_t, std::size_t>> override_positions;
};

/// Parses JSON text; `file` is used only in messages.
ModelSpec parse_model_spec(const std::string& text, const std::string& file = "<input>");
ModelSpec load_model_spec(const std::string& path);

/// Runs the builder and applies overrides. Throws ModelFileError for chart
/// mismatches or bad override expressions and InvalidStructureConstants
/// when the algebra fails its checks.
models::ConstraintModel build_model(const ModelSpec& spec, const std::string& file = "<input>");

/// Canonical file text for a model; with `include_constraints` the current
/// constraint expressions are written as overrides.
std::string write_model_file(const models::ConstraintModel& m, bool include_constraints = false);

}  // namespace gaugework::cli
