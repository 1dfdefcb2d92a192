#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaugework/lie/structure.hpp"
#include "gaugework/poisson/bracket.hpp"

namespace gaugework::models {

using expr::BigRational;
using expr::RationalFunction;
using expr::Symbol;
using lie::StructureConstants;
using poisson::CanonicalChart;

enum class LMode { Zero, AdjointAuxiliary };
enum class ModelKind { FModel, Higgs };

const char* to_string(LMode mode);
const char* to_string(ModelKind kind);
std::optional<LMode> parse_l_mode(std::string_view text);
std::optional<ModelKind> parse_model_kind(std::string_view text);

struct NamedExpr {
    std::string name;
    RationalFunction expr;
};

class InvalidStructureConstants : public std::invalid_argument {
public:
    explicit InvalidStructureConstants(const std::string& what)
        : std::invalid_argument("InvalidStructureConstants: " + what) {}
};

/// Constraint system phi_a on a canonical chart with the algebra it should
/// close on: {phi_a, phi_b} = scale * f_abc phi_c.
struct ConstraintModel {
    std::string name;
    ModelKind kind = ModelKind::FModel;
    CanonicalChart chart;            // primary pairs then auxiliary pairs
    std::size_t primary_pairs = 0;
    std::vector<NamedExpr> constraints;
    std::vector<RationalFunction> l;  // L_a, zero in LMode::Zero
    StructureConstants algebra;
    BigRational bracket_scale = 1;
    LMode l_mode = LMode::Zero;

    std::vector<RationalFunction> phis() const;
    const RationalFunction& phi(int a) const { return constraints.at(static_cast<std::size_t>(a - 1)).expr; }
    std::vector<Symbol> coordinates() const;  // primary block only
    std::vector<Symbol> momenta() const;
    std::vector<Symbol> auxiliary_momenta() const;
    CanonicalChart primary_chart() const;
};

/// phi_a = sum f_abc q_b p_c + L_a with L_a = sum f_abc qp_b pp_c on an
/// auxiliary block in adjoint-auxiliary mode.
ConstraintModel build_f_model(const StructureConstants& f, LMode mode, std::string name = "");

/// phi_i = -p_a eta^i_ab q_b on (q0..q3, p0..p3), closing with scale 2.
ConstraintModel build_higgs_model();

struct PairResidual {
    int a = 0;
    int b = 0;
    RationalFunction residual;
    bool pass() const { return residual.is_zero(); }
};

struct ClosureReport {
    std::vector<PairResidual> pairs;  // a < b
    bool pass() const;
};

ClosureReport verify_closure(const ConstraintModel& m);

}  // namespace gaugework::models
