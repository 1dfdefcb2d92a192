#pragma once

#include <vector>

#include "gaugework/expr/rational_function.hpp"

namespace gaugework::abelianize {

/// Building blocks of the SO(4) solution on the q1 != 0 chart, before the
/// S1/S2 redefinition. `l` holds L_1..L_6.
struct So4Parts {
    expr::RationalFunction d;  // q1^2 - q4^2
    expr::RationalFunction psi1, psi2, psi3, psi4, psi5, psi6;
    expr::RationalFunction s1, s2, r1, r2;
    expr::RationalFunction rho_minus, rho_plus;  // (q1 -+ q4)^2 + (q2 +- q5)^2
};

So4Parts so4_parts(const std::vector<expr::RationalFunction>& l);

}  // namespace gaugework::abelianize
