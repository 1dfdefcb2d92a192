#pragma once

#include <vector>

#include "gaugework/poisson/chart.hpp"
#include "gaugework/poisson/matrix.hpp"

namespace gaugework::poisson {

/// {F, G} = sum over chart pairs of dF/dq dG/dp - dF/dp dG/dq.
RationalFunction poisson_bracket(const RationalFunction& f, const RationalFunction& g, const CanonicalChart& chart);

/// Entry (i, j) is {a_i, b_j}.
ExprMatrix bracket_matrix(const std::vector<RationalFunction>& a, const std::vector<RationalFunction>& b,
                          const CanonicalChart& chart);

/// Partial derivatives; columns follow CanonicalChart::symbols().
ExprMatrix jacobian(const std::vector<RationalFunction>& constraints, const CanonicalChart& chart);

}  // namespace gaugework::poisson
