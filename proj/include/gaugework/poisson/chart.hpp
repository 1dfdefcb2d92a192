#pragma once

#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "gaugework/expr/rational_function.hpp"

namespace gaugework::poisson {

using expr::RationalFunction;
using expr::Symbol;

/// Ordered conjugate pairs (q, p). Every symbol occurs once, in one role.
class CanonicalChart {
public:
    using Pair = std::pair<Symbol, Symbol>;

    CanonicalChart() = default;
    /// Throws std::invalid_argument on a repeated symbol.
    explicit CanonicalChart(std::vector<Pair> pairs);

    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t size() const { return pairs_.size(); }

    std::vector<Symbol> coordinates() const;
    std::vector<Symbol> momenta() const;
    /// Coordinates followed by momenta; the column order of a Jacobian.
    std::vector<Symbol> symbols() const;
    std::set<Symbol> symbol_set() const;
    bool contains(Symbol s) const;

    /// This chart followed by the pairs of `other`.
    CanonicalChart extended(const CanonicalChart& other) const;

private:
    std::vector<Pair> pairs_;
};

/// Chart with pairs (prefix_q i, prefix_p i) for i = first..first+n-1.
CanonicalChart numbered_chart(std::string_view q_prefix, std::string_view p_prefix, int first, int n);

/// Parses an expression restricted to the chart symbols plus `extra`.
RationalFunction parse_on(const CanonicalChart& chart, std::string_view text, const std::set<Symbol>& extra = {});

}  // namespace gaugework::poisson
