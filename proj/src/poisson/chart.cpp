#include "gaugework/poisson/chart.hpp"

#include <stdexcept>
#include <string>

#include "gaugework/expr/parser.hpp"

namespace gaugework::poisson {

CanonicalChart::CanonicalChart(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    std::set<Symbol> seen;
    for (const auto& [q, p] : pairs_) {
        for (Symbol s : {q, p}) {
            if (!s.valid()) throw std::invalid_argument("chart contains an empty symbol");
            if (!seen.insert(s).second) throw std::invalid_argument("symbol '" + s.name() + "' appears twice in chart");
        }
    }
}

std::vector<Symbol> CanonicalChart::coordinates() const {
    std::vector<Symbol> out;
    for (const auto& pr : pairs_) out.push_back(pr.first);
    return out;
}

std::vector<Symbol> CanonicalChart::momenta() const {
    std::vector<Symbol> out;
    for (const auto& pr : pairs_) out.push_back(pr.second);
    return out;
}

std::vector<Symbol> CanonicalChart::symbols() const {
    std::vector<Symbol> out = coordinates();
    for (Symbol p : momenta()) out.push_back(p);
    return out;
}

std::set<Symbol> CanonicalChart::symbol_set() const {
    auto all = symbols();
    return {all.begin(), all.end()};
}

bool CanonicalChart::contains(Symbol s) const {
    for (const auto& [q, p] : pairs_) {
        if (q == s || p == s) return true;
    }
    return false;
}

CanonicalChart CanonicalChart::extended(const CanonicalChart& other) const {
    std::vector<Pair> all = pairs_;
    all.insert(all.end(), other.pairs_.begin(), other.pairs_.end());
    return CanonicalChart(std::move(all));
}

CanonicalChart numbered_chart(std::string_view q_prefix, std::string_view p_prefix, int first, int n) {
    std::vector<CanonicalChart::Pair> pairs;
    for (int i = first; i < first + n; ++i) pairs.emplace_back(expr::indexed(q_prefix, i), expr::indexed(p_prefix, i));
    return CanonicalChart(std::move(pairs));
}

RationalFunction parse_on(const CanonicalChart& chart, std::string_view text, const std::set<Symbol>& extra) {
    std::set<Symbol> allowed = chart.symbol_set();
    allowed.insert(extra.begin(), extra.end());
    return expr::parse_expr(text, allowed);
}

}  // namespace gaugework::poisson
