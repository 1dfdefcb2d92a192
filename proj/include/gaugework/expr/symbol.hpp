#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace gaugework::expr {

/// Interned symbol data. Instances live for the whole process.
struct SymbolInfo {
    std::string name;
    int category;        // q, p, qp, pp, other, eps
    std::string prefix;  // alphabetic prefix for the "other" category
    std::int64_t index;  // trailing integer, or -1
};

/// A named phase-space or parameter symbol.
///
/// Symbols are interned: two symbols with the same name compare equal and
/// share one SymbolInfo. The total order is derived from the name alone:
/// coordinates q*, then momenta p*, auxiliary coordinates qp*, auxiliary
/// momenta pp*, any other prefix alphabetically, and finally "eps". Within a
/// family symbols sort by their numeric suffix. This makes canonical output
/// independent of the order in which symbols were first seen.
class Symbol {
public:
    Symbol() = default;
    explicit Symbol(std::string_view name);

    const std::string& name() const { return info_->name; }
    const SymbolInfo* info() const { return info_; }
    bool valid() const { return info_ != nullptr; }

    friend bool operator==(Symbol a, Symbol b) { return a.info_ == b.info_; }
    friend std::strong_ordering operator<=>(Symbol a, Symbol b);

private:
    const SymbolInfo* info_ = nullptr;
};

/// True if `name` is a syntactically valid symbol token.
bool is_valid_symbol_name(std::string_view name);

/// Convenience: Symbol("q" + index).
Symbol indexed(std::string_view prefix, int index);

}  // namespace gaugework::expr

template <>
struct std::hash<gaugework::expr::Symbol> {
    std::size_t operator()(gaugework::expr::Symbol s) const noexcept {
        return std::hash<const void*>{}(s.info());
    }
};
