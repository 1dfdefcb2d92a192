#include "gaugework/expr/symbol.hpp"

#include <cctype>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace gaugework::expr {

namespace {

enum Category : int { kCoord = 0, kMomentum = 1, kAuxCoord = 2, kAuxMomentum = 3, kOther = 4, kEps = 5 };

SymbolInfo classify(std::string_view name) {
    SymbolInfo info;
    info.name = std::string(name);
    std::size_t split = name.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
    std::string_view prefix = name.substr(0, split);
    std::string_view digits = name.substr(split);
    info.index = -1;
    if (!digits.empty() && digits.size() < 18) info.index = std::stoll(std::string(digits));

    info.prefix = std::string(prefix);
    if (name == "eps") {
        info.category = kEps;
    } else if (info.index >= 0 && prefix == "q") {
        info.category = kCoord;
    } else if (info.index >= 0 && prefix == "p") {
        info.category = kMomentum;
    } else if (info.index >= 0 && prefix == "qp") {
        info.category = kAuxCoord;
    } else if (info.index >= 0 && prefix == "pp") {
        info.category = kAuxMomentum;
    } else {
        info.category = kOther;
    }
    return info;
}

struct Registry {
    std::mutex mutex;
    std::unordered_map<std::string, std::unique_ptr<SymbolInfo>> table;
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

bool is_valid_symbol_name(std::string_view name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char c : name) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    }
    return true;
}

Symbol::Symbol(std::string_view name) {
    if (!is_valid_symbol_name(name)) {
        throw std::invalid_argument("invalid symbol name '" + std::string(name) + "'");
    }
    auto& reg = registry();
    std::lock_guard lock(reg.mutex);
    auto it = reg.table.find(std::string(name));
    if (it == reg.table.end()) {
        it = reg.table.emplace(std::string(name), std::make_unique<SymbolInfo>(classify(name))).first;
    }
    info_ = it->second.get();
}

std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.info_ == b.info_) return std::strong_ordering::equal;
    const SymbolInfo& x = *a.info_;
    const SymbolInfo& y = *b.info_;
    if (auto c = x.category <=> y.category; c != 0) return c;
    if (auto c = x.prefix.compare(y.prefix) <=> 0; c != 0) return c;
    if (auto c = x.index <=> y.index; c != 0) return c;
    return x.name.compare(y.name) <=> 0;
}

Symbol indexed(std::string_view prefix, int index) {
    return Symbol(std::string(prefix) + std::to_string(index));
}

}  // namespace gaugework::expr
