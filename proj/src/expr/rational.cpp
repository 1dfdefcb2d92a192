#include "gaugework/expr/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gaugework::expr {

std::string to_string(const BigRational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigRational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        }
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
        throw std::invalid_argument("not an exact rational: '" + std::string(text) + "'");
    }
    BigInt d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    BigRational r(BigInt(std::string(num), 10), d);
    r.canonicalize();
    return r;
}

}  // namespace gaugework::expr
