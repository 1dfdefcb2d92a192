#include "gaugework/expr/parser.hpp"

#include <cctype>
#include <string>

#include "gaugework/expr/errors.hpp"

namespace gaugework::expr {

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::optional<std::set<Symbol>>& allowed) : text_(text), allowed_(allowed) {}

    RationalFunction parse() {
        RationalFunction value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    RationalFunction expr() {
        RationalFunction value = term();
        for (;;) {
            skip_space();
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    RationalFunction term() {
        RationalFunction value = factor();
        for (;;) {
            skip_space();
            if (accept('*')) {
                value *= factor();
            } else if (peek() == '/') {
                std::size_t at = pos_++;
                RationalFunction divisor = factor();
                if (divisor.is_zero()) {
                    throw ParseError(ExprErrorKind::DivisionByZeroLiteral, at, "division by zero");
                }
                value /= divisor;
            } else {
                return value;
            }
        }
    }

    RationalFunction factor() {
        RationalFunction base = atom();
        skip_space();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            std::string digits(text_.substr(start, pos_ - start));
            if (digits.size() > 6) throw ParseError(ExprErrorKind::SyntaxError, start, "exponent too large");
            return base.pow(static_cast<unsigned>(std::stoul(digits)));
        }
        return base;
    }

    RationalFunction atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return RationalFunction(BigRational(BigInt(std::string(text_.substr(start, pos_ - start)), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string name(text_.substr(start, pos_ - start));
            Symbol s(name);
            if (allowed_ && !allowed_->contains(s)) {
                throw ParseError(ExprErrorKind::UnknownSymbol, start, "unknown symbol '" + name + "'");
            }
            return RationalFunction::symbol(s);
        }
        if (c == '(') {
            ++pos_;
            RationalFunction inner = expr();
            skip_space();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(ExprErrorKind::SyntaxError, pos_, what);
    }

    std::string_view text_;
    const std::optional<std::set<Symbol>>& allowed_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expr(std::string_view text, const std::optional<std::set<Symbol>>& allowed) {
    return Parser(text, allowed).parse();
}

}  // namespace gaugework::expr
