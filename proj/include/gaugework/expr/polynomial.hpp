#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gaugework/expr/rational.hpp"
#include "gaugework/expr/symbol.hpp"

namespace gaugework::expr {

/// Exact assignment of values to symbols, iterated in symbol order.
using Assignment = std::map<Symbol, BigRational>;

/// Power product of symbols; entries sorted by symbol order, exponents > 0.
class Monomial {
public:
    using Entry = std::pair<Symbol, std::uint32_t>;

    Monomial() = default;
    static Monomial of(Symbol s, std::uint32_t exponent = 1);

    std::span<const Entry> entries() const { return entries_; }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t exponent(Symbol s) const;
    bool is_one() const { return entries_.empty(); }
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    /// Precondition: other.divides(*this).
    Monomial operator/(const Monomial& other) const;
    /// The monomial with every symbol outside `keep` removed.
    Monomial restricted(const std::set<Symbol>& keep) const;
    Monomial without(Symbol s) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Entry> entries_;
    std::uint32_t degree_ = 0;
};

/// Graded-lexicographic comparison over the global symbol order.
std::strong_ordering graded_lex(const Monomial& a, const Monomial& b);

struct LeadingFirst {
    bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex(a, b) > 0; }
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms iterate from the leading monomial downward.
class Polynomial {
public:
    using TermMap = std::map<Monomial, BigRational, LeadingFirst>;

    Polynomial() = default;
    Polynomial(const BigRational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant) : Polynomial(BigRational(constant)) {}  // NOLINT
    static Polynomial variable(Symbol s);
    static Polynomial term(const Monomial& m, const BigRational& c);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value; only meaningful when is_constant().
    BigRational constant_value() const;
    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const BigRational& leading_coefficient() const { return terms_.begin()->second; }
    std::uint32_t total_degree() const;
    std::uint32_t degree_in(Symbol s) const;
    std::set<Symbol> symbols() const;
    bool depends_on(Symbol s) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const BigRational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial pow(unsigned exponent) const;

    /// Adds c * m * other to this polynomial.
    void add_scaled(const Polynomial& other, const BigRational& c, const Monomial& m);

    Polynomial derivative(Symbol s) const;

    /// Exact quotient if `divisor` divides this polynomial, otherwise nullopt.
    std::optional<Polynomial> exact_divide(const Polynomial& divisor) const;

    /// Splits into content * primitive, where primitive has coprime integer
    /// coefficients and a positive leading coefficient. Zero maps to (0, 0).
    std::pair<BigRational, Polynomial> primitive_split() const;

    /// Throws ExprError(UnboundSymbol) if a symbol is missing from the point.
    BigRational evaluate(const Assignment& point) const;

    /// Groups terms by their part over `basis`; each value is the cofactor
    /// polynomial in the remaining symbols.
    std::map<Monomial, Polynomial, LeadingFirst> coefficients_over(const std::set<Symbol>& basis) const;

    /// Canonical text, e.g. "q2*p3 - q3*p2" or "0".
    std::string render() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

/// Total order used to sort denominator factors deterministically.
std::strong_ordering compare(const Polynomial& a, const Polynomial& b);

}  // namespace gaugework::expr
