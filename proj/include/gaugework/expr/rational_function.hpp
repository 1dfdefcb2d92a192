#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gaugework/expr/polynomial.hpp"

namespace gaugework::expr {

class RationalFunction;

using Bindings = std::map<Symbol, RationalFunction>;

/// Exact multivariate rational function num / den.
///
/// The denominator is kept as a product of powers of primitive integer
/// polynomials with positive leading coefficients; all rational content sits
/// in the numerator. Factors seen by two operands are refined against each
/// other by exact division and the numerator is divided by any factor it
/// contains. This is not a full gcd reduction, so two equal functions may
/// differ in representation; equality and zero tests are exact regardless.
class RationalFunction {
public:
    struct Factor {
        Polynomial poly;
        unsigned exponent;
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    RationalFunction() = default;
    RationalFunction(const Polynomial& p) : num_(p) {}                      // NOLINT
    RationalFunction(const BigRational& c) : num_(c) {}                     // NOLINT
    RationalFunction(long c) : num_(BigRational(c)) {}                      // NOLINT
    static RationalFunction symbol(Symbol s) { return {Polynomial::variable(s)}; }
    /// Throws ExprError(IdenticallyZeroDenominator) when den is zero.
    static RationalFunction fraction(const Polynomial& num, const Polynomial& den);

    /// Stored numerator (already divided by any cancelled factors).
    const Polynomial& numerator() const { return num_; }
    std::span<const Factor> denominator_factors() const { return den_; }
    /// Expanded denominator; leading coefficient is positive.
    Polynomial denominator() const;

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }
    bool is_constant() const { return den_.empty() && num_.is_constant(); }
    std::set<Symbol> symbols() const;
    bool depends_on(Symbol s) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction pow(unsigned exponent) const;
    RationalFunction inverse() const;
    RationalFunction derivative(Symbol s) const;
    /// Simultaneous substitution; unbound symbols are left alone.
    RationalFunction substitute(const Bindings& bindings) const;
    BigRational evaluate(const Assignment& point) const;

    /// "num" when the denominator is 1, otherwise "(num)/(den)".
    std::string render() const;

    /// Semantic equality: a - b is the zero function.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) { return (a - b).is_zero(); }

private:
    RationalFunction(Polynomial num, std::vector<Factor> den);
    void normalize();

    Polynomial num_;
    std::vector<Factor> den_;
};

// Free-function surface used across modules.
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline RationalFunction diff(const RationalFunction& f, Symbol s) { return f.derivative(s); }
inline RationalFunction substitute(const RationalFunction& f, const Bindings& b) { return f.substitute(b); }
inline BigRational eval_point(const RationalFunction& f, const Assignment& point) { return f.evaluate(point); }

/// Equality by cross-multiplication of the expanded forms: n1*d2 - n2*d1 == 0.
bool cross_multiplication_equal(const RationalFunction& a, const RationalFunction& b);

}  // namespace gaugework::expr
