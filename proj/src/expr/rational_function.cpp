#include "gaugework/expr/rational_function.hpp"

#include <algorithm>
#include <unordered_map>

#include "gaugework/expr/errors.hpp"

namespace gaugework::expr {

namespace {

using Factor = RationalFunction::Factor;
using FactorList = std::vector<Factor>;

void insert_factor(FactorList& list, const Polynomial& poly, unsigned exponent) {
    if (exponent == 0) return;
    auto it = std::lower_bound(list.begin(), list.end(), poly,
                               [](const Factor& f, const Polynomial& p) { return compare(f.poly, p) < 0; });
    if (it != list.end() && it->poly == poly) {
        it->exponent += exponent;
    } else {
        list.insert(it, Factor{poly, exponent});
    }
}

// Splits `p` into content and a primitive factor. Returns the content; adds
// the factor to `list` unless it is constant.
BigRational absorb(FactorList& list, const Polynomial& p, unsigned exponent) {
    auto [content, primitive] = p.primitive_split();
    // Common monomial factor: one factor per symbol.
    Monomial common = primitive.is_zero() ? Monomial() : primitive.leading_monomial();
    for (const auto& [m, c] : primitive.terms()) {
        Monomial g;
        for (const auto& [s, e] : common.entries()) {
            std::uint32_t k = std::min(e, m.exponent(s));
            if (k > 0) g = g * Monomial::of(s, k);
        }
        common = g;
        if (common.is_one()) break;
    }
    if (!common.is_one()) {
        Polynomial rest;
        for (const auto& [m, c] : primitive.terms()) rest += Polynomial::term(m / common, c);
        primitive = std::move(rest);
        for (const auto& [s, e] : common.entries()) insert_factor(list, Polynomial::variable(s), e * exponent);
    }
    if (!primitive.is_constant()) insert_factor(list, primitive, exponent);
    BigRational c = 1;
    for (unsigned i = 0; i < exponent; ++i) c *= content;
    return c;
}

// Rewrites both lists over a common base in which no factor divides another.
void refine(FactorList& a, FactorList& b) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<const Polynomial*> base;
        for (const auto& f : a) base.push_back(&f.poly);
        for (const auto& f : b) {
            if (std::none_of(base.begin(), base.end(), [&](const Polynomial* p) { return *p == f.poly; })) {
                base.push_back(&f.poly);
            }
        }
        for (std::size_t i = 0; i < base.size() && !changed; ++i) {
            for (std::size_t j = 0; j < base.size() && !changed; ++j) {
                if (i == j) continue;
                const Polynomial& big = *base[i];
                const Polynomial& small = *base[j];
                if (small.total_degree() > big.total_degree() || small.size() > big.size()) continue;
                auto quotient = big.exact_divide(small);
                if (!quotient) continue;
                Polynomial big_copy = big;
                Polynomial small_copy = small;
                auto [content, rest] = quotient->primitive_split();
                for (FactorList* list : {&a, &b}) {
                    auto it = std::find_if(list->begin(), list->end(), [&](const Factor& f) { return f.poly == big_copy; });
                    if (it == list->end()) continue;
                    unsigned e = it->exponent;
                    list->erase(it);
                    insert_factor(*list, small_copy, e);
                    if (!rest.is_constant()) insert_factor(*list, rest, e);
                }
                changed = true;
            }
        }
    }
}

Polynomial expand(const FactorList& list) {
    Polynomial out(BigRational(1));
    for (const auto& f : list) out = out * f.poly.pow(f.exponent);
    return out;
}

// Cofactor Π f^(target - have) for each factor of `target`.
Polynomial cofactor(const FactorList& target, const FactorList& have) {
    Polynomial out(BigRational(1));
    for (const auto& f : target) {
        unsigned e = 0;
        for (const auto& g : have) {
            if (g.poly == f.poly) e = g.exponent;
        }
        if (f.exponent > e) out = out * f.poly.pow(f.exponent - e);
    }
    return out;
}

// Divides `num` by factors of `den` while possible.
void cancel(Polynomial& num, FactorList& den) {
    if (num.is_zero()) {
        den.clear();
        return;
    }
    for (auto& f : den) {
        while (f.exponent > 0) {
            auto q = num.exact_divide(f.poly);
            if (!q) break;
            num = std::move(*q);
            --f.exponent;
        }
    }
    std::erase_if(den, [](const Factor& f) { return f.exponent == 0; });
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, std::vector<Factor> den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RationalFunction::normalize() { cancel(num_, den_); }

RationalFunction RationalFunction::fraction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw ExprError(ExprErrorKind::IdenticallyZeroDenominator, "denominator is identically zero");
    FactorList list;
    BigRational content = absorb(list, den, 1);
    Polynomial n = num;
    n *= BigRational(1) / content;
    return RationalFunction(std::move(n), std::move(list));
}

Polynomial RationalFunction::denominator() const { return expand(den_); }

std::set<Symbol> RationalFunction::symbols() const {
    std::set<Symbol> out = num_.symbols();
    for (const auto& f : den_) {
        auto s = f.poly.symbols();
        out.insert(s.begin(), s.end());
    }
    return out;
}

bool RationalFunction::depends_on(Symbol s) const {
    if (num_.depends_on(s)) return true;
    return std::any_of(den_.begin(), den_.end(), [&](const Factor& f) { return f.poly.depends_on(s); });
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    FactorList da = a.den_;
    FactorList db = b.den_;
    Polynomial na = a.num_;
    Polynomial nb = b.num_;
    refine(da, db);
    // Refinement may expose factors the numerators already contain.
    cancel(na, da);
    cancel(nb, db);
    FactorList lcm = da;
    for (const auto& f : db) {
        auto it = std::find_if(lcm.begin(), lcm.end(), [&](const Factor& g) { return g.poly == f.poly; });
        if (it == lcm.end()) {
            insert_factor(lcm, f.poly, f.exponent);
        } else {
            it->exponent = std::max(it->exponent, f.exponent);
        }
    }
    Polynomial num = na * cofactor(lcm, da) + nb * cofactor(lcm, db);
    return RationalFunction(std::move(num), std::move(lcm));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FactorList da = a.den_;
    FactorList db = b.den_;
    Polynomial na = a.num_;
    Polynomial nb = b.num_;
    if (!da.empty() && !db.empty()) refine(da, db);
    cancel(na, db);
    cancel(nb, da);
    cancel(na, da);
    cancel(nb, db);
    for (const auto& f : db) insert_factor(da, f.poly, f.exponent);
    return RationalFunction(na * nb, std::move(da));
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw ExprError(ExprErrorKind::DivisionByZeroLiteral, "division by the zero function");
    FactorList list;
    BigRational content = absorb(list, num_, 1);
    Polynomial n = expand(den_);
    n *= BigRational(1) / content;
    return RationalFunction(std::move(n), std::move(list));
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::pow(unsigned exponent) const {
    FactorList den = den_;
    for (auto& f : den) f.exponent *= exponent;
    if (exponent == 0) den.clear();
    return RationalFunction(num_.pow(exponent), std::move(den));
}

RationalFunction RationalFunction::derivative(Symbol s) const {
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < den_.size(); ++i) {
        if (den_[i].poly.depends_on(s)) active.push_back(i);
    }
    if (active.empty()) return RationalFunction(num_.derivative(s), den_);

    // d(N / Π f^e) = (N' Π_S f - N Σ_i e_i f_i' Π_{S\i} f) / (Π f^e · Π_S f)
    Polynomial product_all(BigRational(1));
    for (std::size_t i : active) product_all = product_all * den_[i].poly;
    Polynomial num = num_.derivative(s) * product_all;
    for (std::size_t i : active) {
        Polynomial others(BigRational(1));
        for (std::size_t j : active) {
            if (j != i) others = others * den_[j].poly;
        }
        Polynomial term = den_[i].poly.derivative(s) * others;
        term *= BigRational(den_[i].exponent);
        num -= num_ * term;
    }
    FactorList den = den_;
    for (std::size_t i : active) ++den[i].exponent;
    return RationalFunction(std::move(num), std::move(den));
}

namespace {

// Substitutes into a polynomial over a common denominator; returns the
// numerator and the factored denominator.
std::pair<Polynomial, FactorList> substitute_poly(const Polynomial& p, const Bindings& bindings) {
    std::map<Symbol, std::uint32_t> max_exp;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [s, e] : m.entries()) {
            if (bindings.contains(s)) max_exp[s] = std::max(max_exp[s], e);
        }
    }
    if (max_exp.empty()) return {p, {}};

    struct Bound {
        Polynomial num;
        Polynomial den;
        std::vector<Polynomial> num_pow;
        std::vector<Polynomial> den_pow;
    };
    std::map<Symbol, Bound> bound;
    FactorList den_list;
    for (const auto& [s, e] : max_exp) {
        const RationalFunction& b = bindings.at(s);
        Bound entry{b.numerator(), Polynomial(BigRational(1)), {}, {}};
        for (const auto& f : b.denominator_factors()) {
            entry.den = entry.den * f.poly.pow(f.exponent);
            insert_factor(den_list, f.poly, f.exponent * e);
        }
        entry.num_pow.push_back(Polynomial(BigRational(1)));
        entry.den_pow.push_back(Polynomial(BigRational(1)));
        for (std::uint32_t k = 1; k <= e; ++k) {
            entry.num_pow.push_back(entry.num_pow.back() * entry.num);
            entry.den_pow.push_back(entry.den_pow.back() * entry.den);
        }
        bound.emplace(s, std::move(entry));
    }
    Polynomial total;
    for (const auto& [m, c] : p.terms()) {
        Monomial kept;
        Polynomial term(c);
        std::map<Symbol, std::uint32_t> used;
        for (const auto& [s, e] : m.entries()) {
            auto it = bound.find(s);
            if (it == bound.end()) {
                kept = kept * Monomial::of(s, e);
            } else {
                term = term * it->second.num_pow[e];
                used[s] = e;
            }
        }
        for (const auto& [s, emax] : max_exp) {
            std::uint32_t e = used.contains(s) ? used[s] : 0;
            if (emax > e) term = term * bound.at(s).den_pow[emax - e];
        }
        total.add_scaled(term, BigRational(1), kept);
    }
    return {std::move(total), std::move(den_list)};
}

}  // namespace

RationalFunction RationalFunction::substitute(const Bindings& bindings) const {
    if (bindings.empty()) return *this;
    auto [num, num_den] = substitute_poly(num_, bindings);
    RationalFunction result(std::move(num), std::move(num_den));
    for (const auto& f : den_) {
        auto [fnum, fden] = substitute_poly(f.poly, bindings);
        RationalFunction value(std::move(fnum), std::move(fden));
        if (value.is_zero()) {
            throw ExprError(ExprErrorKind::IdenticallyZeroDenominator,
                            "denominator factor " + f.poly.render() + " vanishes identically after substitution");
        }
        result = result / value.pow(f.exponent);
    }
    return result;
}

BigRational RationalFunction::evaluate(const Assignment& point) const {
    BigRational den = 1;
    for (const auto& f : den_) {
        BigRational v = f.poly.evaluate(point);
        if (v == 0) {
            throw ExprError(ExprErrorKind::DenominatorVanishesAtPoint, "denominator factor " + f.poly.render() + " is zero");
        }
        for (unsigned i = 0; i < f.exponent; ++i) den *= v;
    }
    return num_.evaluate(point) / den;
}

std::string RationalFunction::render() const {
    if (den_.empty()) return num_.render();
    return "(" + num_.render() + ")/(" + denominator().render() + ")";
}

bool cross_multiplication_equal(const RationalFunction& a, const RationalFunction& b) {
    Polynomial lhs = a.numerator() * b.denominator();
    Polynomial rhs = b.numerator() * a.denominator();
    return (lhs - rhs).is_zero();
}

}  // namespace gaugework::expr
