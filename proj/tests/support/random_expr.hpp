#pragma once

// Seeded generators for property tests over the expression engine.

#include <random>
#include <vector>

#include "gaugework/expr/rational_function.hpp"

namespace gaugework::testing {

using expr::Assignment;
using expr::BigRational;
using expr::Monomial;
using expr::Polynomial;
using expr::RationalFunction;
using expr::Symbol;

class ExprGen {
public:
    ExprGen(std::uint64_t seed, std::vector<Symbol> symbols) : rng_(seed), symbols_(std::move(symbols)) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    int nonzero(int bound) {
        int v = 0;
        while (v == 0) v = integer(-bound, bound);
        return v;
    }

    BigRational coefficient() {
        BigRational c(nonzero(9), integer(1, 3));
        c.canonicalize();
        return c;
    }

    Polynomial polynomial(int max_terms, int max_degree) {
        Polynomial p;
        int terms = integer(1, max_terms);
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            int degree = integer(0, max_degree);
            for (int d = 0; d < degree; ++d) {
                m = m * Monomial::of(symbols_[static_cast<std::size_t>(integer(0, static_cast<int>(symbols_.size()) - 1))]);
            }
            p += Polynomial::term(m, coefficient());
        }
        return p;
    }

    RationalFunction rational(int max_terms = 3, int max_degree = 2) {
        Polynomial den;
        while (den.is_zero()) den = polynomial(2, 1);
        return RationalFunction::fraction(polynomial(max_terms, max_degree), den);
    }

    Assignment point() {
        Assignment a;
        for (Symbol s : symbols_) {
            BigRational v(nonzero(9), integer(1, 4));
            v.canonicalize();
            a[s] = v;
        }
        return a;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::vector<Symbol> symbols_;
};

}  // namespace gaugework::testing
