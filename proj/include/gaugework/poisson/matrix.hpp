#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gaugework/expr/rational_function.hpp"

namespace gaugework::poisson {

using expr::Assignment;
using expr::BigRational;
using expr::RationalFunction;

class NotSquare : public std::invalid_argument {
public:
    NotSquare(std::size_t rows, std::size_t cols)
        : std::invalid_argument("NotSquare: matrix is " + std::to_string(rows) + "x" + std::to_string(cols)) {}
};

/// Dense grid of rational functions with bounds-checked access.
class ExprMatrix {
public:
    ExprMatrix() = default;
    ExprMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    RationalFunction& at(std::size_t r, std::size_t c);
    const RationalFunction& at(std::size_t r, std::size_t c) const;

    ExprMatrix transposed() const;
    ExprMatrix substituted(const expr::Bindings& bindings) const;

    /// Exact numeric matrix at a point.
    std::vector<std::vector<BigRational>> evaluate(const Assignment& point) const;

    friend bool operator==(const ExprMatrix&, const ExprMatrix&) = default;

private:
    void check(std::size_t r, std::size_t c) const;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RationalFunction> data_;
};

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b);

RationalFunction det_cofactor(const ExprMatrix& m);
/// Clears denominators row by row, then runs fraction-free elimination
/// over polynomials.
RationalFunction det_bareiss(const ExprMatrix& m);
/// Cofactor expansion up to 4x4, Bareiss beyond.
RationalFunction det(const ExprMatrix& m);

// Exact linear algebra over the rationals.

using RationalMatrix = std::vector<std::vector<BigRational>>;

struct Echelon {
    RationalMatrix reduced;           // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

Echelon rref(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
/// Basis of {x : m x = 0}; one vector per free column, with that entry 1.
std::vector<std::vector<BigRational>> null_space(const RationalMatrix& m);
/// Basis of {y : y^T m = 0}.
std::vector<std::vector<BigRational>> left_null_space(const RationalMatrix& m);
BigRational det_rational(RationalMatrix m);

}  // namespace gaugework::poisson
