#include "gaugework/poisson/matrix.hpp"

#include <utility>

namespace gaugework::poisson {

using expr::Polynomial;

void ExprMatrix::check(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") outside " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

RationalFunction& ExprMatrix::at(std::size_t r, std::size_t c) {
    check(r, c);
    return data_[r * cols_ + c];
}

const RationalFunction& ExprMatrix::at(std::size_t r, std::size_t c) const {
    check(r, c);
    return data_[r * cols_ + c];
}

ExprMatrix ExprMatrix::transposed() const {
    ExprMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    }
    return out;
}

ExprMatrix ExprMatrix::substituted(const expr::Bindings& bindings) const {
    ExprMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i].substitute(bindings);
    return out;
}

std::vector<std::vector<BigRational>> ExprMatrix::evaluate(const Assignment& point) const {
    RationalMatrix out(rows_, std::vector<BigRational>(cols_));
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c).evaluate(point);
    }
    return out;
}

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    ExprMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            RationalFunction sum;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                sum += a.at(i, k) * b.at(k, j);
            }
            out.at(i, j) = std::move(sum);
        }
    }
    return out;
}

namespace {

RationalFunction cofactor_expand(const ExprMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    if (cols.empty()) return RationalFunction(1);
    RationalFunction sum;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const RationalFunction& entry = m.at(row, cols[k]);
        if (entry.is_zero()) continue;
        std::size_t c = cols[k];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        RationalFunction minor = cofactor_expand(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
        if (minor.is_zero()) continue;
        RationalFunction term = entry * minor;
        if (k % 2 == 0) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    return sum;
}

}  // namespace

RationalFunction det_cofactor(const ExprMatrix& m) {
    if (!m.square()) throw NotSquare(m.rows(), m.cols());
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(c);
    return cofactor_expand(m, cols, 0);
}

RationalFunction det_bareiss(const ExprMatrix& m) {
    if (!m.square()) throw NotSquare(m.rows(), m.cols());
    std::size_t n = m.rows();
    if (n == 0) return RationalFunction(1);

    // Row i is scaled by the product of its entry denominators.
    std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
    RationalFunction scale(1);
    for (std::size_t r = 0; r < n; ++r) {
        Polynomial row_den(BigRational(1));
        for (std::size_t c = 0; c < n; ++c) {
            if (!m.at(r, c).is_polynomial()) row_den = row_den * m.at(r, c).denominator();
        }
        for (std::size_t c = 0; c < n; ++c) {
            const RationalFunction& e = m.at(r, c);
            if (e.is_zero()) continue;
            RationalFunction cleared = e * RationalFunction(row_den);
            a[r][c] = cleared.numerator();
            if (!cleared.is_polynomial()) {
                // Partial cancellation only; fall back to the exact cofactor path.
                return det_cofactor(m);
            }
        }
        scale *= RationalFunction(row_den);
    }

    int sign = 1;
    Polynomial prev(BigRational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k].is_zero()) ++swap;
            if (swap == n) return RationalFunction();
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                auto q = v.exact_divide(prev);
                if (!q) throw std::logic_error("Bareiss step was not exact");
                a[i][j] = std::move(*q);
            }
            a[i][k] = Polynomial();
        }
        prev = a[k][k];
    }
    RationalFunction d(a[n - 1][n - 1]);
    if (sign < 0) d = -d;
    return d / scale;
}

RationalFunction det(const ExprMatrix& m) {
    if (!m.square()) throw NotSquare(m.rows(), m.cols());
    return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

Echelon rref(RationalMatrix m) {
    Echelon out;
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        BigRational inv = BigRational(1) / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            BigRational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

std::vector<std::vector<BigRational>> null_space(const RationalMatrix& m) {
    std::size_t cols = m.empty() ? 0 : m[0].size();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<BigRational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<BigRational> v(cols, BigRational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<BigRational>> left_null_space(const RationalMatrix& m) {
    std::size_t rows = m.size();
    std::size_t cols = rows == 0 ? 0 : m[0].size();
    RationalMatrix t(cols, std::vector<BigRational>(rows));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
    }
    if (cols == 0) {
        // No columns: every row vector is in the left kernel.
        std::vector<std::vector<BigRational>> basis;
        for (std::size_t i = 0; i < rows; ++i) {
            std::vector<BigRational> v(rows, BigRational(0));
            v[i] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    return null_space(t);
}

BigRational det_rational(RationalMatrix m) {
    std::size_t n = m.size();
    for (const auto& row : m) {
        if (row.size() != n) throw NotSquare(n, row.size());
    }
    BigRational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            BigRational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

}  // namespace gaugework::poisson
