#pragma once

/*
 * Dense row-major matrices over an exact coefficient ring, with two exact
 * determinant routines:
 *
 *   determinant          fraction-free (Bareiss) two-term elimination; the
 *                        intermediate entries are minors of the input, so
 *                        every division by the previous pivot is exact and
 *                        operand growth stays polynomial.
 *   determinant_cofactor Laplace expansion; exponential, kept for small
 *                        matrices whose entries make per-step division
 *                        expensive (polynomial entries).
 *
 * The ring T must provide T(int), unary -, +, -, *, is_zero(T), and
 * exact_div(T, T).
 */

#include "bern/polynomial.hpp"
#include "bern/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bern {

template <typename T>
class DenseMatrix {
  public:
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, T(0)) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("DenseMatrix: dimensions must be positive");
    }
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("DenseMatrix: dimensions must be positive");
        if (entries_.size() != rows * cols) throw std::invalid_argument("DenseMatrix: entry count != rows*cols");
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<T>& entries() const { return entries_; }

    DenseMatrix transpose() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    DenseMatrix operator*(const DenseMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("DenseMatrix: dimension mismatch in product");
        DenseMatrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                if (is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(k, j);
            }
        return p;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> entries_;
};

using RationalMatrix = DenseMatrix<Rational>;
using PolynomialMatrix = DenseMatrix<RationalPolynomial>;

template <typename T>
T determinant(const DenseMatrix<T>& m) {
    if (!m.square()) throw std::invalid_argument("determinant: matrix must be square");
    const std::size_t n = m.rows();
    std::vector<T> a = m.entries();
    auto e = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };

    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(e(k, k))) {
            std::size_t r = k + 1;
            while (r < n && is_zero(e(r, k))) ++r;
            if (r == n) return T(0);
            for (std::size_t j = k; j < n; ++j) std::swap(e(k, j), e(r, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                e(i, j) = exact_div(e(i, j) * e(k, k) - e(i, k) * e(k, j), prev);
            e(i, k) = T(0);
        }
        prev = e(k, k);
    }
    T det = std::move(e(n - 1, n - 1));
    return negate ? -det : det;
}

namespace detail {

template <typename T>
T cofactor_expand(const DenseMatrix<T>& m, std::size_t row, std::vector<std::size_t>& cols) {
    if (cols.size() == 1) return m.at(row, cols[0]);
    T acc(0);
    for (std::size_t idx = 0; idx < cols.size(); ++idx) {
        const T& pivot = m.at(row, cols[idx]);
        if (is_zero(pivot)) continue;
        std::size_t removed = cols[idx];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(idx));
        T minor = cofactor_expand(m, row + 1, cols);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(idx), removed);
        T term = pivot * minor;
        if (idx % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace detail

template <typename T>
T determinant_cofactor(const DenseMatrix<T>& m) {
    if (!m.square()) throw std::invalid_argument("determinant: matrix must be square");
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return detail::cofactor_expand(m, 0, cols);
}

}  // namespace bern
