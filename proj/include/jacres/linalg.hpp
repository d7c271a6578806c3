#ifndef JACRES_LINALG_HPP
#define JACRES_LINALG_HPP

#include "jacres/field.hpp"

#include <optional>
#include <vector>

namespace jacres {

// Dense exact matrix over a Field.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, Field field)
        : r_(rows), c_(cols), f_(field), a_(static_cast<size_t>(rows) * cols, Q(0)) {}

    static Matrix identity(int n, Field field);

    int rows() const { return r_; }
    int cols() const { return c_; }
    const Field& field() const { return f_; }

    Q& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Q& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix scaled(const Q& c) const;
    Matrix power(int e) const;
    Q trace() const;
    bool is_zero() const;

    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

private:
    int r_ = 0, c_ = 0;
    Field f_;
    std::vector<Q> a_;
};

int rank(Matrix m);
Q determinant(Matrix m);
// Basis of the right kernel {v : M v = 0}.
std::vector<std::vector<Q>> kernel_basis(const Matrix& m);
// One solution of M x = b, if any.
std::optional<std::vector<Q>> solve(const Matrix& m, const std::vector<Q>& b);
std::optional<Matrix> inverse(const Matrix& m);

// Incremental reduced row echelon form.  Optionally tracks how each stored
// row combines the original inputs, which lets callers recover explicit
// representations (used by the Macaulay membership model).
class RowEchelon {
public:
    RowEchelon(int cols, Field field, bool track = false)
        : cols_(cols), f_(field), track_(track) {}

    // Feeds one row; returns true when it enlarged the span.
    bool add_row(std::vector<Q> row);

    int nrows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    int pivot_col(int row) const { return pivots_[row]; }
    const std::vector<int>& pivot_cols() const { return pivots_; }
    bool is_pivot_col(int col) const;
    const std::vector<Q>& row(int i) const { return rows_[i]; }

    // Eliminates pivot columns from v.  When lambda is non-null it receives
    // coefficients with v = sum_i lambda[i] * row(i) + residual.
    std::vector<Q> reduce(std::vector<Q> v, std::vector<Q>* lambda = nullptr) const;

    // Expresses stored row i over the original inputs (tracking required).
    const std::vector<Q>& combination(int i) const { return combos_[i]; }
    int inputs_seen() const { return inputs_; }

private:
    int cols_;
    Field f_;
    bool track_;
    int inputs_ = 0;
    std::vector<std::vector<Q>> rows_;
    std::vector<std::vector<Q>> combos_;
    std::vector<int> pivots_;
};

} // namespace jacres

#endif
