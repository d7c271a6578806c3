#include "jacres/linalg.hpp"

#include "jacres/errors.hpp"

#include <algorithm>

namespace jacres {

Matrix Matrix::identity(int n, Field field) {
    Matrix m(n, n, field);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (c_ != o.r_) throw invalid_input("matrix shape mismatch");
    Matrix out(r_, o.c_, f_);
    for (int i = 0; i < r_; ++i)
        for (int k = 0; k < c_; ++k) {
            const Q& a = at(i, k);
            if (Field::is_zero(a)) continue;
            for (int j = 0; j < o.c_; ++j)
                out.at(i, j) = f_.add(out.at(i, j), f_.mul(a, o.at(k, j)));
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw invalid_input("matrix shape mismatch");
    Matrix out(r_, c_, f_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.add(a_[i], o.a_[i]);
    return out;
}

Matrix Matrix::scaled(const Q& c) const {
    Matrix out(r_, c_, f_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = f_.mul(a_[i], c);
    return out;
}

Matrix Matrix::power(int e) const {
    if (r_ != c_) throw invalid_input("matrix power requires square matrix");
    Matrix acc = identity(r_, f_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

Q Matrix::trace() const {
    Q t(0);
    for (int i = 0; i < std::min(r_, c_); ++i) t = f_.add(t, at(i, i));
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& v : a_)
        if (!Field::is_zero(v)) return false;
    return true;
}

namespace {

// In-place forward elimination; returns pivot columns.
std::vector<int> eliminate(Matrix& m, Q* det = nullptr) {
    const Field& f = m.field();
    if (det) *det = f.one();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!Field::is_zero(m.at(i, col))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
            if (det) *det = f.neg(*det);
        }
        Q inv = f.inv(m.at(row, col));
        if (det) *det = f.mul(*det, m.at(row, col));
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            const Q c = m.at(i, col);
            if (Field::is_zero(c)) continue;
            for (int j = col; j < m.cols(); ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(Matrix m) {
    return static_cast<int>(eliminate(m).size());
}

Q determinant(Matrix m) {
    if (m.rows() != m.cols()) throw invalid_input("determinant requires square matrix");
    Q det;
    auto pivots = eliminate(m, &det);
    if (static_cast<int>(pivots.size()) < m.rows()) return m.field().zero();
    return det;
}

std::vector<std::vector<Q>> kernel_basis(const Matrix& m) {
    const Field& f = m.field();
    Matrix r = m;
    auto pivots = eliminate(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Q>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Q> v(m.cols(), Q(0));
        v[free] = f.one();
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = f.neg(r.at(static_cast<int>(i), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Q>> solve(const Matrix& m, const std::vector<Q>& b) {
    if (static_cast<int>(b.size()) != m.rows()) throw invalid_input("rhs size mismatch");
    const Field& f = m.field();
    Matrix aug(m.rows(), m.cols() + 1, f);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    auto pivots = eliminate(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt; // inconsistent
    std::vector<Q> x(m.cols(), Q(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw invalid_input("inverse requires square matrix");
    const Field& f = m.field();
    Matrix aug(m.rows(), 2 * m.cols(), f);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols() + i) = f.one();
    }
    auto pivots = eliminate(aug);
    if (static_cast<int>(pivots.size()) < m.rows() || pivots[m.rows() - 1] >= m.cols())
        return std::nullopt;
    Matrix inv(m.rows(), m.cols(), f);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) inv.at(i, j) = aug.at(i, m.cols() + j);
    return inv;
}

bool RowEchelon::is_pivot_col(int col) const {
    return std::find(pivots_.begin(), pivots_.end(), col) != pivots_.end();
}

bool RowEchelon::add_row(std::vector<Q> row) {
    if (static_cast<int>(row.size()) != cols_) throw invalid_input("row size mismatch");
    std::vector<Q> combo;
    if (track_) {
        combo.assign(inputs_ + 1, Q(0));
        combo[inputs_] = f_.one();
    }
    ++inputs_;
    // Eliminate existing pivots from the incoming row.
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Q& c = row[pivots_[r]];
        if (Field::is_zero(c)) continue;
        Q factor = c;
        for (int j = 0; j < cols_; ++j)
            if (!Field::is_zero(rows_[r][j])) row[j] = f_.sub(row[j], f_.mul(factor, rows_[r][j]));
        if (track_) {
            const auto& rc = combos_[r];
            if (combo.size() < rc.size()) combo.resize(rc.size(), Q(0));
            for (size_t k = 0; k < rc.size(); ++k)
                if (!Field::is_zero(rc[k])) combo[k] = f_.sub(combo[k], f_.mul(factor, rc[k]));
        }
    }
    int pivot = -1;
    for (int j = 0; j < cols_; ++j)
        if (!Field::is_zero(row[j])) {
            pivot = j;
            break;
        }
    if (pivot < 0) return false;
    // Normalize and back-substitute into stored rows.
    Q inv = f_.inv(row[pivot]);
    for (int j = 0; j < cols_; ++j)
        if (!Field::is_zero(row[j])) row[j] = f_.mul(row[j], inv);
    if (track_)
        for (auto& v : combo)
            if (!Field::is_zero(v)) v = f_.mul(v, inv);
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Q c = rows_[r][pivot];
        if (Field::is_zero(c)) continue;
        for (int j = 0; j < cols_; ++j)
            if (!Field::is_zero(row[j])) rows_[r][j] = f_.sub(rows_[r][j], f_.mul(c, row[j]));
        if (track_) {
            auto& rc = combos_[r];
            if (rc.size() < combo.size()) rc.resize(combo.size(), Q(0));
            for (size_t k = 0; k < combo.size(); ++k)
                if (!Field::is_zero(combo[k])) rc[k] = f_.sub(rc[k], f_.mul(c, combo[k]));
        }
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    if (track_) combos_.push_back(std::move(combo));
    return true;
}

std::vector<Q> RowEchelon::reduce(std::vector<Q> v, std::vector<Q>* lambda) const {
    if (static_cast<int>(v.size()) != cols_) throw invalid_input("vector size mismatch");
    if (lambda) lambda->assign(rows_.size(), Q(0));
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Q c = v[pivots_[r]];
        if (Field::is_zero(c)) continue;
        for (int j = 0; j < cols_; ++j)
            if (!Field::is_zero(rows_[r][j])) v[j] = f_.sub(v[j], f_.mul(c, rows_[r][j]));
        if (lambda) (*lambda)[r] = c;
    }
    return v;
}

} // namespace jacres
