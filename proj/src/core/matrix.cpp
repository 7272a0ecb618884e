#include "matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace preproj {

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(size_t rows, const std::vector<Vector>& cols) {
    Matrix m(rows, cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Matrix Matrix::from_rows(size_t cols, const std::vector<Vector>& rows) {
    Matrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
}

Vector Matrix::row(size_t r) const {
    return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(size_t c) const {
    Vector v(rows_);
    for (size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Vector> Matrix::columns() const {
    std::vector<Vector> out;
    out.reserve(cols_);
    for (size_t c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::select_columns(const std::vector<size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (size_t r = 0; r < rows_; ++r)
        for (size_t k = 0; k < idx.size(); ++k) m(r, k) = (*this)(r, idx[k]);
    return m;
}

Matrix Matrix::select_rows(const std::vector<size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (size_t k = 0; k < idx.size(); ++k)
        for (size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(idx[k], c);
    return m;
}

bool Matrix::is_zero() const { return preproj::is_zero(data_); }

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    Vector out(rows_);
    for (size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (size_t r = 0; r < rows_; ++r) {
            const Scalar& e = (*this)(r, c);
            if (!e.is_zero()) out[r] += e * v[c];
        }
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix m(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) m(i, j) += x * y;
            }
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
    Matrix m = a;
    for (size_t i = 0; i < m.data_.size(); ++i)
        if (!b.data_[i].is_zero()) m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (Scalar(-1) * b); }

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix out = m;
    for (auto& x : out.data_)
        if (!x.is_zero()) x *= s;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).str();
    }
    os << "]";
    return os.str();
}

Echelon row_reduce(Matrix m) {
    Echelon e;
    const size_t rows = m.rows(), cols = m.cols();
    size_t r = 0;
    std::vector<size_t> support;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t best = rows;
        uint64_t best_h = UINT64_MAX;
        for (size_t i = r; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            uint64_t h = m(i, c).height();
            if (best == rows || h < best_h) {
                best = i;
                best_h = h;
                if (h <= 1) break;
            }
        }
        if (best == rows) continue;
        if (best != r)
            for (size_t j = c; j < cols; ++j) std::swap(m(r, j), m(best, j));
        Scalar inv = m(r, c).inverse();
        support.clear();
        for (size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) {
                m(r, j) *= inv;
                support.push_back(j);
            }
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (size_t j : support) m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.rref = std::move(m);
    return e;
}

size_t rank(const Matrix& m) { return m.empty() ? 0 : row_reduce(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
    const size_t cols = m.cols();
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rref(k, f);
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(cols, basis);
}

std::vector<size_t> independent_columns(const Matrix& m) {
    if (m.empty()) return {};
    return row_reduce(m).pivots;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
    const size_t n = a.cols(), k = b.cols();
    Matrix aug(a.rows(), n + k);
    for (size_t r = 0; r < a.rows(); ++r) {
        for (size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        for (size_t c = 0; c < k; ++c) aug(r, n + c) = b(r, c);
    }
    Echelon e = row_reduce(std::move(aug));
    Matrix x(n, k);
    for (size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] >= n) return std::nullopt;
        for (size_t c = 0; c < k; ++c) x(e.pivots[i], c) = e.rref(i, n + c);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto x = solve(m, Matrix::identity(m.rows()));
    if (!x || !(m * *x == Matrix::identity(m.rows()))) return std::nullopt;
    return x;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
    size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix m(rows, cols);
    size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (size_t r = 0; r < b.rows(); ++r)
            for (size_t c = 0; c < b.cols(); ++c) m(r0 + r, c0 + c) = b(r, c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

Vector Subspace::reduce(Vector v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const Scalar f = v[pivots_[k]];
        if (f.is_zero()) continue;
        const Vector& row = rows_[k];
        for (size_t j = pivots_[k]; j < ambient_; ++j)
            if (!row[j].is_zero()) v[j] -= f * row[j];
    }
    return v;
}

bool Subspace::insert(Vector v) {
    if (v.size() != ambient_) throw std::invalid_argument("subspace: vector length mismatch");
    v = reduce(std::move(v));
    size_t p = 0;
    while (p < ambient_ && v[p].is_zero()) ++p;
    if (p == ambient_) return false;
    Scalar inv = v[p].inverse();
    for (size_t j = p; j < ambient_; ++j)
        if (!v[j].is_zero()) v[j] *= inv;
    for (auto& row : rows_) {
        Scalar f = row[p];
        if (f.is_zero()) continue;
        for (size_t j = p; j < ambient_; ++j)
            if (!v[j].is_zero()) row[j] -= f * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool Subspace::contains(const Vector& v) const { return preproj::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
    Vector c(rows_.size());
    for (size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

Subspace Subspace::sum(const Subspace& other) const {
    Subspace s = *this;
    for (const auto& v : other.rows_) s.insert(v);
    return s;
}

Subspace Subspace::intersection(const Subspace& other) const {
    Subspace out(ambient_);
    if (rows_.empty() || other.rows_.empty()) return out;
    std::vector<Vector> cols = rows_;
    for (const auto& v : other.rows_) {
        Vector neg(ambient_);
        for (size_t j = 0; j < ambient_; ++j) neg[j] = -v[j];
        cols.push_back(std::move(neg));
    }
    Matrix k = kernel(Matrix::from_columns(ambient_, cols));
    for (size_t c = 0; c < k.cols(); ++c) {
        Vector w(ambient_);
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Scalar& a = k(i, c);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < ambient_; ++j)
                if (!rows_[i][j].is_zero()) w[j] += a * rows_[i][j];
        }
        out.insert(std::move(w));
    }
    return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

}  // namespace preproj
