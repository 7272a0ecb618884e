#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace preproj {

using Vector = std::vector<Scalar>;

bool is_zero(const Vector& v);

/// Dense row-major matrix over a Field.  Module actions are stored as
/// matrices acting on column vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(size_t n);
    static Matrix from_columns(size_t rows, const std::vector<Vector>& cols);
    static Matrix from_rows(size_t cols, const std::vector<Vector>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    Vector row(size_t r) const;
    Vector column(size_t c) const;
    std::vector<Vector> columns() const;
    Matrix transpose() const;
    Matrix select_columns(const std::vector<size_t>& idx) const;
    Matrix select_rows(const std::vector<size_t>& idx) const;
    bool is_zero() const;

    Vector apply(const Vector& v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string str() const;

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

/// Reduced row echelon form with its pivot columns.
struct Echelon {
    Matrix rref;
    std::vector<size_t> pivots;
};

Echelon row_reduce(Matrix m);
size_t rank(const Matrix& m);
/// Columns form a basis of the null space {x : m x = 0}.
Matrix kernel(const Matrix& m);
/// Indices of a maximal set of independent columns (leftmost choice).
std::vector<size_t> independent_columns(const Matrix& m);
/// Solves a x = b for every column of b; nullopt if inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);
Matrix block_diagonal(const std::vector<Matrix>& blocks);

/// Subspace of K^n kept in reduced row echelon form, so equal subspaces have
/// identical bases.
class Subspace {
public:
    explicit Subspace(size_t ambient = 0) : ambient_(ambient) {}

    size_t ambient() const { return ambient_; }
    size_t dim() const { return rows_.size(); }
    const std::vector<Vector>& basis() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    /// Returns true when v was not already in the span.
    bool insert(Vector v);
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// Coefficients of v (assumed in the span) with respect to basis().
    Vector coordinates(const Vector& v) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersection(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    size_t ambient_;
    std::vector<Vector> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace preproj
