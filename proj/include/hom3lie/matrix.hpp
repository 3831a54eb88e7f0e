#pragma once

#include <cstddef>
#include <string>

#include "hom3lie/rational.hpp"

namespace hom3lie {

/// Dense rational matrix, row-major. Repo-wide convention: column j is the
/// image of basis vector j, so apply() is the ordinary matrix-vector product.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, Rational(0)) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }
    Rational&       at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }

    Vec apply(const Vec& v) const;
    Vec col(int j) const;

    Matrix mul(const Matrix& other) const;
    /// k-fold repeated application; pow(0) is the identity.
    Matrix pow(int k) const;

    bool operator==(const Matrix& other) const = default;
    bool is_zero() const;

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    Vec data_;
};

/// [[a, 0], [0, b]] on the direct sum of the column spaces.
Matrix block_diag(const Matrix& a, const Matrix& b);

} // namespace hom3lie
