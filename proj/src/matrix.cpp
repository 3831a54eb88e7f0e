#include "hom3lie/matrix.hpp"

#include "hom3lie/errors.hpp"

namespace hom3lie {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (int(v.size()) != cols_) throw InputError("matrix apply: dimension mismatch");
    Vec out = zero_vec(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rational s(0);
        for (int j = 0; j < cols_; ++j) {
            const Rational& a = at(i, j);
            if (a != 0 && v[j] != 0) s += a * v[j];
        }
        out[i] = s;
    }
    return out;
}

Vec Matrix::col(int j) const {
    Vec out = zero_vec(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

Matrix Matrix::mul(const Matrix& other) const {
    if (cols_ != other.rows_) throw InputError("matrix mul: dimension mismatch");
    Matrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < other.cols_; ++j) {
                const Rational& b = other.at(k, j);
                if (b != 0) out.at(i, j) += a * b;
            }
        }
    return out;
}

Matrix Matrix::pow(int k) const {
    if (rows_ != cols_) throw InputError("matrix pow: not square");
    Matrix out = identity(rows_);
    for (int i = 0; i < k; ++i) out = out.mul(*this);
    return out;
}

bool Matrix::is_zero() const { return hom3lie::is_zero(data_); }

std::string Matrix::to_string() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
        s += i ? "; " : "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) s += " ";
            s += hom3lie::to_string(at(i, j));
        }
    }
    return s + "]";
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

} // namespace hom3lie
