#include "hom3lie/skew_tensor.hpp"

#include <algorithm>

#include "hom3lie/errors.hpp"

namespace hom3lie {

int permutation_sign(const int* idx, int len) {
    int s = 1;
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            if (idx[i] > idx[j]) s = -s;
    return s;
}

void SkewTensor3::check_index(int i) const {
    if (i < 0 || i >= dim_) throw InputError("SkewTensor3 index out of range");
}

void SkewTensor3::set(int i, int j, int k, Vec coeffs) {
    check_index(i);
    check_index(j);
    check_index(k);
    if (int(coeffs.size()) != value_dim_) throw InputError("SkewTensor3 cell: wrong coefficient length");
    if (i == j || j == k || i == k) {
        if (!hom3lie::is_zero(coeffs)) throw InputError("SkewTensor3 cell at repeated indices must be zero");
        return;
    }
    int idx[3] = {i, j, k};
    int sgn = permutation_sign(idx, 3);
    std::array<int, 3> key = {i, j, k};
    std::sort(key.begin(), key.end());
    if (sgn < 0) coeffs = scale(Rational(-1), coeffs);
    if (hom3lie::is_zero(coeffs)) cells_.erase(key);
    else cells_[key] = std::move(coeffs);
}

Vec SkewTensor3::lookup(int i, int j, int k) const {
    check_index(i);
    check_index(j);
    check_index(k);
    if (i == j || j == k || i == k) return zero_vec(value_dim_);
    int idx[3] = {i, j, k};
    int sgn = permutation_sign(idx, 3);
    std::array<int, 3> key = {i, j, k};
    std::sort(key.begin(), key.end());
    auto it = cells_.find(key);
    if (it == cells_.end()) return zero_vec(value_dim_);
    return sgn > 0 ? it->second : scale(Rational(-1), it->second);
}

Vec SkewTensor3::apply(const Vec& a, const Vec& b, const Vec& c) const {
    if (int(a.size()) != dim_ || int(b.size()) != dim_ || int(c.size()) != dim_)
        throw InputError("SkewTensor3 apply: dimension mismatch");
    Vec out = zero_vec(value_dim_);
    for (const auto& [key, cell] : cells_) {
        const int i = key[0], j = key[1], k = key[2];
        // Expand the 3x3 determinant of the (i,j,k) coordinates; this is the
        // full skew trilinear extension restricted to one stored cell.
        Rational det = a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
                       a[k] * (b[i] * c[j] - b[j] * c[i]);
        if (det != 0) axpy(out, det, cell);
    }
    return out;
}

bool SkewTensor3::is_zero() const { return cells_.empty(); }

} // namespace hom3lie
