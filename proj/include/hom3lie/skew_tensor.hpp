#pragma once

#include <array>
#include <map>
#include <string>

#include "hom3lie/rational.hpp"

namespace hom3lie {

/// Sign of an index permutation given as a small array (counts inversions).
int permutation_sign(const int* idx, int len);

/// Structure constants of a trilinear skew-symmetric multiplication.
/// Only strictly increasing triples (i<j<k) are stored; lookups at repeated
/// indices are zero and permuted triples pick up the permutation sign.
class SkewTensor3 {
public:
    SkewTensor3() = default;
    /// value_dim defaults to the index dimension (structure constants); pass
    /// a different value dimension for tensors valued in another space
    /// (e.g. an extension cocycle on ^3 g valued in the fiber).
    explicit SkewTensor3(int dim, int value_dim = -1) : dim_(dim), value_dim_(value_dim < 0 ? dim : value_dim) {}

    int dim() const { return dim_; }
    int value_dim() const { return value_dim_; }

    /// Stores coefficients of [e_i, e_j, e_k]; indices may come in any order
    /// (the cell is canonicalized with the permutation sign).
    void set(int i, int j, int k, Vec coeffs);

    /// Sign-extended lookup; zero vector on repeated indices.
    Vec lookup(int i, int j, int k) const;

    /// Trilinear evaluation on coefficient vectors.
    Vec apply(const Vec& a, const Vec& b, const Vec& c) const;

    const std::map<std::array<int, 3>, Vec>& cells() const { return cells_; }

    bool operator==(const SkewTensor3& other) const = default;
    bool is_zero() const;

private:
    void check_index(int i) const;

    int dim_ = 0;
    int value_dim_ = 0;
    std::map<std::array<int, 3>, Vec> cells_;
};

} // namespace hom3lie
