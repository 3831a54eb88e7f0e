#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hom3lie/matrix.hpp"
#include "hom3lie/report.hpp"

namespace hom3lie {

/// Sparse element of the wedge square of the host space, as coefficients on
/// the canonical pair basis (pair index -> coefficient).
using PairVec = std::vector<std::pair<int, Rational>>;

int  pair_count(int host_dim);
int  pair_index(int host_dim, int s, int t); // requires s < t
std::pair<int, int> pair_of_index(int host_dim, int idx);

/// a ^ b expanded on the canonical pair basis of the host.
PairVec wedge_pairs(const Vec& a, const Vec& b);

/// Multilinear table on p canonical wedge-square slots plus one final host
/// index, valued in a target space. Evaluation extends multilinearly with
/// the transposition sign inside each pair slot and zero at repeated pair
/// indices; no symmetry is imposed across slots.
class DenseCochain {
public:
    DenseCochain() = default;
    DenseCochain(int host_dim, int degree, int target_dim);

    int host_dim() const { return host_; }
    int degree() const { return degree_; }
    int target_dim() const { return target_; }
    std::size_t key_count() const { return keys_; }

    /// Flat key from canonical pair indices plus final index.
    std::size_t key(const std::vector<int>& pair_idx, int final_idx) const;
    void decode(std::size_t key, std::vector<int>& pair_idx, int& final_idx) const;
    std::string key_string(std::size_t key) const;

    const Vec& value(std::size_t key) const { return table_[key]; }
    Vec&       value(std::size_t key) { return table_[key]; }

    /// Value at basis pairs given as (s,t) index pairs (any order, sign
    /// extended) plus a final index.
    Vec value_at(const std::vector<std::pair<int, int>>& pairs, int final_idx) const;

    /// Full multilinear evaluation against one sparse pair-vector per slot
    /// and a final coefficient vector.
    Vec multieval(const std::vector<const PairVec*>& slots, const Vec& final_vec) const;

    DenseCochain& add_in_place(const DenseCochain& other);
    DenseCochain& scale_in_place(const Rational& c);
    DenseCochain  minus(const DenseCochain& other) const;

    bool is_zero() const;
    bool equal(const DenseCochain& other) const;
    /// Decoded key of the first nonzero entry, for violation witnesses.
    std::string first_nonzero_key() const;

private:
    int host_ = 0, degree_ = 0, target_ = 0;
    int npairs_ = 0;
    std::size_t keys_ = 0;
    std::vector<Vec> table_;
};

/// Moves a cochain valued in the fiber V into host-valued form (the V block
/// starts at base_dim) and back. project checks that nothing lives outside
/// the fiber block.
DenseCochain embed_fiber_target(const DenseCochain& phi, int base_dim, int host_dim);
DenseCochain project_fiber_target(const DenseCochain& phi, int base_dim, int fiber_dim);

/// The cochain-space membership constraint: target_twist o phi equals phi
/// with every pair slot twisted by source_twist (wedge-extended) and the
/// final slot twisted by source_twist.
struct CompatibilityConstraint {
    Matrix twist_on_source;
    Matrix twist_on_target;
};

/// Violated keys of the constraint, as a Report (identity "compatibility").
Report compat_violations(const DenseCochain& phi, const CompatibilityConstraint& c);

/// Degree-1 cochain on g (+) V in the component form of the 2-cocycle
/// analysis: phi1 on ^2V x g, phi2 on ^2g x V, phi3 on ^3g, all valued in V.
class ComponentCochain2 {
public:
    ComponentCochain2() = default;
    ComponentCochain2(int base_dim, int fiber_dim) : n_(base_dim), m_(fiber_dim) {}

    int base_dim() const { return n_; }
    int fiber_dim() const { return m_; }

    void set_phi1(int a, int b, int i, Vec val); // skew in (a,b)
    void set_phi2(int i, int j, int b, Vec val); // skew in (i,j)
    void set_phi3(int i, int j, int k, Vec val); // fully skew

    Vec phi1(int a, int b, int i) const;
    Vec phi2(int i, int j, int b) const;
    Vec phi3(int i, int j, int k) const;
    /// Multilinear extensions over coefficient vectors.
    Vec phi1_v(const Vec& u, const Vec& w, const Vec& x) const;
    Vec phi2_v(const Vec& x, const Vec& y, const Vec& w) const;
    Vec phi3_v(const Vec& x, const Vec& y, const Vec& z) const;

    /// Dense form on g (+) V valued in V: each component block is extended
    /// alternating across its pair and final slots (e.g. phi2 also populates
    /// the mixed (e_i ^ v_b, e_j) keys with the matching sign). This is the
    /// extension under which the dense differential reproduces the
    /// component-wise cocycle identities.
    DenseCochain to_dense() const;

    /// Reads the canonical blocks back; anything outside them (mixed blocks
    /// of a general dense cochain) is dropped.
    static ComponentCochain2 from_dense(const DenseCochain& phi, int base_dim, int fiber_dim);

    bool operator==(const ComponentCochain2& other) const = default;

private:
    int n_ = 0, m_ = 0;
    std::map<std::tuple<int, int, int>, Vec> p1_, p2_, p3_;
};

} // namespace hom3lie
