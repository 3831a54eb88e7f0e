#include "hom3lie/cochain.hpp"

#include <algorithm>

#include "hom3lie/errors.hpp"
#include "hom3lie/skew_tensor.hpp"

namespace hom3lie {

int pair_count(int host_dim) { return host_dim * (host_dim - 1) / 2; }

int pair_index(int host_dim, int s, int t) {
    // lexicographic over s < t
    return s * host_dim - s * (s + 1) / 2 + (t - s - 1);
}

std::pair<int, int> pair_of_index(int host_dim, int idx) {
    for (int s = 0;; ++s) {
        int row = host_dim - s - 1;
        if (idx < row) return {s, s + 1 + idx};
        idx -= row;
    }
}

PairVec wedge_pairs(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("wedge_pairs: dimension mismatch");
    const int n = int(a.size());
    PairVec out;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            Rational c = a[s] * b[t] - a[t] * b[s];
            if (c != 0) out.emplace_back(pair_index(n, s, t), std::move(c));
        }
    return out;
}

DenseCochain::DenseCochain(int host_dim, int degree, int target_dim)
    : host_(host_dim), degree_(degree), target_(target_dim), npairs_(pair_count(host_dim)) {
    if (degree < 0) throw InputError("DenseCochain: negative degree");
    std::size_t k = 1;
    for (int i = 0; i < degree_; ++i) {
        k *= std::size_t(npairs_);
        if (k > (std::size_t(1) << 28)) throw InputError("DenseCochain: table too large");
    }
    keys_ = k * std::size_t(host_);
    if (keys_ * std::size_t(std::max(target_, 1)) > (std::size_t(1) << 28))
        throw InputError("DenseCochain: table too large");
    table_.assign(keys_, zero_vec(target_));
}

std::size_t DenseCochain::key(const std::vector<int>& pair_idx, int final_idx) const {
    std::size_t k = 0;
    for (int p : pair_idx) k = k * npairs_ + std::size_t(p);
    return k * host_ + std::size_t(final_idx);
}

void DenseCochain::decode(std::size_t key, std::vector<int>& pair_idx, int& final_idx) const {
    final_idx = int(key % host_);
    key /= host_;
    pair_idx.assign(degree_, 0);
    for (int i = degree_ - 1; i >= 0; --i) {
        pair_idx[i] = int(key % npairs_);
        key /= npairs_;
    }
}

std::string DenseCochain::key_string(std::size_t key) const {
    std::vector<int> pi;
    int fin;
    decode(key, pi, fin);
    std::string s = "(";
    for (int p : pi) {
        auto [a, b] = pair_of_index(host_, p);
        s += "b" + std::to_string(a + 1) + "^b" + std::to_string(b + 1) + ", ";
    }
    s += "b" + std::to_string(fin + 1) + ")";
    return s;
}

Vec DenseCochain::value_at(const std::vector<std::pair<int, int>>& pairs, int final_idx) const {
    if (int(pairs.size()) != degree_) throw InputError("DenseCochain::value_at: wrong slot count");
    int sign = 1;
    std::vector<int> pidx(degree_);
    for (int i = 0; i < degree_; ++i) {
        auto [s, t] = pairs[i];
        if (s == t) return zero_vec(target_);
        if (s > t) {
            std::swap(s, t);
            sign = -sign;
        }
        pidx[i] = pair_index(host_, s, t);
    }
    const Vec& v = table_[key(pidx, final_idx)];
    return sign > 0 ? v : scale(Rational(-1), v);
}

Vec DenseCochain::multieval(const std::vector<const PairVec*>& slots, const Vec& final_vec) const {
    if (int(slots.size()) != degree_) throw InputError("DenseCochain::multieval: wrong slot count");
    Vec out = zero_vec(target_);
    // depth-first product over the sparse slot supports
    std::vector<std::size_t> pos(degree_, 0);
    auto rec = [&](auto&& self, int depth, std::size_t partial, const Rational& coef) -> void {
        if (coef == 0) return;
        if (depth == degree_) {
            std::size_t base = partial * host_;
            for (int u = 0; u < host_; ++u) {
                if (final_vec[u] == 0) continue;
                const Vec& cell = table_[base + u];
                if (!hom3lie::is_zero(cell)) axpy(out, coef * final_vec[u], cell);
            }
            return;
        }
        for (const auto& [pidx, c] : *slots[depth]) self(self, depth + 1, partial * npairs_ + pidx, coef * c);
    };
    rec(rec, 0, 0, Rational(1));
    return out;
}

DenseCochain& DenseCochain::add_in_place(const DenseCochain& other) {
    if (host_ != other.host_ || degree_ != other.degree_ || target_ != other.target_)
        throw InputError("DenseCochain add: shape mismatch");
    for (std::size_t k = 0; k < keys_; ++k)
        for (int c = 0; c < target_; ++c) table_[k][c] += other.table_[k][c];
    return *this;
}

DenseCochain& DenseCochain::scale_in_place(const Rational& c) {
    for (auto& v : table_)
        for (auto& x : v) x *= c;
    return *this;
}

DenseCochain DenseCochain::minus(const DenseCochain& other) const {
    DenseCochain out = *this;
    if (host_ != other.host_ || degree_ != other.degree_ || target_ != other.target_)
        throw InputError("DenseCochain minus: shape mismatch");
    for (std::size_t k = 0; k < keys_; ++k)
        for (int c = 0; c < target_; ++c) out.table_[k][c] -= other.table_[k][c];
    return out;
}

bool DenseCochain::is_zero() const {
    for (const auto& v : table_)
        if (!hom3lie::is_zero(v)) return false;
    return true;
}

bool DenseCochain::equal(const DenseCochain& other) const {
    return host_ == other.host_ && degree_ == other.degree_ && target_ == other.target_ && table_ == other.table_;
}

std::string DenseCochain::first_nonzero_key() const {
    for (std::size_t k = 0; k < keys_; ++k)
        if (!hom3lie::is_zero(table_[k])) return key_string(k);
    return "";
}

DenseCochain embed_fiber_target(const DenseCochain& phi, int base_dim, int host_dim) {
    if (base_dim + phi.target_dim() != host_dim) throw InputError("embed_fiber_target: dimension mismatch");
    DenseCochain out(phi.host_dim(), phi.degree(), host_dim);
    for (std::size_t k = 0; k < phi.key_count(); ++k)
        for (int c = 0; c < phi.target_dim(); ++c) out.value(k)[base_dim + c] = phi.value(k)[c];
    return out;
}

DenseCochain project_fiber_target(const DenseCochain& phi, int base_dim, int fiber_dim) {
    DenseCochain out(phi.host_dim(), phi.degree(), fiber_dim);
    for (std::size_t k = 0; k < phi.key_count(); ++k) {
        const Vec& v = phi.value(k);
        for (int c = 0; c < int(v.size()); ++c) {
            if (c < base_dim || c >= base_dim + fiber_dim) {
                if (v[c] != 0)
                    throw InputError("project_fiber_target: value outside the fiber block at " + phi.key_string(k));
            } else {
                out.value(k)[c - base_dim] = v[c];
            }
        }
    }
    return out;
}

Report compat_violations(const DenseCochain& phi, const CompatibilityConstraint& c) {
    const int N = phi.host_dim();
    if (c.twist_on_source.rows() != N || c.twist_on_source.cols() != N)
        throw InputError("compatibility: source twist shape mismatch");
    if (c.twist_on_target.rows() != phi.target_dim() || c.twist_on_target.cols() != phi.target_dim())
        throw InputError("compatibility: target twist shape mismatch");
    Report rep;
    const int P = pair_count(N);
    std::vector<PairVec> dec(P);
    for (int p = 0; p < P; ++p) {
        auto [s, t] = pair_of_index(N, p);
        dec[p] = wedge_pairs(c.twist_on_source.col(s), c.twist_on_source.col(t));
    }
    std::vector<int> pidx;
    int fin;
    for (std::size_t k = 0; k < phi.key_count(); ++k) {
        phi.decode(k, pidx, fin);
        Vec lhs = c.twist_on_target.apply(phi.value(k));
        std::vector<const PairVec*> slots;
        slots.reserve(pidx.size());
        for (int p : pidx) slots.push_back(&dec[p]);
        Vec rhs = phi.multieval(slots, c.twist_on_source.col(fin));
        if (lhs != rhs) rep.add("compatibility", phi.key_string(k), to_string(lhs), to_string(rhs));
    }
    return rep;
}

// ---- component form --------------------------------------------------------

namespace {
int sort2(int& a, int& b) {
    if (a == b) return 0;
    if (a > b) {
        std::swap(a, b);
        return -1;
    }
    return 1;
}
} // namespace

void ComponentCochain2::set_phi1(int a, int b, int i, Vec val) {
    int sgn = sort2(a, b);
    if (sgn == 0) {
        if (!is_zero(val)) throw InputError("phi1 at repeated carrier indices must be zero");
        return;
    }
    if (sgn < 0) val = scale(Rational(-1), val);
    if (is_zero(val)) p1_.erase({a, b, i});
    else p1_[{a, b, i}] = std::move(val);
}

void ComponentCochain2::set_phi2(int i, int j, int b, Vec val) {
    int sgn = sort2(i, j);
    if (sgn == 0) {
        if (!is_zero(val)) throw InputError("phi2 at repeated algebra indices must be zero");
        return;
    }
    if (sgn < 0) val = scale(Rational(-1), val);
    if (is_zero(val)) p2_.erase({i, j, b});
    else p2_[{i, j, b}] = std::move(val);
}

void ComponentCochain2::set_phi3(int i, int j, int k, Vec val) {
    int idx[3] = {i, j, k};
    if (i == j || j == k || i == k) {
        if (!is_zero(val)) throw InputError("phi3 at repeated indices must be zero");
        return;
    }
    int sgn = permutation_sign(idx, 3);
    std::array<int, 3> key = {i, j, k};
    std::sort(key.begin(), key.end());
    if (sgn < 0) val = scale(Rational(-1), val);
    if (is_zero(val)) p3_.erase({key[0], key[1], key[2]});
    else p3_[{key[0], key[1], key[2]}] = std::move(val);
}

Vec ComponentCochain2::phi1(int a, int b, int i) const {
    int sgn = sort2(a, b);
    if (sgn == 0) return zero_vec(m_);
    auto it = p1_.find({a, b, i});
    if (it == p1_.end()) return zero_vec(m_);
    return sgn > 0 ? it->second : scale(Rational(-1), it->second);
}

Vec ComponentCochain2::phi2(int i, int j, int b) const {
    int sgn = sort2(i, j);
    if (sgn == 0) return zero_vec(m_);
    auto it = p2_.find({i, j, b});
    if (it == p2_.end()) return zero_vec(m_);
    return sgn > 0 ? it->second : scale(Rational(-1), it->second);
}

Vec ComponentCochain2::phi3(int i, int j, int k) const {
    if (i == j || j == k || i == k) return zero_vec(m_);
    int idx[3] = {i, j, k};
    int sgn = permutation_sign(idx, 3);
    std::array<int, 3> key = {i, j, k};
    std::sort(key.begin(), key.end());
    auto it = p3_.find({key[0], key[1], key[2]});
    if (it == p3_.end()) return zero_vec(m_);
    return sgn > 0 ? it->second : scale(Rational(-1), it->second);
}

Vec ComponentCochain2::phi1_v(const Vec& u, const Vec& w, const Vec& x) const {
    Vec out = zero_vec(m_);
    for (const auto& [key, val] : p1_) {
        auto [a, b, i] = key;
        Rational c = (u[a] * w[b] - u[b] * w[a]) * x[i];
        if (c != 0) axpy(out, c, val);
    }
    return out;
}

Vec ComponentCochain2::phi2_v(const Vec& x, const Vec& y, const Vec& w) const {
    Vec out = zero_vec(m_);
    for (const auto& [key, val] : p2_) {
        auto [i, j, b] = key;
        Rational c = (x[i] * y[j] - x[j] * y[i]) * w[b];
        if (c != 0) axpy(out, c, val);
    }
    return out;
}

Vec ComponentCochain2::phi3_v(const Vec& x, const Vec& y, const Vec& z) const {
    Vec out = zero_vec(m_);
    for (const auto& [key, val] : p3_) {
        auto [i, j, k] = key;
        Rational det = x[i] * (y[j] * z[k] - y[k] * z[j]) - x[j] * (y[i] * z[k] - y[k] * z[i]) +
                       x[k] * (y[i] * z[j] - y[j] * z[i]);
        if (det != 0) axpy(out, det, val);
    }
    return out;
}

DenseCochain ComponentCochain2::to_dense() const {
    const int N = n_ + m_;
    DenseCochain out(N, 1, m_);
    auto put = [&](int s, int t, int fin, const Vec& val) {
        int sgn = sort2(s, t);
        std::vector<int> pidx = {pair_index(N, s, t)};
        Vec v = sgn > 0 ? val : scale(Rational(-1), val);
        Vec& cell = out.value(out.key(pidx, fin));
        for (int c = 0; c < m_; ++c) cell[c] += v[c];
    };
    // phi3 block: ((i,j),k), fully skew
    for (const auto& [key, val] : p3_) {
        auto [i, j, k] = key;
        int tri[3] = {i, j, k};
        // all arrangements (pair s<t handled by put's sign)
        std::sort(tri, tri + 3);
        int a = tri[0], b = tri[1], c = tri[2];
        // e_a^e_b^e_c with its sign relative to stored (i<j<k) == sorted
        const Vec& v = val;
        put(a, b, c, v);
        put(a, c, b, scale(Rational(-1), v));
        put(b, c, a, v);
    }
    // phi2: ((i<j), n+b) plus the mixed alternating keys ((i, n+b), j)
    for (const auto& [key, val] : p2_) {
        auto [i, j, b] = key;
        put(i, j, n_ + b, val);
        // e_i ^ v_b ^ e_j = -(e_i ^ e_j ^ v_b); e_j ^ v_b ^ e_i = +(e_i^e_j^v_b)
        put(i, n_ + b, j, scale(Rational(-1), val));
        put(j, n_ + b, i, val);
    }
    // phi1: ((n+a, n+b), i) plus mixed ((i, n+a), n+b) = + phi1(a,b,i)
    for (const auto& [key, val] : p1_) {
        auto [a, b, i] = key;
        put(n_ + a, n_ + b, i, val);
        put(i, n_ + a, n_ + b, val);
        put(i, n_ + b, n_ + a, scale(Rational(-1), val));
    }
    return out;
}

ComponentCochain2 ComponentCochain2::from_dense(const DenseCochain& phi, int base_dim, int fiber_dim) {
    if (phi.degree() != 1 || phi.host_dim() != base_dim + fiber_dim || phi.target_dim() != fiber_dim)
        throw InputError("ComponentCochain2::from_dense: shape mismatch");
    const int N = base_dim + fiber_dim;
    ComponentCochain2 out(base_dim, fiber_dim);
    for (int i = 0; i < base_dim; ++i)
        for (int j = i + 1; j < base_dim; ++j)
            for (int k = j + 1; k < base_dim; ++k)
                out.set_phi3(i, j, k, phi.value(phi.key({pair_index(N, i, j)}, k)));
    for (int i = 0; i < base_dim; ++i)
        for (int j = i + 1; j < base_dim; ++j)
            for (int b = 0; b < fiber_dim; ++b)
                out.set_phi2(i, j, b, phi.value(phi.key({pair_index(N, i, j)}, base_dim + b)));
    for (int a = 0; a < fiber_dim; ++a)
        for (int b = a + 1; b < fiber_dim; ++b)
            for (int i = 0; i < base_dim; ++i)
                out.set_phi1(a, b, i,
                             phi.value(phi.key({pair_index(N, base_dim + a, base_dim + b)}, i)));
    return out;
}

} // namespace hom3lie
