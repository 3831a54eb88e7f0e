#include "hom3lie/graded.hpp"

#include <algorithm>

#include "hom3lie/errors.hpp"
#include "hom3lie/linalg.hpp"

namespace hom3lie {

DenseCochain lift_structure(const HomAlgebra& a, const GeneralizedRep& g) {
    const int n = a.dim();
    const int m = g.carrier_dim;
    if (g.endo.rows() != m || a.alpha.rows() != n) throw InputError("lift_structure: dimension mismatch");
    const int N = n + m;
    HomAlgebra h = generalized_semidirect(a, g);
    DenseCochain s(N, 1, N);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            std::vector<int> pidx = {pair_index(N, i, j)};
            for (int k = 0; k < N; ++k) s.value(s.key(pidx, k)) = h.bracket.lookup(i, j, k);
        }
    return s;
}

namespace {

struct SubsetData {
    std::vector<int> J, I;
    int eps;
};

// All p-subsets of {0..total-1} with the shuffle sign of (J, I).
std::vector<SubsetData> subsets_with_signs(int total, int p) {
    std::vector<SubsetData> out;
    std::vector<int> J(p);
    auto emit = [&]() {
        SubsetData d;
        d.J = J;
        std::vector<bool> in(total, false);
        for (int j : J) in[j] = true;
        for (int i = 0; i < total; ++i)
            if (!in[i]) d.I.push_back(i);
        std::vector<int> perm = d.J;
        perm.insert(perm.end(), d.I.begin(), d.I.end());
        d.eps = permutation_sign(perm.data(), total);
        out.push_back(std::move(d));
    };
    if (p == 0) {
        J.clear();
        emit();
        return out;
    }
    // iterative combinations
    for (int i = 0; i < p; ++i) J[i] = i;
    while (true) {
        emit();
        int i = p - 1;
        while (i >= 0 && J[i] == total - p + i) --i;
        if (i < 0) break;
        ++J[i];
        for (int k = i + 1; k < p; ++k) J[k] = J[k - 1] + 1;
    }
    return out;
}

} // namespace

DenseCochain graded_compose(const DenseCochain& phi, const DenseCochain& psi, const Matrix& alpha_h) {
    const int N = phi.host_dim();
    if (psi.host_dim() != N || psi.target_dim() != N)
        throw InputError("graded_compose: psi must be host-valued on the same host");
    if (alpha_h.rows() != N || alpha_h.cols() != N) throw InputError("graded_compose: twist shape mismatch");
    const int q = phi.degree();
    const int p = psi.degree();
    const int P = pair_count(N);
    const Matrix D = alpha_h.pow(std::max(p, 1));
    std::vector<Vec> dcol(N);
    for (int i = 0; i < N; ++i) dcol[i] = D.col(i);
    std::vector<PairVec> decorated(P);
    for (int pi = 0; pi < P; ++pi) {
        auto [s, t] = pair_of_index(N, pi);
        decorated[pi] = wedge_pairs(dcol[s], dcol[t]);
    }
    const auto subsets = subsets_with_signs(p + q, p);
    DenseCochain out(N, p + q, phi.target_dim());
    std::vector<int> pidx;
    int fin;
    std::vector<int> jpart(p);
    std::vector<const PairVec*> slots(q);
    for (std::size_t k = 0; k < out.key_count(); ++k) {
        out.decode(k, pidx, fin);
        Vec acc = zero_vec(phi.target_dim());
        for (const auto& sd : subsets) {
            for (int t = 0; t < p; ++t) jpart[t] = pidx[sd.J[t]];
            std::size_t jbase = 0;
            for (int t = 0; t < p; ++t) jbase = jbase * P + std::size_t(jpart[t]);
            const Rational eps(sd.eps);
            if (q >= 1) {
                int maxJ = sd.J.empty() ? -1 : sd.J.back();
                for (int tpos = 0; tpos < q; ++tpos) {
                    if (sd.I[tpos] <= maxJ) continue;
                    auto [xa, xb] = pair_of_index(N, pidx[sd.I[tpos]]);
                    // bullet: psi(X_J, x_a) ^ D(x_b) + D(x_a) ^ psi(X_J, x_b)
                    const Vec& v1 = psi.value(jbase * N + std::size_t(xa));
                    const Vec& v2 = psi.value(jbase * N + std::size_t(xb));
                    PairVec bullet = wedge_pairs(v1, dcol[xb]);
                    for (auto& [pi2, c2] : wedge_pairs(dcol[xa], v2)) {
                        bool found = false;
                        for (auto& [pi1, c1] : bullet)
                            if (pi1 == pi2) {
                                c1 += c2;
                                found = true;
                                break;
                            }
                        if (!found) bullet.emplace_back(pi2, c2);
                    }
                    for (int u = 0; u < q; ++u) slots[u] = (u == tpos) ? &bullet : &decorated[pidx[sd.I[u]]];
                    Vec val = phi.multieval(slots, dcol[fin]);
                    axpy(acc, eps, val);
                }
            }
            // final-slot substitution term
            const Vec& inner = psi.value(jbase * N + std::size_t(fin));
            if (!is_zero(inner) || q == 0) {
                for (int u = 0; u < q; ++u) slots[u] = &decorated[pidx[sd.I[u]]];
                Vec val = phi.multieval(slots, inner);
                axpy(acc, eps, val);
            }
        }
        out.value(k) = std::move(acc);
    }
    return out;
}

DenseCochain graded_bracket(const DenseCochain& phi, const DenseCochain& psi, const Matrix& alpha_h) {
    const int q = phi.degree();
    const int p = psi.degree();
    DenseCochain lhs = graded_compose(phi, psi, alpha_h);
    if ((p * q) % 2 != 0) lhs.scale_in_place(Rational(-1));
    DenseCochain rhs = graded_compose(psi, phi, alpha_h);
    return lhs.minus(rhs);
}

Report is_canonical(const DenseCochain& s, const Matrix& alpha_h) {
    if (s.degree() != 1 || s.target_dim() != s.host_dim())
        throw InputError("is_canonical: expects a degree-1 host-valued cochain");
    Report rep = compat_violations(s, CompatibilityConstraint{alpha_h, alpha_h});
    DenseCochain ss = graded_bracket(s, s, alpha_h);
    for (std::size_t k = 0; k < ss.key_count(); ++k)
        if (!is_zero(ss.value(k))) rep.add("[s,s]=0", ss.key_string(k), to_string(ss.value(k)), "0");
    return rep;
}

DenseCochain delta_rho(const HomAlgebra& a, const Representation& r, const DenseCochain& phi) {
    const int n = a.dim();
    const int m = r.carrier_dim;
    if (phi.host_dim() != n || phi.target_dim() != m) throw InputError("delta_rho: cochain shape mismatch");
    Report compat = compat_violations(phi, CompatibilityConstraint{a.alpha, r.endo});
    if (!compat.pass())
        throw PreconditionError("delta_rho: cochain violates the compatibility constraint at " +
                                compat.violations.front().witness);
    const int deg = phi.degree();
    const int pout = deg + 1;
    const int P = pair_count(n);
    // sums 1-2 carry single alpha decorations; sums 3-4 carry alpha^max(deg,1)
    // ("alpha^p" in the source text, repaired to match the graded bracket).
    const Matrix aE = a.alpha.pow(std::max(deg, 1));
    std::vector<PairVec> adec(P);
    for (int pi = 0; pi < P; ++pi) {
        auto [s, t] = pair_of_index(n, pi);
        adec[pi] = wedge_pairs(a.alpha.col(s), a.alpha.col(t));
    }
    std::vector<PairVec> unit(P);
    for (int pi = 0; pi < P; ++pi) unit[pi] = PairVec{{pi, Rational(1)}};
    DenseCochain out(n, pout, m);
    std::vector<int> pidx;
    int fin;
    for (std::size_t k = 0; k < out.key_count(); ++k) {
        out.decode(k, pidx, fin);
        Vec acc = zero_vec(m);
        // sum 1: j < k2: remove X_j, replace X_{k2} by [X_j, X_{k2}]_L,
        // decorate the rest with alpha, final gets alpha(z). Sign (-1)^(j+1).
        for (int j = 0; j < pout; ++j) {
            auto [xj, yj] = pair_of_index(n, pidx[j]);
            for (int k2 = j + 1; k2 < pout; ++k2) {
                auto [xk, yk] = pair_of_index(n, pidx[k2]);
                PairVec ins = wedge_pairs(a.bracket.lookup(xj, yj, xk), a.alpha.col(yk));
                for (auto& [pi2, c2] : wedge_pairs(a.alpha.col(xk), a.bracket.lookup(xj, yj, yk))) {
                    bool found = false;
                    for (auto& [pi1, c1] : ins)
                        if (pi1 == pi2) {
                            c1 += c2;
                            found = true;
                            break;
                        }
                    if (!found) ins.emplace_back(pi2, c2);
                }
                std::vector<const PairVec*> slots;
                for (int t = 0; t < pout; ++t) {
                    if (t == j) continue;
                    slots.push_back(t == k2 ? &ins : &adec[pidx[t]]);
                }
                Vec val = phi.multieval(slots, a.alpha.col(fin));
                axpy(acc, Rational((j % 2 == 0) ? -1 : 1), val);
            }
        }
        // sum 2: remove X_j, final becomes [X_j, z]. Sign (-1)^(j+1).
        for (int j = 0; j < pout; ++j) {
            auto [xj, yj] = pair_of_index(n, pidx[j]);
            std::vector<const PairVec*> slots;
            for (int t = 0; t < pout; ++t)
                if (t != j) slots.push_back(&adec[pidx[t]]);
            Vec val = phi.multieval(slots, a.bracket.lookup(xj, yj, fin));
            axpy(acc, Rational((j % 2 == 0) ? -1 : 1), val);
        }
        // sum 3: rho(aE x_j, aE y_j) phi(rest raw, z). Sign (-1)^j (1-based j+1).
        for (int j = 0; j < pout; ++j) {
            auto [xj, yj] = pair_of_index(n, pidx[j]);
            std::vector<const PairVec*> slots;
            for (int t = 0; t < pout; ++t)
                if (t != j) slots.push_back(&unit[pidx[t]]);
            Vec fz = zero_vec(n);
            fz[fin] = 1;
            Vec val = phi.multieval(slots, fz);
            Matrix rj = r.rho_vectors(aE.col(xj), aE.col(yj));
            axpy(acc, Rational((j % 2 == 0) ? 1 : -1), rj.apply(val));
        }
        // sum 4: (-1)^(pout+1) [rho(aE y_p, aE z) phi(..., x_p)
        //                       + rho(aE z, aE x_p) phi(..., y_p)]
        {
            auto [xp, yp] = pair_of_index(n, pidx[pout - 1]);
            std::vector<const PairVec*> slots;
            for (int t = 0; t < pout - 1; ++t) slots.push_back(&unit[pidx[t]]);
            Vec ex = zero_vec(n);
            ex[xp] = 1;
            Vec ey = zero_vec(n);
            ey[yp] = 1;
            Vec t1 = r.rho_vectors(aE.col(yp), aE.col(fin)).apply(phi.multieval(slots, ex));
            Vec t2 = r.rho_vectors(aE.col(fin), aE.col(xp)).apply(phi.multieval(slots, ey));
            axpy(acc, Rational((pout % 2 == 0) ? -1 : 1), add(t1, t2));
        }
        out.value(k) = std::move(acc);
    }
    return out;
}

DenseCochain differential_d(const HomAlgebra& a, const GeneralizedRep& g, const DenseCochain& phi) {
    const int n = a.dim();
    const int m = g.carrier_dim;
    const int N = n + m;
    if (phi.host_dim() != N || phi.target_dim() != m) throw InputError("differential_d: cochain shape mismatch");
    // membership: the all-V component must vanish
    std::vector<int> pidx;
    int fin;
    for (std::size_t k = 0; k < phi.key_count(); ++k) {
        if (is_zero(phi.value(k))) continue;
        phi.decode(k, pidx, fin);
        bool all_v = fin >= n;
        for (int p : pidx) {
            auto [s, t] = pair_of_index(N, p);
            if (s < n || t < n) all_v = false;
        }
        if (all_v)
            throw PreconditionError("differential_d: cochain has an all-V component at " + phi.key_string(k));
    }
    Matrix alpha_h = block_diag(a.alpha, g.endo);
    Report compat = compat_violations(phi, CompatibilityConstraint{alpha_h, g.endo});
    if (!compat.pass())
        throw PreconditionError("differential_d: cochain violates the compatibility constraint at " +
                                compat.violations.front().witness);
    DenseCochain s = lift_structure(a, g);
    DenseCochain d = graded_bracket(s, embed_fiber_target(phi, n, N), alpha_h);
    return project_fiber_target(d, n, m);
}

namespace {

// Kernel basis of {compatibility rows, forced-zero keys} over the full dense
// coordinate space at the given shape, returned as cochains.
std::vector<DenseCochain> constrained_basis(int host, int degree, int target, const Matrix& src_twist,
                                            const Matrix& tgt_twist, const std::vector<std::size_t>& zero_keys) {
    DenseCochain shape(host, degree, target);
    const std::size_t nkeys = shape.key_count();
    const std::size_t ncols = nkeys * std::size_t(target);
    SparseSystem sys(ncols);
    const int P = pair_count(host);
    std::vector<PairVec> dec(P);
    for (int p = 0; p < P; ++p) {
        auto [s, t] = pair_of_index(host, p);
        dec[p] = wedge_pairs(src_twist.col(s), src_twist.col(t));
    }
    std::vector<int> pidx;
    int fin;
    for (std::size_t k = 0; k < nkeys; ++k) {
        shape.decode(k, pidx, fin);
        for (int comp = 0; comp < target; ++comp) {
            SparseSystem::Row row;
            for (int c2 = 0; c2 < target; ++c2) {
                const Rational& t = tgt_twist.at(comp, c2);
                if (t != 0) row[k * target + c2] += t;
            }
            // subtract the twisted-slot expansion
            auto rec = [&](auto&& self, int depth, std::size_t partial, const Rational& coef) -> void {
                if (coef == 0) return;
                if (depth == degree) {
                    for (int u = 0; u < host; ++u) {
                        const Rational& cu = src_twist.at(u, fin);
                        if (cu == 0) continue;
                        row[(partial * host + u) * target + comp] -= coef * cu;
                    }
                    return;
                }
                for (const auto& [pi, c] : dec[pidx[depth]]) self(self, depth + 1, partial * P + pi, coef * c);
            };
            rec(rec, 0, 0, Rational(1));
            sys.add_row(std::move(row));
        }
    }
    for (std::size_t zk : zero_keys)
        for (int comp = 0; comp < target; ++comp) {
            SparseSystem::Row row;
            row[zk * std::size_t(target) + comp] = 1;
            sys.add_row(std::move(row));
        }
    std::vector<DenseCochain> basis;
    for (const Vec& v : sys.kernel()) {
        DenseCochain c(host, degree, target);
        for (std::size_t k = 0; k < nkeys; ++k)
            for (int comp = 0; comp < target; ++comp) c.value(k)[comp] = v[k * target + comp];
        basis.push_back(std::move(c));
    }
    return basis;
}

std::vector<std::size_t> all_v_keys(int n, int m, int degree) {
    const int N = n + m;
    DenseCochain shape(N, degree, 1);
    std::vector<std::size_t> out;
    std::vector<int> pidx;
    int fin;
    for (std::size_t k = 0; k < shape.key_count(); ++k) {
        shape.decode(k, pidx, fin);
        bool all_v = fin >= n;
        for (int p : pidx) {
            auto [s, t] = pair_of_index(N, p);
            if (s < n || t < n) all_v = false;
        }
        if (all_v) out.push_back(k);
    }
    return out;
}

} // namespace

std::vector<DenseCochain> admissible_cochain_basis(const HomAlgebra& a, const GeneralizedRep& g, int degree) {
    const int n = a.dim();
    const int m = g.carrier_dim;
    Matrix alpha_h = block_diag(a.alpha, g.endo);
    return constrained_basis(n + m, degree, m, alpha_h, g.endo, all_v_keys(n, m, degree));
}

std::vector<DenseCochain> ordinary_cochain_basis(const HomAlgebra& a, const Representation& r, int degree) {
    return constrained_basis(a.dim(), degree, r.carrier_dim, a.alpha, r.endo, {});
}

Vec flatten(const DenseCochain& phi) {
    Vec out;
    out.reserve(phi.key_count() * std::size_t(phi.target_dim()));
    for (std::size_t k = 0; k < phi.key_count(); ++k)
        for (int c = 0; c < phi.target_dim(); ++c) out.push_back(phi.value(k)[c]);
    return out;
}

std::vector<DenseCochain> cocycle_space(const HomAlgebra& a, const GeneralizedRep& g, int degree) {
    if (degree < 0 || degree > 2) throw InputError("cocycle_space: supported degrees are 0, 1, 2");
    auto basis = admissible_cochain_basis(a, g, degree);
    if (basis.empty()) return {};
    DenseCochain s = lift_structure(a, g);
    const int n = a.dim();
    const int N = n + g.carrier_dim;
    Matrix alpha_h = block_diag(a.alpha, g.endo);
    // columns of d restricted to the admissible subspace
    std::vector<Vec> images;
    images.reserve(basis.size());
    for (const auto& bvec : basis) {
        DenseCochain d = graded_bracket(s, embed_fiber_target(bvec, n, N), alpha_h);
        images.push_back(flatten(project_fiber_target(d, n, g.carrier_dim)));
    }
    Matrix dmat(int(images.front().size()), int(images.size()));
    for (int c = 0; c < int(images.size()); ++c)
        for (int r = 0; r < int(images[c].size()); ++r) dmat.at(r, c) = images[c][r];
    std::vector<DenseCochain> out;
    for (const Vec& coeffs : nullspace(dmat)) {
        DenseCochain z(N, degree, g.carrier_dim);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (coeffs[i] == 0) continue;
            DenseCochain scaled = basis[i];
            scaled.scale_in_place(coeffs[i]);
            z.add_in_place(scaled);
        }
        out.push_back(std::move(z));
    }
    return out;
}

CohomologyDims cohomology_dims(const HomAlgebra& a, const GeneralizedRep& g, int p, CohomologyFlavor flavor) {
    CohomologyDims dims;
    const int n = a.dim();
    if (flavor == CohomologyFlavor::generalized) {
        if (p < 1 || p > 2) throw InputError("cohomology_dims: generalized flavor supports p in {1,2}");
        dims.z = int(cocycle_space(a, g, p - 1).size());
        if (p >= 2) {
            auto below = admissible_cochain_basis(a, g, p - 2);
            DenseCochain s = lift_structure(a, g);
            Matrix alpha_h = block_diag(a.alpha, g.endo);
            std::vector<Vec> images;
            for (const auto& f : below) {
                DenseCochain d = graded_bracket(s, embed_fiber_target(f, n, n + g.carrier_dim), alpha_h);
                images.push_back(flatten(project_fiber_target(d, n, g.carrier_dim)));
            }
            dims.b = rank_of_rows(images);
        }
    } else {
        if (p < 1 || p > 3) throw InputError("cohomology_dims: ordinary flavor supports p in {1,2,3}");
        Representation r = forget_nu(g);
        auto at = ordinary_cochain_basis(a, r, p - 1);
        std::vector<Vec> images;
        for (const auto& f : at) images.push_back(flatten(delta_rho(a, r, f)));
        dims.z = int(at.size()) - rank_of_rows(images);
        if (p >= 2) {
            auto below = ordinary_cochain_basis(a, r, p - 2);
            std::vector<Vec> imgs;
            for (const auto& f : below) imgs.push_back(flatten(delta_rho(a, r, f)));
            dims.b = rank_of_rows(imgs);
        }
    }
    dims.h = dims.z - dims.b;
    return dims;
}

} // namespace hom3lie
