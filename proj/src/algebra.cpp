#include "hom3lie/algebra.hpp"

#include "hom3lie/errors.hpp"
#include "hom3lie/report.hpp"

namespace hom3lie {

namespace {

std::string triple_str(int i, int j, int k) {
    return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ",e" + std::to_string(k + 1) + ")";
}

std::string tuple5_str(int u, int v, int x, int y, int z) {
    return "(e" + std::to_string(u + 1) + ",e" + std::to_string(v + 1) + "|e" + std::to_string(x + 1) + ",e" +
           std::to_string(y + 1) + ",e" + std::to_string(z + 1) + ")";
}

Vec basis_vec(int n, int i) {
    Vec v = zero_vec(n);
    v[i] = 1;
    return v;
}

// Hom-Filippov-Jacobi residual: lhs - rhs at one 5-tuple under the given twist.
Vec hom_fj_residual(const SkewTensor3& br, const Matrix& alpha, int u, int v, int x, int y, int z) {
    const int n = br.dim();
    Vec au = alpha.col(u), av = alpha.col(v);
    Vec ax = alpha.col(x), ay = alpha.col(y), az = alpha.col(z);
    Vec lhs = br.apply(au, av, br.lookup(x, y, z));
    Vec rhs = br.apply(br.lookup(u, v, x), ay, az);
    rhs = add(rhs, br.apply(ax, br.lookup(u, v, y), az));
    rhs = add(rhs, br.apply(ax, ay, br.lookup(u, v, z)));
    (void)n;
    return sub(lhs, rhs);
}

Report check_hom_fj(const SkewTensor3& br, const Matrix& alpha, const std::string& label) {
    Report rep;
    const int n = br.dim();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    for (int z = y + 1; z < n; ++z) {
                        Vec res = hom_fj_residual(br, alpha, u, v, x, y, z);
                        if (!is_zero(res)) {
                            Vec lhs = br.apply(alpha.col(u), alpha.col(v), br.lookup(x, y, z));
                            rep.add(label, tuple5_str(u, v, x, y, z), to_string(lhs), to_string(sub(lhs, res)));
                        }
                    }
    return rep;
}

} // namespace

void FundamentalObject::add_term(int s, int t, const Rational& c) {
    if (s < 0 || s >= dim_ || t < 0 || t >= dim_) throw InputError("fundamental object index out of range");
    if (s == t || c == 0) return;
    auto key = s < t ? std::make_pair(s, t) : std::make_pair(t, s);
    Rational val = (s < t ? c : -c);
    auto it = comps_.find(key);
    if (it == comps_.end()) {
        comps_.emplace(key, val);
    } else {
        it->second += val;
        if (it->second == 0) comps_.erase(it);
    }
}

Rational FundamentalObject::component(int s, int t) const {
    if (s == t) return 0;
    auto key = s < t ? std::make_pair(s, t) : std::make_pair(t, s);
    auto it = comps_.find(key);
    if (it == comps_.end()) return 0;
    return s < t ? it->second : -it->second;
}

bool FundamentalObject::is_zero() const { return comps_.empty(); }

std::string FundamentalObject::to_string() const {
    if (comps_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : comps_) {
        if (!s.empty()) s += " + ";
        s += hom3lie::to_string(c) + "*(e" + std::to_string(key.first + 1) + "^e" + std::to_string(key.second + 1) + ")";
    }
    return s;
}

FundamentalObject wedge(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InputError("wedge: dimension mismatch");
    FundamentalObject out(int(a.size()));
    for (int s = 0; s < int(a.size()); ++s)
        for (int t = s + 1; t < int(b.size()); ++t) out.add_term(s, t, a[s] * b[t] - a[t] * b[s]);
    return out;
}

Report validate_filippov(const SkewTensor3& bracket) {
    return check_hom_fj(bracket, Matrix::identity(bracket.dim()), "Filippov-Jacobi");
}

Report validate_hom_algebra(const HomAlgebra& a) {
    Report rep;
    const int n = a.dim();
    if (a.alpha.rows() != n || a.alpha.cols() != n) throw InputError("validate_hom_algebra: alpha shape mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec lhs = a.alpha.apply(a.bracket.lookup(i, j, k));
                Vec rhs = a.bracket.apply(a.alpha.col(i), a.alpha.col(j), a.alpha.col(k));
                if (lhs != rhs) rep.add("alpha-morphism", triple_str(i, j, k), to_string(lhs), to_string(rhs));
            }
    rep.merge(check_hom_fj(a.bracket, a.alpha, "Hom-Filippov-Jacobi"));
    return rep;
}

HomAlgebra twist_algebra(const SkewTensor3& bracket, const Matrix& alpha) {
    const int n = bracket.dim();
    if (alpha.rows() != n || alpha.cols() != n) throw InputError("twist_algebra: alpha shape mismatch");
    Report fj = validate_filippov(bracket);
    if (!fj.pass())
        throw PreconditionError("twist_algebra: bracket violates Filippov-Jacobi at " + fj.violations.front().witness);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec lhs = alpha.apply(bracket.lookup(i, j, k));
                Vec rhs = bracket.apply(alpha.col(i), alpha.col(j), alpha.col(k));
                if (lhs != rhs)
                    throw PreconditionError("twist_algebra: alpha is not a morphism at " + triple_str(i, j, k) +
                                            ": alpha[x,y,z] = " + to_string(lhs) + " vs [ax,ay,az] = " + to_string(rhs));
            }
    HomAlgebra out;
    out.bracket = SkewTensor3(n);
    for (const auto& [key, cell] : bracket.cells()) out.bracket.set(key[0], key[1], key[2], alpha.apply(cell));
    out.alpha = alpha;
    return out;
}

FundamentalObject fundamental_bracket(const HomAlgebra& a, const FundamentalObject& x,
                                      const FundamentalObject& y) {
    const int n = a.dim();
    if (x.dim() != n || y.dim() != n) throw InputError("fundamental_bracket: dimension mismatch");
    FundamentalObject out(n);
    for (const auto& [kx, cx] : x.components()) {
        for (const auto& [ky, cy] : y.components()) {
            Rational c = cx * cy;
            Vec b1 = a.bracket.lookup(kx.first, kx.second, ky.first);
            Vec ay2 = a.alpha.col(ky.second);
            FundamentalObject t1 = wedge(b1, ay2);
            Vec ay1 = a.alpha.col(ky.first);
            Vec b2 = a.bracket.lookup(kx.first, kx.second, ky.second);
            FundamentalObject t2 = wedge(ay1, b2);
            for (const auto& [k, v] : t1.components()) out.add_term(k.first, k.second, c * v);
            for (const auto& [k, v] : t2.components()) out.add_term(k.first, k.second, c * v);
        }
    }
    return out;
}

Report validate_hom_leibniz(const HomAlgebra& a) {
    Report rep;
    const int n = a.dim();
    auto alpha_bar = [&](const FundamentalObject& f) {
        FundamentalObject out(n);
        for (const auto& [k, c] : f.components()) {
            FundamentalObject w = wedge(a.alpha.col(k.first), a.alpha.col(k.second));
            for (const auto& [kk, v] : w.components()) out.add_term(kk.first, kk.second, c * v);
        }
        return out;
    };
    std::vector<FundamentalObject> basis;
    std::vector<std::string> names;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            FundamentalObject f(n);
            f.add_term(s, t, 1);
            basis.push_back(f);
            names.push_back("e" + std::to_string(s + 1) + "^e" + std::to_string(t + 1));
        }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            FundamentalObject lhs = alpha_bar(fundamental_bracket(a, basis[i], basis[j]));
            FundamentalObject rhs = fundamental_bracket(a, alpha_bar(basis[i]), alpha_bar(basis[j]));
            if (!(lhs == rhs))
                rep.add("Leibniz-multiplicativity", "(" + names[i] + "," + names[j] + ")", lhs.to_string(),
                        rhs.to_string());
        }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t k = 0; k < basis.size(); ++k) {
                FundamentalObject lhs =
                    fundamental_bracket(a, alpha_bar(basis[i]), fundamental_bracket(a, basis[j], basis[k]));
                FundamentalObject r1 =
                    fundamental_bracket(a, fundamental_bracket(a, basis[i], basis[j]), alpha_bar(basis[k]));
                FundamentalObject r2 =
                    fundamental_bracket(a, alpha_bar(basis[j]), fundamental_bracket(a, basis[i], basis[k]));
                FundamentalObject rhs(n);
                for (const auto& [kk, v] : r1.components()) rhs.add_term(kk.first, kk.second, v);
                for (const auto& [kk, v] : r2.components()) rhs.add_term(kk.first, kk.second, v);
                if (!(lhs == rhs))
                    rep.add("Hom-Leibniz-identity", "(" + names[i] + "," + names[j] + "," + names[k] + ")",
                            lhs.to_string(), rhs.to_string());
            }
    return rep;
}

} // namespace hom3lie
