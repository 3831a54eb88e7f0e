#include "hom3lie/audit.hpp"

#include <functional>
#include <optional>

#include "hom3lie/errors.hpp"
#include "hom3lie/graded.hpp"
#include "hom3lie/problem.hpp"

namespace hom3lie {

namespace {

using Binding = std::map<std::string, Rational>;

std::string binding_str(const Binding& b) {
    std::string s;
    for (const auto& [k, v] : b) {
        if (!s.empty()) s += ",";
        s += k + "=" + to_string(v);
    }
    return s;
}

std::vector<Binding> grid(const std::vector<std::pair<std::string, std::vector<int>>>& axes) {
    std::vector<Binding> out{Binding{}};
    for (const auto& [name, values] : axes) {
        std::vector<Binding> next;
        for (const auto& base : out)
            for (int v : values) {
                Binding b = base;
                b[name] = Rational(v);
                next.push_back(std::move(b));
            }
        out = std::move(next);
    }
    return out;
}

// Runs a per-binding check over all bindings loadable from the file (bindings
// violating NONZERO are skipped). The check returns a discrepancy detail or
// nothing. One finding per claim: CONFIRMED iff no binding is discrepant.
struct ClaimRunner {
    const ProblemFile& file;
    const std::vector<Binding>& bindings;
    std::vector<AuditFinding>& findings;

    void run(const std::string& claim,
             const std::function<std::optional<std::string>(const LoadedProblem&)>& check) const {
        int checked = 0, bad = 0;
        std::string first;
        for (const auto& b : bindings) {
            LoadedProblem lp;
            try {
                lp = instantiate(file, b, LoadOptions{/*apply_twist=*/false});
            } catch (const LoadError&) {
                continue; // NONZERO filtered
            }
            ++checked;
            if (auto d = check(lp)) {
                ++bad;
                if (first.empty()) first = *d + " [at " + binding_str(b) + "]";
            }
        }
        AuditFinding f;
        f.claim = claim;
        f.confirmed = (bad == 0);
        if (bad == 0)
            f.detail = "holds at all " + std::to_string(checked) + " sampled instantiations";
        else
            f.detail = first + "; discrepant at " + std::to_string(bad) + "/" + std::to_string(checked) +
                       " instantiations";
        findings.push_back(std::move(f));
    }
};

std::string pair_name(int i, int j) { return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")"; }

Matrix twisted_rho(const LoadedProblem& lp, int i, int j) {
    return lp.twist_endo->mul(lp.genrep->rho_matrix(i, j));
}

void audit_fix_a(const std::string& dir, std::vector<AuditFinding>& findings) {
    ProblemFile file = ProblemFile::parse_file(dir + "/fix_a.genrep");
    auto bindings = grid({{"lambda", {2, 3}}, {"r1", {2, 3}}, {"r2", {2, 3}}, {"s", {2, 3}}});
    ClaimRunner run{file, bindings, findings};

    run.run("fix-a/untwisted-rho-is-representation", [](const LoadedProblem& lp) -> std::optional<std::string> {
        Report r = validate_representation(lp.algebra, forget_nu(*lp.genrep));
        if (r.pass()) return std::nullopt;
        return r.summary();
    });
    run.run("fix-a/untwisted-genrep-valid", [](const LoadedProblem& lp) -> std::optional<std::string> {
        Report r = validate_generalized_rep(lp.algebra, *lp.genrep);
        if (r.pass()) return std::nullopt;
        return r.summary();
    });
    run.run("fix-a/twisted-bracket [e1,e2,e3]_alpha = lambda*e1",
            [](const LoadedProblem& lp) -> std::optional<std::string> {
                HomAlgebra tw = twist_algebra(lp.raw_bracket, *lp.twist_alpha);
                Vec got = tw.bracket.lookup(0, 1, 2);
                Vec want = lp.claim_bracket->lookup(0, 1, 2);
                if (got == want) return std::nullopt;
                return "computed " + to_string(got) + " vs printed " + to_string(want);
            });
    // per-entry twisted-rho claims
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            for (int b = 0; b < 2; ++b) {
                std::string claim = "fix-a/rho-tilde" + pair_name(i, j) + "(v" + std::to_string(b + 1) + ")";
                run.run(claim, [=](const LoadedProblem& lp) -> std::optional<std::string> {
                    Vec got = twisted_rho(lp, i, j).col(b);
                    Vec want = rho_at(*lp.claim_rho, 2, i, j).col(b);
                    if (got == want) return std::nullopt;
                    return "A*rho gives " + to_string(got) + " vs printed " + to_string(want);
                });
            }
    for (int x = 0; x < 3; ++x) {
        std::string claim = "fix-a/nu-tilde(e" + std::to_string(x + 1) + ")(v1,v2)";
        run.run(claim, [=](const LoadedProblem& lp) -> std::optional<std::string> {
            Vec got = lp.twist_endo->apply(lp.genrep->nu_value(x, 0, 1));
            Vec want = nu_at(*lp.claim_nu, 2, x, 0, 1);
            if (got == want) return std::nullopt;
            return "A*nu gives " + to_string(got) + " vs printed " + to_string(want);
        });
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            std::string claim = "fix-a/twist-intertwining-rho" + pair_name(i, j);
            run.run(claim, [=](const LoadedProblem& lp) -> std::optional<std::string> {
                Matrix lhs = lp.twist_endo->mul(lp.genrep->rho_matrix(i, j));
                Matrix rhs =
                    lp.genrep->rho_vectors(lp.twist_alpha->col(i), lp.twist_alpha->col(j)).mul(*lp.twist_endo);
                if (lhs == rhs) return std::nullopt;
                return "identity Def2.2-Eq(5): A*rho" + pair_name(i, j) + " = " + lhs.to_string() +
                       " vs rho(a.,a.)*A = " + rhs.to_string();
            });
        }
    run.run("fix-a/twist-intertwining-nu", [](const LoadedProblem& lp) -> std::optional<std::string> {
        for (int x = 0; x < 3; ++x) {
            Vec lhs = lp.twist_endo->apply(lp.genrep->nu_value(x, 0, 1));
            Vec rhs = lp.genrep->nu_vectors(lp.twist_alpha->col(x), lp.twist_endo->col(0), lp.twist_endo->col(1));
            if (lhs != rhs)
                return "identity GenRep-compat-nu at e" + std::to_string(x + 1) + ": " + to_string(lhs) + " vs " +
                       to_string(rhs);
        }
        return std::nullopt;
    });
}

void audit_fix_b(const std::string& dir, std::vector<AuditFinding>& findings) {
    ProblemFile file = ProblemFile::parse_file(dir + "/fix_b.genrep");
    auto bindings = grid({{"a1", {2, 3}}, {"a2", {2, 3}}, {"s1", {2, 3}}, {"s2", {2, 3}}});
    ClaimRunner run{file, bindings, findings};

    run.run("fix-b/untwisted-nu-genrep-valid", [](const LoadedProblem& lp) -> std::optional<std::string> {
        Report r = validate_generalized_rep(lp.algebra, *lp.genrep);
        if (r.pass()) return std::nullopt;
        return r.summary();
    });
    run.run("fix-b/alpha-morphism", [](const LoadedProblem& lp) -> std::optional<std::string> {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k) {
                    Vec lhs = lp.twist_alpha->apply(lp.raw_bracket.lookup(i, j, k));
                    Vec rhs = lp.raw_bracket.apply(lp.twist_alpha->col(i), lp.twist_alpha->col(j),
                                                   lp.twist_alpha->col(k));
                    if (lhs != rhs)
                        return "identity alpha-morphism at (e" + std::to_string(i + 1) + ",e" +
                               std::to_string(j + 1) + ",e" + std::to_string(k + 1) + "): alpha[x,y,z] = " +
                               to_string(lhs) + " vs [ax,ay,az] = " + to_string(rhs);
                }
        return std::nullopt;
    });
    run.run("fix-b/twisted-bracket-claims", [](const LoadedProblem& lp) -> std::optional<std::string> {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k) {
                    Vec got = lp.raw_bracket.apply(lp.twist_alpha->col(i), lp.twist_alpha->col(j),
                                                   lp.twist_alpha->col(k));
                    Vec want = lp.claim_bracket->lookup(i, j, k);
                    if (got != want)
                        return "[be_i,be_j,be_k] at (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                               ",e" + std::to_string(k + 1) + ") = " + to_string(got) + " vs printed " +
                               to_string(want);
                }
        return std::nullopt;
    });
    run.run("fix-b/twist-intertwining-nu", [](const LoadedProblem& lp) -> std::optional<std::string> {
        for (int x = 0; x < 4; ++x) {
            Vec lhs = lp.twist_endo->apply(lp.genrep->nu_value(x, 0, 1));
            Vec rhs = lp.genrep->nu_vectors(lp.twist_alpha->col(x), lp.twist_endo->col(0), lp.twist_endo->col(1));
            if (lhs != rhs)
                return "identity GenRep-compat-nu at e" + std::to_string(x + 1) + ": " + to_string(lhs) + " vs " +
                       to_string(rhs);
        }
        return std::nullopt;
    });
    run.run("fix-b/nu-tilde(e4)(v1,v2)", [](const LoadedProblem& lp) -> std::optional<std::string> {
        Vec got = lp.twist_endo->apply(lp.genrep->nu_value(3, 0, 1));
        Vec want = nu_at(*lp.claim_nu, 2, 3, 0, 1);
        if (got == want) return std::nullopt;
        return "A*nu(e4) = " + to_string(got) + " vs printed " + to_string(want) +
               " (second coefficient differs by the factor s2)";
    });
}

std::vector<Binding> fixc_grid() {
    return grid({{"a1", {2, 3}},
                 {"a2", {2, 3}},
                 {"a3", {0, 2, 3}},
                 {"s", {2, 3}},
                 {"r1", {0, 2, 3}},
                 {"r2", {0, 2, 3}}});
}

std::optional<Binding> fixc_first_valid(const ProblemFile& file, int* valid_count = nullptr,
                                        std::string* first_str = nullptr) {
    std::optional<Binding> best;
    int count = 0;
    for (const auto& b : fixc_grid()) {
        LoadedProblem lp;
        try {
            lp = instantiate(file, b, LoadOptions{false});
        } catch (const LoadError&) {
            continue;
        }
        if (!validate_hom_algebra(lp.algebra).pass()) continue;
        if (!validate_generalized_rep(lp.algebra, *lp.genrep).pass()) continue;
        ++count;
        if (!best) {
            best = b;
            if (first_str) *first_str = binding_str(b);
        }
    }
    if (valid_count) *valid_count = count;
    return best;
}

void audit_fix_c(const std::string& dir, std::vector<AuditFinding>& findings) {
    ProblemFile file = ProblemFile::parse_file(dir + "/fix_c.genrep");
    int valid_count = 0;
    std::string first_str;
    auto best = fixc_first_valid(file, &valid_count, &first_str);
    int total = 0;
    for (const auto& b : fixc_grid()) {
        try {
            (void)instantiate(file, b, LoadOptions{false});
            ++total;
        } catch (const LoadError&) {
        }
    }
    {
        AuditFinding f;
        f.claim = "fix-c/genrep-valid";
        f.confirmed = valid_count == total && total > 0;
        f.detail = std::to_string(valid_count) + "/" + std::to_string(total) +
                   " grid instantiations validate" +
                   (best ? ("; first valid: " + first_str) : "; none validate");
        findings.push_back(std::move(f));
    }
    if (!best) {
        for (int c = 1; c <= 3; ++c) {
            AuditFinding f;
            f.claim = "fix-c/2-cocycle-c" + std::to_string(c);
            f.confirmed = false;
            f.detail = "no valid instantiation available to check against";
            findings.push_back(std::move(f));
        }
        return;
    }
    LoadedProblem lp = instantiate(file, *best, LoadOptions{false});
    for (int c = 0; c < 3; ++c) {
        AuditFinding f;
        f.claim = "fix-c/2-cocycle-c" + std::to_string(c + 1);
        if (int(lp.cocycle_claims.size()) <= c) {
            f.confirmed = false;
            f.detail = "claim table missing from fixture";
            findings.push_back(std::move(f));
            continue;
        }
        DenseCochain dense = lp.cocycle_claims[c].to_dense();
        Matrix alpha_h = block_diag(lp.algebra.alpha, lp.genrep->endo);
        Report compat = compat_violations(dense, CompatibilityConstraint{alpha_h, lp.genrep->endo});
        if (!compat.pass()) {
            f.confirmed = false;
            f.detail = "identity compatibility at " + compat.violations.front().witness + " [at " +
                       binding_str(*best) + "]";
            findings.push_back(std::move(f));
            continue;
        }
        DenseCochain s = lift_structure(lp.algebra, *lp.genrep);
        DenseCochain d = graded_bracket(s, embed_fiber_target(dense, lp.algebra.dim(), lp.algebra.dim() + 2),
                                        alpha_h);
        if (d.is_zero()) {
            f.confirmed = true;
            f.detail = "d(phi) = 0 exactly [at " + binding_str(*best) + "]";
        } else {
            f.confirmed = false;
            f.detail = "identity d(phi)=0 fails at key " + d.first_nonzero_key() + " [at " + binding_str(*best) +
                       "]";
        }
        findings.push_back(std::move(f));
    }
}

} // namespace

std::vector<AuditFinding> audit_paper(const std::string& fixtures_dir) {
    std::vector<AuditFinding> findings;
    audit_fix_a(fixtures_dir, findings);
    audit_fix_b(fixtures_dir, findings);
    audit_fix_c(fixtures_dir, findings);
    return findings;
}

std::map<std::string, Rational> fixc_selected_binding(const std::string& fixtures_dir) {
    ProblemFile file = ProblemFile::parse_file(fixtures_dir + "/fix_c.genrep");
    auto best = fixc_first_valid(file);
    if (!best) throw InputError("fix-c: no valid instantiation in the default grid");
    return *best;
}

} // namespace hom3lie
