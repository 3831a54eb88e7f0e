#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hom3lie/cochain.hpp"
#include "hom3lie/expr.hpp"
#include "hom3lie/representation.hpp"

namespace hom3lie {

/// One data line of a table section: leading integer indices, then scalar
/// expressions (vector-valued sections separate the two groups with ':').
struct TableLine {
    std::vector<int> indices;
    std::vector<ScalarExpr> exprs;
};

/// Parsed (uninstantiated) problem file. Line-oriented text with explicit
/// section headers; every scalar is an expression over the declared
/// parameters. See fixtures/ for the concrete layout per kind.
struct ProblemFile {
    std::string kind; // algebra | representation | genrep | cochain | extension
    int dim = 0;
    int carrier = 0;
    int degree = 0;
    bool twist = false;
    std::vector<std::string> params;
    std::vector<ScalarExpr> nonzero;
    std::vector<std::pair<std::string, std::vector<TableLine>>> sections;

    static ProblemFile parse(const std::string& text);
    static ProblemFile parse_file(const std::string& path);

    const std::vector<TableLine>* section(const std::string& name) const;

    /// Canonical reserialization; parse(print()) instantiates identically.
    std::string print() const;
};

/// A fully instantiated problem: exact rationals only, ready for the kernel.
struct LoadedProblem {
    std::string kind;
    std::map<std::string, Rational> bindings;

    HomAlgebra algebra;      // after twisting when requested
    SkewTensor3 raw_bracket; // before twisting
    Matrix raw_alpha;
    bool twisted = false;

    std::optional<Representation> rep;
    std::optional<GeneralizedRep> genrep;
    std::optional<Matrix> twist_alpha;
    std::optional<Matrix> twist_endo;

    int degree = 0;
    std::optional<DenseCochain> cochain;

    int fiber_dim = 0;
    std::optional<SkewTensor3> omega;

    // instantiated audit claims, when the file carries them
    std::optional<SkewTensor3> claim_bracket;
    std::optional<RhoTable> claim_rho;
    std::optional<NuTable> claim_nu;
    std::vector<ComponentCochain2> cocycle_claims;
};

struct LoadOptions {
    /// Apply twist_algebra when the file says TWIST yes (the audit loads raw).
    bool apply_twist = true;
};

/// Parses, binds, checks the NONZERO side conditions and builds the typed
/// value. Unbound parameters, violated side conditions and dimension
/// mismatches are distinct LoadErrors.
LoadedProblem load_problem(const std::string& path, const std::map<std::string, Rational>& bindings,
                           const LoadOptions& opts = {});

LoadedProblem instantiate(const ProblemFile& file, const std::map<std::string, Rational>& bindings,
                          const LoadOptions& opts = {});

} // namespace hom3lie
