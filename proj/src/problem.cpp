#include "hom3lie/problem.hpp"

#include <fstream>
#include <sstream>

#include "hom3lie/errors.hpp"

namespace hom3lie {

namespace {

// Sections whose lines are "indices... : expr...". The map value is the
// number of leading indices; -1 marks matrix sections ("i j <one expr>").
struct SectionSpec {
    int indices;
    bool vector_valued; // expr count checked against dim/carrier at load
};

const std::map<std::string, SectionSpec>& section_specs() {
    static const std::map<std::string, SectionSpec> specs = {
        {"ALPHA", {2, false}},        {"ENDO", {2, false}},
        {"TWIST-ALPHA", {2, false}},  {"TWIST-ENDO", {2, false}},
        {"BRACKET", {3, true}},       {"TWISTED-BRACKET-CLAIM", {3, true}},
        {"RHO", {4, false}},          {"TWISTED-RHO-CLAIM", {4, false}},
        {"NU", {3, true}},            {"TWISTED-NU-CLAIM", {3, true}},
        {"OMEGA", {3, true}},         {"PHI1", {3, true}},
        {"PHI2", {3, true}},          {"PHI3", {3, true}},
        {"COCYCLE-CLAIM-1", {3, true}}, {"COCYCLE-CLAIM-2", {3, true}},
        {"COCYCLE-CLAIM-3", {3, true}}, {"VALUES", {-2, true}},
    };
    return specs;
}

bool is_integer_token(const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

const std::vector<TableLine>* ProblemFile::section(const std::string& name) const {
    for (const auto& [n, lines] : sections)
        if (n == name) return &lines;
    return nullptr;
}

ProblemFile ProblemFile::parse(const std::string& text) {
    ProblemFile out;
    std::istringstream in(text);
    std::string line;
    std::vector<TableLine>* current = nullptr;
    std::string current_name;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        auto fail = [&](const std::string& msg) -> void {
            throw LoadError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (head == "KIND") {
            if (toks.size() != 2) fail("KIND expects one value");
            out.kind = toks[1];
            current = nullptr;
        } else if (head == "DIM") {
            if (toks.size() != 2 || !is_integer_token(toks[1])) fail("DIM expects an integer");
            out.dim = std::stoi(toks[1]);
            current = nullptr;
        } else if (head == "CARRIER") {
            if (toks.size() != 2 || !is_integer_token(toks[1])) fail("CARRIER expects an integer");
            out.carrier = std::stoi(toks[1]);
            current = nullptr;
        } else if (head == "DEGREE") {
            if (toks.size() != 2 || !is_integer_token(toks[1])) fail("DEGREE expects an integer");
            out.degree = std::stoi(toks[1]);
            current = nullptr;
        } else if (head == "TWIST") {
            if (toks.size() != 2 || (toks[1] != "yes" && toks[1] != "no")) fail("TWIST expects yes or no");
            out.twist = (toks[1] == "yes");
            current = nullptr;
        } else if (head == "PARAMS") {
            for (std::size_t i = 1; i < toks.size(); ++i) out.params.push_back(toks[i]);
            current = nullptr;
        } else if (head == "NONZERO") {
            for (std::size_t i = 1; i < toks.size(); ++i) {
                try {
                    out.nonzero.push_back(ScalarExpr::parse(toks[i]));
                } catch (const ParseError& e) {
                    fail(std::string("bad NONZERO expression: ") + e.what());
                }
            }
            current = nullptr;
        } else if (section_specs().count(head)) {
            if (toks.size() != 1) fail("section header must stand alone");
            out.sections.emplace_back(head, std::vector<TableLine>{});
            current = &out.sections.back().second;
            current_name = head;
        } else if (current) {
            const SectionSpec& spec = section_specs().at(current_name);
            TableLine tl;
            std::size_t i = 0;
            int want = spec.indices;
            if (want == -2) {
                // VALUES: indices run until the ':' token
                while (i < toks.size() && toks[i] != ":") {
                    if (!is_integer_token(toks[i])) fail("VALUES line: expected index or ':'");
                    tl.indices.push_back(std::stoi(toks[i]));
                    ++i;
                }
            } else {
                for (; i < std::size_t(want); ++i) {
                    if (i >= toks.size() || !is_integer_token(toks[i]))
                        fail("expected " + std::to_string(want) + " indices in " + current_name);
                    tl.indices.push_back(std::stoi(toks[i]));
                }
            }
            if (spec.vector_valued) {
                if (i >= toks.size() || toks[i] != ":") fail("expected ':' before values in " + current_name);
                ++i;
                for (; i < toks.size(); ++i) {
                    try {
                        tl.exprs.push_back(ScalarExpr::parse(toks[i]));
                    } catch (const ParseError& e) {
                        fail(std::string("bad expression '") + toks[i] + "': " + e.what());
                    }
                }
            } else {
                // matrix entry: the remainder of the line is one expression
                std::string rest;
                for (; i < toks.size(); ++i) {
                    if (!rest.empty()) rest += " ";
                    rest += toks[i];
                }
                if (rest.empty()) fail("missing entry expression in " + current_name);
                try {
                    tl.exprs.push_back(ScalarExpr::parse(rest));
                } catch (const ParseError& e) {
                    fail(std::string("bad expression '") + rest + "': " + e.what());
                }
            }
            current->push_back(std::move(tl));
        } else {
            fail("unrecognized directive '" + head + "'");
        }
    }
    if (out.kind.empty()) throw LoadError("missing KIND");
    if (out.dim <= 0) throw LoadError("missing or bad DIM");
    return out;
}

ProblemFile ProblemFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string ProblemFile::print() const {
    std::ostringstream out;
    out << "KIND " << kind << "\n";
    out << "DIM " << dim << "\n";
    if (carrier > 0) out << "CARRIER " << carrier << "\n";
    if (degree > 0) out << "DEGREE " << degree << "\n";
    if (twist) out << "TWIST yes\n";
    if (!params.empty()) {
        out << "PARAMS";
        for (const auto& p : params) out << " " << p;
        out << "\n";
    }
    if (!nonzero.empty()) {
        out << "NONZERO";
        for (const auto& e : nonzero) out << " " << e.to_string();
        out << "\n";
    }
    for (const auto& [name, lines] : sections) {
        out << name << "\n";
        const SectionSpec& spec = section_specs().at(name);
        for (const auto& tl : lines) {
            std::string sep;
            for (int idx : tl.indices) {
                out << sep << idx;
                sep = " ";
            }
            if (spec.vector_valued) out << " :";
            for (const auto& e : tl.exprs) out << " " << e.to_string();
            out << "\n";
        }
    }
    return out.str();
}

namespace {

Rational eval_checked(const ScalarExpr& e, const std::map<std::string, Rational>& env) { return e.eval(env); }

Matrix matrix_from(const std::vector<TableLine>& lines, int rows, int cols,
                   const std::map<std::string, Rational>& env, const std::string& what) {
    Matrix m(rows, cols);
    for (const auto& tl : lines) {
        int i = tl.indices[0], j = tl.indices[1];
        if (i < 0 || i >= rows || j < 0 || j >= cols) throw LoadError(what + ": index out of range");
        m.at(i, j) = eval_checked(tl.exprs[0], env);
    }
    return m;
}

SkewTensor3 bracket_from(const std::vector<TableLine>& lines, int dim, int value_dim,
                         const std::map<std::string, Rational>& env, const std::string& what) {
    SkewTensor3 t(dim, value_dim);
    for (const auto& tl : lines) {
        if (int(tl.exprs.size()) != value_dim)
            throw LoadError(what + ": expected " + std::to_string(value_dim) + " coefficients");
        Vec v(value_dim);
        for (int c = 0; c < value_dim; ++c) v[c] = eval_checked(tl.exprs[c], env);
        t.set(tl.indices[0], tl.indices[1], tl.indices[2], std::move(v));
    }
    return t;
}

RhoTable rho_from(const std::vector<TableLine>& lines, int n, int m, const std::map<std::string, Rational>& env) {
    std::map<std::pair<int, int>, Matrix> acc;
    for (const auto& tl : lines) {
        int i = tl.indices[0], j = tl.indices[1], a = tl.indices[2], b = tl.indices[3];
        if (i < 0 || i >= n || j < 0 || j >= n || a < 0 || a >= m || b < 0 || b >= m)
            throw LoadError("RHO: index out of range");
        if (i == j) throw LoadError("RHO: repeated algebra indices");
        int sgn = 1;
        if (i > j) {
            std::swap(i, j);
            sgn = -1;
        }
        auto it = acc.find({i, j});
        if (it == acc.end()) it = acc.emplace(std::make_pair(i, j), Matrix(m, m)).first;
        Rational val = eval_checked(tl.exprs[0], env);
        it->second.at(a, b) += (sgn > 0 ? val : -val);
    }
    RhoTable out;
    for (auto& [k, mat] : acc)
        if (!mat.is_zero()) out[k] = std::move(mat);
    return out;
}

NuTable nu_from(const std::vector<TableLine>& lines, int n, int m, const std::map<std::string, Rational>& env) {
    NuTable out;
    for (const auto& tl : lines) {
        int x = tl.indices[0], a = tl.indices[1], b = tl.indices[2];
        if (x < 0 || x >= n || a < 0 || a >= m || b < 0 || b >= m) throw LoadError("NU: index out of range");
        if (a == b) throw LoadError("NU: repeated carrier indices");
        if (int(tl.exprs.size()) != m) throw LoadError("NU: expected " + std::to_string(m) + " coefficients");
        Vec v(m);
        for (int c = 0; c < m; ++c) v[c] = eval_checked(tl.exprs[c], env);
        int sgn = 1;
        if (a > b) {
            std::swap(a, b);
            sgn = -1;
        }
        if (sgn < 0) v = scale(Rational(-1), v);
        if (!is_zero(v)) out[x][{a, b}] = std::move(v);
    }
    return out;
}

} // namespace

LoadedProblem instantiate(const ProblemFile& file, const std::map<std::string, Rational>& bindings,
                          const LoadOptions& opts) {
    for (const auto& p : file.params)
        if (!bindings.count(p)) throw LoadError("unbound parameter '" + p + "'");
    for (const auto& nz : file.nonzero)
        if (nz.eval(bindings) == 0)
            throw LoadError("nonzero condition violated: " + nz.to_string() + " = 0");
    LoadedProblem out;
    out.kind = file.kind;
    out.bindings = bindings;
    const int n = file.dim;
    const int m = file.carrier;
    auto need = [&](const char* sec) -> const std::vector<TableLine>& {
        const auto* s = file.section(sec);
        if (!s) throw LoadError(std::string("missing section ") + sec);
        return *s;
    };
    out.raw_alpha = file.section("ALPHA") ? matrix_from(*file.section("ALPHA"), n, n, bindings, "ALPHA")
                                          : Matrix::identity(n);
    out.raw_bracket = bracket_from(need("BRACKET"), n, n, bindings, "BRACKET");
    if (file.twist && opts.apply_twist) {
        out.algebra = twist_algebra(out.raw_bracket, out.raw_alpha);
        out.twisted = true;
    } else {
        out.algebra = HomAlgebra{out.raw_bracket, out.raw_alpha};
    }
    if (file.kind == "algebra") return out;

    if (m <= 0) throw LoadError("missing or bad CARRIER");
    Matrix endo = file.section("ENDO") ? matrix_from(*file.section("ENDO"), m, m, bindings, "ENDO")
                                       : Matrix::identity(m);
    if (file.section("TWIST-ALPHA"))
        out.twist_alpha = matrix_from(*file.section("TWIST-ALPHA"), n, n, bindings, "TWIST-ALPHA");
    if (file.section("TWIST-ENDO"))
        out.twist_endo = matrix_from(*file.section("TWIST-ENDO"), m, m, bindings, "TWIST-ENDO");

    RhoTable rho = file.section("RHO") ? rho_from(*file.section("RHO"), n, m, bindings) : RhoTable{};
    NuTable nu = file.section("NU") ? nu_from(*file.section("NU"), n, m, bindings) : NuTable{};

    if (file.kind == "representation") {
        Representation r;
        r.carrier_dim = m;
        r.rho = rho;
        r.endo = endo;
        out.rep = std::move(r);
        return out;
    }

    GeneralizedRep g;
    g.carrier_dim = m;
    g.rho = rho;
    g.nu = nu;
    g.endo = endo;
    out.genrep = std::move(g);

    // audit claims
    if (file.section("TWISTED-BRACKET-CLAIM"))
        out.claim_bracket = bracket_from(*file.section("TWISTED-BRACKET-CLAIM"), n, n, bindings,
                                         "TWISTED-BRACKET-CLAIM");
    if (file.section("TWISTED-RHO-CLAIM"))
        out.claim_rho = rho_from(*file.section("TWISTED-RHO-CLAIM"), n, m, bindings);
    if (file.section("TWISTED-NU-CLAIM")) out.claim_nu = nu_from(*file.section("TWISTED-NU-CLAIM"), n, m, bindings);
    for (const char* sec : {"COCYCLE-CLAIM-1", "COCYCLE-CLAIM-2", "COCYCLE-CLAIM-3"}) {
        if (const auto* lines = file.section(sec)) {
            ComponentCochain2 c(n, m);
            for (const auto& tl : *lines) {
                if (int(tl.exprs.size()) != m) throw LoadError(std::string(sec) + ": bad coefficient count");
                Vec v(m);
                for (int cc = 0; cc < m; ++cc) v[cc] = eval_checked(tl.exprs[cc], bindings);
                c.set_phi2(tl.indices[0], tl.indices[1], tl.indices[2], std::move(v));
            }
            out.cocycle_claims.push_back(std::move(c));
        }
    }

    if (file.kind == "genrep") return out;

    if (file.kind == "cochain") {
        out.degree = file.degree;
        const int N = n + m;
        if (file.section("PHI1") || file.section("PHI2") || file.section("PHI3")) {
            if (file.degree != 1) throw LoadError("component sections require DEGREE 1");
            ComponentCochain2 c(n, m);
            auto fill = [&](const char* sec, int which) {
                const auto* lines = file.section(sec);
                if (!lines) return;
                for (const auto& tl : *lines) {
                    if (int(tl.exprs.size()) != m) throw LoadError(std::string(sec) + ": bad coefficient count");
                    Vec v(m);
                    for (int cc = 0; cc < m; ++cc) v[cc] = eval_checked(tl.exprs[cc], bindings);
                    if (which == 1) c.set_phi1(tl.indices[0], tl.indices[1], tl.indices[2], std::move(v));
                    else if (which == 2) c.set_phi2(tl.indices[0], tl.indices[1], tl.indices[2], std::move(v));
                    else c.set_phi3(tl.indices[0], tl.indices[1], tl.indices[2], std::move(v));
                }
            };
            fill("PHI1", 1);
            fill("PHI2", 2);
            fill("PHI3", 3);
            out.cochain = c.to_dense();
        } else {
            const auto& lines = need("VALUES");
            DenseCochain c(N, file.degree, m);
            for (const auto& tl : lines) {
                if (int(tl.indices.size()) != 2 * file.degree + 1)
                    throw LoadError("VALUES: expected " + std::to_string(2 * file.degree + 1) + " indices");
                if (int(tl.exprs.size()) != m) throw LoadError("VALUES: bad coefficient count");
                std::vector<std::pair<int, int>> pairs;
                for (int s = 0; s < file.degree; ++s)
                    pairs.emplace_back(tl.indices[2 * s], tl.indices[2 * s + 1]);
                int fin = tl.indices.back();
                // canonicalize with sign
                int sgn = 1;
                std::vector<int> pidx;
                for (auto [s, t] : pairs) {
                    if (s == t) throw LoadError("VALUES: repeated pair index");
                    if (s < 0 || t < 0 || s >= N || t >= N || fin < 0 || fin >= N)
                        throw LoadError("VALUES: index out of range");
                    if (s > t) {
                        std::swap(s, t);
                        sgn = -sgn;
                    }
                    pidx.push_back(pair_index(N, s, t));
                }
                Vec v(m);
                for (int cc = 0; cc < m; ++cc) v[cc] = eval_checked(tl.exprs[cc], bindings);
                if (sgn < 0) v = scale(Rational(-1), v);
                Vec& cell = c.value(c.key(pidx, fin));
                for (int cc = 0; cc < m; ++cc) cell[cc] += v[cc];
            }
            out.cochain = std::move(c);
        }
        return out;
    }

    if (file.kind == "extension") {
        out.fiber_dim = m;
        out.omega = file.section("OMEGA") ? bracket_from(*file.section("OMEGA"), n, m, bindings, "OMEGA")
                                          : SkewTensor3(n, m);
        return out;
    }

    throw LoadError("unknown KIND '" + file.kind + "'");
}

LoadedProblem load_problem(const std::string& path, const std::map<std::string, Rational>& bindings,
                           const LoadOptions& opts) {
    return instantiate(ProblemFile::parse_file(path), bindings, opts);
}

} // namespace hom3lie
