#include "hom3lie/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "hom3lie/audit.hpp"
#include "hom3lie/errors.hpp"
#include "hom3lie/extension.hpp"
#include "hom3lie/graded.hpp"
#include "hom3lie/problem.hpp"

namespace hom3lie {

namespace {

using nlohmann::json;

std::map<std::string, Rational> parse_bindings(const std::vector<std::string>& binds) {
    std::map<std::string, Rational> out;
    for (const auto& b : binds) {
        auto eq = b.find('=');
        if (eq == std::string::npos) throw InputError("--bind expects name=value, got '" + b + "'");
        std::string name = b.substr(0, eq);
        std::string value = b.substr(eq + 1);
        out[name] = ScalarExpr::parse(value).eval({});
    }
    return out;
}

json bindings_json(const std::map<std::string, Rational>& b) {
    json j = json::object();
    for (const auto& [k, v] : b) j[k] = to_string(v);
    return j;
}

json report_json(const Report& rep) {
    json arr = json::array();
    for (const auto& v : rep.violations)
        arr.push_back({{"identity", v.identity}, {"witness", v.witness}, {"left", v.left}, {"right", v.right}});
    return arr;
}

void print_report(const Report& rep, std::ostream& out) {
    if (rep.pass()) {
        out << "all checks pass\n";
        return;
    }
    out << rep.violations.size() << " violation(s):\n";
    for (const auto& v : rep.violations)
        out << "  " << v.identity << " at " << v.witness << ": " << v.left << " vs " << v.right << "\n";
}

struct CommandContext {
    std::string file;
    std::vector<std::string> binds;
    bool json_out = false;
    int degree = 2;
    std::string flavor = "generalized";
    std::string fixtures = "fixtures";
};

int finish_report(const std::string& command, const CommandContext& ctx,
                  const std::map<std::string, Rational>& bindings, const Report& rep, std::ostream& out,
                  const json& dims = json::object()) {
    if (ctx.json_out) {
        json j = {{"command", command},
                  {"inputs", json::array({ctx.file})},
                  {"bindings", bindings_json(bindings)},
                  {"findings", report_json(rep)},
                  {"dims", dims}};
        out << j.dump(2) << "\n";
    } else {
        print_report(rep, out);
        for (auto it = dims.begin(); it != dims.end(); ++it)
            out << it.key() << " = " << it.value().dump() << "\n";
    }
    return rep.pass() ? 0 : 1;
}

void print_bracket(const SkewTensor3& t, std::ostream& out) {
    if (t.cells().empty()) {
        out << "  (zero bracket)\n";
        return;
    }
    for (const auto& [key, cell] : t.cells())
        out << "  [e" << key[0] + 1 << ",e" << key[1] + 1 << ",e" << key[2] + 1 << "] = " << to_string(cell)
            << "\n";
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"exact kernel for multiplicative 3-Hom-Lie algebras"};
    app.name("hom3");
    CommandContext ctx;

    auto add_common = [&](CLI::App* cmd, bool with_file = true) {
        if (with_file) cmd->add_option("file", ctx.file, "problem file")->required();
        cmd->add_option("--bind", ctx.binds, "parameter binding name=value (repeatable)");
        cmd->add_flag("--json", ctx.json_out, "emit one structured JSON document");
    };

    CLI::App* c_alg = app.add_subcommand("check-algebra", "validate a 3-Hom-Lie algebra file");
    add_common(c_alg);
    CLI::App* c_rep = app.add_subcommand("check-rep", "validate a representation file");
    add_common(c_rep);
    CLI::App* c_gen = app.add_subcommand("check-genrep", "validate a generalized representation file");
    add_common(c_gen);
    CLI::App* c_twist = app.add_subcommand("twist", "twist an algebra / representation along its twist maps");
    add_common(c_twist);
    CLI::App* c_sd = app.add_subcommand("semidirect", "build and validate the semidirect product");
    add_common(c_sd);
    CLI::App* c_gsd = app.add_subcommand("gensemidirect", "build and validate the generalized semidirect product");
    add_common(c_gsd);
    CLI::App* c_d = app.add_subcommand("d-apply", "apply the generalized differential to a cochain file");
    add_common(c_d);
    CLI::App* c_coh = app.add_subcommand("cohomology", "cocycle/coboundary/cohomology dimensions");
    add_common(c_coh);
    c_coh->add_option("--degree", ctx.degree, "cohomology degree p");
    c_coh->add_option("--flavor", ctx.flavor, "ordinary | generalized")
        ->check(CLI::IsMember({"ordinary", "generalized"}));
    CLI::App* c_ext = app.add_subcommand("check-extension", "validate abelian-extension data");
    add_common(c_ext);
    CLI::App* c_audit = app.add_subcommand("audit-paper", "recompute every worked-example claim");
    c_audit->add_option("--fixtures", ctx.fixtures, "fixture directory (default: fixtures)");
    c_audit->add_flag("--json", ctx.json_out, "emit one structured JSON document");
    app.require_subcommand(1);

    std::vector<std::string> argv_vec = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("hom3");
        for (const auto& a : argv_vec) argv.push_back(a.c_str());
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        out << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        auto bindings = parse_bindings(ctx.binds);

        if (app.got_subcommand(c_alg)) {
            try {
                LoadedProblem lp = load_problem(ctx.file, bindings);
                Report rep = validate_hom_algebra(lp.algebra);
                if (!ctx.json_out && lp.twisted) {
                    out << "twisted bracket:\n";
                    print_bracket(lp.algebra.bracket, out);
                }
                return finish_report("check-algebra", ctx, bindings, rep, out);
            } catch (const PreconditionError& e) {
                Report rep;
                rep.add("twist-precondition", ctx.file, e.what(), "");
                return finish_report("check-algebra", ctx, bindings, rep, out);
            }
        }
        if (app.got_subcommand(c_rep)) {
            LoadedProblem lp = load_problem(ctx.file, bindings);
            Representation r = lp.rep ? *lp.rep : forget_nu(*lp.genrep);
            Report rep = validate_representation(lp.algebra, r);
            return finish_report("check-rep", ctx, bindings, rep, out);
        }
        if (app.got_subcommand(c_gen)) {
            LoadedProblem lp = load_problem(ctx.file, bindings);
            if (!lp.genrep) throw InputError("check-genrep expects a genrep file");
            Report rep = validate_generalized_rep(lp.algebra, *lp.genrep);
            return finish_report("check-genrep", ctx, bindings, rep, out);
        }
        if (app.got_subcommand(c_twist)) {
            LoadedProblem lp = load_problem(ctx.file, bindings, LoadOptions{/*apply_twist=*/false});
            try {
                if (lp.kind == "algebra") {
                    HomAlgebra tw = twist_algebra(lp.raw_bracket, lp.raw_alpha);
                    if (ctx.json_out) {
                        json cells = json::array();
                        for (const auto& [key, cell] : tw.bracket.cells())
                            cells.push_back({{"triple", {key[0], key[1], key[2]}}, {"value", to_string(cell)}});
                        json j = {{"command", "twist"},        {"inputs", json::array({ctx.file})},
                                  {"bindings", bindings_json(bindings)}, {"findings", json::array()},
                                  {"dims", {{"dim", tw.dim()}}},         {"bracket", cells}};
                        out << j.dump(2) << "\n";
                    } else {
                        out << "twisted bracket:\n";
                        print_bracket(tw.bracket, out);
                    }
                    return 0;
                }
                if (!lp.twist_alpha || !lp.twist_endo)
                    throw InputError("twist: file has no TWIST-ALPHA/TWIST-ENDO sections");
                if (lp.kind == "representation") {
                    Representation base = *lp.rep;
                    base.endo = *lp.twist_endo;
                    Representation tw = twist_representation(lp.raw_bracket, base, *lp.twist_alpha);
                    if (!ctx.json_out) {
                        out << "twisted representation (rho~ = A o rho):\n";
                        for (const auto& [key, mat] : tw.rho)
                            out << "  rho~(e" << key.first + 1 << ",e" << key.second + 1
                                << ") = " << mat.to_string() << "\n";
                    }
                    return finish_report("twist", ctx, bindings, Report{}, out);
                }
                // genrep
                TwistedGenRep tw =
                    twist_generalized_rep(lp.algebra, *lp.genrep, *lp.twist_alpha, *lp.twist_endo);
                if (!ctx.json_out) {
                    out << "twisted bracket:\n";
                    print_bracket(tw.algebra.bracket, out);
                    out << "twisted rho:\n";
                    for (const auto& [key, mat] : tw.rep.rho)
                        out << "  rho~(e" << key.first + 1 << ",e" << key.second + 1 << ") = " << mat.to_string()
                            << "\n";
                    out << "twisted nu:\n";
                    for (const auto& [gen, table] : tw.rep.nu)
                        for (const auto& [key, val] : table)
                            out << "  nu~(e" << gen + 1 << ")(v" << key.first + 1 << ",v" << key.second + 1
                                << ") = " << to_string(val) << "\n";
                }
                return finish_report("twist", ctx, bindings, Report{}, out);
            } catch (const PreconditionError& e) {
                Report rep;
                rep.add("twist-precondition", ctx.file, e.what(), "");
                return finish_report("twist", ctx, bindings, rep, out);
            }
        }
        if (app.got_subcommand(c_sd) || app.got_subcommand(c_gsd)) {
            bool generalized = app.got_subcommand(c_gsd);
            LoadedProblem lp = load_problem(ctx.file, bindings);
            HomAlgebra prod;
            if (generalized) {
                if (!lp.genrep) throw InputError("gensemidirect expects a genrep file");
                prod = generalized_semidirect(lp.algebra, *lp.genrep);
            } else {
                Representation r = lp.rep ? *lp.rep : forget_nu(*lp.genrep);
                prod = semidirect(lp.algebra, r);
            }
            Report rep = validate_hom_algebra(prod);
            if (!ctx.json_out) {
                out << "product bracket on dimension " << prod.dim() << ":\n";
                print_bracket(prod.bracket, out);
            }
            return finish_report(generalized ? "gensemidirect" : "semidirect", ctx, bindings, rep, out,
                                 json{{"dim", prod.dim()}});
        }
        if (app.got_subcommand(c_d)) {
            LoadedProblem lp = load_problem(ctx.file, bindings);
            if (!lp.cochain) throw InputError("d-apply expects a cochain file");
            try {
                DenseCochain d = differential_d(lp.algebra, *lp.genrep, *lp.cochain);
                if (ctx.json_out) {
                    json cells = json::array();
                    for (std::size_t k = 0; k < d.key_count(); ++k)
                        if (!is_zero(d.value(k)))
                            cells.push_back({{"key", d.key_string(k)}, {"value", to_string(d.value(k))}});
                    json j = {{"command", "d-apply"},
                              {"inputs", json::array({ctx.file})},
                              {"bindings", bindings_json(bindings)},
                              {"findings", json::array()},
                              {"dims", {{"degree", d.degree()}}},
                              {"values", cells}};
                    out << j.dump(2) << "\n";
                } else {
                    out << "d(phi) has degree " << d.degree() << "; nonzero cells:\n";
                    bool any = false;
                    for (std::size_t k = 0; k < d.key_count(); ++k)
                        if (!is_zero(d.value(k))) {
                            out << "  " << d.key_string(k) << " = " << to_string(d.value(k)) << "\n";
                            any = true;
                        }
                    if (!any) out << "  (zero: phi is a cocycle)\n";
                }
                return 0;
            } catch (const PreconditionError& e) {
                Report rep;
                rep.add("d-precondition", ctx.file, e.what(), "");
                return finish_report("d-apply", ctx, bindings, rep, out);
            }
        }
        if (app.got_subcommand(c_coh)) {
            LoadedProblem lp = load_problem(ctx.file, bindings);
            if (!lp.genrep) throw InputError("cohomology expects a genrep file");
            CohomologyFlavor flavor =
                ctx.flavor == "ordinary" ? CohomologyFlavor::ordinary : CohomologyFlavor::generalized;
            CohomologyDims dims = cohomology_dims(lp.algebra, *lp.genrep, ctx.degree, flavor);
            json jd = {{"Z", dims.z}, {"B", dims.b}, {"H", dims.h}, {"degree", ctx.degree}, {"flavor", ctx.flavor}};
            if (ctx.json_out) {
                json j = {{"command", "cohomology"},
                          {"inputs", json::array({ctx.file})},
                          {"bindings", bindings_json(bindings)},
                          {"findings", json::array()},
                          {"dims", jd}};
                out << j.dump(2) << "\n";
            } else {
                out << "dim Z^" << ctx.degree << " = " << dims.z << "\n";
                out << "dim B^" << ctx.degree << " = " << dims.b << "\n";
                out << "dim H^" << ctx.degree << " = " << dims.h << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(c_ext)) {
            LoadedProblem lp = load_problem(ctx.file, bindings);
            if (!lp.genrep || !lp.omega) throw InputError("check-extension expects an extension file");
            ExtensionData e{lp.algebra, lp.fiber_dim, *lp.genrep, *lp.omega};
            Report rep = validate_extension_triple(e);
            return finish_report("check-extension", ctx, bindings, rep, out);
        }
        if (app.got_subcommand(c_audit)) {
            auto findings = audit_paper(ctx.fixtures);
            if (ctx.json_out) {
                json arr = json::array();
                for (const auto& f : findings)
                    arr.push_back({{"claim", f.claim},
                                   {"status", f.confirmed ? "CONFIRMED" : "DISCREPANT"},
                                   {"detail", f.detail}});
                json j = {{"command", "audit-paper"},
                          {"inputs", json::array({ctx.fixtures})},
                          {"bindings", json::object()},
                          {"findings", arr},
                          {"dims", json::object()}};
                out << j.dump(2) << "\n";
            } else {
                for (const auto& f : findings)
                    out << (f.confirmed ? "CONFIRMED  " : "DISCREPANT ") << f.claim << ": " << f.detail << "\n";
            }
            return 0; // audit findings are not failures
        }
    } catch (const PreconditionError& e) {
        out << "violation: " << e.what() << "\n";
        return 1;
    } catch (const LoadError& e) {
        out << "load error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        out << "input error: " << e.what() << "\n";
        return 2;
    }
    out << "usage error: no subcommand\n";
    return 2;
}

} // namespace hom3lie
