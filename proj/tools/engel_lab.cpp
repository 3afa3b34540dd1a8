// engel-lab: exact computations for finite-dimensional left Leibniz
// algebras and their bimodules. Exit codes: 0 success, 1 mathematical
// verdict against the input (identity violation, reducible module, theorem
// check failed), 2 I/O, format or usage trouble.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "engellab/engel.hpp"
#include "engellab/files.hpp"
#include "engellab/selftest.hpp"

using namespace engellab;
using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json vec_json(const Vec& v) {
    ordered_json a = ordered_json::array();
    for (const Scalar& s : v) a.push_back(s.str());
    return a;
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vec_json(m.row(r)));
    return rows;
}

ordered_json basis_json(const Subspace& s) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(vec_json(s.basis().row(r)));
    return rows;
}

void emit(const ordered_json& j) {
    std::cout << j.dump(2) << "\n";
}

FieldSpec parse_field_arg(const std::string& s) {
    if (s == "Q" || s == "q") return FieldSpec::rationals();
    std::string digits = (!s.empty() && (s[0] == 'F' || s[0] == 'f')) ? s.substr(1) : s;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad field '" + s + "'; expected Q or F<p>");
    return FieldSpec::prime(std::stol(digits));
}

LeibnizAlgebra load_algebra(const std::string& path, bool as_json) {
    AlgebraFile file = parse_algebra_file(read_file(path));
    try {
        return LeibnizAlgebra::validate(file.constants);
    } catch (const IdentityViolation& v) {
        if (as_json) {
            ordered_json j;
            j["valid"] = false;
            j["violation"] = {{"i", v.i}, {"j", v.j}, {"k", v.k},
                              {"lhs", vec_json(v.lhs)}, {"rhs", vec_json(v.rhs)}};
            emit(j);
        } else {
            std::cout << "invalid: " << v.what() << "\n";
        }
        throw;
    }
}

Representation load_rep(const LeibnizAlgebra& alg, const std::string& path, bool as_json) {
    RepFile file = parse_rep_file(read_file(path), alg.field(), alg.dim());
    try {
        return Representation::validate(alg, file.t, file.s);
    } catch (const NotARepresentation& e) {
        if (as_json) {
            ordered_json j;
            j["valid"] = false;
            j["axiom"] = e.axiom;
            j["i"] = e.i;
            j["j"] = e.j;
            emit(j);
        } else {
            std::cout << "invalid: " << e.what() << "\n";
        }
        throw;
    }
}

int cmd_validate(const std::string& path, bool as_json) {
    LeibnizAlgebra alg = load_algebra(path, as_json);
    if (as_json) {
        ordered_json j;
        j["valid"] = true;
        j["dim"] = alg.dim();
        j["field"] = alg.field().str();
        emit(j);
    } else {
        std::cout << "valid left Leibniz algebra of dimension " << alg.dim() << " over "
                  << alg.field().str() << "\n";
    }
    return 0;
}

int cmd_analyze(const std::string& path, bool as_json) {
    LeibnizAlgebra alg = load_algebra(path, as_json);
    AlgebraAnalysis a = analyze(alg);
    std::vector<std::size_t> lcs;
    for (const Subspace& s : a.series) lcs.push_back(s.dim());
    if (as_json) {
        ordered_json j;
        j["dim"] = a.dim;
        j["is_lie"] = a.lie;
        j["leib_dim"] = a.leib.dim();
        j["leib_basis"] = basis_json(a.leib);
        j["lcs_dims"] = lcs;
        j["nilpotent"] = a.nilpotent;
        j["class"] = a.nilpotency_class ? ordered_json(*a.nilpotency_class) : ordered_json(nullptr);
        emit(j);
    } else {
        std::cout << "dimension: " << a.dim << " over " << alg.field().str() << "\n";
        std::cout << "lie: " << (a.lie ? "yes" : "no") << "\n";
        std::cout << "leibniz kernel: dimension " << a.leib.dim();
        if (!a.leib.is_zero()) std::cout << ", basis " << a.leib.str();
        std::cout << "\n";
        std::cout << "lower central series dims:";
        for (std::size_t d : lcs) std::cout << " " << d;
        std::cout << "\n";
        if (a.nilpotent)
            std::cout << "nilpotent of class " << *a.nilpotency_class << "\n";
        else
            std::cout << "not nilpotent\n";
    }
    return 0;
}

int cmd_engel(const std::string& path, bool as_json) {
    LeibnizAlgebra alg = load_algebra(path, as_json);
    AlgebraEngelReport r = check_engel_algebra(alg);
    if (as_json) {
        ordered_json j;
        j["certificate_found"] = r.certificate_found;
        if (r.flag) {
            j["chain_dims"] = r.flag->chain_dims();
            j["adapted_basis"] = matrix_json(r.flag->change_of_basis);
        } else {
            j["failure_stage"] = r.failure_point->stage;
            j["residual_dim"] = r.failure_point->residual.dim();
        }
        j["nilpotent"] = r.nilpotency.nilpotent;
        j["class"] = r.nilpotency.nilpotency_class ? ordered_json(*r.nilpotency.nilpotency_class)
                                                   : ordered_json(nullptr);
        j["theorem_violated"] = r.theorem_violated;
        emit(j);
    } else {
        if (r.certificate_found) {
            std::cout << "flag certificate found; chain dims:";
            for (std::size_t d : r.flag->chain_dims()) std::cout << " " << d;
            std::cout << "\n";
        } else {
            std::cout << "no flag: stalled at stage " << r.failure_point->stage
                      << " with residual dimension " << r.failure_point->residual.dim() << "\n";
        }
        if (r.nilpotency.nilpotent)
            std::cout << "central series confirms: nilpotent of class "
                      << *r.nilpotency.nilpotency_class << "\n";
        else
            std::cout << "central series confirms: not nilpotent\n";
        if (r.theorem_violated) std::cout << "THEOREM VIOLATED: verdicts disagree\n";
    }
    return r.theorem_violated ? 1 : 0;
}

int cmd_engel_rep(const std::string& alg_path, const std::string& rep_path, bool as_json) {
    LeibnizAlgebra alg = load_algebra(alg_path, as_json);
    Representation rep = load_rep(alg, rep_path, as_json);
    EngelReport r = engel_report(rep);
    if (as_json) {
        ordered_json j;
        j["alg_dim"] = rep.alg_dim();
        j["mod_dim"] = rep.mod_dim();
        j["t_nilpotent"] = r.t_nilpotent;
        j["s_nilpotent"] = r.s_nilpotent ? ordered_json(*r.s_nilpotent) : ordered_json(nullptr);
        j["witness"] = r.witness ? vec_json(*r.witness) : ordered_json(nullptr);
        j["t_chain_dims"] =
            r.t_certificate ? ordered_json(r.t_certificate->chain_dims()) : ordered_json(nullptr);
        j["chain_dims"] = r.flag ? ordered_json(r.flag->chain_dims()) : ordered_json(nullptr);
        if (r.flag) j["adapted_basis"] = matrix_json(r.flag->change_of_basis);
        if (r.failure_point) {
            j["failure_stage"] = r.failure_point->stage;
            j["residual_dim"] = r.failure_point->residual.dim();
        }
        j["theorem_violated"] = r.theorem_violated;
        emit(j);
    } else {
        if (!r.t_nilpotent) {
            std::cout << "not all T_a are nilpotent: flag search stalled at stage "
                      << r.failure_point->stage << " (residual dimension "
                      << r.failure_point->residual.dim() << ")\n";
        } else {
            std::cout << "every T_a is nilpotent (flag certificate found)\n";
            if (r.s_nilpotent && *r.s_nilpotent)
                std::cout << "every S_a is nilpotent as well\n";
            if (r.witness)
                std::cout << "engel witness (killed by all actions): " << vec_str(*r.witness)
                          << "\n";
            if (r.flag) {
                std::cout << "full flag chain dims:";
                for (std::size_t d : r.flag->chain_dims()) std::cout << " " << d;
                std::cout << "\n";
            }
        }
        if (r.theorem_violated) std::cout << "THEOREM VIOLATED: T nilpotent but no full flag\n";
    }
    return r.theorem_violated ? 1 : 0;
}

int cmd_extend(const std::string& alg_path, const std::string& rep_path,
               const std::string& out_path, bool as_json) {
    LeibnizAlgebra alg = load_algebra(alg_path, as_json);
    Representation rep = load_rep(alg, rep_path, as_json);
    std::string text = serialize_algebra_file(split_extension(rep));
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int cmd_verify_irred(const std::string& alg_path, const std::string& rep_path, bool as_json) {
    LeibnizAlgebra alg = load_algebra(alg_path, as_json);
    Representation rep = load_rep(alg, rep_path, as_json);
    try {
        IrredReport r = verify_irred_theorem(rep);
        if (as_json) {
            ordered_json j;
            j["irreducible"] = true;
            j["certified"] = r.certified;
            j["centraliser_dim"] = r.centraliser_dim;
            j["quotient_dim"] = r.quotient_dim;
            j["quotient_is_lie"] = r.quotient_is_lie;
            j["branch"] = branch_name(r.branch);
            j["theorem_violated"] = r.theorem_violated;
            emit(j);
        } else {
            std::cout << (r.certified ? "irreducible (certified)\n"
                                      : "no proper submodule found (search not exhaustive over Q)\n");
            std::cout << "centraliser dimension: " << r.centraliser_dim << "\n";
            std::cout << "quotient: dimension " << r.quotient_dim << ", "
                      << (r.quotient_is_lie ? "Lie" : "NOT Lie") << "\n";
            std::cout << "branch: " << branch_name(r.branch) << "\n";
            if (r.theorem_violated) std::cout << "THEOREM VIOLATED\n";
        }
        return r.theorem_violated ? 1 : 0;
    } catch (const NotIrreducible& e) {
        if (as_json) {
            ordered_json j;
            j["irreducible"] = false;
            j["witness_dim"] = e.witness.subspace.dim();
            j["witness_generator"] = vec_json(e.witness.generator);
            j["witness_basis"] = basis_json(e.witness.subspace);
            emit(j);
        } else {
            std::cout << e.what() << "\n";
        }
        return 1;
    }
}

int cmd_selftest(std::uint64_t seed, bool inject_defect, bool as_json) {
    SelftestReport r = run_selftest(SelftestOptions{seed, inject_defect});
    std::cout << (as_json ? selftest_report_json(r) : selftest_report_text(r));
    return r.ok() ? 0 : 1;
}

int cmd_export(const std::string& name, const std::string& field_str, const std::string& out_path,
               bool list, bool as_json) {
    FieldSpec field = parse_field_arg(field_str);
    if (list) {
        if (as_json) {
            ordered_json names = ordered_json::array();
            for (const CatalogEntry& e : catalog(field)) names.push_back(e.name);
            emit(names);
        } else {
            for (const CatalogEntry& e : catalog(field))
                std::cout << e.name << " (dim " << e.algebra.dim() << ")\n";
        }
        return 0;
    }
    std::optional<CatalogEntry> e = catalog_entry(field, name);
    if (!e) throw ParseError("unknown catalog algebra '" + name + "'; try --list");
    std::string text = serialize_algebra_file(e->algebra);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for left Leibniz algebras and their bimodules"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON");

    std::uint64_t seed = 0;
    if (const char* env = std::getenv("ENGEL_LAB_SEED")) seed = std::strtoull(env, nullptr, 10);
    bool inject_defect = false;

    std::string alg_path, rep_path, out_path, name, field_str = "Q";
    bool list_names = false;

    CLI::App* validate = app.add_subcommand("validate", "check the left Leibniz identity");
    validate->add_option("algebra", alg_path, "algebra file")->required();

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "Leibniz kernel, central series, nilpotency");
    analyze_cmd->add_option("algebra", alg_path, "algebra file")->required();

    CLI::App* engel =
        app.add_subcommand("engel", "flag certificate for the left multiplications");
    engel->add_option("algebra", alg_path, "algebra file")->required();

    CLI::App* engel_rep =
        app.add_subcommand("engel-rep", "flag certificates for a bimodule action");
    engel_rep->add_option("algebra", alg_path, "algebra file")->required();
    engel_rep->add_option("rep", rep_path, "representation file")->required();

    CLI::App* extend = app.add_subcommand("extend", "write the split extension as an algebra file");
    extend->add_option("algebra", alg_path, "algebra file")->required();
    extend->add_option("rep", rep_path, "representation file")->required();
    extend->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* verify_irred =
        app.add_subcommand("verify-irred", "structure checks for an irreducible bimodule");
    verify_irred->add_option("algebra", alg_path, "algebra file")->required();
    verify_irred->add_option("rep", rep_path, "representation file")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in cross-check suites");
    selftest->add_option("--seed", seed, "instance generator seed (default $ENGEL_LAB_SEED or 0)");
    selftest->add_flag("--inject-defect", inject_defect)->group(""); // harness-only, hidden

    CLI::App* export_cmd = app.add_subcommand("export", "write a catalog algebra as a file");
    export_cmd->add_option("name", name, "catalog name");
    export_cmd->add_option("--field", field_str, "Q (default) or F<p>");
    export_cmd->add_option("-o,--output", out_path, "output file (default stdout)");
    export_cmd->add_flag("--list", list_names, "list catalog names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(alg_path, as_json);
        if (app.got_subcommand(analyze_cmd)) return cmd_analyze(alg_path, as_json);
        if (app.got_subcommand(engel)) return cmd_engel(alg_path, as_json);
        if (app.got_subcommand(engel_rep)) return cmd_engel_rep(alg_path, rep_path, as_json);
        if (app.got_subcommand(extend)) return cmd_extend(alg_path, rep_path, out_path, as_json);
        if (app.got_subcommand(verify_irred))
            return cmd_verify_irred(alg_path, rep_path, as_json);
        if (app.got_subcommand(selftest)) return cmd_selftest(seed, inject_defect, as_json);
        if (app.got_subcommand(export_cmd))
            return cmd_export(name, field_str, out_path, list_names, as_json);
    } catch (const IdentityViolation&) {
        return 1; // already reported by load_algebra
    } catch (const NotARepresentation&) {
        return 1; // already reported by load_rep
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
