#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdeform/catalog.hpp"
#include "qdeform/fockrep.hpp"
#include "qdeform/hopf.hpp"
#include "qdeform/parse.hpp"
#include "qdeform/report.hpp"
#include "qdeform/structmaps.hpp"

using namespace qdeform;

namespace {

double env_double(const char* name, double fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stod(v);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(name) + " is not a number: " + v);
    }
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(name) + " is not an integer: " + v);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> rep_algebras() {
    return {"osc_q", "osc_q_qinv", "osc_q_half", "osc_alpha", "osc_alpha_k", "osc_A",
            "osc_A_q2", "osc_pair", "osc_pair_qqinv", "singular", "lattice"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and numeric checks for q-deformed algebras, quantum groups and oscillators"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    SuiteOptions opts;
    bool json = false, unicode = false;
    std::string algebra, expr, pres_file, suite = "all", out_file, basis = "orthonormal", uword, tword;

    auto* normalize = app.add_subcommand("normalize", "normal form of an expression");
    auto* alg_opt = normalize->add_option("--algebra", algebra, "catalog presentation")
                        ->check(CLI::IsMember(catalog_names()));
    normalize->add_option("--presentation", pres_file, "presentation JSON file")->excludes(alg_opt)->check(CLI::ExistingFile);
    normalize->add_option("expr", expr, "expression, e.g. \"d*a\"")->required();
    normalize->add_flag("--unicode", unicode, "pretty-print generator names");
    normalize->add_flag("--json", json, "JSON output");

    auto* check = app.add_subcommand("check", "run a verification suite");
    std::vector<std::string> names = suite_names();
    names.push_back("all");
    check->add_option("--suite", suite, "suite name")->check(CLI::IsMember(names));
    check->add_option("--q0", opts.q0, "numeric deformation parameter (env QD_Q0)");
    check->add_option("--dim", opts.dim, "Fock truncation (env QD_DIM)")->check(CLI::Range(2, 64));
    check->add_option("--degree", opts.degree, "degree bound for Hopf and comodule checks")->check(CLI::Range(1, 4));
    check->add_flag("--json", json, "JSON report");
    check->add_option("--out", out_file, "also write the JSON report to a file");

    auto* rep = app.add_subcommand("rep", "export a matrix representation");
    rep->add_option("--algebra", algebra, "algebra")->required()->check(CLI::IsMember(rep_algebras()));
    rep->add_option("--dim", opts.dim, "levels per mode (window for singular and lattice)")->check(CLI::Range(2, 64));
    rep->add_option("--q0", opts.q0, "deformation parameter");
    rep->add_option("--basis", basis, "orthonormal or rescaled")->check(CLI::IsMember({"orthonormal", "rescaled"}));
    rep->add_option("--out", out_file, "output file (stdout when omitted)");

    auto* catalog = app.add_subcommand("catalog", "list presentations and the bosonization catalog");
    catalog->add_flag("--json", json, "validated catalog as JSON");
    catalog->add_option("--dim", opts.dim, "Fock truncation for numeric entries")->check(CLI::Range(2, 64));
    catalog->add_option("--q0", opts.q0, "numeric deformation parameter");

    auto* pair = app.add_subcommand("pair", "pairing of an L+- entry with a T word");
    pair->add_option("uword", uword, "Lp11, Lm21, ...")->required();
    pair->add_option("tword", tword, "product of a, b, c, d such as a*b")->required();

    try {
        // env defaults sit under the flags
        opts.q0 = env_double("QD_Q0", opts.q0);
        opts.dim = env_int("QD_DIM", opts.dim);
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*normalize) {
            PresPtr p = pres_file.empty() ? build_presentation(algebra.empty() ? "glq2" : algebra)
                                          : load_presentation_json(read_file(pres_file));
            Element e = p->normalize(parse_expression(expr, p.get()));
            if (json) {
                nlohmann::json j = {{"algebra", p->name()}, {"input", expr}, {"normal_form", element_str(e, *p)}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << element_str(e, *p, unicode) << "\n";
            }
            return 0;
        }
        if (*check) {
            Report r = run_suite(suite, opts);
            std::string js = report_json(r);
            if (!out_file.empty()) std::ofstream(out_file) << js << "\n";
            std::cout << (json ? js + "\n" : report_text(r));
            return r.ok() ? 0 : 1;
        }
        if (*rep) {
            FockRep fr;
            if (algebra == "osc_pair" || algebra == "osc_pair_qqinv")
                fr = multimode_rep(algebra, opts.dim, opts.q0);
            else if (algebra == "singular")
                fr = singular_rep(opts.dim, opts.q0);
            else if (algebra == "lattice")
                fr = lattice_rep(opts.dim, opts.q0, 0.5);
            else
                fr = fock_rep(algebra, opts.dim, opts.q0, basis);
            std::string js = fr.to_json();
            if (out_file.empty())
                std::cout << js << "\n";
            else
                std::ofstream(out_file) << js << "\n";
            return 0;
        }
        if (*catalog) {
            auto entries = bosonization_catalog();
            std::vector<EntryValidation> res;
            for (const auto& e : entries) res.push_back(validate_entry(e, opts.q0, opts.dim));
            if (json) {
                std::cout << catalog_json(entries, res) << "\n";
            } else {
                std::cout << "presentations:\n";
                for (const auto& n : catalog_names()) {
                    PresPtr p = build_presentation(n);
                    std::cout << "  " << n << "  (" << p->ngens() << " generators, " << p->rules().size() << " rules)";
                    if (!p->note().empty()) std::cout << "  " << p->note();
                    std::cout << "\n";
                }
                std::cout << "bosonizations:\n";
                for (std::size_t i = 0; i < entries.size(); ++i) {
                    std::cout << "  " << (res[i].ok ? "pass " : "FAIL ") << entries[i].name << "  " << entries[i].source
                              << " -> " << entries[i].target << "  [" << mode_name(entries[i].mode) << "]\n";
                    for (const auto& [g, x] : entries[i].assignments) std::cout << "      " << g << " = " << x << "\n";
                }
            }
            bool ok = std::all_of(res.begin(), res.end(), [](const EntryValidation& v) { return v.ok; });
            return ok ? 0 : 1;
        }
        if (*pair) {
            QScalar v = pairing(uword, tword);
            std::cout << v.str() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
