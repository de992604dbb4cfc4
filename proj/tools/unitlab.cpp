// unitlab: build finite 2-groups, inspect their structure, and decide whether
// all involutions of the normalized unit group of KG commute (K = GF(2) or
// GF(4)).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "unitlab/classifier.hpp"
#include "unitlab/io.hpp"

namespace {

using namespace unitlab;

// Accepts "builtin:NAME", "builtin:NAME[p1,p2]", "catalog:NAME", or a file
// path holding either a group-table JSON document or a presentation in the
// textual DSL.
FiniteGroup resolve_group(const std::string& spec, int coset_limit) {
    if (spec.rfind("builtin:", 0) == 0) {
        std::string rest = spec.substr(8);
        std::vector<int> params;
        std::string name = rest;
        auto lb = rest.find('[');
        if (lb != std::string::npos) {
            if (rest.back() != ']') throw CLI::ValidationError("group", "missing ']'");
            name = rest.substr(0, lb);
            std::stringstream ss(rest.substr(lb + 1, rest.size() - lb - 2));
            std::string tok;
            while (std::getline(ss, tok, ',')) params.push_back(std::stoi(tok));
        }
        return todd_coxeter(builtin(name, params), coset_limit);
    }
    if (spec.rfind("catalog:", 0) == 0) {
        std::string name = spec.substr(8);
        for (const auto& entry : builtin_catalog())
            if (entry.name == name) return entry.build();
        throw CLI::ValidationError("group", "unknown catalog entry '" + name + "'");
    }
    std::ifstream in(spec);
    if (!in) throw CLI::ValidationError("group", "cannot open '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '['))
        return group_from_json(nlohmann::json::parse(text));
    return todd_coxeter(parse_presentation(text), coset_limit);
}

Field parse_field(const std::string& s) {
    if (s == "gf2") return Field::GF2;
    if (s == "gf4") return Field::GF4;
    throw CLI::ValidationError("field", "expected gf2 or gf4");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification engine for involutions of normalized units in "
                 "modular group algebras of finite 2-groups"};
    app.require_subcommand(1);

    std::string group_spec, out_path, field_name = "gf2", strategy = "auto",
                json_path;
    int max_dim = unitlab::kDefaultMaxDim;
    int workers = 1;
    int coset_limit = 100000;
    bool no_gf4 = false, no_omega = false;

    auto add_group_arg = [&](CLI::App* cmd) {
        cmd->add_option("group", group_spec,
                        "builtin:NAME[params], catalog:NAME, or a file (group "
                        "table JSON or presentation DSL)")
            ->required();
        cmd->add_option("--limit", coset_limit, "coset enumeration limit");
    };

    CLI::App* build = app.add_subcommand("build", "construct a group and emit its table");
    add_group_arg(build);
    build->add_option("--out", out_path, "output file (default: stdout)");

    CLI::App* report = app.add_subcommand("report", "structural invariants of a group");
    add_group_arg(report);

    CLI::App* check = app.add_subcommand(
        "check-good", "decide whether all involutions of V(KG) commute");
    add_group_arg(check);
    check->add_option("--field", field_name, "gf2 or gf4")
        ->check(CLI::IsMember({"gf2", "gf4"}));
    check->add_option("--max-dim", max_dim, "kernel enumeration dimension limit")
        ->envname("UNITLAB_MAX_DIM");
    check->add_option("--workers", workers, "enumeration worker threads")
        ->envname("UNITLAB_WORKERS");
    check->add_option("--strategy", strategy, "auto, exhaustive, or witness")
        ->check(CLI::IsMember({"auto", "exhaustive", "witness"}));

    CLI::App* classify =
        app.add_subcommand("classify", "match a group against the good families");
    add_group_arg(classify);

    CLI::App* verify = app.add_subcommand(
        "verify-paper", "run the full catalog verification and consistency checks");
    verify->add_option("--json", json_path, "write the full report to this file");
    verify->add_option("--max-dim", max_dim, "kernel enumeration dimension limit")
        ->envname("UNITLAB_MAX_DIM");
    verify->add_option("--workers", workers, "enumeration worker threads")
        ->envname("UNITLAB_WORKERS");
    verify->add_flag("--no-gf4", no_gf4, "skip the GF(4) cross-checks");
    verify->add_flag("--no-omega", no_omega, "skip the Omega(V) ideal checks");

    CLI11_PARSE(app, argc, argv);

    try {
        using namespace unitlab;
        if (build->parsed()) {
            FiniteGroup g = resolve_group(group_spec, coset_limit);
            nlohmann::json j = group_to_json(g);
            if (out_path.empty()) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::ofstream out(out_path);
                out << j.dump(2) << "\n";
            }
            return 0;
        }
        if (report->parsed()) {
            FiniteGroup g = resolve_group(group_spec, coset_limit);
            nlohmann::json j = structural_report_to_json(structural_report(g));
            j["group"] = group_spec;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (classify->parsed()) {
            FiniteGroup g = resolve_group(group_spec, coset_limit);
            nlohmann::json j;
            j["group"] = group_spec;
            j["order"] = g.order;
            j["classification"] = to_string(theorem_classify(g));
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (check->parsed()) {
            FiniteGroup g = resolve_group(group_spec, coset_limit);
            Algebra alg(g, parse_field(field_name));
            Verdict v;
            if (strategy == "exhaustive") {
                v = all_involutions_commute(alg, max_dim, workers);
            } else if (strategy == "witness") {
                auto t0 = std::chrono::steady_clock::now();
                auto w = witness_search(alg);
                v.kernel_dim = -1;
                if (w) {
                    v.tag = Verdict::Tag::Bad;
                    v.witness = w;
                } else {
                    v.tag = Verdict::Tag::Unknown;
                    v.note = "witness search found no pair (this does not imply good)";
                }
                v.elapsed_seconds = std::chrono::duration<double>(
                                        std::chrono::steady_clock::now() - t0)
                                        .count();
            } else {
                v = decide(alg, max_dim, workers);
            }
            std::cout << verdict_to_json(alg, group_spec, v).dump(2) << "\n";
            return v.tag == Verdict::Tag::Unknown ? 2 : 0;
        }
        if (verify->parsed()) {
            PaperOptions opt;
            opt.max_dim = max_dim;
            opt.workers = workers;
            opt.check_gf4 = !no_gf4;
            opt.check_omega_ideal = !no_omega;
            PaperReport rep = run_paper_verification(opt);
            for (const auto& gr : rep.groups) {
                std::cout << gr.name << " (order " << gr.order
                          << "): " << to_string(gr.classification) << " / verdict "
                          << to_string(gr.verdict.tag)
                          << (gr.unknown ? "" : (gr.agreement ? " [agree]" : " [DISAGREE]"))
                          << "\n";
            }
            auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
            std::cout << "witness pairs: " << flag(rep.witnesses_ok)
                      << "\nquaternion witness: " << flag(rep.quaternion_witness_ok)
                      << "\nabelian square-zero oracle: " << flag(rep.lemma4_ok)
                      << "\ncyclic subalgebra oracle: " << flag(rep.lemma5_ok)
                      << "\nfield independence: " << flag(rep.field_independence_ok)
                      << "\nstructure list: " << flag(rep.structure_ok)
                      << "\norder bound: " << flag(rep.blackburn_ok)
                      << "\ndimension identities: " << flag(rep.dimensions_ok)
                      << "\nomega ideal: " << flag(rep.omega_ideal_ok) << "\n";
            for (const auto& f : rep.failures) std::cout << "failure: " << f << "\n";
            std::cout << "exit: " << rep.exit_code << "\n";
            if (!json_path.empty()) {
                std::ofstream out(json_path);
                out << paper_report_to_json(rep).dump(2) << "\n";
            }
            return rep.exit_code;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
