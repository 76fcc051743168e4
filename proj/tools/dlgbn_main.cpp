// Command-line front end: ground, graph, encode, models, trap-spaces,
// classes, stg, analyze, verify, probe. Output is deterministic byte-for-byte
// for a fixed input and command.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dlgbn/analysis.hpp"
#include "dlgbn/boolean_network.hpp"
#include "dlgbn/dynamics.hpp"
#include "dlgbn/program.hpp"
#include "dlgbn/semantics.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCap = 2;
constexpr int kExitVerifyFailed = 3;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

dlgbn::GroundProgram load_program(const std::string& path) {
    dlgbn::GroundResult res = dlgbn::ground(dlgbn::parse(read_input(path)));
    for (const std::string& w : res.warnings) std::cerr << "warning: " << w << "\n";
    return res.program;
}

struct Options {
    std::string input;
    std::string format;
    dlgbn::Caps caps;
};

void add_common(CLI::App* cmd, Options& opt, const std::string& default_format,
                std::vector<std::string> allowed_formats) {
    cmd->add_option("input", opt.input, "program file (.dlg) or - for stdin")->required();
    opt.format = default_format;
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember(std::move(allowed_formats)));
    cmd->add_option("--max-atoms-2v", opt.caps.max_atoms_2v, "cap for 2^n state scans");
    cmd->add_option("--max-atoms-3v", opt.caps.max_atoms_3v, "cap for 3^n sub-space scans");
    cmd->add_option("--max-cycles", opt.caps.max_cycles, "cap for simple-cycle enumeration");
}

using dlgbn::Interp3;

int run(int argc, char** argv) {
    CLI::App app{"Datalog with negation as Boolean networks: semantics, graphs, trap spaces"};
    app.require_subcommand(1);

    Options ground_opt;
    auto* cmd_ground = app.add_subcommand("ground", "parse and ground a program");
    add_common(cmd_ground, ground_opt, "text", {"text"});

    Options graph_opt;
    std::string graph_kind = "adg";
    auto* cmd_graph = app.add_subcommand("graph", "signed dependency/influence graphs");
    add_common(cmd_graph, graph_opt, "dot", {"dot", "json"});
    cmd_graph->add_option("--kind", graph_kind, "adg | ig | syng")
        ->check(CLI::IsMember({"adg", "ig", "syng"}));

    Options encode_opt;
    auto* cmd_encode = app.add_subcommand("encode", "Boolean network encoding");
    add_common(cmd_encode, encode_opt, "text", {"text", "json"});

    Options models_opt;
    std::string semantics = "stable";
    auto* cmd_models = app.add_subcommand("models", "enumerate models of a semantics");
    add_common(cmd_models, models_opt, "text", {"text", "json"});
    cmd_models->add_option("--semantics", semantics,
                           "stable | supported | stable-partial | supported-partial | regular | "
                           "well-founded")
        ->check(CLI::IsMember({"stable", "supported", "stable-partial", "supported-partial",
                               "regular", "well-founded"}));

    Options traps_opt;
    std::string trap_kind = "stable";
    auto* cmd_traps = app.add_subcommand("trap-spaces", "trap spaces of a program or its network");
    add_common(cmd_traps, traps_opt, "text", {"text", "json"});
    cmd_traps->add_option("--kind", trap_kind, "stable | supported | bn | bn-complete | bn-minimal")
        ->check(CLI::IsMember({"stable", "supported", "bn", "bn-complete", "bn-minimal"}));

    Options classes_opt;
    std::string class_kind = "stable";
    auto* cmd_classes = app.add_subcommand("classes", "strict stable/supported classes");
    add_common(cmd_classes, classes_opt, "text", {"text", "json"});
    cmd_classes->add_option("--kind", class_kind, "stable | supported")
        ->check(CLI::IsMember({"stable", "supported"}));

    Options stg_opt;
    std::string stg_kind = "stable";
    auto* cmd_stg = app.add_subcommand("stg", "transition graphs and state transition graphs");
    add_common(cmd_stg, stg_opt, "dot", {"dot", "json"});
    cmd_stg->add_option("--kind", stg_kind, "stable | supported | sync | async")
        ->check(CLI::IsMember({"stable", "supported", "sync", "async"}));

    Options analyze_opt;
    auto* cmd_analyze = app.add_subcommand("analyze", "structural report with model-count bounds");
    add_common(cmd_analyze, analyze_opt, "json", {"json"});

    Options verify_opt;
    auto* cmd_verify = app.add_subcommand("verify", "check every applicable theorem by enumeration");
    add_common(cmd_verify, verify_opt, "json", {"json"});

    auto* cmd_probe = app.add_subcommand("probe", "random-program conjecture probes");
    dlgbn::GeneratorConfig gen_cfg;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 42;
    cmd_probe->add_option("--trials", trials, "number of random programs per conjecture family");
    cmd_probe->add_option("--seed", seed, "base seed; trial i uses seed+i");
    cmd_probe->add_option("--atoms", gen_cfg.atoms, "atom count");
    cmd_probe->add_option("--min-rules", gen_cfg.min_rules, "minimum rule count");
    cmd_probe->add_option("--max-rules", gen_cfg.max_rules, "maximum rule count");
    cmd_probe->add_option("--pos-prob", gen_cfg.positive_literal_prob, "positive literal weight");
    cmd_probe->add_option("--neg-prob", gen_cfg.negative_literal_prob, "negative literal weight");
    cmd_probe->add_flag("--uni-rule", gen_cfg.uni_rule, "restrict the general family to uni-rule");
    cmd_probe->add_flag("--tight", gen_cfg.tight_only, "generate tight programs only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_ground->parsed()) {
        std::cout << dlgbn::pretty_print(load_program(ground_opt.input));
        return kExitOk;
    }

    if (cmd_graph->parsed()) {
        dlgbn::GroundProgram g = load_program(graph_opt.input);
        dlgbn::SignedDigraph sg;
        if (graph_kind == "adg") {
            sg = dlgbn::atom_dependency_graph(g);
        } else {
            dlgbn::BooleanNetwork f = dlgbn::encode(g);
            sg = graph_kind == "ig" ? dlgbn::influence_graph(f, graph_opt.caps)
                                    : dlgbn::syntactic_influence_graph(f);
        }
        if (graph_opt.format == "json") {
            auto cycles = dlgbn::enumerate_simple_cycles(sg, graph_opt.caps.max_cycles);
            std::cout << dlgbn::cycles_to_json(sg, cycles);
        } else {
            std::cout << dlgbn::to_dot(sg, graph_kind);
        }
        return kExitOk;
    }

    if (cmd_encode->parsed()) {
        dlgbn::GroundProgram g = load_program(encode_opt.input);
        dlgbn::BooleanNetwork f = dlgbn::encode(g);
        if (encode_opt.format == "json") {
            nlohmann::json j;
            j["variables"] = f.variables();
            nlohmann::json fns;
            for (std::size_t v = 0; v < f.size(); ++v)
                fns[f.variables()[v]] = f.function(v).to_string(f.variables());
            j["functions"] = fns;
            std::cout << j.dump(2) << "\n";
        } else {
            for (std::size_t v = 0; v < f.size(); ++v)
                std::cout << f.variables()[v] << " = " << f.function(v).to_string(f.variables())
                          << "\n";
        }
        return kExitOk;
    }

    if (cmd_models->parsed()) {
        dlgbn::GroundProgram g = load_program(models_opt.input);
        std::vector<Interp3> models;
        bool derived = false;
        if (semantics == "stable")
            models = dlgbn::states_to_interps(dlgbn::stable_models(g, models_opt.caps),
                                              g.atom_count());
        else if (semantics == "supported")
            models = dlgbn::states_to_interps(dlgbn::supported_models(g, models_opt.caps),
                                              g.atom_count());
        else if (semantics == "stable-partial")
            models = dlgbn::stable_partial_models(g, models_opt.caps);
        else if (semantics == "supported-partial")
            models = dlgbn::supported_partial_models(g, models_opt.caps);
        else if (semantics == "regular")
            models = dlgbn::regular_models(g, models_opt.caps);
        else {
            models = {dlgbn::well_founded_model(g, models_opt.caps)};
            derived = true;
        }
        if (models_opt.format == "json") {
            std::cout << dlgbn::models_to_json(g, semantics, models, derived);
        } else {
            if (derived) std::cout << "% derived as the truth-least stable partial model\n";
            for (const Interp3& m : models) std::cout << dlgbn::model_table_line(g, m) << "\n";
        }
        return kExitOk;
    }

    if (cmd_traps->parsed()) {
        dlgbn::GroundProgram g = load_program(traps_opt.input);
        std::vector<Interp3> spaces;
        if (trap_kind == "stable")
            spaces = dlgbn::stable_trap_spaces(g, traps_opt.caps);
        else if (trap_kind == "supported")
            spaces = dlgbn::supported_trap_spaces(g, traps_opt.caps);
        else {
            dlgbn::BooleanNetwork f = dlgbn::encode(g);
            if (trap_kind == "bn")
                spaces = dlgbn::trap_spaces(f, traps_opt.caps);
            else if (trap_kind == "bn-complete")
                spaces = dlgbn::complete_trap_spaces(f, traps_opt.caps);
            else
                spaces = dlgbn::minimal_trap_spaces(f, traps_opt.caps);
        }
        if (traps_opt.format == "json") {
            std::cout << dlgbn::subspaces_to_json(dlgbn::encode(g), spaces);
        } else {
            for (const Interp3& m : spaces) std::cout << m.subspace_string() << "\n";
        }
        return kExitOk;
    }

    if (cmd_classes->parsed()) {
        dlgbn::GroundProgram g = load_program(classes_opt.input);
        dlgbn::TransitionGraph tg = class_kind == "stable" ? dlgbn::stable_tg(g, classes_opt.caps)
                                                           : dlgbn::supported_tg(g, classes_opt.caps);
        auto classes = dlgbn::strict_classes(tg);
        if (classes_opt.format == "json") {
            std::cout << dlgbn::classes_to_json(g, classes);
        } else {
            for (const auto& cls : classes) {
                for (std::size_t i = 0; i < cls.size(); ++i) {
                    if (i) std::cout << " -> ";
                    std::cout << dlgbn::atom_names_of(g, cls[i]);
                }
                std::cout << "\n";
            }
        }
        return kExitOk;
    }

    if (cmd_stg->parsed()) {
        dlgbn::GroundProgram g = load_program(stg_opt.input);
        dlgbn::TransitionGraph tg;
        bool program_style = stg_kind == "stable" || stg_kind == "supported";
        if (stg_kind == "stable")
            tg = dlgbn::stable_tg(g, stg_opt.caps);
        else if (stg_kind == "supported")
            tg = dlgbn::supported_tg(g, stg_opt.caps);
        else if (stg_kind == "sync")
            tg = dlgbn::sync_stg(dlgbn::encode(g), stg_opt.caps);
        else
            tg = dlgbn::async_stg(dlgbn::encode(g), stg_opt.caps);

        if (stg_opt.format == "json") {
            nlohmann::json j;
            j["kind"] = stg_kind;
            j["variables"] = tg.variables;
            j["functional"] = tg.functional;
            nlohmann::json arcs;
            for (dlgbn::State s = 0; s < tg.num_states(); ++s) {
                std::string from = dlgbn::state_bits(s, tg.variables.size());
                if (tg.functional) {
                    arcs[from] = dlgbn::state_bits(tg.successor[s], tg.variables.size());
                } else {
                    auto list = nlohmann::json::array();
                    for (dlgbn::State t : tg.out_arcs[s])
                        list.push_back(dlgbn::state_bits(t, tg.variables.size()));
                    arcs[from] = list;
                }
            }
            j["transitions"] = arcs;
            std::cout << j.dump(2) << "\n";
        } else if (program_style) {
            std::cout << dlgbn::tg_to_dot(g, tg, stg_kind);
        } else {
            std::cout << dlgbn::to_dot(tg, dlgbn::StgNodeStyle::Bits, stg_kind);
        }
        return kExitOk;
    }

    if (cmd_analyze->parsed()) {
        dlgbn::GroundProgram g = load_program(analyze_opt.input);
        dlgbn::AnalysisReport rep = dlgbn::analyze(g, analyze_opt.caps);
        std::cout << dlgbn::to_json(g, rep);
        return rep.all_bounds_hold() ? kExitOk : kExitVerifyFailed;
    }

    if (cmd_verify->parsed()) {
        dlgbn::GroundProgram g = load_program(verify_opt.input);
        auto results = dlgbn::verify_theorems(g, verify_opt.caps);
        dlgbn::AnalysisReport rep = dlgbn::analyze(g, verify_opt.caps);
        std::cout << dlgbn::verification_to_json(g, results, rep);
        bool ok = std::all_of(results.begin(), results.end(),
                              [](const dlgbn::TheoremResult& r) { return r.pass; });
        return ok ? kExitOk : kExitVerifyFailed;
    }

    if (cmd_probe->parsed()) {
        dlgbn::ConjectureReport rep = dlgbn::probe_conjectures(gen_cfg, trials, seed);
        std::cout << dlgbn::to_json(rep);
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dlgbn::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
