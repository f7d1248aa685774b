#include "crrigid/parser.hpp"
#include "crrigid/report.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace crrigid;

namespace {

void add_common(CLI::App* cmd, SessionConfig& cfg, std::string& input, bool& seed_set) {
    cmd->add_option("-i,--input", input, "input JSON file")->required();
    cmd->add_option("--json", cfg.json_out, "write the report to this path instead of stdout");
    auto* seed_opt = cmd->add_option("--seed", cfg.seed, "deterministic seed recorded in the report");
    cmd->final_callback([&seed_set, seed_opt]() { seed_set = seed_opt->count() > 0; });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact deformation and rigidity analysis for polynomial CR maps"};
    app.require_subcommand(1);

    SessionConfig cfg;
    std::string input;
    bool seed_set = false;

    auto* analyze = app.add_subcommand("analyze", "deformation space, trivial deformations and verdict");
    add_common(analyze, cfg, input, seed_set);
    analyze->add_option("--degree-cap", cfg.degree_cap, "degree cap for the deformation ansatz");
    analyze->add_option("--nondeg-cap", cfg.nondeg_cap, "order cap for the nondegeneracy search");

    auto* holk = app.add_subcommand("holk", "higher-order prolongation table and order-2 obstruction");
    add_common(holk, cfg, input, seed_set);
    holk->add_option("--degree-cap", cfg.degree_cap, "degree cap for the deformation ansatz");
    holk->add_option("--nondeg-cap", cfg.nondeg_cap, "order cap for the nondegeneracy search");
    holk->add_option("--order", cfg.order, "jet order for the prolongation table");
    holk->add_option("--prolong-cap", cfg.prolong_cap, "degree cap for prolongation unknowns");

    auto* nondeg = app.add_subcommand("nondegen", "nondegeneracy order only");
    add_common(nondeg, cfg, input, seed_set);
    nondeg->add_option("--nondeg-cap", cfg.nondeg_cap, "order cap for the nondegeneracy search");

    auto* segre = app.add_subcommand("segre", "Segre map ranks and the minimality criterion");
    add_common(segre, cfg, input, seed_set);
    segre->add_option("--bound", cfg.bound, "largest Segre order to examine");

    CLI11_PARSE(app, argc, argv);
    cfg.seed_from_cli = seed_set;

    try {
        if (segre->parsed()) {
            SegreSetup setup = load_segre_input(input, cfg);
            emit_report(run_segre(setup), setup.cfg);
        } else {
            AnalysisSetup setup = load_analysis_input(input, cfg);
            Json rep;
            if (analyze->parsed()) rep = run_analyze(setup);
            else if (holk->parsed()) rep = run_holk(setup);
            else rep = run_nondegen(setup);
            emit_report(rep, setup.cfg);
        }
    } catch (const ValidationError& e) {
        std::cerr << "validation failure: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
