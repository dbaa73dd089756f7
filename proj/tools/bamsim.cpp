#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bamsim/cli/commands.hpp"

namespace {

void add_common_options(CLI::App* cmd, bamsim::RunConfig& cfg, std::string& model_text,
                        std::optional<std::uint64_t>& seed) {
    cmd->add_option("--scenario", cfg.scenario, "Scenario file path or preset name (scenario01, scenario02)")
        ->required();
    cmd->add_option("--model", model_text, "Model selection: mam|rdm|alloctc, a comma list, or 'all'");
    cmd->add_option("--seed", seed, "Override the scenario seed");
    cmd->add_option("--repetitions", cfg.repetitions, "Number of repetitions; the seed increments per repetition")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", cfg.out_dir, "Output directory");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bamsim - DS-TE bandwidth allocation model simulator (MAM, RDM, AllocTC-Sharing)"};
    app.require_subcommand(1);

    bamsim::RunConfig cfg;
    std::string model_text = "all";
    std::optional<std::uint64_t> seed;

    CLI::App* cmd_run = app.add_subcommand("run", "Replay a scenario and write trace/timeseries/events/summary CSVs");
    add_common_options(cmd_run, cfg, model_text, seed);
    CLI::App* cmd_compare = app.add_subcommand("compare", "Run two or more models on one trace and tabulate deltas");
    add_common_options(cmd_compare, cfg, model_text, seed);
    CLI::App* cmd_gen = app.add_subcommand("gen-trace", "Generate and write the scenario's workload trace");
    add_common_options(cmd_gen, cfg, model_text, seed);
    CLI::App* cmd_validate = app.add_subcommand("validate", "Check a scenario file and report model validity");
    cmd_validate->add_option("--scenario", cfg.scenario, "Scenario file path or preset name")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.seed_override = seed;
        cfg.models = bamsim::parse_model_list(model_text);
        if (cmd_run->parsed()) return bamsim::cmd_run(cfg);
        if (cmd_compare->parsed()) return bamsim::cmd_compare(cfg);
        if (cmd_gen->parsed()) return bamsim::cmd_gen_trace(cfg);
        if (cmd_validate->parsed()) return bamsim::cmd_validate(cfg);
    } catch (const bamsim::SimulationError& e) {
        std::cerr << "simulation aborted: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
