// qlist: command-line harness for the list-code toolkit.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.h"

namespace {

int emit(const std::string &text, const std::string &out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return qlist::cli::kOk;
    }
    std::ofstream out(out_path);
    if (!out) throw qlist::cli::UsageError("cannot write '" + out_path + "'");
    out << text;
    return qlist::cli::kOk;
}

}  // namespace

int main(int argc, char **argv) {
    using namespace qlist::cli;

    CLI::App app{"qlist: quantum list codes, keyed subcodes and adversary simulation"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::uint64_t> seed;
    std::string out_path;
    unsigned threads = 1;
    std::uint64_t cap = qlist::kDefaultEnumerationCap;
    app.add_option("--seed", seed, "Master seed for stochastic commands");
    app.add_option("--out", out_path, "Write the result here instead of stdout");
    app.add_option("--threads", threads, "Worker threads (never changes results)")->check(CLI::PositiveNumber);
    app.add_option("--cap", cap, "Error enumeration cap");

    BoundsArgs bounds;
    auto *bounds_cmd = app.add_subcommand("bounds", "Rate curves as CSV");
    bounds_cmd->add_option("--p-min", bounds.p_min);
    bounds_cmd->add_option("--p-max", bounds.p_max);
    bounds_cmd->add_option("--step", bounds.step);
    bounds_cmd->add_option("-L,--list-length", bounds.list_length);

    std::size_t gen_n = 0;
    std::size_t gen_k = 0;
    auto *gen_cmd = app.add_subcommand("gen-code", "Random [[n,k]] stabilizer code");
    gen_cmd->add_option("-n", gen_n)->required();
    gen_cmd->add_option("-k", gen_k)->required();

    std::string code_path;
    std::size_t check_t = 1;
    std::optional<std::size_t> check_l;
    auto *check_cmd = app.add_subcommand("check-list", "Minimum list length of a code");
    check_cmd->add_option("code", code_path, "Code file, or five_qubit")->required();
    check_cmd->add_option("-t", check_t);
    check_cmd->add_option("-L", check_l);

    std::size_t biased_m = 0;
    double biased_eta = 0.5;
    auto *biased_cmd = app.add_subcommand("biased-set", "Small-bias set export");
    biased_cmd->add_option("-m", biased_m)->required();
    biased_cmd->add_option("--eta", biased_eta);

    std::string config_path;
    auto *simulate_cmd = app.add_subcommand("simulate", "Adversary Monte Carlo on a keyed code");
    simulate_cmd->add_option("config", config_path)->required();
    auto *coherent_cmd = app.add_subcommand("coherent", "Statevector run of a Kraus attack");
    coherent_cmd->add_option("config", config_path)->required();
    auto *experiment_cmd = app.add_subcommand("experiment", "Full pipeline with per-trial CSV");
    experiment_cmd->add_option("config", config_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    RunOptions options{seed, threads, cap};
    try {
        if (*bounds_cmd) return emit(cmd_bounds(bounds), out_path);
        if (*gen_cmd) return emit(cmd_gen_code(gen_n, gen_k, seed), out_path);
        if (*check_cmd) return emit(cmd_check_list(code_path, check_t, check_l, cap), out_path);
        if (*biased_cmd) return emit(cmd_biased(biased_m, biased_eta), out_path);
        if (*simulate_cmd) return emit(cmd_simulate(ExperimentConfig::load(config_path), options), out_path);
        if (*coherent_cmd) return emit(cmd_coherent(ExperimentConfig::load(config_path), options), out_path);
        if (*experiment_cmd) {
            ExperimentOutput result = cmd_experiment(ExperimentConfig::load(config_path), options);
            emit(result.csv, out_path);
            if (!out_path.empty()) std::cout << result.summary;
            return kOk;
        }
    } catch (const std::exception &e) {
        std::cerr << "qlist: " << e.what() << '\n';
        return exit_code_for(e);
    }
    return kUsage;
}
