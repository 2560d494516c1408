#ifndef QLIST_TOOLS_COMMANDS_H
#define QLIST_TOOLS_COMMANDS_H

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qlist/pauli.h"

namespace qlist::cli {

/// Bad invocation: missing or malformed parameters. Exit code 1.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

enum ExitCode { kOk = 0, kUsage = 1, kDomain = 2, kCap = 3 };

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception &e);

struct BoundsArgs {
    double p_min = 0;
    double p_max = 0.25;
    double step = 0.005;
    unsigned list_length = 2;
};

std::string cmd_bounds(const BoundsArgs &args);

std::string cmd_gen_code(std::size_t n, std::size_t k, std::optional<std::uint64_t> seed);

/// Prints "L_min = <value>" plus the worst syndrome; with `list_length`, also
/// whether the code is an L-list code.
std::string cmd_check_list(const std::string &code_path, std::size_t t, std::optional<std::size_t> list_length,
                           std::uint64_t cap = kDefaultEnumerationCap);

std::string cmd_biased(std::size_t m, double eta);

/// Flat key=value text; '#' starts a comment line.
struct ExperimentConfig {
    std::map<std::string, std::string> values;

    static ExperimentConfig parse(std::string_view text);
    static ExperimentConfig load(const std::string &path);

    bool has(const std::string &key) const { return values.count(key) != 0; }
    std::string str(const std::string &key) const;
    std::string str(const std::string &key, const std::string &fallback) const;
    std::uint64_t uint(const std::string &key) const;
    std::uint64_t uint(const std::string &key, std::uint64_t fallback) const;
    double real(const std::string &key) const;
    double real(const std::string &key, double fallback) const;
    /// Canonical "key=value" lines, sorted by key.
    std::string echo() const;
};

struct RunOptions {
    std::optional<std::uint64_t> seed;  // overrides the config's seed
    unsigned threads = 1;
    std::uint64_t cap = kDefaultEnumerationCap;
};

/// Adversary Monte Carlo summary for a keyed code (code, t, K, eta, trials,
/// seed, adversary).
std::string cmd_simulate(const ExperimentConfig &config, const RunOptions &options);

/// Mean end-to-end fidelity of a Kraus attack (code, t, K, eta, kraus,
/// trials, seed).
std::string cmd_coherent(const ExperimentConfig &config, const RunOptions &options);

struct ExperimentOutput {
    std::string csv;  // "# qlist-trials v1", rows, then the summary block
    std::string summary;
    bool pass = false;
};

/// mode=code (default): load or generate a code, build its table and run the
/// keyed protocol against the adversary. mode=core: the code-free
/// distinguishing experiment on `logical` qubits.
ExperimentOutput cmd_experiment(const ExperimentConfig &config, const RunOptions &options);

struct TrialRow {
    std::uint64_t index = 0;
    std::string key_hex;
    std::string syndrome_hex;
    std::string secret_bits;
    std::string outcome;
};

/// Parses trial rows; rejects anything but a "# qlist-trials v1" file.
std::vector<TrialRow> read_trials_csv(std::string_view text);

}  // namespace qlist::cli

#endif
