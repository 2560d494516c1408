#include "commands.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qlist/adversary.h"
#include "qlist/biased.h"
#include "qlist/bounds.h"
#include "qlist/coherent.h"
#include "qlist/listcode.h"
#include "qlist/protocol.h"
#include "qlist/rng.h"
#include "qlist/stabilizer.h"
#include "qlist/stats.h"

namespace qlist::cli {

namespace {

constexpr std::uint64_t kCoherentStream = 2;

std::string fmt(double v, int digits = 10) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

std::uint64_t require_seed(const ExperimentConfig &config, const RunOptions &options) {
    if (options.seed) return *options.seed;
    if (!config.has("seed")) throw UsageError("a seed is required (seed=... or --seed)");
    return config.uint("seed");
}

std::uint64_t require_trials(const ExperimentConfig &config) {
    std::uint64_t trials = config.uint("trials");
    if (trials == 0) throw UsageError("trials must be at least 1");
    return trials;
}

StabilizerCode config_code(const ExperimentConfig &config) {
    if (config.has("code")) {
        std::string path = config.str("code");
        if (path == "five_qubit") return five_qubit_code();
        return read_code(read_file(path));
    }
    if (config.has("n") && config.has("k")) {
        Rng rng = trial_rng(config.uint("code_seed", 0), 0);
        return random_code(config.uint("n"), config.uint("k"), rng);
    }
    throw UsageError("config needs code=<file> or n=, k=");
}

std::string header(const char *kind, std::uint64_t seed, const ExperimentConfig &config) {
    std::ostringstream out;
    out << "# qlist-" << kind << " v1\n";
    out << "# seed=" << seed << '\n';
    std::istringstream echo(config.echo());
    std::string line;
    while (std::getline(echo, line)) out << "# " << line << '\n';
    return out.str();
}

double pass_margin(double bound, std::uint64_t trials) {
    return std::min(1.0, bound) + 3 * binomial_sigma(std::min(1.0, bound), trials);
}

const char *outcome_name(const TrialOutcome &o) {
    if (o.success) return "success";
    if (o.status == DecodeStatus::kUnique) return "wrong";
    return to_string(o.status);
}

}  // namespace

int exit_code_for(const std::exception &e) {
    if (dynamic_cast<const UsageError *>(&e)) return kUsage;
    if (dynamic_cast<const CapExceeded *>(&e)) return kCap;
    return kDomain;
}

std::string cmd_bounds(const BoundsArgs &args) {
    if (!(args.step > 0) || args.p_max < args.p_min) throw UsageError("bounds: empty range");
    if (args.list_length == 0) throw UsageError("bounds: L must be positive");
    auto rows = static_cast<std::uint64_t>(std::floor((args.p_max - args.p_min) / args.step + 1e-9)) + 1;
    if (rows == 0 || !std::isfinite(static_cast<double>(rows))) throw UsageError("bounds: range yields no rows");
    std::ostringstream out;
    out << "# qlist-bounds v1\n";
    out << "# L=" << args.list_length << '\n';
    out << "p,list_rate_Linf,list_rate_L,gv_rate,rains_threshold_flag\n";
    double rains = rains_threshold();
    for (std::uint64_t i = 0; i < rows; ++i) {
        double p = args.p_min + static_cast<double>(i) * args.step;
        out << fmt(p, 17) << ',' << fmt(list_rate(p).value, 17) << ',' << fmt(list_rate(p, args.list_length).value, 17)
            << ',';
        if (p <= 0.25) out << fmt(gv_rate(p).value, 17);
        out << ',' << (p >= rains ? 1 : 0) << '\n';
    }
    return out.str();
}

std::string cmd_gen_code(std::size_t n, std::size_t k, std::optional<std::uint64_t> seed) {
    if (!seed) throw UsageError("gen-code: --seed is required");
    Rng rng = trial_rng(*seed, 0);
    StabilizerCode code = random_code(n, k, rng);
    std::ostringstream out;
    out << "# qlist gen-code n=" << n << " k=" << k << " seed=" << *seed << '\n';
    out << write_code(code, true);
    return out.str();
}

std::string cmd_check_list(const std::string &code_path, std::size_t t, std::optional<std::size_t> list_length,
                           std::uint64_t cap) {
    StabilizerCode code = code_path == "five_qubit" ? five_qubit_code() : read_code(read_file(code_path));
    ListReport report = min_list_length(code, t, cap);
    std::ostringstream out;
    out << "L_min = " << report.l_min << '\n';
    out << "worst_syndrome = " << report.worst_syndrome.hex() << '\n';
    out << "syndromes = " << report.entry_count << '\n';
    out << "errors = " << report.error_count << '\n';
    if (list_length) {
        out << "[" << code.n() << "," << code.k() << "," << t << "," << *list_length << "]-list code: "
            << (report.l_min <= *list_length ? "yes" : "no") << '\n';
    }
    return out.str();
}

std::string cmd_biased(std::size_t m, double eta) {
    BiasedSet set = build_biased(m, eta);
    return write_biased(set);
}

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
    ExperimentConfig config;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto trim = [](std::string s) {
        auto begin = s.find_first_not_of(" \t\r");
        auto end = s.find_last_not_of(" \t\r");
        return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line " + std::to_string(line_no) + ": expected key=value");
        std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw UsageError("config line " + std::to_string(line_no) + ": empty key");
        config.values[key] = trim(line.substr(eq + 1));
    }
    return config;
}

ExperimentConfig ExperimentConfig::load(const std::string &path) { return parse(read_file(path)); }

std::string ExperimentConfig::str(const std::string &key) const {
    auto it = values.find(key);
    if (it == values.end()) throw UsageError("config is missing '" + key + "'");
    return it->second;
}

std::string ExperimentConfig::str(const std::string &key, const std::string &fallback) const {
    return has(key) ? str(key) : fallback;
}

std::uint64_t ExperimentConfig::uint(const std::string &key) const {
    std::string v = str(key);
    std::size_t used = 0;
    std::uint64_t out = 0;
    try {
        out = std::stoull(v, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != v.size() || v.empty() || v[0] == '-') throw UsageError("config '" + key + "' is not an unsigned integer");
    return out;
}

std::uint64_t ExperimentConfig::uint(const std::string &key, std::uint64_t fallback) const {
    return has(key) ? uint(key) : fallback;
}

double ExperimentConfig::real(const std::string &key) const {
    std::string v = str(key);
    std::size_t used = 0;
    double out = 0;
    try {
        out = std::stod(v, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != v.size() || v.empty()) throw UsageError("config '" + key + "' is not a number");
    return out;
}

double ExperimentConfig::real(const std::string &key, double fallback) const {
    return has(key) ? real(key) : fallback;
}

std::string ExperimentConfig::echo() const {
    std::ostringstream out;
    for (const auto &[k, v] : values) out << k << '=' << v << '\n';
    return out.str();
}

std::string cmd_simulate(const ExperimentConfig &config, const RunOptions &options) {
    std::uint64_t seed = require_seed(config, options);
    std::uint64_t trials = require_trials(config);
    StabilizerCode code = config_code(config);
    ListTable table = build_table(code, config.uint("t", 1), options.cap);
    KeyedFactory factory(code, config.uint("K", 0), config.real("eta", 0.5));
    StrategyPtr strategy = strategy_by_name(config.str("adversary", "worst_pair"), table, options.cap);
    FailureEstimate est = estimate_failure(factory, table, *strategy, trials, seed, options.threads);
    ListReport report = list_report(table);
    std::size_t list_length = config.uint("L", report.l_min);

    std::ostringstream out;
    out << header("simulate", seed, config);
    out << "adversary = " << strategy->name() << '\n';
    out << "L_min = " << report.l_min << '\n';
    out << "trials = " << est.trials << '\n';
    out << "failures = " << est.failures << '\n';
    out << "rate = " << fmt(est.rate) << '\n';
    out << "ci95 = [" << fmt(est.ci.lo) << ", " << fmt(est.ci.hi) << "]\n";
    out << "eta_eff = " << fmt(factory.schedule->eta_eff) << '\n';
    out << "failure_bound = "
        << fmt(failure_bound(static_cast<unsigned>(list_length), factory.schedule->eta_eff, factory.schedule->extra))
        << '\n';
    out << "key_bits = " << factory.key_bits() << '\n';
    return out.str();
}

std::string cmd_coherent(const ExperimentConfig &config, const RunOptions &options) {
    std::uint64_t seed = require_seed(config, options);
    std::uint64_t trials = require_trials(config);
    StabilizerCode code = config_code(config);
    ListTable table = build_table(code, config.uint("t", 1), options.cap);
    KeyedFactory factory(code, config.uint("K", 0), config.real("eta", 0.5));
    KrausSet ks = read_kraus(read_file(config.str("kraus")));
    std::string logical_mode = config.str("logical", "random");

    double total = 0;
    double worst = 1;
    std::uint64_t unique = 0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        Rng key_rng = trial_rng(seed, i, 0);
        Rng rng = trial_rng(seed, i, kCoherentStream);
        KeyedCode kc = factory.make(random_bits(key_rng, factory.key_bits()));
        std::size_t p = kc.payload_qubits();
        StateVec logical = logical_mode == "zero" ? StateVec::basis(p, 0) : StateVec::random(p, rng);
        CoherentOutcome o = end_to_end(kc, table, ks, logical, rng);
        total += o.fidelity;
        worst = std::min(worst, o.fidelity);
        if (o.status == DecodeStatus::kUnique) ++unique;
    }
    std::ostringstream out;
    out << header("coherent", seed, config);
    out << "trials = " << trials << '\n';
    out << "mean_fidelity = " << fmt(total / static_cast<double>(trials), 12) << '\n';
    out << "min_fidelity = " << fmt(worst, 12) << '\n';
    out << "unique_decodes = " << unique << '\n';
    return out.str();
}

ExperimentOutput cmd_experiment(const ExperimentConfig &config, const RunOptions &options) {
    std::uint64_t seed = require_seed(config, options);
    std::uint64_t trials = require_trials(config);
    std::string mode = config.str("mode", "code");
    std::size_t extra = config.uint("K");
    double eta = config.real("eta", 0.5);

    std::ostringstream csv;
    std::ostringstream summary;
    csv << header("trials", seed, config);
    csv << "index,key_hex,syndrome_hex,secret_bits,outcome\n";
    std::uint64_t failures = 0;
    double bound = 0;
    double eta_eff = 0;
    std::uint64_t key_bits = 0;
    std::size_t list_length = 0;

    if (mode == "core") {
        list_length = config.uint("L");
        DistinguishResult r = distinguish_experiment(config.uint("logical"), list_length, extra, eta, trials, seed,
                                                     options.threads, true);
        for (std::uint64_t i = 0; i < trials; ++i) {
            const CoreRecord &rec = r.records[i];
            csv << i << ',' << rec.key.hex() << ",-," << rec.probe_bits.str() << ','
                << (rec.collision ? "collision" : "success") << '\n';
        }
        failures = r.failures;
        bound = r.bound;
        eta_eff = r.eta_eff;
        key_bits = r.key_bits;
        for (std::size_t j = 0; j < r.steps.size(); ++j) {
            const StepCount &s = r.steps[j];
            double cond = s.given ? static_cast<double>(s.held) / static_cast<double>(s.given) : 0.0;
            summary << "step " << j + 1 << " held/given = " << s.held << '/' << s.given << " (" << fmt(cond, 6)
                    << ")\n";
        }
    } else if (mode == "code") {
        StabilizerCode code = config_code(config);
        ListTable table = build_table(code, config.uint("t", 1), options.cap);
        ListReport report = list_report(table);
        list_length = config.uint("L", report.l_min);
        if (report.l_min > list_length) {
            throw std::domain_error("code is not an L-list code (L_min = " + std::to_string(report.l_min) + ")");
        }
        KeyedFactory factory(code, extra, eta);
        StrategyPtr strategy = strategy_by_name(config.str("adversary", "worst_pair"), table, options.cap);
        FailureEstimate est = estimate_failure(factory, table, *strategy, trials, seed, options.threads, true);
        for (const auto &rec : est.records) {
            csv << rec.index << ',' << rec.key.hex() << ',' << rec.outcome.syndrome.public_bits.hex() << ','
                << rec.outcome.syndrome.secret_bits.str() << ',' << outcome_name(rec.outcome) << '\n';
        }
        failures = est.failures;
        eta_eff = factory.schedule->eta_eff;
        key_bits = factory.key_bits();
        bound = failure_bound(static_cast<unsigned>(list_length), eta_eff, extra);
        summary << "adversary = " << strategy->name() << '\n';
    } else {
        throw UsageError("unknown mode '" + mode + "'");
    }

    double rate = static_cast<double>(failures) / static_cast<double>(trials);
    Interval ci = wilson_interval(failures, trials);
    ExperimentOutput out;
    out.pass = rate <= pass_margin(bound, trials);
    std::ostringstream block;
    block << "trials = " << trials << '\n';
    block << "failures = " << failures << '\n';
    block << "empirical_failure = " << fmt(rate) << '\n';
    block << "ci95 = [" << fmt(ci.lo) << ", " << fmt(ci.hi) << "]\n";
    block << "L = " << list_length << '\n';
    block << "eta_eff = " << fmt(eta_eff) << '\n';
    block << "failure_bound = " << fmt(bound) << '\n';
    block << "key_bits = " << key_bits << '\n';
    block << summary.str();
    block << "result = " << (out.pass ? "PASS" : "FAIL") << '\n';
    out.summary = block.str();

    std::istringstream lines(out.summary);
    std::string line;
    while (std::getline(lines, line)) csv << "# " << line << '\n';
    out.csv = csv.str();
    return out;
}

std::vector<TrialRow> read_trials_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty trials file");
    if (line != "# qlist-trials v1") throw std::invalid_argument("unsupported trials format '" + line + "'");
    std::vector<TrialRow> rows;
    bool columns_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!columns_seen) {
            if (line != "index,key_hex,syndrome_hex,secret_bits,outcome") {
                throw std::invalid_argument("unexpected trials columns '" + line + "'");
            }
            columns_seen = true;
            continue;
        }
        std::vector<std::string> fields;
        std::istringstream fs(line);
        std::string field;
        while (std::getline(fs, field, ',')) fields.push_back(field);
        if (fields.size() != 5) throw std::invalid_argument("trials row has " + std::to_string(fields.size()) + " fields");
        rows.push_back(TrialRow{std::stoull(fields[0]), fields[1], fields[2], fields[3], fields[4]});
    }
    return rows;
}

}  // namespace qlist::cli
