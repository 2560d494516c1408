#include "qlist/adversary.h"

#include <stdexcept>

#include "qlist/parallel.h"

namespace qlist {

namespace {

constexpr std::uint64_t kKeyStream = 0;
constexpr std::uint64_t kEveStream = 1;

class UniformStrategy : public Strategy {
   public:
    UniformStrategy(ErrorSet errors) : errors_(std::move(errors)) {}

    std::string name() const override { return "uniform"; }
    std::size_t max_weight() const override { return errors_.t; }
    PauliOp choose(std::uint64_t, Rng &rng) const override {
        return errors_.elements[uniform_below(rng, errors_.elements.size())];
    }

   private:
    ErrorSet errors_;
};

class FixedStrategy : public Strategy {
   public:
    FixedStrategy(PauliOp e, std::size_t t, bool degenerate)
        : error_(std::move(e)), t_(t), degenerate_(degenerate) {}

    std::string name() const override { return degenerate_ ? "worst_pair(degenerate)" : "fixed"; }
    std::size_t max_weight() const override { return t_; }
    PauliOp choose(std::uint64_t, Rng &) const override { return error_; }
    bool degenerate() const override { return degenerate_; }

   private:
    PauliOp error_;
    std::size_t t_;
    bool degenerate_;
};

class PairStrategy : public Strategy {
   public:
    PairStrategy(PauliOp a, PauliOp b, std::size_t t) : a_(std::move(a)), b_(std::move(b)), t_(t) {}

    std::string name() const override { return "worst_pair"; }
    std::size_t max_weight() const override { return t_; }
    PauliOp choose(std::uint64_t, Rng &rng) const override { return (rng() & 1) ? b_ : a_; }

   private:
    PauliOp a_;
    PauliOp b_;
    std::size_t t_;
};

}  // namespace

StrategyPtr uniform_strategy(std::size_t n, std::size_t t, std::uint64_t cap) {
    if (t > n) throw std::domain_error("uniform_strategy: t exceeds n");
    return std::make_shared<UniformStrategy>(enumerate_errors(n, t, cap));
}

StrategyPtr fixed_strategy(const PauliOp &e, std::size_t t) {
    if (e.weight() > t) throw std::domain_error("fixed_strategy: error weight exceeds t");
    return std::make_shared<FixedStrategy>(e.hermitian(), t, false);
}

StrategyPtr worst_pair_strategy(const ListTable &table) {
    ListReport report = list_report(table);
    const ListEntry &entry = table.entries.at(report.worst_syndrome);
    if (report.l_min == 0) return std::make_shared<FixedStrategy>(entry.rep, table.t, true);
    PauliOp rep_dagger = entry.rep.dagger();
    for (const auto &e : enumerate_errors(table.code.n(), table.t).elements) {
        if (syndrome(table.code, e) != report.worst_syndrome) continue;
        if (logical_class(table.code, rep_dagger * e).any()) return std::make_shared<PairStrategy>(entry.rep, e, table.t);
    }
    throw std::logic_error("worst_pair_strategy: table rank without a witnessing member");
}

WorstCase exhaustive_worst(const ListTable &table, const std::vector<KeyedCode> &ensemble) {
    WorstCase worst;
    worst.error = PauliOp(table.code.n());
    worst.failure = -1;
    for (const auto &e : enumerate_errors(table.code.n(), table.t).elements) {
        double f = exact_failure(ensemble, table, e);
        if (f > worst.failure) {
            worst.failure = f;
            worst.error = e;
        }
    }
    worst.strategy = fixed_strategy(worst.error, table.t);
    return worst;
}

FailureEstimate estimate_failure(const KeyedFactory &factory, const ListTable &table, const Strategy &strategy,
                                 std::uint64_t trials, std::uint64_t seed, unsigned threads, bool keep_records) {
    if (trials == 0) throw std::domain_error("estimate_failure: trials must be positive");
    if (strategy.max_weight() > table.t) throw std::domain_error("strategy weight cap exceeds the table's t");
    unsigned workers = std::max(1u, threads);
    std::vector<std::uint64_t> failures(workers, 0);
    std::vector<TrialRecord> records(keep_records ? trials : 0);

    parallel_for(trials, workers, [&](std::size_t i, unsigned w) {
        Rng key_rng = trial_rng(seed, i, kKeyStream);
        Rng eve_rng = trial_rng(seed, i, kEveStream);
        BitVec key = random_bits(key_rng, factory.key_bits());
        PauliOp e = strategy.choose(i, eve_rng);
        if (e.weight() > table.t) {
            throw std::logic_error("strategy " + strategy.name() + " emitted " + e.str() + " above the weight cap");
        }
        KeyedCode kc = factory.make(key);
        TrialOutcome outcome = run_trial(kc, table, e);
        if (!outcome.success) ++failures[w];
        if (keep_records) records[i] = TrialRecord{i, std::move(key), std::move(e), std::move(outcome)};
    });

    FailureEstimate est;
    est.trials = trials;
    for (auto f : failures) est.failures += f;
    est.rate = static_cast<double>(est.failures) / static_cast<double>(trials);
    est.ci = wilson_interval(est.failures, trials);
    est.records = std::move(records);
    return est;
}

StrategyPtr strategy_by_name(const std::string &name, const ListTable &table, std::uint64_t cap) {
    if (name == "uniform") return uniform_strategy(table.code.n(), table.t, cap);
    if (name == "worst_pair") return worst_pair_strategy(table);
    if (name == "identity") return fixed_strategy(PauliOp(table.code.n()), table.t);
    throw std::domain_error("unknown adversary '" + name + "'");
}

}  // namespace qlist
