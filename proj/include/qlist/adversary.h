#ifndef QLIST_ADVERSARY_H
#define QLIST_ADVERSARY_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qlist/listcode.h"
#include "qlist/protocol.h"
#include "qlist/rng.h"
#include "qlist/stats.h"

namespace qlist {

/// Eve's choice of a single Pauli error per trial. The interface carries no
/// key material: a strategy sees the public code and table it was built from,
/// the trial index and its own randomness.
class Strategy {
   public:
    virtual ~Strategy() = default;

    virtual std::string name() const = 0;
    /// Weight cap every emitted error respects.
    virtual std::size_t max_weight() const = 0;
    virtual PauliOp choose(std::uint64_t trial, Rng &rng) const = 0;
    /// True when the strategy could not find the structure it looks for and
    /// falls back to a fixed error.
    virtual bool degenerate() const { return false; }
};

using StrategyPtr = std::shared_ptr<const Strategy>;

/// Uniform element of ErrorSet(n, t) per trial.
StrategyPtr uniform_strategy(std::size_t n, std::size_t t, std::uint64_t cap = kDefaultEnumerationCap);

/// Always the same error (weight must be <= t).
StrategyPtr fixed_strategy(const PauliOp &e, std::size_t t);

/// Errors from the worst syndrome's list: the representative and the first
/// member with a different logical class, alternating at random. Degenerate
/// (representative only) when the code has L_min = 0.
StrategyPtr worst_pair_strategy(const ListTable &table);

struct WorstCase {
    PauliOp error;
    double failure = 0;
    StrategyPtr strategy;
};

/// Error of weight <= t maximizing the exact key-averaged failure over the
/// enumerated ensemble. Ties keep the first error in canonical order.
WorstCase exhaustive_worst(const ListTable &table, const std::vector<KeyedCode> &ensemble);

struct TrialRecord {
    std::uint64_t index = 0;
    BitVec key;
    PauliOp error;
    TrialOutcome outcome;
};

struct FailureEstimate {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double rate = 0;
    Interval ci;
    std::vector<TrialRecord> records;  // filled when requested, in index order
};

/// Per trial: fresh key, error from the strategy, run_trial. Key and error
/// come from separate streams of trial_rng(seed, index). Every error is
/// audited against table.t.
FailureEstimate estimate_failure(const KeyedFactory &factory, const ListTable &table, const Strategy &strategy,
                                 std::uint64_t trials, std::uint64_t seed, unsigned threads = 1,
                                 bool keep_records = false);

/// Strategy by config name: "uniform", "worst_pair", "identity".
StrategyPtr strategy_by_name(const std::string &name, const ListTable &table,
                             std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace qlist

#endif
