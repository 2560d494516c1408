#ifndef QLIST_PROTOCOL_H
#define QLIST_PROTOCOL_H

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qlist/biased.h"
#include "qlist/listcode.h"
#include "qlist/stabilizer.h"
#include "qlist/stats.h"

namespace qlist {

/// The biased sets used to pick K secret generators for a code with k logical
/// qubits. Step j (0-based) draws from a set of length 2(k - j).
struct KeySchedule {
    std::size_t logical_qubits = 0;
    std::size_t extra = 0;
    double eta_target = 0;
    std::vector<std::shared_ptr<const BiasedSet>> sets;
    /// Certified bias of step j's draw, including key wrap and the zero-draw
    /// fallback.
    std::vector<double> step_eta;
    double eta_eff = 0;

    std::uint64_t key_bits() const;
    std::vector<std::uint64_t> set_sizes() const;
};

/// For each step, the cheapest set whose certified draw bias is <= eta_target.
/// Requires extra < logical_qubits, or extra == 0.
KeySchedule make_schedule(std::size_t logical_qubits, std::size_t extra, double eta_target);

/// Step element for `key`: the drawn vector, or the set's first nonzero
/// element when the draw is zero (a zero vector would be a dependent generator).
const BitVec &draw_nonzero(const BiasedSet &set, const BitVec &key);

/// Secret generators expressed in the 2k-dimensional logical coordinates of
/// the base code, plus the logical basis that remains for the payload.
struct LogicalExtension {
    std::vector<BitVec> probes;
    std::vector<std::pair<BitVec, BitVec>> payload;  // (X, Z) pairs
};

/// Progressive selection: at each step the drawn bits (x part | z part) pick
/// a logical Pauli over the current basis; the next basis is the symplectic
/// complement of that probe. `key` must hold exactly schedule.key_bits() bits.
/// Limited to 32 logical qubits.
LogicalExtension extend_logical(const KeySchedule &schedule, const BitVec &key);

/// A list code plus K key-selected stabilizer generators.
class KeyedCode {
   public:
    const StabilizerCode &base() const { return base_; }
    std::size_t extra_count() const { return extra_.size(); }
    /// Physical secret generators T_1..T_K.
    const std::vector<PauliOp> &extra() const { return extra_; }
    /// The same generators in the base code's logical coordinates.
    const std::vector<BitVec> &extra_classes() const { return extension_.probes; }
    const BitVec &key() const { return key_; }
    const KeySchedule &schedule() const { return *schedule_; }
    double eta_eff() const { return schedule_->eta_eff; }
    std::size_t payload_qubits() const { return extension_.payload.size(); }

    /// Payload coordinates of a base logical class: bit i = form(v, Z_i),
    /// bit p + i = form(v, X_i) with p = payload_qubits().
    BitVec payload_class(const BitVec &base_class) const;

    /// The subcode as a stabilizer code: base generators then T_1..T_K, with
    /// the payload pairs as its logical basis.
    StabilizerCode as_code() const;

   private:
    friend KeyedCode augment(const StabilizerCode &, std::shared_ptr<const KeySchedule>, const BitVec &);

    KeyedCode(StabilizerCode base, std::shared_ptr<const KeySchedule> schedule, BitVec key,
              LogicalExtension extension, std::vector<PauliOp> extra)
        : base_(std::move(base)),
          schedule_(std::move(schedule)),
          key_(std::move(key)),
          extension_(std::move(extension)),
          extra_(std::move(extra)) {}

    StabilizerCode base_;
    std::shared_ptr<const KeySchedule> schedule_;
    BitVec key_;
    LogicalExtension extension_;
    std::vector<PauliOp> extra_;
};

KeyedCode augment(const StabilizerCode &base, std::shared_ptr<const KeySchedule> schedule, const BitVec &key);
/// Builds the schedule for (base.k(), extra, eta_target) first.
KeyedCode augment(const StabilizerCode &base, std::size_t extra, const BitVec &key, double eta_target);

struct FullSyndrome {
    Syndrome public_bits;
    BitVec secret_bits;

    friend bool operator==(const FullSyndrome &, const FullSyndrome &) = default;
};

FullSyndrome full_syndrome(const KeyedCode &kc, const PauliOp &e);

enum class DecodeStatus { kUnique, kAmbiguous, kUncorrectable };

const char *to_string(DecodeStatus status);

struct DecodeResult {
    DecodeStatus status = DecodeStatus::kUncorrectable;
    /// First list element consistent with the secret bits (the entry's
    /// representative when no secret bits exist). Identity if uncorrectable.
    PauliOp correction;
    /// Base logical class of rep^dagger * correction.
    BitVec list_class;
    std::size_t consistent = 0;
};

/// Looks up the public syndrome, then keeps the list elements whose
/// commutation with T_1..T_K matches the secret bits. Elements that differ by
/// a secret generator act identically on the payload and count once.
DecodeResult decode(const KeyedCode &kc, const ListTable &table, const FullSyndrome &syn);

struct TrialOutcome {
    bool success = false;
    DecodeStatus status = DecodeStatus::kUncorrectable;
    FullSyndrome syndrome;
    BitVec decoded_class;
    BitVec truth_class;
};

/// Planted error e (weight <= table.t): success iff decoding is unique and
/// the correction matches e on the payload.
TrialOutcome run_trial(const KeyedCode &kc, const ListTable &table, const PauliOp &e);

/// Fresh KeyedCodes from keys for a fixed base and schedule.
struct KeyedFactory {
    StabilizerCode base;
    std::shared_ptr<const KeySchedule> schedule;

    KeyedFactory(StabilizerCode base_code, std::size_t extra, double eta_target);
    std::uint64_t key_bits() const { return schedule->key_bits(); }
    KeyedCode make(const BitVec &key) const { return augment(base, schedule, key); }
};

/// Every KeyedCode over the full key space; refuses key spaces above 2^16.
std::vector<KeyedCode> enumerate_keyed_codes(const KeyedFactory &factory);

/// Fraction of keys for which run_trial fails on e, over the full key space.
double exact_failure(const std::vector<KeyedCode> &ensemble, const ListTable &table, const PauliOp &e);

struct StepCount {
    std::uint64_t given = 0;  // trials where M_1..M_{j-1} held
    std::uint64_t held = 0;   // ... and M_j held too
};

struct CoreRecord {
    BitVec key;
    BitVec probe_bits;  // form(first list generator, T_j) for each j
    bool collision = false;
};

struct DistinguishResult {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double rate = 0;
    Interval ci;
    double eta_eff = 0;
    double bound = 0;
    std::uint64_t key_bits = 0;
    std::vector<StepCount> steps;
    std::vector<CoreRecord> records;  // per trial, when requested
};

/// Code-free core of the keyed construction: plant a random list of L
/// independent logical Paulis on `logical_qubits` qubits, draw K probes as in
/// extend_logical, and count trials where two distinct list elements (whose
/// difference is not itself a probe product) receive identical probe bits.
/// Step statistics follow the pair (identity, first list generator).
DistinguishResult distinguish_experiment(std::size_t logical_qubits, std::size_t list_length, std::size_t extra,
                                         double eta_target, std::uint64_t trials, std::uint64_t seed,
                                         unsigned threads = 1, bool keep_records = false);

}  // namespace qlist

#endif
