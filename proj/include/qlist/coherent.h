#ifndef QLIST_COHERENT_H
#define QLIST_COHERENT_H

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlist/listcode.h"
#include "qlist/protocol.h"
#include "qlist/rng.h"

namespace qlist {

using Amplitude = std::complex<double>;

constexpr std::size_t kMaxStateQubits = 12;

/// Dense state on n qubits; qubit q is bit q of the basis index.
struct StateVec {
    std::size_t n = 0;
    std::vector<Amplitude> amp;

    StateVec() = default;
    explicit StateVec(std::size_t qubits);  // all-zero vector
    static StateVec basis(std::size_t qubits, std::uint64_t index);
    /// Haar-ish random state: normalized complex Gaussian amplitudes.
    static StateVec random(std::size_t qubits, Rng &rng);

    double norm2() const;
    void normalize();
    StateVec &operator+=(const StateVec &other);
    StateVec &operator*=(Amplitude c);
};

Amplitude inner(const StateVec &a, const StateVec &b);  // <a|b>

/// |<a|b>|^2.
double fidelity(const StateVec &a, const StateVec &b);

StateVec apply_pauli(const PauliOp &p, const StateVec &s);

/// sum_i c_i P_i as (coefficient, Pauli) terms.
using PauliSum = std::vector<std::pair<Amplitude, PauliOp>>;

StateVec apply_pauli_sum(const PauliSum &op, const StateVec &s);

/// Operation elements A_i given as Pauli sums. Only complete sets
/// (sum A_i^dagger A_i = I within 1e-9) can be constructed.
class KrausSet {
   public:
    static KrausSet make(std::vector<PauliSum> ops);
    static KrausSet single(const PauliOp &e);

    const std::vector<PauliSum> &ops() const { return ops_; }
    std::size_t num_qubits() const { return n_; }
    std::size_t max_weight() const;

   private:
    KrausSet(std::vector<PauliSum> ops, std::size_t n) : ops_(std::move(ops)), n_(n) {}
    std::vector<PauliSum> ops_;
    std::size_t n_ = 0;
};

/// Largest coefficient deviation of sum A_i^dagger A_i from the identity,
/// computed in the Pauli basis.
double completeness_error(const std::vector<PauliSum> &ops);

/// Operators separated by lines reading "kraus"; each term is
/// "re im pauli". Completeness is checked.
KrausSet read_kraus(std::string_view text);
std::string write_kraus(const KrausSet &ks);

/// Encoded basis of a code: |j> = prod_i Xbar_i^{j_i} |0bar>, with |0bar> the
/// projection of a computational basis state onto the code space and the +1
/// eigenspace of every Zbar.
class Encoder {
   public:
    explicit Encoder(const StabilizerCode &code);

    const StabilizerCode &code() const { return code_; }
    const std::vector<StateVec> &basis() const { return basis_; }
    StateVec encode(const StateVec &logical) const;
    /// Amplitudes <jbar|state> for every logical basis state j.
    StateVec decode(const StateVec &state) const;

   private:
    StabilizerCode code_;
    std::vector<StateVec> basis_;
};

StateVec encode(const StabilizerCode &code, const StateVec &logical);

struct Branch {
    StateVec state;
    std::size_t index = 0;
    double probability = 0;
};

/// Samples operation element i with probability ||A_i psi||^2 and returns the
/// normalized branch.
Branch apply_kraus(const StateVec &state, const KrausSet &ks, Rng &rng);

struct Measurement {
    FullSyndrome syndrome;
    StateVec state;
};

/// Sequential projective measurement of the base generators then T_1..T_K.
/// Throws when the sampled outcome has (numerically) zero probability.
Measurement measure_syndrome(const StateVec &state, const KeyedCode &kc, Rng &rng);

struct CoherentOutcome {
    double fidelity = 0;
    DecodeStatus status = DecodeStatus::kUncorrectable;
    std::size_t branch = 0;
    FullSyndrome syndrome;
};

/// encode -> Kraus branch -> syndrome -> decode and correct -> un-encode,
/// fidelity against the input logical state. An ambiguous decode applies the
/// table representative; an uncorrectable one applies nothing.
CoherentOutcome end_to_end(const KeyedCode &kc, const ListTable &table, const KrausSet &ks, const StateVec &logical,
                           Rng &rng);
/// As above with a prebuilt encoder for kc.as_code().
CoherentOutcome end_to_end(const KeyedCode &kc, const Encoder &encoder, const ListTable &table, const KrausSet &ks,
                           const StateVec &logical, Rng &rng);

}  // namespace qlist

#endif
