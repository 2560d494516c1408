#ifndef QLIST_STABILIZER_H
#define QLIST_STABILIZER_H

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlist/gf2.h"
#include "qlist/pauli.h"
#include "qlist/rng.h"

namespace qlist {

/// Raised for generator sets that do not define a stabilizer code.
class CodeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Commutation bits of an error against each generator, in generator order.
struct Syndrome {
    BitVec bits;

    std::string hex() const { return bits.hex(); }
    friend bool operator==(const Syndrome &, const Syndrome &) = default;
    friend auto operator<=>(const Syndrome &, const Syndrome &) = default;
};

/// An [[n, k]] stabilizer code given by an ordered, independent, pairwise
/// commuting list of n - k generators. Signs are ignored everywhere: the code
/// space is the joint +1 eigenspace of the Hermitian generators.
///
/// The logical basis is derived lazily, once, and shared between copies.
class StabilizerCode {
   public:
    /// Checks commutation and independence. Throws CodeError with
    /// "not commuting (i,j)" or "dependent generator i".
    static StabilizerCode validate(std::vector<PauliOp> gens, std::size_t n, std::size_t k);
    /// As validate, with a caller-supplied logical basis ordered
    /// X_1, Z_1, X_2, Z_2, ... which is checked against the generators.
    static StabilizerCode validate(
        std::vector<PauliOp> gens, std::size_t n, std::size_t k, std::vector<PauliOp> logicals);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    const std::vector<PauliOp> &generators() const { return gens_; }

    /// 2k Hermitian operators ordered X_1, Z_1, X_2, Z_2, ...
    const std::vector<PauliOp> &logicals() const;
    const PauliOp &logical_x(std::size_t j) const { return logicals()[2 * j]; }
    const PauliOp &logical_z(std::size_t j) const { return logicals()[2 * j + 1]; }

    /// (n - k) x 2n matrix of (x|z) generator rows.
    BitMatrix check_matrix() const;

   private:
    struct LogicalCache {
        std::once_flag once;
        std::vector<PauliOp> ops;
    };

    StabilizerCode(std::vector<PauliOp> gens, std::size_t n, std::size_t k);

    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::vector<PauliOp> gens_;
    std::shared_ptr<LogicalCache> cache_;
};

Syndrome syndrome(const StabilizerCode &code, const PauliOp &e);

bool in_normalizer(const StabilizerCode &code, const PauliOp &p);
/// Membership modulo phase: normalizer element whose (x|z) row lies in the
/// span of the generator rows.
bool in_stabilizer(const StabilizerCode &code, const PauliOp &p);

/// 2k-bit coordinates of a normalizer element in the logical basis:
/// bit j = omega(p, Z_j) (the X_j component), bit k + j = omega(p, X_j)
/// (the Z_j component). Zero exactly on the stabilizer. Throws
/// std::invalid_argument when p is outside the normalizer.
BitVec logical_class(const StabilizerCode &code, const PauliOp &p);

/// Inverse of logical_class up to stabilizer factors: the product of logical
/// basis operators selected by `cls`.
PauliOp lift_logical(const StabilizerCode &code, const BitVec &cls);

/// Symplectic Gram-Schmidt over rows of even length 2m. Returns hyperbolic
/// pairs (a, b) with form(a, b) = 1, every pair orthogonal to every other.
/// Rows of the pool that end up in the radical are dropped. The pool is
/// consumed front to back, the partner of each row being the first later row
/// it pairs with, so the result is a deterministic function of the pool order.
std::vector<std::pair<BitVec, BitVec>> symplectic_pairs(std::vector<BitVec> pool);

/// Samples an ordered generating set: each new generator is uniform over the
/// Paulis (mod phase) that commute with the earlier ones and lie outside
/// their span.
StabilizerCode random_code(std::size_t n, std::size_t k, Rng &rng);

/// Line-oriented text: "n k", then n - k generator strings, then optionally
/// the 2k logical strings.
std::string write_code(const StabilizerCode &code, bool include_logicals = false);
StabilizerCode read_code(std::string_view text);
StabilizerCode load_code_file(const std::string &path);

/// The [[5,1,3]] code with generators XZZXI and its cyclic shifts.
StabilizerCode five_qubit_code();

}  // namespace qlist

#endif
