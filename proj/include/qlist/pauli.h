#ifndef QLIST_PAULI_H
#define QLIST_PAULI_H

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qlist/gf2.h"

namespace qlist {

/// An n-qubit Pauli operator in the normal form i^phase X^x Z^z.
///
/// Y on a qubit is x=1, z=1 with one extra unit of phase (Y = iXZ), so the
/// Hermitian operator "Y" has phase 1 and "-iY" has phase 0.
class PauliOp {
   public:
    PauliOp() = default;
    /// Identity on n qubits.
    explicit PauliOp(std::size_t n);
    PauliOp(BitVec x, BitVec z, std::uint8_t phase = 0);

    /// Parses the text form: optional phase token ("+", "i", "-", "-i") then
    /// one letter from IXYZ per qubit, e.g. "-iXIZY".
    static PauliOp from_string(std::string_view text);
    /// Hermitian single-qubit letter on `qubit` (0-based) of an n-qubit register.
    static PauliOp single(std::size_t n, std::size_t qubit, char letter);
    /// Hermitian operator with the given symplectic (x|z) row of length 2n.
    static PauliOp from_symplectic(const BitVec &xz);

    std::size_t num_qubits() const { return x_.size(); }
    std::uint8_t phase() const { return phase_; }
    const BitVec &x() const { return x_; }
    const BitVec &z() const { return z_; }

    /// Letter on one qubit: 'I', 'X', 'Y' or 'Z'.
    char letter(std::size_t qubit) const;
    /// Inverse of from_string. Phase-0 sign token ("+") is omitted.
    std::string str() const;

    /// (x|z) concatenated, 2n bits.
    BitVec symplectic() const { return x_.concat(z_); }
    std::size_t weight() const;
    bool is_identity_up_to_phase() const { return x_.none() && z_.none(); }

    /// Same x and z with the phase that makes the operator Hermitian.
    PauliOp hermitian() const;
    PauliOp dagger() const;

    PauliOp &operator*=(const PauliOp &rhs);
    friend PauliOp operator*(PauliOp lhs, const PauliOp &rhs) { return lhs *= rhs; }

    bool equal_up_to_phase(const PauliOp &other) const { return x_ == other.x_ && z_ == other.z_; }
    friend bool operator==(const PauliOp &a, const PauliOp &b) = default;

   private:
    BitVec x_;
    BitVec z_;
    std::uint8_t phase_ = 0;
};

/// Symplectic form: 0 when p and q commute, 1 when they anticommute.
bool omega(const PauliOp &p, const PauliOp &q);

/// Same form on (x|z) rows of even length 2m.
bool symplectic_form(const BitVec &a, const BitVec &b);

/// GF(2) rank of the stacked (x|z) rows; phases ignored.
std::size_t symplectic_rank(std::span<const PauliOp> ps);

/// Default refusal threshold for error-set enumeration.
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// Thrown when an enumeration would exceed its cap.
class CapExceeded : public std::runtime_error {
   public:
    CapExceeded(std::uint64_t required, std::uint64_t cap);
    std::uint64_t required() const { return required_; }
    std::uint64_t cap() const { return cap_; }

   private:
    std::uint64_t required_;
    std::uint64_t cap_;
};

/// Number of Paulis of weight <= t on n qubits, sum_r 3^r C(n, r).
/// Saturates at UINT64_MAX.
std::uint64_t error_count(std::size_t n, std::size_t t);

/// All Paulis of weight <= t, in canonical order: by weight, then by
/// lexicographic support, then by letters (X < Y < Z, first support qubit
/// most significant). Elements are Hermitian (sign "+"); identity first.
struct ErrorSet {
    std::size_t n = 0;
    std::size_t t = 0;
    std::vector<PauliOp> elements;
};

ErrorSet enumerate_errors(std::size_t n, std::size_t t, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace qlist

#endif
