#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "qecc/bitvec.hpp"

namespace qecc {

/// An n-qubit Pauli operator i^phase * L_0 ⊗ L_1 ⊗ ... ⊗ L_{n-1} with
/// L_q ∈ {I, X, Y, Z} determined by the bit pair (x_q, z_q):
///
///   (0,0) = I, (1,0) = X, (1,1) = Y, (0,1) = Z.
///
/// The stored phase exponent is the *displayed* one: a bare "Y" has phase 0
/// even though Y = i·X·Z internally, so Hermitian operators always carry
/// phase exponent 0 or 2. Qubit 0 is the leftmost character of the text form.
/// Values are immutable once built and safe to share across threads.
class PauliOperator {
public:
    PauliOperator() : PauliOperator(0) {}
    /// Identity on n qubits.
    explicit PauliOperator(size_t n) : n_(n), x_(n), z_(n), phase_(0) {}

    PauliOperator(size_t n, BitVector x, BitVector z, unsigned phase_exponent);

    /// Single-letter Pauli ('X', 'Y' or 'Z') at qubit q of an n-qubit identity.
    static PauliOperator single(size_t n, size_t q, char letter);

    /// Parse text form: optional sign prefix (+, -, +i, -i) then letters from
    /// {I,X,Y,Z}. Throws std::invalid_argument naming the offending index.
    static PauliOperator parse(std::string_view text);

    /// Canonical text form: "" / "-" / "+i" / "-i" prefix, then one letter per
    /// qubit. parse(str()) round-trips exactly.
    std::string str() const;

    size_t num_qubits() const { return n_; }
    unsigned phase_exponent() const { return phase_; }
    const BitVector& x_bits() const { return x_; }
    const BitVector& z_bits() const { return z_; }
    bool x_bit(size_t q) const { return x_.get(q); }
    bool z_bit(size_t q) const { return z_.get(q); }
    char letter(size_t q) const;

    /// Number of qubits acted on as X, Y or Z.
    size_t weight() const;

    bool is_identity() const { return !x_.any() && !z_.any(); }
    bool is_hermitian() const { return (phase_ & 1) == 0; }

    bool commutes_with(const PauliOperator& o) const;

    /// Exact operator product; the phase exponent satisfies the 2^n x 2^n
    /// matrix identity result = (*this) · o.
    PauliOperator operator*(const PauliOperator& o) const;

    /// Same operator with phase exponent forced to zero.
    PauliOperator unsigned_form() const { return PauliOperator(n_, x_, z_, 0); }
    /// Same operator with phase exponent shifted by 2 (multiplied by -1).
    PauliOperator negated() const { return PauliOperator(n_, x_, z_, (phase_ + 2) & 3); }

    /// Restriction to qubits [begin, begin+count).
    PauliOperator slice(size_t begin, size_t count) const;
    /// Embed into an m-qubit identity starting at qubit `offset`.
    PauliOperator embed(size_t m, size_t offset) const;

    bool operator==(const PauliOperator& o) const {
        return n_ == o.n_ && phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
    }
    /// Equal up to the sign/phase prefix.
    bool equals_up_to_phase(const PauliOperator& o) const {
        return n_ == o.n_ && x_ == o.x_ && z_ == o.z_;
    }

    struct Hash {
        size_t operator()(const PauliOperator& p) const {
            BitVector::Hash h;
            return h(p.x_) * 1000003u ^ h(p.z_) ^ p.phase_;
        }
    };

private:
    size_t n_;
    BitVector x_, z_;
    unsigned phase_;  // exponent of i, mod 4

    void check_same_size(const PauliOperator& o) const;
};

}  // namespace qecc
