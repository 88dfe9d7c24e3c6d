#pragma once

#include <optional>
#include <vector>

#include "qecc/pauli.hpp"
#include "qecc/rng.hpp"
#include "qecc/stabilizer.hpp"

namespace qecc {

/// Stabilizer-state simulator: n stabilizer rows plus n destabilizer rows
/// (the companion generating set that decides deterministic-vs-random
/// measurements), bit-packed with word-parallel row products. Single-owner
/// mutable state; move it between workers, never share it.
class Tableau {
public:
    /// |0...0>, stabilizer <Z_0, ..., Z_{n-1}>.
    explicit Tableau(size_t n);

    size_t num_qubits() const { return n_; }

    void apply_h(size_t q);
    void apply_s(size_t q);
    void apply_sdag(size_t q);
    void apply_x(size_t q);
    void apply_y(size_t q);
    void apply_z(size_t q);
    void apply_cx(size_t control, size_t target);
    void apply_cy(size_t control, size_t target);
    void apply_cz(size_t a, size_t b);
    void apply_pauli(const PauliOperator& p);

    struct MeasureResult {
        int outcome;         // +1 or -1
        bool deterministic;  // ±P was already in the stabilizer group
    };
    /// Measure a Hermitian Pauli. Deterministic outcomes consume no
    /// randomness and leave the state unchanged; random ones are a fair coin
    /// from rng and collapse the state.
    MeasureResult measure_pauli(const PauliOperator& p, Rng& rng);
    /// Same, but a random branch takes the forced outcome (+1/-1) instead of
    /// consuming randomness.
    MeasureResult measure_pauli_forced(const PauliOperator& p, int forced_outcome);
    /// Eigenvalue when ±P is in the stabilizer group, nullopt when the
    /// measurement would be random. Never collapses.
    std::optional<int> deterministic_eigenvalue(const PauliOperator& p) const;

    MeasureResult measure_z(size_t q, Rng& rng);

    /// The state's stabilizer generators as sign-carrying Paulis.
    std::vector<PauliOperator> stabilizer_generators() const;

    /// Signed stabilizer-group equality via canonical row reduction.
    bool state_equal(const Tableau& other) const;

    /// Conjugation-closure self-check: rows stay independent, correctly
    /// paired, and carry Hermitian phases. Throws std::logic_error on
    /// corruption.
    void assert_invariants() const;

private:
    size_t n_;
    size_t words_;
    // Row-major storage, 2n rows: destabilizers then stabilizers. Phases are
    // exponents of i in the X^x Z^z decomposition (mod 4).
    std::vector<uint64_t> xs_, zs_;
    std::vector<uint8_t> phase_;

    uint64_t* row_x(size_t r) { return xs_.data() + r * words_; }
    uint64_t* row_z(size_t r) { return zs_.data() + r * words_; }
    const uint64_t* row_x(size_t r) const { return xs_.data() + r * words_; }
    const uint64_t* row_z(size_t r) const { return zs_.data() + r * words_; }

    bool row_anticommutes(size_t r, const uint64_t* px, const uint64_t* pz) const;
    void row_mult(size_t dst, size_t src);  // row dst := row dst * row src
    MeasureResult measure_impl(const PauliOperator& p, Rng* rng, std::optional<int> forced);
    PauliOperator row_to_pauli(size_t r) const;
};

/// Deterministically prepare the logical |0...0> codeword state: the +1 joint
/// eigenstate of every generator and every logical Z.
Tableau prepare_codeword_state(const StabilizerCode& code);

}  // namespace qecc
