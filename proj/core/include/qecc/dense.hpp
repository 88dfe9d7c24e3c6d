#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "qecc/circuit.hpp"
#include "qecc/pauli.hpp"
#include "qecc/rng.hpp"
#include "qecc/stabilizer.hpp"

namespace qecc {

using cdouble = std::complex<double>;

/// Ground-truth simulation limits: states above kMaxQubits are refused, and
/// every numerical assertion in the oracle uses kTolerance.
inline constexpr size_t kDenseMaxQubits = 14;
inline constexpr double kDenseTolerance = 1e-10;

/// Normalized complex amplitude vector over n <= 14 qubits. Amplitude index
/// bit q holds the value of qubit q. States are immutable snapshots; all
/// operations return new states.
class DenseState {
public:
    /// Computational basis state |basis_bits>.
    explicit DenseState(size_t n, uint64_t basis_bits = 0);
    /// Takes ownership of an amplitude vector; must be normalized within
    /// tolerance.
    static DenseState from_amplitudes(size_t n, std::vector<cdouble> amps);

    size_t num_qubits() const { return n_; }
    size_t dim() const { return amps_.size(); }
    const std::vector<cdouble>& amplitudes() const { return amps_; }
    cdouble amp(uint64_t idx) const { return amps_[idx]; }
    double norm() const;

    DenseState apply_pauli(const PauliOperator& p) const;
    /// u is row-major 2x2, must be unitary within tolerance.
    DenseState apply_unitary_1q(size_t q, const std::array<cdouble, 4>& u) const;
    DenseState apply_h(size_t q) const;
    DenseState apply_phase(size_t q, cdouble factor) const;  // diag(1, factor), |factor| = 1
    DenseState apply_cnot(size_t control, size_t target) const;
    DenseState apply_cz(size_t a, size_t b) const;
    DenseState apply_cy(size_t control, size_t target) const;
    DenseState apply_cs(size_t a, size_t b) const;

    struct MeasureResult;
    /// Projective measurement of a Hermitian Pauli. With forced_outcome the
    /// stated branch is taken (error on a zero-probability branch); otherwise
    /// rng samples by the true probabilities. rng may be null only when the
    /// outcome is deterministic within tolerance.
    MeasureResult measure_pauli(const PauliOperator& p, std::optional<int> forced_outcome,
                                Rng* rng) const;

    /// this ⊗ other; other's qubits are appended after this state's.
    DenseState tensor(const DenseState& other) const;
    /// Project qubit q onto |bit> and drop it from the state. Throws when the
    /// projection has vanishing probability.
    DenseState condition_on(size_t q, int bit) const;

private:
    size_t n_;
    std::vector<cdouble> amps_;
};

struct DenseState::MeasureResult {
    int outcome;         // +1 or -1
    DenseState post;
    double probability;  // of the reported branch
};

/// True when a = e^{i phi} b for some unit scalar (global phase quotient).
bool states_equal_up_to_phase(const DenseState& a, const DenseState& b,
                              double tol = kDenseTolerance);

/// Orthonormal logical basis of the code space, labeled by logical-Z
/// eigenvalues: entry b is the joint (-1)^{b_j} eigenstate of logical Z_j.
/// Phases are canonical (first nonzero amplitude real positive).
std::vector<DenseState> codespace_basis(const StabilizerCode& code);

/// Error-correction conditions check: all matrix elements
/// <psi_i| E_a^† E_b |psi_j> must equal C_ab delta_ij.
struct KlReport {
    std::vector<std::string> error_labels;
    std::vector<std::vector<cdouble>> c_matrix;  // C_ab (the common diagonal value)
    double max_offdiag_violation = 0.0;   // |<psi_i|Ea† Eb|psi_j>| over i != j
    double max_identity_violation = 0.0;  // diagonal spread |M_ii - C_ab|
    bool satisfied = false;
};
KlReport check_kl(const StabilizerCode& code, const std::vector<PauliOperator>& errors);

/// Exact circuit execution. Random measurement branches consume forced
/// outcomes first (when provided, in encounter order), then rng; deterministic
/// collapses consume neither.
struct DenseRunOptions {
    Rng* rng = nullptr;
    std::vector<int> forced_outcomes;  // bits for the random branches, in order
};
struct DenseRunRecord {
    struct Measurement {
        uint32_t wire;
        int bit;
        double probability;
        bool deterministic;
    };
    std::vector<Measurement> measurements;
    std::vector<int> wire_values;  // -1 = never produced
    bool aborted = false;
};
std::pair<DenseState, DenseRunRecord> run_circuit_dense(const Circuit& circuit,
                                                        DenseState initial,
                                                        DenseRunOptions options = {});

}  // namespace qecc
