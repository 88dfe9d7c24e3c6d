#pragma once

#include <string>
#include <vector>

#include "qecc/circuit.hpp"
#include "qecc/stabilizer.hpp"

namespace qecc {

/// Phaseless Pauli frame: the error word propagated through a circuit.
/// Global signs never influence flips, weights or logical-failure checks, so
/// they are not tracked.
struct PauliFrame {
    BitVector x, z;

    explicit PauliFrame(size_t n) : x(n), z(n) {}

    size_t size() const { return x.size(); }
    bool is_identity() const { return !x.any() && !z.any(); }
    bool flips_z_measurement(size_t q) const { return x.get(q); }
    bool flips_x_measurement(size_t q) const { return z.get(q); }

    void mult_letter(size_t q, char letter);
    void clear_qubit(size_t q) { x.set(q, false); z.set(q, false); }

    /// Conjugate through one quantum gate location. Throws on non-Clifford
    /// locations the frame cannot pass (odd Phase8 / CS touching an X
    /// component).
    void conjugate_through(const Operation& op);

    PauliOperator slice_as_pauli(size_t begin, size_t count) const;
    PauliOperator as_pauli() const { return slice_as_pauli(0, size()); }
};

enum class TransversalGate { Hadamard, PhaseS, Cnot, Pauli };

/// Result of conjugating the code through a transversal gate: either the
/// stabilizer group is not preserved, or it is and each logical generator
/// maps to a signed logical Pauli label (a k-qubit Pauli; 2k for Cnot).
struct LogicalAction {
    bool preserves_code = false;
    std::string failure_reason;
    std::vector<PauliOperator> image_of_logical_x;
    std::vector<PauliOperator> image_of_logical_z;
};

/// Conjugate every stabilizer generator by the transversal gate; the verdict
/// is sign-sensitive stabilizer membership of every image. When preserved,
/// logical representatives are conjugated too and reduced modulo the
/// stabilizer to signed labels. For Cnot the system is two blocks of the
/// code with block-lifted logicals. For Pauli, `pauli` supplies the
/// transversally applied operator.
LogicalAction check_transversal_clifford(const StabilizerCode& code, TransversalGate gate,
                                         const PauliOperator* pauli = nullptr);

/// n parallel CNOTs in one timestep, block A qubit i controlling block B
/// qubit i.
Circuit transversal_cnot(const StabilizerCode& code);
Circuit transversal_cnot_blocks(size_t block_a, size_t block_b);

/// Cat-state measurement of the eigenvalue of Pauli M: cat of size weight(M)
/// prepared by H + CNOT ladder, verified by deterministic adjacent-pair
/// parity checks (abort wire restarts the preparation, 10 attempts), then
/// one controlled-X/Y/Z per support qubit, transversal H, measure-Z, parity.
/// Labeled wires: "parity", "abort".
Circuit cat_measurement_circuit(const StabilizerCode& code, const PauliOperator& m,
                                int verify_rounds);

/// Full Shor error-correction round: cat measurement of every generator,
/// repeated `repetitions` times (odd), per-generator majority vote, lookup
/// decode, classically controlled correction. Labeled wires: "s0".."s<m-1>".
Circuit shor_ec_round(const StabilizerCode& code, int repetitions, int verify_rounds = 2);

/// State-injection gadget for diag(1, e^{i pi/4}): CNOT from the resource
/// ancilla onto the data qubit, measure the data qubit in the computational
/// basis, apply the PX correction to the ancilla on outcome 1. The ancilla
/// must be supplied in the |0> + e^{i pi/4}|1> state; the ancilla wire is the
/// output. Labeled wire: "inject_outcome".
Circuit pi8_injection_circuit();

/// Acceptance test for the injection resource state: one-bit phase
/// estimation of the Hermitian operator e^{-i pi/4} P X, accepting on
/// outcome 0. Labeled wire: "px_outcome".
Circuit pi8_ancilla_check_circuit();

/// Steane error correction for a CSS k=1 code: a |0>_L+|1>_L ancilla absorbs
/// the bit-flip syndrome as the target of a transversal CNOT and is measured
/// in Z; a |0>_L ancilla drives the data as the control of a transversal CNOT
/// and is measured in X for the phase syndrome. Ancilla preparation is by
/// generator row-reduction and is not fault-tolerant (flagged in warnings).
Circuit steane_ec_circuit(const StabilizerCode& code);
/// One half on data + one ancilla block (phase_half selects the |+>_L side);
/// fits the 14-qubit dense oracle for a 7-qubit code.
Circuit steane_ec_half_circuit(const StabilizerCode& code, bool phase_half);

/// One Pauli fault at one circuit location. Gates and preparations take the
/// fault after the location; measurements take it just before readout.
struct FaultSite {
    size_t step = 0;
    size_t op_index = 0;
    PauliOperator fault;  // width = the op's qubit count
};

/// Every quantum location crossed with {X,Y,Z} (single-qubit ops) or the 15
/// nontrivial two-qubit Paulis (two-qubit gates).
std::vector<FaultSite> enumerate_fault_sites(const Circuit& circuit);

struct FaultPropagation {
    bool aborted = false;          // a verification wire flagged the attempt
    PauliFrame residual;           // frame at circuit end (full width)
    std::vector<int> block_weights;  // coset-minimized error weight per code block
    std::vector<std::string> block_names;
};

/// Propagate one injected fault symbolically through the remaining quantum
/// locations (classical decode feedback is not applied; majority/parity wires
/// evaluate against the all-zero noiseless baseline). block_code must match
/// every Data / AncillaBlock register of the circuit.
FaultPropagation propagate_fault(const Circuit& circuit, const StabilizerCode& block_code,
                                 const FaultSite& site);

}  // namespace qecc
