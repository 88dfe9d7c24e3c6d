#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qecc/decoder.hpp"
#include "qecc/pauli.hpp"

namespace qecc {

enum class OpKind : uint8_t {
    PrepZ,      // reset qubit to |0>
    PrepPlus,   // reset qubit to |+>
    H,
    S,          // diag(1, i)
    SDag,
    X,
    Y,
    Z,
    Phase8,     // diag(1, exp(i*pi*k/4)); non-Clifford for odd k
    CX,
    CY,
    CZ,
    CS,         // controlled-S; non-Clifford, dense executor only
    MeasureZ,
    MeasureX,
    Xor,        // classical: parity of input wires (empty input = constant 0)
    Or,         // classical: OR of input wires
    Majority,   // classical: majority of an odd number of input wires
    ControlledPauli,  // apply the payload Pauli to the listed qubits when the
                      // parity of the input wires is 1
    ControlledPX,     // apply X then S to the qubit when the input wire is 1
    DecodeCorrect,    // decode the input wires as a syndrome via the attached
                      // lookup table, apply the correction to the listed qubits
};

struct Operation {
    OpKind kind;
    std::vector<uint32_t> qubits;
    std::vector<uint32_t> in_wires;
    int32_t out_wire = -1;
    PauliOperator pauli;     // ControlledPauli payload (width == qubits.size())
    int phase_eighths = 0;   // Phase8 exponent k, mod 8
    std::shared_ptr<const DecoderTable> decoder;  // DecodeCorrect

    bool is_measurement() const {
        return kind == OpKind::MeasureZ || kind == OpKind::MeasureX;
    }
    bool is_two_qubit_gate() const {
        return kind == OpKind::CX || kind == OpKind::CY || kind == OpKind::CZ ||
               kind == OpKind::CS;
    }

    static Operation prep_z(uint32_t q) { return {OpKind::PrepZ, {q}, {}, -1, {}, 0, nullptr}; }
    static Operation prep_plus(uint32_t q) { return {OpKind::PrepPlus, {q}, {}, -1, {}, 0, nullptr}; }
    static Operation h(uint32_t q) { return {OpKind::H, {q}, {}, -1, {}, 0, nullptr}; }
    static Operation s(uint32_t q) { return {OpKind::S, {q}, {}, -1, {}, 0, nullptr}; }
    static Operation sdag(uint32_t q) { return {OpKind::SDag, {q}, {}, -1, {}, 0, nullptr}; }
    static Operation x(uint32_t q) { return {OpKind::X, {q}, {}, -1, {}, 0, nullptr}; }
    static Operation y(uint32_t q) { return {OpKind::Y, {q}, {}, -1, {}, 0, nullptr}; }
    static Operation z(uint32_t q) { return {OpKind::Z, {q}, {}, -1, {}, 0, nullptr}; }
    static Operation phase8(uint32_t q, int k) { return {OpKind::Phase8, {q}, {}, -1, {}, k & 7, nullptr}; }
    static Operation cx(uint32_t c, uint32_t t) { return {OpKind::CX, {c, t}, {}, -1, {}, 0, nullptr}; }
    static Operation cy(uint32_t c, uint32_t t) { return {OpKind::CY, {c, t}, {}, -1, {}, 0, nullptr}; }
    static Operation cz(uint32_t c, uint32_t t) { return {OpKind::CZ, {c, t}, {}, -1, {}, 0, nullptr}; }
    static Operation cs(uint32_t c, uint32_t t) { return {OpKind::CS, {c, t}, {}, -1, {}, 0, nullptr}; }
    static Operation measure_z(uint32_t q, uint32_t wire) { return {OpKind::MeasureZ, {q}, {}, static_cast<int32_t>(wire), {}, 0, nullptr}; }
    static Operation measure_x(uint32_t q, uint32_t wire) { return {OpKind::MeasureX, {q}, {}, static_cast<int32_t>(wire), {}, 0, nullptr}; }
    static Operation xor_of(std::vector<uint32_t> wires, uint32_t out) { return {OpKind::Xor, {}, std::move(wires), static_cast<int32_t>(out), {}, 0, nullptr}; }
    static Operation or_of(std::vector<uint32_t> wires, uint32_t out) { return {OpKind::Or, {}, std::move(wires), static_cast<int32_t>(out), {}, 0, nullptr}; }
    static Operation majority_of(std::vector<uint32_t> wires, uint32_t out) { return {OpKind::Majority, {}, std::move(wires), static_cast<int32_t>(out), {}, 0, nullptr}; }
    static Operation controlled_pauli(std::vector<uint32_t> wires, PauliOperator p, std::vector<uint32_t> qubits) {
        return {OpKind::ControlledPauli, std::move(qubits), std::move(wires), -1, std::move(p), 0, nullptr};
    }
    static Operation controlled_px(uint32_t wire, uint32_t q) { return {OpKind::ControlledPX, {q}, {wire}, -1, {}, 0, nullptr}; }
    static Operation decode_correct(std::vector<uint32_t> syndrome_wires,
                                    std::shared_ptr<const DecoderTable> table,
                                    std::vector<uint32_t> qubits) {
        return {OpKind::DecodeCorrect, std::move(qubits), std::move(syndrome_wires), -1, {}, 0, std::move(table)};
    }
};

enum class RegisterRole : uint8_t { Data, AncillaBlock, Cat, Verify };

struct Register {
    std::string name;
    uint32_t offset = 0;
    uint32_t size = 0;
    RegisterRole role = RegisterRole::Data;
};

/// Steps [first_step, last_step] re-execute while the abort wire reads 1, up
/// to max_attempts total tries. Every qubit the region touches must be
/// re-prepared inside it before any other use.
struct RetryRegion {
    size_t first_step = 0;
    size_t last_step = 0;
    uint32_t abort_wire = 0;
    int max_attempts = 10;
};

/// A timestep-ordered list of operation locations over named qubit registers
/// plus classical wires. Locations are the unit of the noise model; no qubit
/// is touched twice within one timestep.
struct Circuit {
    uint32_t n_qubits = 0;
    uint32_t n_wires = 0;
    std::vector<Register> registers;
    std::vector<std::vector<Operation>> steps;
    std::vector<RetryRegion> retries;
    std::vector<std::pair<std::string, uint32_t>> labeled_wires;
    std::vector<std::string> warnings;

    /// Append a register of `size` qubits; returns its offset.
    uint32_t add_register(std::string name, uint32_t size, RegisterRole role);
    const Register* find_register(std::string_view name) const;

    size_t new_step() { steps.emplace_back(); return steps.size() - 1; }
    void push(Operation op) { steps.back().push_back(std::move(op)); }
    uint32_t new_wire() { return n_wires++; }
    void label_wire(std::string name, uint32_t wire) { labeled_wires.emplace_back(std::move(name), wire); }
    uint32_t labeled(std::string_view name) const;

    size_t num_locations() const;

    /// Per-qubit [first touched step, last touched step] activity window;
    /// Data registers are live for the whole circuit. Returns pairs of
    /// (first, last), with first > last meaning never touched.
    std::vector<std::pair<size_t, size_t>> activity_windows() const;

    /// Structural validation: index ranges, per-step qubit disjointness,
    /// wires produced before use and produced once, retry region shape.
    /// Throws std::invalid_argument on the first violation.
    void check() const;

    /// Line-oriented text emission (one timestep per line, ops separated by
    /// ';', wires named c<k>, registers and retry regions as '#' directives).
    std::string serialize() const;
};

}  // namespace qecc
