#include "qecc/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qecc {

uint32_t Circuit::add_register(std::string name, uint32_t size, RegisterRole role) {
    uint32_t offset = n_qubits;
    registers.push_back({std::move(name), offset, size, role});
    n_qubits += size;
    return offset;
}

const Register* Circuit::find_register(std::string_view name) const {
    for (const auto& r : registers) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

uint32_t Circuit::labeled(std::string_view name) const {
    for (const auto& [n, w] : labeled_wires) {
        if (n == name) return w;
    }
    throw std::invalid_argument("circuit has no wire labeled '" + std::string(name) + "'");
}

size_t Circuit::num_locations() const {
    size_t c = 0;
    for (const auto& step : steps) c += step.size();
    return c;
}

std::vector<std::pair<size_t, size_t>> Circuit::activity_windows() const {
    std::vector<std::pair<size_t, size_t>> win(n_qubits, {steps.size(), 0});
    for (size_t s = 0; s < steps.size(); ++s) {
        for (const auto& op : steps[s]) {
            for (uint32_t q : op.qubits) {
                win[q].first = std::min(win[q].first, s);
                win[q].second = std::max(win[q].second, s);
            }
        }
    }
    for (const auto& r : registers) {
        if (r.role == RegisterRole::Data && !steps.empty()) {
            for (uint32_t q = r.offset; q < r.offset + r.size; ++q) {
                win[q] = {0, steps.size() - 1};
            }
        }
    }
    return win;
}

void Circuit::check() const {
    std::vector<bool> produced(n_wires, false);
    for (size_t s = 0; s < steps.size(); ++s) {
        std::set<uint32_t> touched;
        for (const auto& op : steps[s]) {
            for (uint32_t q : op.qubits) {
                if (q >= n_qubits) {
                    throw std::invalid_argument("circuit step " + std::to_string(s) +
                                                ": qubit index out of range");
                }
                if (!touched.insert(q).second) {
                    throw std::invalid_argument("circuit step " + std::to_string(s) + ": qubit " +
                                                std::to_string(q) + " touched twice in one timestep");
                }
            }
            for (uint32_t w : op.in_wires) {
                if (w >= n_wires || !produced[w]) {
                    throw std::invalid_argument("circuit step " + std::to_string(s) +
                                                ": wire c" + std::to_string(w) +
                                                " consumed before production");
                }
            }
            if (op.out_wire >= 0) {
                if (static_cast<uint32_t>(op.out_wire) >= n_wires || produced[op.out_wire]) {
                    throw std::invalid_argument("circuit step " + std::to_string(s) +
                                                ": wire c" + std::to_string(op.out_wire) +
                                                " produced twice or out of range");
                }
                produced[op.out_wire] = true;
            }
            if (op.kind == OpKind::Majority && op.in_wires.size() % 2 == 0) {
                throw std::invalid_argument("majority over an even number of wires is undefined");
            }
            if (op.kind == OpKind::ControlledPauli &&
                op.pauli.num_qubits() != op.qubits.size()) {
                throw std::invalid_argument("controlled-Pauli payload width mismatch");
            }
            if (op.kind == OpKind::DecodeCorrect) {
                if (!op.decoder) throw std::invalid_argument("decode op without a table");
                if (op.decoder->code().num_qubits() != op.qubits.size() ||
                    op.decoder->code().num_generators() != op.in_wires.size()) {
                    throw std::invalid_argument("decode op shape does not match its code");
                }
            }
        }
    }
    for (const auto& r : retries) {
        if (r.first_step > r.last_step || r.last_step >= steps.size()) {
            throw std::invalid_argument("retry region step range is malformed");
        }
        if (r.max_attempts < 1) throw std::invalid_argument("retry region needs >= 1 attempt");
        // Each qubit used inside the region must be freshly prepared there.
        std::set<uint32_t> prepared;
        bool abort_produced = false;
        for (size_t s = r.first_step; s <= r.last_step; ++s) {
            for (const auto& op : steps[s]) {
                if (op.kind == OpKind::PrepZ || op.kind == OpKind::PrepPlus) {
                    prepared.insert(op.qubits[0]);
                } else {
                    for (uint32_t q : op.qubits) {
                        if (!prepared.count(q)) {
                            throw std::invalid_argument(
                                "retry region uses qubit " + std::to_string(q) +
                                " without re-preparing it");
                        }
                    }
                }
                if (op.out_wire == static_cast<int32_t>(r.abort_wire)) abort_produced = true;
            }
        }
        if (!abort_produced) {
            throw std::invalid_argument("retry region abort wire is not produced inside it");
        }
    }
}

namespace {

const char* kind_name(OpKind k) {
    switch (k) {
        case OpKind::PrepZ: return "PREPZ";
        case OpKind::PrepPlus: return "PREPX";
        case OpKind::H: return "H";
        case OpKind::S: return "S";
        case OpKind::SDag: return "SDG";
        case OpKind::X: return "X";
        case OpKind::Y: return "Y";
        case OpKind::Z: return "Z";
        case OpKind::Phase8: return "PHASE8";
        case OpKind::CX: return "CX";
        case OpKind::CY: return "CY";
        case OpKind::CZ: return "CZ";
        case OpKind::CS: return "CS";
        case OpKind::MeasureZ: return "MZ";
        case OpKind::MeasureX: return "MX";
        case OpKind::Xor: return "XOR";
        case OpKind::Or: return "OR";
        case OpKind::Majority: return "MAJ";
        case OpKind::ControlledPauli: return "CPAULI";
        case OpKind::ControlledPX: return "CPX";
        case OpKind::DecodeCorrect: return "CORRECT";
    }
    return "?";
}

const char* role_name(RegisterRole r) {
    switch (r) {
        case RegisterRole::Data: return "data";
        case RegisterRole::AncillaBlock: return "ancilla-block";
        case RegisterRole::Cat: return "cat";
        case RegisterRole::Verify: return "verify";
    }
    return "?";
}

}  // namespace

std::string Circuit::serialize() const {
    std::ostringstream out;
    out << "# qecc circuit v1\n";
    for (const auto& r : registers) {
        out << "# register " << r.name << " " << r.offset << " " << r.size << " "
            << role_name(r.role) << "\n";
    }
    for (const auto& r : retries) {
        out << "# retry " << r.first_step << " " << r.last_step << " c" << r.abort_wire
            << " " << r.max_attempts << "\n";
    }
    for (const auto& [name, wire] : labeled_wires) {
        out << "# wire " << name << " c" << wire << "\n";
    }
    for (const auto& w : warnings) out << "# warning: " << w << "\n";
    for (const auto& step : steps) {
        if (step.empty()) {
            out << "NOP\n";
            continue;
        }
        for (size_t i = 0; i < step.size(); ++i) {
            const Operation& op = step[i];
            if (i) out << " ; ";
            out << kind_name(op.kind);
            if (op.kind == OpKind::Phase8) out << " " << op.phase_eighths;
            if (op.kind == OpKind::ControlledPauli || op.kind == OpKind::DecodeCorrect ||
                op.kind == OpKind::ControlledPX || op.kind == OpKind::Xor ||
                op.kind == OpKind::Or || op.kind == OpKind::Majority) {
                for (uint32_t w : op.in_wires) out << " c" << w;
            }
            if (op.kind == OpKind::ControlledPauli) out << " : " << op.pauli.str();
            if (op.kind == OpKind::ControlledPauli || op.kind == OpKind::DecodeCorrect) out << " @";
            for (uint32_t q : op.qubits) out << " " << q;
            if (op.out_wire >= 0) out << " -> c" << op.out_wire;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace qecc
