#include "qecc/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

namespace qecc {

void PauliFrame::mult_letter(size_t q, char letter) {
    switch (letter) {
        case 'X': x.flip(q); break;
        case 'Y': x.flip(q); z.flip(q); break;
        case 'Z': z.flip(q); break;
        case 'I': break;
        default: throw std::invalid_argument("PauliFrame: unknown letter");
    }
}

void PauliFrame::conjugate_through(const Operation& op) {
    const auto& q = op.qubits;
    switch (op.kind) {
        case OpKind::H: {
            bool xb = x.get(q[0]), zb = z.get(q[0]);
            x.set(q[0], zb);
            z.set(q[0], xb);
            break;
        }
        case OpKind::S:
        case OpKind::SDag:
            if (x.get(q[0])) z.flip(q[0]);
            break;
        case OpKind::X:
        case OpKind::Y:
        case OpKind::Z:
            break;  // Pauli conjugation only flips signs, which frames drop
        case OpKind::Phase8: {
            int k = op.phase_eighths & 7;
            if (k & 1) {
                if (x.get(q[0])) {
                    throw std::invalid_argument("frame cannot pass a non-Clifford phase");
                }
            } else if (k % 4 != 0) {
                if (x.get(q[0])) z.flip(q[0]);
            }
            break;
        }
        case OpKind::CX:
            if (x.get(q[0])) x.flip(q[1]);
            if (z.get(q[1])) z.flip(q[0]);
            break;
        case OpKind::CY:
            if (x.get(q[1])) z.flip(q[1]);
            if (x.get(q[0])) x.flip(q[1]);
            if (z.get(q[1])) z.flip(q[0]);
            if (x.get(q[1])) z.flip(q[1]);
            break;
        case OpKind::CZ:
            if (x.get(q[0])) z.flip(q[1]);
            if (x.get(q[1])) z.flip(q[0]);
            break;
        case OpKind::CS:
            if (x.get(q[0]) || x.get(q[1])) {
                throw std::invalid_argument("frame cannot pass a controlled-S");
            }
            break;
        default:
            throw std::logic_error("conjugate_through: not a unitary gate location");
    }
}

PauliOperator PauliFrame::slice_as_pauli(size_t begin, size_t count) const {
    BitVector sx(count), sz(count);
    for (size_t i = 0; i < count; ++i) {
        sx.set(i, x.get(begin + i));
        sz.set(i, z.get(begin + i));
    }
    return PauliOperator(count, std::move(sx), std::move(sz), 0);
}

namespace {

PauliOperator conj_transversal_h(const PauliOperator& p) {
    size_t n = p.num_qubits();
    size_t y = 0;
    for (size_t q = 0; q < n; ++q) {
        if (p.x_bit(q) && p.z_bit(q)) ++y;
    }
    // X <-> Z per qubit; every Y picks up a sign.
    return PauliOperator(n, p.z_bits(), p.x_bits(),
                         (p.phase_exponent() + 2 * (y & 1)) & 3);
}

PauliOperator conj_transversal_s(const PauliOperator& p) {
    size_t n = p.num_qubits();
    size_t y = 0;
    for (size_t q = 0; q < n; ++q) {
        if (p.x_bit(q) && p.z_bit(q)) ++y;
    }
    // X -> Y, Y -> -X, Z -> Z.
    return PauliOperator(n, p.x_bits(), p.z_bits() ^ p.x_bits(),
                         (p.phase_exponent() + 2 * (y & 1)) & 3);
}

PauliOperator conj_blockwise_cnot(const PauliOperator& p, size_t block) {
    size_t n = p.num_qubits();
    BitVector x = p.x_bits(), z = p.z_bits();
    size_t y_old = 0, y_new = 0;
    for (size_t q = 0; q < n; ++q) {
        if (p.x_bit(q) && p.z_bit(q)) ++y_old;
    }
    for (size_t q = 0; q < block; ++q) {
        if (x.get(q)) x.flip(block + q);
        if (z.get(block + q)) z.flip(q);
    }
    for (size_t q = 0; q < n; ++q) {
        if (x.get(q) && z.get(q)) ++y_new;
    }
    // The X^x Z^z phase is CNOT-invariant; only the Y count shifts the
    // displayed exponent.
    unsigned phase = (p.phase_exponent() + y_old + 4 * n - y_new) & 3;
    return PauliOperator(n, std::move(x), std::move(z), phase);
}

}  // namespace

LogicalAction check_transversal_clifford(const StabilizerCode& code, TransversalGate gate,
                                         const PauliOperator* pauli) {
    StabilizerCode sys = code;
    if (gate == TransversalGate::Cnot) {
        size_t n = code.num_qubits();
        std::vector<PauliOperator> gens, lx, lz;
        for (const auto& g : code.generators()) gens.push_back(g.embed(2 * n, 0));
        for (const auto& g : code.generators()) gens.push_back(g.embed(2 * n, n));
        for (const auto& l : code.logical_x()) lx.push_back(l.embed(2 * n, 0));
        for (const auto& l : code.logical_x()) lx.push_back(l.embed(2 * n, n));
        for (const auto& l : code.logical_z()) lz.push_back(l.embed(2 * n, 0));
        for (const auto& l : code.logical_z()) lz.push_back(l.embed(2 * n, n));
        sys = StabilizerCode::validate(std::move(gens), 2 * n)
                  .with_logicals(std::move(lx), std::move(lz));
    }
    if (gate == TransversalGate::Pauli) {
        if (!pauli || pauli->num_qubits() != sys.num_qubits()) {
            throw std::invalid_argument("check_transversal_clifford: Pauli gate needs an "
                                        "operator of matching width");
        }
    }

    auto conj = [&](const PauliOperator& p) -> PauliOperator {
        switch (gate) {
            case TransversalGate::Hadamard: return conj_transversal_h(p);
            case TransversalGate::PhaseS: return conj_transversal_s(p);
            case TransversalGate::Cnot: return conj_blockwise_cnot(p, code.num_qubits());
            case TransversalGate::Pauli: return p.commutes_with(*pauli) ? p : p.negated();
        }
        throw std::logic_error("unreachable");
    };

    LogicalAction action;
    for (const auto& g : sys.generators()) {
        PauliOperator image = conj(g);
        if (!sys.in_stabilizer(image)) {
            action.preserves_code = false;
            action.failure_reason = "generator " + g.str() + " maps to " + image.str() +
                                    ", which is outside the signed stabilizer group";
            return action;
        }
    }
    action.preserves_code = true;

    size_t m = sys.num_generators(), k = sys.num_logical(), n = sys.num_qubits();
    Gf2Basis basis(2 * n);
    auto insert_all = [&](const std::vector<PauliOperator>& ops) {
        for (const auto& o : ops) {
            if (!basis.insert(pauli_to_symplectic(o))) {
                throw std::logic_error("normalizer basis rows are dependent");
            }
        }
    };
    insert_all(sys.generators());
    insert_all(sys.logical_x());
    insert_all(sys.logical_z());

    auto reduce_to_label = [&](const PauliOperator& image) -> PauliOperator {
        auto combo = basis.express(pauli_to_symplectic(image));
        if (!combo) {
            throw std::logic_error("preserved code but image escapes the normalizer");
        }
        BitVector b(k), c(k);
        PauliOperator t(n);
        for (size_t idx : *combo) {
            if (idx < m) t = t * sys.generators()[idx];
        }
        for (size_t idx : *combo) {
            if (idx >= m && idx < m + k) {
                t = t * sys.logical_x()[idx - m];
                b.set(idx - m, true);
            }
        }
        for (size_t idx : *combo) {
            if (idx >= m + k) {
                t = t * sys.logical_z()[idx - m - k];
                c.set(idx - m - k, true);
            }
        }
        unsigned delta = (image.phase_exponent() + 4 - t.phase_exponent()) & 3;
        size_t y_label = 0;
        for (size_t i = 0; i < k; ++i) {
            if (b.get(i) && c.get(i)) ++y_label;
        }
        unsigned phi = (delta + 4 - (y_label & 3)) & 3;
        PauliOperator label(k, std::move(b), std::move(c), phi);
        if (!label.is_hermitian()) {
            throw std::logic_error("logical image reduced to a non-Hermitian label");
        }
        return label;
    };

    for (const auto& l : sys.logical_x()) action.image_of_logical_x.push_back(reduce_to_label(conj(l)));
    for (const auto& l : sys.logical_z()) action.image_of_logical_z.push_back(reduce_to_label(conj(l)));
    return action;
}

Circuit transversal_cnot_blocks(size_t block_a, size_t block_b) {
    if (block_a != block_b) {
        throw std::invalid_argument("transversal_cnot: block sizes differ (" +
                                    std::to_string(block_a) + " vs " + std::to_string(block_b) + ")");
    }
    Circuit c;
    uint32_t a = c.add_register("blockA", block_a, RegisterRole::Data);
    uint32_t b = c.add_register("blockB", block_b, RegisterRole::Data);
    c.new_step();
    for (uint32_t q = 0; q < block_a; ++q) c.push(Operation::cx(a + q, b + q));
    c.check();
    return c;
}

Circuit transversal_cnot(const StabilizerCode& code) {
    return transversal_cnot_blocks(code.num_qubits(), code.num_qubits());
}

namespace {

struct CatWires {
    uint32_t parity;
    uint32_t abort;
};

/// Deterministic adjacent-pair list for verification round r: even offsets,
/// then odd offsets with a wrap pair closing the cycle for odd cat sizes.
std::vector<std::pair<size_t, size_t>> verification_pairs(size_t w, int round) {
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = round % 2; i + 1 < w; i += 2) pairs.emplace_back(i, i + 1);
    if (round % 2 == 1 && w % 2 == 1 && w > 2) pairs.emplace_back(w - 1, 0);
    return pairs;
}

/// Verification ancillas needed to run each round's disjoint pairs two at a
/// time; 0 when there is nothing to verify.
uint32_t verify_width(size_t cat_size, int verify_rounds) {
    size_t best = 0;
    for (int r = 0; r < verify_rounds; ++r) {
        size_t disjoint = cat_size / 2;  // even-offset round packs best
        if (!verification_pairs(cat_size, r).empty()) best = std::max<size_t>(best, 1);
        if (disjoint >= 2 && verify_rounds > 0) best = std::max<size_t>(best, 2);
    }
    return static_cast<uint32_t>(std::min<size_t>(best, 2));
}

CatWires append_cat_gadget(Circuit& c, const PauliOperator& m, uint32_t data_offset,
                           uint32_t cat_offset, uint32_t verify_offset, uint32_t verify_count,
                           int verify_rounds, int max_attempts) {
    std::vector<uint32_t> support;
    std::vector<char> letters;
    for (size_t q = 0; q < m.num_qubits(); ++q) {
        char l = m.letter(q);
        if (l != 'I') {
            support.push_back(static_cast<uint32_t>(q));
            letters.push_back(l);
        }
    }
    size_t w = support.size();

    size_t first_step = c.new_step();
    for (size_t j = 0; j < w; ++j) c.push(Operation::prep_z(cat_offset + j));
    c.new_step();
    c.push(Operation::h(cat_offset));
    // GHZ fan-out tree: each level doubles the entangled prefix.
    for (size_t have = 1; have < w;) {
        size_t add = std::min(have, w - have);
        c.new_step();
        for (size_t j = 0; j < add; ++j) {
            c.push(Operation::cx(cat_offset + j, cat_offset + have + j));
        }
        have += add;
    }

    std::vector<uint32_t> verify_wires;
    for (int r = 0; r < verify_rounds; ++r) {
        auto pairs = verification_pairs(w, r);
        // Chunks of up to verify_count disjoint pairs share four timesteps.
        size_t i = 0;
        while (i < pairs.size()) {
            std::vector<std::pair<size_t, size_t>> chunk;
            std::vector<bool> used(w, false);
            while (i < pairs.size() && chunk.size() < verify_count) {
                auto [a, b] = pairs[i];
                if (used[a] || used[b]) break;
                used[a] = used[b] = true;
                chunk.push_back(pairs[i]);
                ++i;
            }
            c.new_step();
            for (size_t j = 0; j < chunk.size(); ++j) c.push(Operation::prep_z(verify_offset + j));
            c.new_step();
            for (size_t j = 0; j < chunk.size(); ++j) {
                c.push(Operation::cx(cat_offset + chunk[j].first, verify_offset + j));
            }
            c.new_step();
            for (size_t j = 0; j < chunk.size(); ++j) {
                c.push(Operation::cx(cat_offset + chunk[j].second, verify_offset + j));
            }
            c.new_step();
            for (size_t j = 0; j < chunk.size(); ++j) {
                uint32_t vw = c.new_wire();
                c.push(Operation::measure_z(verify_offset + j, vw));
                verify_wires.push_back(vw);
            }
        }
    }
    uint32_t abort = c.new_wire();
    c.new_step();
    if (verify_wires.empty()) {
        c.push(Operation::xor_of({}, abort));  // constant 0: nothing to verify
    } else {
        c.push(Operation::or_of(verify_wires, abort));
    }
    size_t last_step = c.steps.size() - 1;
    if (!verify_wires.empty()) {
        c.retries.push_back({first_step, last_step, abort, max_attempts});
    }

    // Transversal controlled interaction, one timestep.
    c.new_step();
    for (size_t j = 0; j < w; ++j) {
        uint32_t cq = cat_offset + static_cast<uint32_t>(j);
        uint32_t dq = data_offset + support[j];
        switch (letters[j]) {
            case 'X': c.push(Operation::cx(cq, dq)); break;
            case 'Y': c.push(Operation::cy(cq, dq)); break;
            case 'Z': c.push(Operation::cz(cq, dq)); break;
        }
    }
    c.new_step();
    for (size_t j = 0; j < w; ++j) c.push(Operation::h(cat_offset + j));
    std::vector<uint32_t> readout;
    c.new_step();
    for (size_t j = 0; j < w; ++j) {
        uint32_t mw = c.new_wire();
        c.push(Operation::measure_z(cat_offset + j, mw));
        readout.push_back(mw);
    }
    uint32_t parity = c.new_wire();
    c.new_step();
    c.push(Operation::xor_of(readout, parity));
    return {parity, abort};
}

constexpr int kCatRetryAttempts = 10;

}  // namespace

Circuit cat_measurement_circuit(const StabilizerCode& code, const PauliOperator& m,
                                int verify_rounds) {
    if (m.num_qubits() != code.num_qubits()) {
        throw std::invalid_argument("cat_measurement_circuit: operator width mismatch");
    }
    if (m.weight() == 0) {
        throw std::invalid_argument("cat_measurement_circuit: weight-0 operator");
    }
    if (verify_rounds < 0) {
        throw std::invalid_argument("cat_measurement_circuit: verify_rounds must be >= 0");
    }
    Circuit c;
    uint32_t data = c.add_register("data", code.num_qubits(), RegisterRole::Data);
    uint32_t cat = c.add_register("cat", static_cast<uint32_t>(m.weight()), RegisterRole::Cat);
    uint32_t vw = verify_width(m.weight(), verify_rounds);
    uint32_t verify = vw ? c.add_register("verify", vw, RegisterRole::Verify) : 0;
    CatWires wires = append_cat_gadget(c, m, data, cat, verify, vw, verify_rounds,
                                       kCatRetryAttempts);
    c.label_wire("parity", wires.parity);
    c.label_wire("abort", wires.abort);
    c.check();
    return c;
}

Circuit shor_ec_round(const StabilizerCode& code, int repetitions, int verify_rounds) {
    if (repetitions < 1 || repetitions % 2 == 0) {
        throw std::invalid_argument("shor_ec_round: repetitions must be odd (majority vote)");
    }
    size_t m = code.num_generators();
    if (m == 0) throw std::invalid_argument("shor_ec_round: code has no generators");
    uint32_t max_w = 0;
    for (const auto& g : code.generators()) {
        max_w = std::max<uint32_t>(max_w, static_cast<uint32_t>(g.weight()));
    }
    Circuit c;
    uint32_t data = c.add_register("data", code.num_qubits(), RegisterRole::Data);
    uint32_t cat = c.add_register("cat", max_w, RegisterRole::Cat);
    uint32_t vw = verify_width(max_w, verify_rounds);
    uint32_t verify = vw ? c.add_register("verify", vw, RegisterRole::Verify) : 0;

    std::vector<std::vector<uint32_t>> parities(m);
    for (int rep = 0; rep < repetitions; ++rep) {
        for (size_t i = 0; i < m; ++i) {
            CatWires wires = append_cat_gadget(c, code.generators()[i], data, cat, verify, vw,
                                               verify_rounds, kCatRetryAttempts);
            parities[i].push_back(wires.parity);
        }
    }
    std::vector<uint32_t> syndrome_wires;
    c.new_step();
    for (size_t i = 0; i < m; ++i) {
        uint32_t sw = c.new_wire();
        c.push(Operation::majority_of(parities[i], sw));
        syndrome_wires.push_back(sw);
        c.label_wire("s" + std::to_string(i), sw);
    }
    int d = code.known_distance().value_or(3);
    auto table = std::make_shared<const DecoderTable>(
        DecoderTable::build(code, std::max(0, (d - 1) / 2)));
    std::vector<uint32_t> data_qubits;
    for (uint32_t q = 0; q < code.num_qubits(); ++q) data_qubits.push_back(data + q);
    c.new_step();
    c.push(Operation::decode_correct(syndrome_wires, table, data_qubits));
    c.check();
    return c;
}

Circuit pi8_injection_circuit() {
    Circuit c;
    uint32_t data = c.add_register("data", 1, RegisterRole::Data);
    uint32_t anc = c.add_register("ancilla", 1, RegisterRole::AncillaBlock);
    c.warnings.push_back("ancilla must be supplied in the |0> + e^{i pi/4}|1> resource state");
    c.new_step();
    c.push(Operation::cx(anc, data));
    uint32_t outcome = c.new_wire();
    c.new_step();
    c.push(Operation::measure_z(data, outcome));
    c.new_step();
    c.push(Operation::controlled_px(outcome, anc));
    c.label_wire("inject_outcome", outcome);
    c.check();
    return c;
}

Circuit pi8_ancilla_check_circuit() {
    Circuit c;
    uint32_t cand = c.add_register("candidate", 1, RegisterRole::AncillaBlock);
    uint32_t cat = c.add_register("cat", 1, RegisterRole::Cat);
    c.new_step();
    c.push(Operation::prep_plus(cat));
    c.new_step();
    c.push(Operation::cx(cat, cand));
    c.new_step();
    c.push(Operation::cs(cat, cand));
    c.new_step();
    c.push(Operation::phase8(cat, 7));  // e^{-i pi/4} completes controlled-(X+Y)/sqrt(2)
    c.new_step();
    c.push(Operation::h(cat));
    uint32_t outcome = c.new_wire();
    c.new_step();
    c.push(Operation::measure_z(cat, outcome));
    c.label_wire("px_outcome", outcome);
    c.check();
    return c;
}

namespace {

/// Reduced-row-echelon form; returns (pivot, row) pairs.
std::vector<std::pair<size_t, BitVector>> rref_rows(const std::vector<BitVector>& rows) {
    std::vector<std::pair<size_t, BitVector>> out;
    for (const auto& row : rows) {
        BitVector r = row;
        for (const auto& [p, existing] : out) {
            if (r.get(p)) r ^= existing;
        }
        if (auto p = r.first_set()) {
            for (auto& [_, existing] : out) {
                if (existing.get(*p)) existing ^= r;
            }
            out.emplace_back(*p, std::move(r));
        }
    }
    return out;
}

void append_css_state_prep(Circuit& c, const std::vector<BitVector>& span_rows, size_t n,
                           uint32_t anc_offset) {
    auto rref = rref_rows(span_rows);
    c.new_step();
    for (size_t q = 0; q < n; ++q) c.push(Operation::prep_z(anc_offset + q));
    if (!rref.empty()) {
        c.new_step();
        for (const auto& [p, _] : rref) c.push(Operation::h(anc_offset + p));
    }
    for (const auto& [p, row] : rref) {
        for (size_t q = 0; q < n; ++q) {
            if (q != p && row.get(q)) {
                c.new_step();
                c.push(Operation::cx(anc_offset + p, anc_offset + q));
            }
        }
    }
}

void append_steane_half(Circuit& c, const StabilizerCode& code, uint32_t data, uint32_t anc,
                        bool phase_half, const std::shared_ptr<const DecoderTable>& table) {
    size_t n = code.num_qubits();
    std::vector<BitVector> span_rows;
    for (const auto& g : code.generators()) {
        if (g.x_bits().any()) span_rows.push_back(g.x_bits());
    }
    // The ancilla absorbing the bit-flip syndrome as a CNOT target must be
    // |0>_L + |1>_L, so that a logical CNOT onto it acts trivially and the
    // per-qubit readout carries no logical information; the |0>_L ancilla
    // drives the phase half as the control for the same reason.
    if (!phase_half) span_rows.push_back(code.logical_x()[0].x_bits());
    append_css_state_prep(c, span_rows, n, anc);

    c.new_step();
    for (uint32_t q = 0; q < n; ++q) {
        if (phase_half) {
            c.push(Operation::cx(anc + q, data + q));  // ancilla controls: collects Z info
        } else {
            c.push(Operation::cx(data + q, anc + q));  // data controls: collects X info
        }
    }
    std::vector<uint32_t> readout(n);
    c.new_step();
    for (uint32_t q = 0; q < n; ++q) {
        readout[q] = c.new_wire();
        c.push(phase_half ? Operation::measure_x(anc + q, readout[q])
                          : Operation::measure_z(anc + q, readout[q]));
    }
    // Classical syndrome in generator order; the half not being measured
    // contributes constant-0 bits.
    std::vector<uint32_t> syndrome_wires;
    c.new_step();
    for (const auto& g : code.generators()) {
        bool is_x_gen = g.x_bits().any();
        uint32_t sw = c.new_wire();
        if (is_x_gen == phase_half) {
            std::vector<uint32_t> ins;
            const BitVector& supp = is_x_gen ? g.x_bits() : g.z_bits();
            for (size_t q = 0; q < n; ++q) {
                if (supp.get(q)) ins.push_back(readout[q]);
            }
            c.push(Operation::xor_of(std::move(ins), sw));
        } else {
            c.push(Operation::xor_of({}, sw));
        }
        syndrome_wires.push_back(sw);
    }
    std::vector<uint32_t> data_qubits;
    for (uint32_t q = 0; q < n; ++q) data_qubits.push_back(data + q);
    c.new_step();
    c.push(Operation::decode_correct(syndrome_wires, table, data_qubits));
}

std::shared_ptr<const DecoderTable> steane_table(const StabilizerCode& code) {
    int d = code.known_distance().value_or(3);
    return std::make_shared<const DecoderTable>(DecoderTable::build(code, std::max(0, (d - 1) / 2)));
}

void require_css_k1(const StabilizerCode& code, const char* who) {
    if (!code.is_css() || code.num_logical() != 1) {
        throw std::invalid_argument(std::string(who) + ": requires a CSS code with k = 1");
    }
}

}  // namespace

Circuit steane_ec_half_circuit(const StabilizerCode& code, bool phase_half) {
    require_css_k1(code, "steane_ec_half_circuit");
    Circuit c;
    uint32_t data = c.add_register("data", code.num_qubits(), RegisterRole::Data);
    uint32_t anc = c.add_register(phase_half ? "ancilla_zero" : "ancilla_plus",
                                  code.num_qubits(), RegisterRole::AncillaBlock);
    c.warnings.push_back("ancilla preparation is not fault-tolerant; requires verification");
    append_steane_half(c, code, data, anc, phase_half, steane_table(code));
    c.check();
    return c;
}

Circuit steane_ec_circuit(const StabilizerCode& code) {
    require_css_k1(code, "steane_ec_circuit");
    Circuit c;
    uint32_t data = c.add_register("data", code.num_qubits(), RegisterRole::Data);
    uint32_t ancP = c.add_register("ancilla_plus", code.num_qubits(), RegisterRole::AncillaBlock);
    uint32_t anc0 = c.add_register("ancilla_zero", code.num_qubits(), RegisterRole::AncillaBlock);
    c.warnings.push_back("ancilla preparation is not fault-tolerant; requires verification");
    auto table = steane_table(code);
    append_steane_half(c, code, data, ancP, false, table);
    append_steane_half(c, code, data, anc0, true, table);
    c.check();
    return c;
}

std::vector<FaultSite> enumerate_fault_sites(const Circuit& circuit) {
    static constexpr char kLetters[3] = {'X', 'Y', 'Z'};
    std::vector<FaultSite> sites;
    for (size_t s = 0; s < circuit.steps.size(); ++s) {
        for (size_t i = 0; i < circuit.steps[s].size(); ++i) {
            const Operation& op = circuit.steps[s][i];
            switch (op.kind) {
                case OpKind::Xor:
                case OpKind::Or:
                case OpKind::Majority:
                case OpKind::ControlledPauli:
                case OpKind::ControlledPX:
                case OpKind::DecodeCorrect:
                    continue;  // classical processing is noiseless
                default:
                    break;
            }
            if (op.qubits.size() == 1) {
                for (char l : kLetters) {
                    sites.push_back({s, i, PauliOperator::single(1, 0, l)});
                }
            } else if (op.qubits.size() == 2) {
                for (int a = 0; a < 4; ++a) {
                    for (int b = 0; b < 4; ++b) {
                        if (a == 0 && b == 0) continue;
                        PauliOperator f(2);
                        if (a) f = f * PauliOperator::single(2, 0, kLetters[a - 1]);
                        if (b) f = f * PauliOperator::single(2, 1, kLetters[b - 1]);
                        sites.push_back({s, i, std::move(f)});
                    }
                }
            }
        }
    }
    return sites;
}

FaultPropagation propagate_fault(const Circuit& circuit, const StabilizerCode& block_code,
                                 const FaultSite& site) {
    PauliFrame frame(circuit.n_qubits);
    std::vector<int> wires(circuit.n_wires, 0);
    bool aborted = false;

    auto inject = [&](const Operation& op) {
        for (size_t j = 0; j < op.qubits.size(); ++j) {
            frame.mult_letter(op.qubits[j], site.fault.letter(j));
        }
    };

    for (size_t s = 0; s < circuit.steps.size() && !aborted; ++s) {
        for (size_t i = 0; i < circuit.steps[s].size(); ++i) {
            const Operation& op = circuit.steps[s][i];
            bool here = (s == site.step && i == site.op_index);
            if (here && op.is_measurement()) inject(op);
            switch (op.kind) {
                case OpKind::PrepZ:
                case OpKind::PrepPlus:
                    frame.clear_qubit(op.qubits[0]);
                    break;
                case OpKind::MeasureZ:
                    wires[op.out_wire] = frame.flips_z_measurement(op.qubits[0]);
                    break;
                case OpKind::MeasureX:
                    wires[op.out_wire] = frame.flips_x_measurement(op.qubits[0]);
                    break;
                case OpKind::Xor: {
                    int v = 0;
                    for (uint32_t w : op.in_wires) v ^= wires[w];
                    wires[op.out_wire] = v;
                    break;
                }
                case OpKind::Or: {
                    int v = 0;
                    for (uint32_t w : op.in_wires) v |= wires[w];
                    wires[op.out_wire] = v;
                    break;
                }
                case OpKind::Majority: {
                    int ones = 0;
                    for (uint32_t w : op.in_wires) ones += wires[w];
                    wires[op.out_wire] = ones * 2 > static_cast<int>(op.in_wires.size());
                    break;
                }
                case OpKind::ControlledPauli: {
                    int v = 0;
                    for (uint32_t w : op.in_wires) v ^= wires[w];
                    if (v) {
                        for (size_t j = 0; j < op.qubits.size(); ++j) {
                            frame.mult_letter(op.qubits[j], op.pauli.letter(j));
                        }
                    }
                    break;
                }
                case OpKind::ControlledPX:
                    if (wires[op.in_wires[0]]) {
                        throw std::invalid_argument(
                            "propagate_fault: non-Pauli classical feedback diverged");
                    }
                    break;
                case OpKind::DecodeCorrect:
                    break;  // decode feedback is excluded from the propagation metric
                default:
                    frame.conjugate_through(op);
                    break;
            }
            if (here && !op.is_measurement()) inject(op);
        }
        for (const auto& region : circuit.retries) {
            if (region.last_step == s && wires[region.abort_wire] == 1) {
                aborted = true;
                break;
            }
        }
    }

    FaultPropagation out{aborted, frame, {}, {}};
    for (const auto& reg : circuit.registers) {
        if (reg.role != RegisterRole::Data && reg.role != RegisterRole::AncillaBlock) continue;
        if (reg.size != block_code.num_qubits()) {
            throw std::invalid_argument("propagate_fault: register '" + reg.name +
                                        "' does not match the block code size");
        }
        out.block_weights.push_back(
            block_code.min_weight_in_coset(frame.slice_as_pauli(reg.offset, reg.size)));
        out.block_names.push_back(reg.name);
    }
    return out;
}

}  // namespace qecc
