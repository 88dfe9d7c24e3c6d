#include "qecc/dense.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qecc {

namespace {

void check_capacity(size_t n) {
    if (n > kDenseMaxQubits) {
        throw std::runtime_error("dense state capacity exceeded: " + std::to_string(n) +
                                 " qubits > " + std::to_string(kDenseMaxQubits));
    }
}

cdouble phase_i_pow(unsigned e) {
    switch (e & 3) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

}  // namespace

DenseState::DenseState(size_t n, uint64_t basis_bits) : n_(n) {
    check_capacity(n);
    amps_.assign(uint64_t{1} << n, cdouble{0, 0});
    amps_[basis_bits] = 1.0;
}

DenseState DenseState::from_amplitudes(size_t n, std::vector<cdouble> amps) {
    check_capacity(n);
    if (amps.size() != (uint64_t{1} << n)) {
        throw std::invalid_argument("from_amplitudes: expected 2^n amplitudes");
    }
    DenseState s(n);
    s.amps_ = std::move(amps);
    if (std::abs(s.norm() - 1.0) > kDenseTolerance) {
        throw std::invalid_argument("from_amplitudes: state is not normalized");
    }
    return s;
}

double DenseState::norm() const {
    double acc = 0;
    for (const auto& a : amps_) acc += std::norm(a);
    return std::sqrt(acc);
}

DenseState DenseState::apply_pauli(const PauliOperator& p) const {
    if (p.num_qubits() != n_) throw std::invalid_argument("apply_pauli: dimension mismatch");
    uint64_t xm = 0, zm = 0;
    size_t y = 0;
    for (size_t q = 0; q < n_; ++q) {
        if (p.x_bit(q)) xm |= uint64_t{1} << q;
        if (p.z_bit(q)) zm |= uint64_t{1} << q;
        if (p.x_bit(q) && p.z_bit(q)) ++y;
    }
    // P = i^{phase + y} Π X^x Z^z, and X^x Z^z |w> = (-1)^{|z & w|} |w ^ x>.
    cdouble base = phase_i_pow(p.phase_exponent() + y);
    DenseState out(n_);
    out.amps_.assign(amps_.size(), cdouble{0, 0});
    for (uint64_t w = 0; w < amps_.size(); ++w) {
        cdouble f = base;
        if (std::popcount(w & zm) & 1) f = -f;
        out.amps_[w ^ xm] = f * amps_[w];
    }
    return out;
}

DenseState DenseState::apply_unitary_1q(size_t q, const std::array<cdouble, 4>& u) const {
    if (q >= n_) throw std::invalid_argument("apply_unitary_1q: qubit out of range");
    // Unitarity: U U† = I within tolerance.
    cdouble r00 = u[0] * std::conj(u[0]) + u[1] * std::conj(u[1]);
    cdouble r01 = u[0] * std::conj(u[2]) + u[1] * std::conj(u[3]);
    cdouble r11 = u[2] * std::conj(u[2]) + u[3] * std::conj(u[3]);
    if (std::abs(r00 - 1.0) > kDenseTolerance || std::abs(r11 - 1.0) > kDenseTolerance ||
        std::abs(r01) > kDenseTolerance) {
        throw std::invalid_argument("apply_unitary_1q: matrix is not unitary");
    }
    uint64_t mask = uint64_t{1} << q;
    DenseState out(n_);
    out.amps_ = amps_;
    for (uint64_t w = 0; w < amps_.size(); ++w) {
        if (w & mask) continue;
        cdouble a0 = amps_[w], a1 = amps_[w | mask];
        out.amps_[w] = u[0] * a0 + u[1] * a1;
        out.amps_[w | mask] = u[2] * a0 + u[3] * a1;
    }
    return out;
}

DenseState DenseState::apply_h(size_t q) const {
    const double s = std::numbers::sqrt2 / 2;
    return apply_unitary_1q(q, {cdouble{s, 0}, cdouble{s, 0}, cdouble{s, 0}, cdouble{-s, 0}});
}

DenseState DenseState::apply_phase(size_t q, cdouble factor) const {
    if (q >= n_) throw std::invalid_argument("apply_phase: qubit out of range");
    if (std::abs(std::abs(factor) - 1.0) > kDenseTolerance) {
        throw std::invalid_argument("apply_phase: factor must be unimodular");
    }
    uint64_t mask = uint64_t{1} << q;
    DenseState out(n_);
    out.amps_ = amps_;
    for (uint64_t w = 0; w < amps_.size(); ++w) {
        if (w & mask) out.amps_[w] *= factor;
    }
    return out;
}

DenseState DenseState::apply_cnot(size_t control, size_t target) const {
    if (control >= n_ || target >= n_ || control == target) {
        throw std::invalid_argument("apply_cnot: bad qubit indices");
    }
    uint64_t cm = uint64_t{1} << control, tm = uint64_t{1} << target;
    DenseState out(n_);
    out.amps_.resize(amps_.size());
    for (uint64_t w = 0; w < amps_.size(); ++w) {
        out.amps_[(w & cm) ? (w ^ tm) : w] = amps_[w];
    }
    return out;
}

DenseState DenseState::apply_cz(size_t a, size_t b) const {
    if (a >= n_ || b >= n_ || a == b) throw std::invalid_argument("apply_cz: bad qubit indices");
    uint64_t am = uint64_t{1} << a, bm = uint64_t{1} << b;
    DenseState out(n_);
    out.amps_ = amps_;
    for (uint64_t w = 0; w < amps_.size(); ++w) {
        if ((w & am) && (w & bm)) out.amps_[w] = -out.amps_[w];
    }
    return out;
}

DenseState DenseState::apply_cy(size_t control, size_t target) const {
    if (control >= n_ || target >= n_ || control == target) {
        throw std::invalid_argument("apply_cy: bad qubit indices");
    }
    uint64_t cm = uint64_t{1} << control, tm = uint64_t{1} << target;
    DenseState out(n_);
    out.amps_ = amps_;
    for (uint64_t w = 0; w < amps_.size(); ++w) {
        if (!(w & cm) || (w & tm)) continue;
        // Y on target: |0> -> i|1>, |1> -> -i|0>
        cdouble a0 = amps_[w], a1 = amps_[w | tm];
        out.amps_[w | tm] = cdouble{0, 1} * a0;
        out.amps_[w] = cdouble{0, -1} * a1;
    }
    return out;
}

DenseState DenseState::apply_cs(size_t a, size_t b) const {
    if (a >= n_ || b >= n_ || a == b) throw std::invalid_argument("apply_cs: bad qubit indices");
    uint64_t am = uint64_t{1} << a, bm = uint64_t{1} << b;
    DenseState out(n_);
    out.amps_ = amps_;
    for (uint64_t w = 0; w < amps_.size(); ++w) {
        if ((w & am) && (w & bm)) out.amps_[w] *= cdouble{0, 1};
    }
    return out;
}

DenseState::MeasureResult DenseState::measure_pauli(const PauliOperator& p,
                                                    std::optional<int> forced_outcome,
                                                    Rng* rng) const {
    if (!p.is_hermitian()) {
        throw std::invalid_argument("measure_pauli: operator is not Hermitian");
    }
    DenseState pv = apply_pauli(p);
    double expectation = 0;
    for (uint64_t w = 0; w < amps_.size(); ++w) {
        expectation += std::real(std::conj(amps_[w]) * pv.amps_[w]);
    }
    double p_plus = std::min(1.0, std::max(0.0, (1.0 + expectation) / 2.0));
    int outcome;
    if (forced_outcome.has_value()) {
        if (*forced_outcome != 1 && *forced_outcome != -1) {
            throw std::invalid_argument("measure_pauli: forced outcome must be +1 or -1");
        }
        outcome = *forced_outcome;
        double branch = outcome == 1 ? p_plus : 1.0 - p_plus;
        if (branch < kDenseTolerance) {
            throw std::runtime_error("measure_pauli: forced branch has zero probability");
        }
    } else if (p_plus > 1.0 - kDenseTolerance) {
        outcome = 1;
    } else if (p_plus < kDenseTolerance) {
        outcome = -1;
    } else {
        if (!rng) throw std::invalid_argument("measure_pauli: random branch needs an rng");
        outcome = rng->next_unit() < p_plus ? 1 : -1;
    }
    double prob = outcome == 1 ? p_plus : 1.0 - p_plus;
    DenseState post(n_);
    post.amps_.resize(amps_.size());
    // ||(I + oP)|psi>|| = 2 sqrt(prob).
    double inv = 1.0 / (2.0 * std::sqrt(prob));
    for (uint64_t w = 0; w < amps_.size(); ++w) {
        post.amps_[w] = (amps_[w] + static_cast<double>(outcome) * pv.amps_[w]) * inv;
    }
    return {outcome, std::move(post), prob};
}

DenseState DenseState::tensor(const DenseState& other) const {
    check_capacity(n_ + other.n_);
    DenseState out(n_ + other.n_);
    out.amps_.assign(uint64_t{1} << (n_ + other.n_), cdouble{0, 0});
    for (uint64_t hi = 0; hi < other.amps_.size(); ++hi) {
        for (uint64_t lo = 0; lo < amps_.size(); ++lo) {
            out.amps_[(hi << n_) | lo] = amps_[lo] * other.amps_[hi];
        }
    }
    return out;
}

DenseState DenseState::condition_on(size_t q, int bit) const {
    if (q >= n_) throw std::invalid_argument("condition_on: qubit out of range");
    uint64_t mask = uint64_t{1} << q;
    std::vector<cdouble> amps(uint64_t{1} << (n_ - 1));
    double norm2 = 0;
    for (uint64_t w = 0; w < amps.size(); ++w) {
        uint64_t lo = w & (mask - 1);
        uint64_t hi = (w >> q) << (q + 1);
        cdouble a = amps_[hi | (bit ? mask : 0) | lo];
        amps[w] = a;
        norm2 += std::norm(a);
    }
    if (norm2 < kDenseTolerance) {
        throw std::runtime_error("condition_on: projection has vanishing probability");
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : amps) a *= inv;
    DenseState out(n_ - 1);
    out.amps_ = std::move(amps);
    return out;
}

bool states_equal_up_to_phase(const DenseState& a, const DenseState& b, double tol) {
    if (a.num_qubits() != b.num_qubits()) return false;
    cdouble ip{0, 0};
    for (uint64_t w = 0; w < a.dim(); ++w) {
        ip += std::conj(a.amp(w)) * b.amp(w);
    }
    return std::abs(std::abs(ip) - 1.0) <= tol;
}

std::vector<DenseState> codespace_basis(const StabilizerCode& code) {
    size_t n = code.num_qubits();
    check_capacity(n);
    size_t k = code.num_logical();
    uint64_t dim = uint64_t{1} << n;

    // (cur + sign * M cur) / 2 on an unnormalized raw vector.
    auto apply_projector = [&](std::vector<cdouble>& cur, const PauliOperator& m, int sign) {
        uint64_t xm = 0, zm = 0;
        size_t y = 0;
        for (size_t q = 0; q < n; ++q) {
            if (m.x_bit(q)) xm |= uint64_t{1} << q;
            if (m.z_bit(q)) zm |= uint64_t{1} << q;
            if (m.x_bit(q) && m.z_bit(q)) ++y;
        }
        cdouble base = phase_i_pow(m.phase_exponent() + y) * static_cast<double>(sign);
        std::vector<cdouble> mv(dim);
        for (uint64_t w = 0; w < dim; ++w) {
            cdouble f = base;
            if (std::popcount(w & zm) & 1) f = -f;
            mv[w ^ xm] = f * cur[w];
        }
        for (uint64_t w = 0; w < dim; ++w) cur[w] = 0.5 * (cur[w] + mv[w]);
    };

    std::vector<DenseState> basis;
    for (uint64_t label = 0; label < (uint64_t{1} << k); ++label) {
        std::optional<DenseState> found;
        // Seed with computational basis states in lexicographic order; the
        // projector has rank one per label, so some seed always survives.
        for (uint64_t seed = 0; seed < dim && !found; ++seed) {
            std::vector<cdouble> cur(dim, cdouble{0, 0});
            cur[seed] = 1.0;
            for (const auto& g : code.generators()) apply_projector(cur, g, +1);
            for (size_t j = 0; j < k; ++j) {
                apply_projector(cur, code.logical_z()[j], (label >> j) & 1 ? -1 : +1);
            }
            double norm2 = 0;
            for (const auto& c : cur) norm2 += std::norm(c);
            if (norm2 > 1e-9) {
                // Canonical global phase: first nonzero amplitude real positive.
                cdouble align{1, 0};
                for (const auto& c : cur) {
                    if (std::abs(c) > 1e-9 * std::sqrt(norm2)) {
                        align = std::conj(c) / std::abs(c);
                        break;
                    }
                }
                double inv = 1.0 / std::sqrt(norm2);
                for (auto& c : cur) c *= inv * align;
                found = DenseState::from_amplitudes(n, std::move(cur));
            }
        }
        if (!found) {
            throw std::logic_error("codespace projector annihilated every seed state");
        }
        basis.push_back(std::move(*found));
    }
    return basis;
}

KlReport check_kl(const StabilizerCode& code, const std::vector<PauliOperator>& errors) {
    if (errors.empty()) throw std::invalid_argument("check_kl: error set is empty");
    auto basis = codespace_basis(code);
    size_t dim = basis.size();
    size_t m = errors.size();
    // Precompute E_b |psi_j>.
    std::vector<std::vector<DenseState>> eb;
    eb.reserve(m);
    for (const auto& e : errors) {
        std::vector<DenseState> col;
        col.reserve(dim);
        for (const auto& psi : basis) col.push_back(psi.apply_pauli(e));
        eb.push_back(std::move(col));
    }
    KlReport report;
    for (const auto& e : errors) report.error_labels.push_back(e.str());
    report.c_matrix.assign(m, std::vector<cdouble>(m, cdouble{0, 0}));
    for (size_t a = 0; a < m; ++a) {
        for (size_t b = 0; b < m; ++b) {
            // <psi_i| Ea† Eb |psi_j> = <Ea psi_i | Eb psi_j>
            std::vector<std::vector<cdouble>> mat(dim, std::vector<cdouble>(dim));
            for (size_t i = 0; i < dim; ++i) {
                for (size_t j = 0; j < dim; ++j) {
                    cdouble ip{0, 0};
                    for (uint64_t w = 0; w < basis[0].dim(); ++w) {
                        ip += std::conj(eb[a][i].amp(w)) * eb[b][j].amp(w);
                    }
                    mat[i][j] = ip;
                }
            }
            cdouble c_ab = mat[0][0];
            report.c_matrix[a][b] = c_ab;
            for (size_t i = 0; i < dim; ++i) {
                for (size_t j = 0; j < dim; ++j) {
                    if (i == j) {
                        report.max_identity_violation =
                            std::max(report.max_identity_violation, std::abs(mat[i][i] - c_ab));
                    } else {
                        report.max_offdiag_violation =
                            std::max(report.max_offdiag_violation, std::abs(mat[i][j]));
                    }
                }
            }
        }
    }
    report.satisfied = report.max_offdiag_violation < kDenseTolerance &&
                       report.max_identity_violation < kDenseTolerance;
    return report;
}

namespace {

struct DenseExecutor {
    const Circuit& circuit;
    DenseState state;
    DenseRunOptions& opts;
    DenseRunRecord record;
    size_t forced_used = 0;

    int take_random_bit(double p_one) {
        if (forced_used < opts.forced_outcomes.size()) {
            return opts.forced_outcomes[forced_used++];
        }
        if (!opts.rng) {
            throw std::invalid_argument("run_circuit_dense: random branch with no rng and no "
                                        "forced outcomes left");
        }
        return opts.rng->next_unit() < p_one ? 1 : 0;
    }

    /// Measure Z_q or X_q; returns the wire bit (0 = +1 outcome).
    int measure(size_t q, char basis, int32_t wire) {
        PauliOperator obs = PauliOperator::single(state.num_qubits(), q, basis);
        DenseState pv = state.apply_pauli(obs);
        double expectation = 0;
        for (uint64_t w = 0; w < state.dim(); ++w) {
            expectation += std::real(std::conj(state.amp(w)) * pv.amp(w));
        }
        double p_plus = std::min(1.0, std::max(0.0, (1.0 + expectation) / 2.0));
        int outcome;
        bool deterministic = false;
        double prob;
        if (p_plus > 1.0 - kDenseTolerance) {
            outcome = 1; deterministic = true; prob = p_plus;
        } else if (p_plus < kDenseTolerance) {
            outcome = -1; deterministic = true; prob = 1.0 - p_plus;
        } else {
            int bit = take_random_bit(1.0 - p_plus);
            outcome = bit ? -1 : 1;
            prob = outcome == 1 ? p_plus : 1.0 - p_plus;
        }
        std::vector<cdouble> amps(state.dim());
        double inv = 1.0 / (2.0 * std::sqrt(prob));
        for (uint64_t w = 0; w < state.dim(); ++w) {
            amps[w] = (state.amp(w) + static_cast<double>(outcome) * pv.amp(w)) * inv;
        }
        state = DenseState::from_amplitudes(state.num_qubits(), std::move(amps));
        int bit = outcome == 1 ? 0 : 1;
        if (wire >= 0) {
            record.measurements.push_back({static_cast<uint32_t>(wire), bit, prob, deterministic});
            record.wire_values[wire] = bit;
        }
        return bit;
    }

    void prep(size_t q, bool plus) {
        int bit = measure(q, 'Z', -1);
        if (bit) state = state.apply_pauli(PauliOperator::single(state.num_qubits(), q, 'X'));
        if (plus) state = state.apply_h(q);
    }

    int wire(uint32_t w) const {
        int v = record.wire_values[w];
        if (v < 0) throw std::logic_error("wire consumed before production");
        return v;
    }

    void exec(const Operation& op) {
        using K = OpKind;
        const auto& q = op.qubits;
        switch (op.kind) {
            case K::PrepZ: prep(q[0], false); break;
            case K::PrepPlus: prep(q[0], true); break;
            case K::H: state = state.apply_h(q[0]); break;
            case K::S: state = state.apply_phase(q[0], cdouble{0, 1}); break;
            case K::SDag: state = state.apply_phase(q[0], cdouble{0, -1}); break;
            case K::X: state = state.apply_pauli(PauliOperator::single(state.num_qubits(), q[0], 'X')); break;
            case K::Y: state = state.apply_pauli(PauliOperator::single(state.num_qubits(), q[0], 'Y')); break;
            case K::Z: state = state.apply_pauli(PauliOperator::single(state.num_qubits(), q[0], 'Z')); break;
            case K::Phase8: {
                double ang = std::numbers::pi / 4.0 * op.phase_eighths;
                state = state.apply_phase(q[0], std::polar(1.0, ang));
                break;
            }
            case K::CX: state = state.apply_cnot(q[0], q[1]); break;
            case K::CY: state = state.apply_cy(q[0], q[1]); break;
            case K::CZ: state = state.apply_cz(q[0], q[1]); break;
            case K::CS: state = state.apply_cs(q[0], q[1]); break;
            case K::MeasureZ: measure(q[0], 'Z', op.out_wire); break;
            case K::MeasureX: measure(q[0], 'X', op.out_wire); break;
            case K::Xor: {
                int v = 0;
                for (uint32_t w : op.in_wires) v ^= wire(w);
                record.wire_values[op.out_wire] = v;
                break;
            }
            case K::Or: {
                int v = 0;
                for (uint32_t w : op.in_wires) v |= wire(w);
                record.wire_values[op.out_wire] = v;
                break;
            }
            case K::Majority: {
                int ones = 0;
                for (uint32_t w : op.in_wires) ones += wire(w);
                record.wire_values[op.out_wire] = ones * 2 > static_cast<int>(op.in_wires.size());
                break;
            }
            case K::ControlledPauli: {
                int v = 0;
                for (uint32_t w : op.in_wires) v ^= wire(w);
                if (v) {
                    PauliOperator full(state.num_qubits());
                    for (size_t j = 0; j < q.size(); ++j) {
                        char l = op.pauli.letter(j);
                        if (l != 'I') {
                            full = full * PauliOperator::single(state.num_qubits(), q[j], l);
                        }
                    }
                    state = state.apply_pauli(full);
                }
                break;
            }
            case K::ControlledPX: {
                if (wire(op.in_wires[0])) {
                    state = state.apply_pauli(PauliOperator::single(state.num_qubits(), q[0], 'X'));
                    state = state.apply_phase(q[0], cdouble{0, 1});
                }
                break;
            }
            case K::DecodeCorrect: {
                BitVector bits(op.in_wires.size());
                for (size_t i = 0; i < op.in_wires.size(); ++i) bits.set(i, wire(op.in_wires[i]));
                PauliOperator corr = op.decoder->decode(Syndrome(std::move(bits))).correction;
                PauliOperator full(state.num_qubits());
                for (size_t j = 0; j < q.size(); ++j) {
                    char l = corr.letter(j);
                    if (l != 'I') full = full * PauliOperator::single(state.num_qubits(), q[j], l);
                }
                state = state.apply_pauli(full);
                break;
            }
        }
    }
};

}  // namespace

std::pair<DenseState, DenseRunRecord> run_circuit_dense(const Circuit& circuit,
                                                        DenseState initial,
                                                        DenseRunOptions options) {
    if (initial.num_qubits() != circuit.n_qubits) {
        throw std::invalid_argument("run_circuit_dense: initial state size mismatch");
    }
    circuit.check();
    DenseExecutor ex{circuit, std::move(initial), options, {}, 0};
    ex.record.wire_values.assign(circuit.n_wires, -1);
    std::vector<int> attempts(circuit.retries.size(), 1);
    size_t step = 0;
    while (step < circuit.steps.size()) {
        for (const auto& op : circuit.steps[step]) ex.exec(op);
        bool jumped = false;
        for (size_t r = 0; r < circuit.retries.size(); ++r) {
            const auto& region = circuit.retries[r];
            if (region.last_step != step) continue;
            if (ex.record.wire_values[region.abort_wire] != 1) continue;
            if (attempts[r] >= region.max_attempts) {
                ex.record.aborted = true;
                return {std::move(ex.state), std::move(ex.record)};
            }
            ++attempts[r];
            for (size_t s = region.first_step; s <= region.last_step; ++s) {
                for (const auto& op : circuit.steps[s]) {
                    if (op.out_wire >= 0) ex.record.wire_values[op.out_wire] = -1;
                }
            }
            step = region.first_step;
            jumped = true;
            break;
        }
        if (!jumped) ++step;
    }
    return {std::move(ex.state), std::move(ex.record)};
}

}  // namespace qecc
