#include "qecc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>


namespace qecc {

void NoiseModel::check() const {
    for (double p : {p_gate1, p_gate2, p_prep, p_meas, p_idle}) {
        if (p < 0.0 || p > 1.0) {
            throw std::invalid_argument("NoiseModel: probabilities must lie in [0, 1]");
        }
    }
}

namespace {

constexpr char kPauliLetters[3] = {'X', 'Y', 'Z'};

struct NoisyRun {
    PauliFrame frame;
    bool aborted = false;
};

/// Circuit-level noisy execution: the ideal trajectory lives on the tableau,
/// faults accumulate in the frame, reported outcomes are ideal XOR frame
/// flips XOR measurement faults.
NoisyRun run_noisy_circuit(const Circuit& circuit, Tableau state, const NoiseModel& nm,
                           const std::vector<std::pair<size_t, size_t>>& windows, Rng& rng) {
    size_t n = circuit.n_qubits;
    NoisyRun run{PauliFrame(n), false};
    std::vector<int> wires(circuit.n_wires, -1);
    std::vector<int> attempts(circuit.retries.size(), 1);

    auto depolarize1 = [&](uint32_t q) {
        run.frame.mult_letter(q, kPauliLetters[rng.next_below(3)]);
    };
    auto depolarize2 = [&](uint32_t a, uint32_t b) {
        uint64_t idx = rng.next_below(15) + 1;
        int la = idx & 3, lb = static_cast<int>(idx >> 2);
        if (la) run.frame.mult_letter(a, kPauliLetters[la - 1]);
        if (lb) run.frame.mult_letter(b, kPauliLetters[lb - 1]);
    };
    auto wire = [&](uint32_t w) { return wires[w]; };

    size_t step = 0;
    while (step < circuit.steps.size()) {
        std::vector<bool> touched(n, false);
        for (const auto& op : circuit.steps[step]) {
            for (uint32_t q : op.qubits) touched[q] = true;
            switch (op.kind) {
                case OpKind::PrepZ:
                case OpKind::PrepPlus: {
                    uint32_t q = op.qubits[0];
                    auto res = state.measure_z(q, rng);
                    if (res.outcome == -1) state.apply_x(q);
                    if (op.kind == OpKind::PrepPlus) state.apply_h(q);
                    run.frame.clear_qubit(q);
                    if (nm.p_prep > 0 && rng.next_unit() < nm.p_prep) {
                        run.frame.mult_letter(q, op.kind == OpKind::PrepZ ? 'X' : 'Z');
                    }
                    break;
                }
                case OpKind::H:
                case OpKind::S:
                case OpKind::SDag:
                case OpKind::X:
                case OpKind::Y:
                case OpKind::Z: {
                    uint32_t q = op.qubits[0];
                    switch (op.kind) {
                        case OpKind::H: state.apply_h(q); break;
                        case OpKind::S: state.apply_s(q); break;
                        case OpKind::SDag: state.apply_sdag(q); break;
                        case OpKind::X: state.apply_x(q); break;
                        case OpKind::Y: state.apply_y(q); break;
                        default: state.apply_z(q); break;
                    }
                    run.frame.conjugate_through(op);
                    if (nm.p_gate1 > 0 && rng.next_unit() < nm.p_gate1) depolarize1(q);
                    break;
                }
                case OpKind::CX:
                case OpKind::CY:
                case OpKind::CZ: {
                    uint32_t a = op.qubits[0], b = op.qubits[1];
                    switch (op.kind) {
                        case OpKind::CX: state.apply_cx(a, b); break;
                        case OpKind::CY: state.apply_cy(a, b); break;
                        default: state.apply_cz(a, b); break;
                    }
                    run.frame.conjugate_through(op);
                    if (nm.p_gate2 > 0 && rng.next_unit() < nm.p_gate2) depolarize2(a, b);
                    break;
                }
                case OpKind::MeasureZ:
                case OpKind::MeasureX: {
                    uint32_t q = op.qubits[0];
                    bool is_z = op.kind == OpKind::MeasureZ;
                    PauliOperator obs = PauliOperator::single(n, q, is_z ? 'Z' : 'X');
                    auto res = state.measure_pauli(obs, rng);
                    int bit = res.outcome == 1 ? 0 : 1;
                    bit ^= is_z ? run.frame.flips_z_measurement(q)
                                : run.frame.flips_x_measurement(q);
                    if (nm.p_meas > 0 && rng.next_unit() < nm.p_meas) bit ^= 1;
                    wires[op.out_wire] = bit;
                    break;
                }
                case OpKind::Xor: {
                    int v = 0;
                    for (uint32_t w : op.in_wires) v ^= wire(w);
                    wires[op.out_wire] = v;
                    break;
                }
                case OpKind::Or: {
                    int v = 0;
                    for (uint32_t w : op.in_wires) v |= wire(w);
                    wires[op.out_wire] = v;
                    break;
                }
                case OpKind::Majority: {
                    int ones = 0;
                    for (uint32_t w : op.in_wires) ones += wire(w);
                    wires[op.out_wire] = ones * 2 > static_cast<int>(op.in_wires.size());
                    break;
                }
                case OpKind::ControlledPauli: {
                    int v = 0;
                    for (uint32_t w : op.in_wires) v ^= wire(w);
                    if (v) {
                        for (size_t j = 0; j < op.qubits.size(); ++j) {
                            run.frame.mult_letter(op.qubits[j], op.pauli.letter(j));
                        }
                    }
                    break;
                }
                case OpKind::DecodeCorrect: {
                    BitVector bits(op.in_wires.size());
                    for (size_t i = 0; i < op.in_wires.size(); ++i) {
                        bits.set(i, wire(op.in_wires[i]));
                    }
                    PauliOperator corr = op.decoder->decode(Syndrome(std::move(bits))).correction;
                    for (size_t j = 0; j < op.qubits.size(); ++j) {
                        run.frame.mult_letter(op.qubits[j], corr.letter(j));
                    }
                    break;
                }
                case OpKind::Phase8:
                case OpKind::CS:
                case OpKind::ControlledPX:
                    throw std::invalid_argument("sample_run: non-Clifford location rejected");
            }
        }
        if (nm.p_idle > 0) {
            for (uint32_t q = 0; q < n; ++q) {
                if (touched[q]) continue;
                const auto& [first, last] = windows[q];
                if (first <= step && step <= last && rng.next_unit() < nm.p_idle) depolarize1(q);
            }
        }
        bool jumped = false;
        for (size_t r = 0; r < circuit.retries.size(); ++r) {
            const auto& region = circuit.retries[r];
            if (region.last_step != step || wires[region.abort_wire] != 1) continue;
            if (attempts[r] >= region.max_attempts) {
                run.aborted = true;
                return run;
            }
            ++attempts[r];
            for (size_t s = region.first_step; s <= region.last_step; ++s) {
                for (const auto& op : circuit.steps[s]) {
                    if (op.out_wire >= 0) wires[op.out_wire] = -1;
                }
            }
            step = region.first_step;
            jumped = true;
            break;
        }
        if (!jumped) ++step;
    }
    return run;
}

const Register& data_register(const Circuit& circuit) {
    for (const auto& r : circuit.registers) {
        if (r.role == RegisterRole::Data) return r;
    }
    throw std::invalid_argument("circuit has no data register");
}

bool frame_fails_logically(const StabilizerCode& code, const DecoderTable& table,
                           const PauliOperator& data_error) {
    PauliOperator correction = table.decode(code.syndrome(data_error)).correction;
    PauliOperator residual = (correction * data_error).unsigned_form();
    return !code.in_stabilizer_up_to_phase(residual);
}

}  // namespace

RunOutcome sample_run(const Circuit& circuit, const StabilizerCode& code,
                      const NoiseModel& noise, Rng& rng) {
    noise.check();
    circuit.check();
    const Register& data = data_register(circuit);
    if (data.size != code.num_qubits()) {
        throw std::invalid_argument("sample_run: data register does not match the code");
    }
    Tableau initial(circuit.n_qubits);
    {
        // Embed the codeword preparation at the data offset.
        std::vector<PauliOperator> embedded;
        for (const auto& g : code.generators()) embedded.push_back(g.embed(circuit.n_qubits, data.offset));
        for (const auto& l : code.logical_z()) embedded.push_back(l.embed(circuit.n_qubits, data.offset));
        std::vector<PauliOperator> fixes;
        for (const auto& l : code.logical_x()) fixes.push_back(l.embed(circuit.n_qubits, data.offset));
        for (size_t i = 0; i < embedded.size(); ++i) {
            auto res = initial.measure_pauli_forced(embedded[i], +1);
            if (res.outcome == -1) {
                if (i >= code.num_generators()) {
                    initial.apply_pauli(fixes[i - code.num_generators()]);
                } else {
                    throw std::logic_error("sample_run: generator forced to -1 on |0...0>");
                }
                auto again = initial.measure_pauli_forced(embedded[i], +1);
                if (again.outcome != 1) throw std::logic_error("sample_run: sign fix failed");
            }
        }
    }
    auto windows = circuit.activity_windows();
    DecoderTable table = DecoderTable::build(code, std::max(0, (code.known_distance().value_or(3) - 1) / 2));
    NoisyRun run = run_noisy_circuit(circuit, std::move(initial), noise, windows, rng);
    if (run.aborted) return {false, false, true};
    PauliOperator data_error = run.frame.slice_as_pauli(data.offset, data.size);
    bool failed = frame_fails_logically(code, table, data_error);
    return {!failed, failed, false};
}

RunOutcome sample_code_capacity(const StabilizerCode& code, const DecoderTable& table,
                                double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_code_capacity: p out of range");
    size_t n = code.num_qubits();
    PauliFrame frame(n);
    for (size_t q = 0; q < n; ++q) {
        if (p > 0 && rng.next_unit() < p) {
            frame.mult_letter(q, kPauliLetters[rng.next_below(3)]);
        }
    }
    bool failed = frame_fails_logically(code, table, frame.as_pauli());
    return {!failed, failed, false};
}

std::pair<double, double> wilson_interval(uint64_t failures, uint64_t shots) {
    if (shots == 0) throw std::invalid_argument("wilson_interval: shots must be positive");
    constexpr double z = 1.959963984540054;  // 97.5th normal percentile
    double nd = static_cast<double>(shots);
    double ph = static_cast<double>(failures) / nd;
    double z2n = z * z / nd;
    double denom = 1.0 + z2n;
    double center = (ph + z2n / 2.0) / denom;
    double half = (z / denom) * std::sqrt(ph * (1.0 - ph) / nd + z2n / (4.0 * nd));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

struct CompiledProtocol {
    SweepMode mode;
    StabilizerCode code;
    DecoderTable table;
    std::optional<Circuit> circuit;
    std::optional<Tableau> initial;
    std::vector<std::pair<size_t, size_t>> windows;
};

CompiledProtocol compile_protocol(const SweepProtocol& proto) {
    int t = std::max(0, (proto.code.known_distance().value_or(3) - 1) / 2);
    CompiledProtocol cp{proto.mode, proto.code, DecoderTable::build(proto.code, t), {}, {}, {}};
    if (proto.mode == SweepMode::CircuitShor) {
        cp.circuit = shor_ec_round(proto.code, proto.repetitions, proto.verify_rounds);
    } else if (proto.mode == SweepMode::CircuitSteane) {
        cp.circuit = steane_ec_circuit(proto.code);
    }
    if (cp.circuit) {
        cp.circuit->check();
        cp.windows = cp.circuit->activity_windows();
        const Register& data = data_register(*cp.circuit);
        Tableau initial(cp.circuit->n_qubits);
        std::vector<PauliOperator> targets;
        for (const auto& g : proto.code.generators()) {
            targets.push_back(g.embed(cp.circuit->n_qubits, data.offset));
        }
        for (const auto& l : proto.code.logical_z()) {
            targets.push_back(l.embed(cp.circuit->n_qubits, data.offset));
        }
        for (size_t i = 0; i < targets.size(); ++i) {
            auto res = initial.measure_pauli_forced(targets[i], +1);
            if (res.outcome == -1) {
                if (i < proto.code.num_generators()) {
                    throw std::logic_error("compile_protocol: generator forced to -1");
                }
                initial.apply_pauli(proto.code.logical_x()[i - proto.code.num_generators()]
                                        .embed(cp.circuit->n_qubits, data.offset));
                if (initial.measure_pauli_forced(targets[i], +1).outcome != 1) {
                    throw std::logic_error("compile_protocol: sign fix failed");
                }
            }
        }
        cp.initial = std::move(initial);
    }
    return cp;
}

RunOutcome one_shot(const CompiledProtocol& cp, double p, Rng& rng) {
    if (cp.mode == SweepMode::CodeCapacity) {
        return sample_code_capacity(cp.code, cp.table, p, rng);
    }
    NoiseModel nm = NoiseModel::uniform(p);
    const Register& data = data_register(*cp.circuit);
    NoisyRun run = run_noisy_circuit(*cp.circuit, *cp.initial, nm, cp.windows, rng);
    if (run.aborted) return {false, false, true};
    PauliOperator data_error = run.frame.slice_as_pauli(data.offset, data.size);
    bool failed = frame_fails_logically(cp.code, cp.table, data_error);
    return {!failed, failed, false};
}

const char* mode_name(SweepMode m) {
    switch (m) {
        case SweepMode::CodeCapacity: return "code-capacity";
        case SweepMode::CircuitShor: return "circuit-shor";
        case SweepMode::CircuitSteane: return "circuit-steane";
    }
    return "?";
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace

MonteCarloReport estimate_logical_rate(const SweepProtocol& protocol,
                                       const std::vector<double>& p_values, uint64_t shots,
                                       uint64_t seed, int workers) {
    if (shots < 1) throw std::invalid_argument("estimate_logical_rate: shots must be >= 1");
    if (workers < 1) workers = 1;
    CompiledProtocol cp = compile_protocol(protocol);

    MonteCarloReport report;
    report.seed = seed;
    report.mode = mode_name(protocol.mode);
    report.code_label = protocol.label.empty()
                            ? "[[" + std::to_string(protocol.code.num_qubits()) + "," +
                                  std::to_string(protocol.code.num_logical()) + "]]"
                            : protocol.label;

    for (size_t pi = 0; pi < p_values.size(); ++pi) {
        double p = p_values[pi];
        std::vector<uint64_t> fail_per_worker(workers, 0), abort_per_worker(workers, 0);
        auto body = [&](int w) {
            uint64_t lo = shots * w / workers;
            uint64_t hi = shots * (w + 1) / workers;
            uint64_t fails = 0, aborts = 0;
            for (uint64_t shot = lo; shot < hi; ++shot) {
                Rng rng = Rng::shot_stream(seed, pi, shot);
                RunOutcome out = one_shot(cp, p, rng);
                if (out.abort) {
                    ++aborts;
                    ++fails;  // aborted shots count as failures
                } else if (out.logical_failure) {
                    ++fails;
                }
            }
            fail_per_worker[w] = fails;
            abort_per_worker[w] = aborts;
        };
        if (workers == 1) {
            body(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(body, w);
            for (auto& th : pool) th.join();
        }
        McPoint pt;
        pt.p = p;
        pt.shots = shots;
        for (int w = 0; w < workers; ++w) {
            pt.failures += fail_per_worker[w];
            pt.aborts += abort_per_worker[w];
        }
        pt.p_l = static_cast<double>(pt.failures) / static_cast<double>(shots);
        std::tie(pt.ci_low, pt.ci_high) = wilson_interval(pt.failures, shots);
        report.points.push_back(pt);
    }

    try {
        auto [c, expo] = fit_quadratic(report.points);
        report.fit_c = c;
        report.fit_exponent = expo;
        report.pseudothreshold = pseudothreshold(report.points);
    } catch (const std::exception&) {
        // Too few nonzero points; the report simply carries no fit.
    }
    return report;
}

std::pair<double, double> fit_quadratic(const std::vector<McPoint>& points) {
    std::vector<double> xs, ys;
    for (const auto& pt : points) {
        if (pt.failures > 0 && pt.p > 0) {
            xs.push_back(std::log(pt.p));
            ys.push_back(std::log(pt.p_l));
        }
    }
    if (xs.size() < 3) {
        throw std::runtime_error("fit_quadratic: need >= 3 points with nonzero failure "
                                 "estimates; take more shots");
    }
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    double exponent = sxy / sxx;
    // Constrained exponent-2 fit: log C = mean(log p_L - 2 log p).
    double logc = 0;
    for (size_t i = 0; i < xs.size(); ++i) logc += ys[i] - 2.0 * xs[i];
    logc /= xs.size();
    return {std::exp(logc), exponent};
}

double pseudothreshold(const std::vector<McPoint>& points) {
    std::vector<double> xs, ys;
    for (const auto& pt : points) {
        if (pt.failures > 0 && pt.p > 0) {
            xs.push_back(std::log(pt.p));
            ys.push_back(std::log(pt.p_l));
        }
    }
    auto [c, expo] = fit_quadratic(points);
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double a = my - expo * mx;  // log p_L = a + expo * log p
    if (std::abs(expo - 1.0) < 1e-9) return 1.0 / c;
    return std::exp(-a / (expo - 1.0));
}

double concatenated_rate(double p, double p_t, int level) {
    if (p <= 0 || p_t <= 0) throw std::domain_error("concatenated_rate: rates must be positive");
    if (level < 0) throw std::domain_error("concatenated_rate: level must be >= 0");
    // Iterated squaring keeps the recursion identity
    // rate(L+1) = p_t (rate(L)/p_t)^2 exact in floating point.
    double r = p;
    for (int l = 0; l < level; ++l) {
        double scaled = r / p_t;
        r = p_t * (scaled * scaled);
        if (r == 0.0) break;  // underflow: already indistinguishable from zero
    }
    return r;
}

int levels_needed(double p, double p_t, double epsilon) {
    if (p <= 0 || p_t <= 0) throw std::domain_error("levels_needed: rates must be positive");
    if (epsilon <= 0 || epsilon >= 1) throw std::domain_error("levels_needed: epsilon in (0, 1)");
    if (p >= p_t) {
        throw std::domain_error("levels_needed: p >= p_t diverges; an unencoded system does "
                                "better");
    }
    double ratio = std::log(epsilon / p_t) / std::log(p / p_t);
    int level = 0;
    if (ratio > 1.0) level = static_cast<int>(std::ceil(std::log2(ratio)));
    if (level < 0) level = 0;
    // The closed form can sit one off at floating-point boundaries; settle by
    // direct check.
    while (level > 0 && concatenated_rate(p, p_t, level - 1) <= epsilon) --level;
    while (concatenated_rate(p, p_t, level) > epsilon) {
        ++level;
        if (level > 200) throw std::logic_error("levels_needed: failed to converge");
    }
    return level;
}

CodeCapacityExact::CodeCapacityExact(const StabilizerCode& code, const DecoderTable& table)
    : n_(code.num_qubits()) {
    if (n_ > 10) {
        throw std::invalid_argument("CodeCapacityExact: enumeration limited to n <= 10");
    }
    fail_count_by_weight_.assign(n_ + 1, 0);
    uint64_t total = 1;
    for (size_t q = 0; q < n_; ++q) total *= 4;
    for (uint64_t pattern = 0; pattern < total; ++pattern) {
        PauliFrame frame(n_);
        size_t weight = 0;
        uint64_t rest = pattern;
        for (size_t q = 0; q < n_; ++q) {
            int digit = rest & 3;
            rest >>= 2;
            if (digit) {
                frame.mult_letter(q, kPauliLetters[digit - 1]);
                ++weight;
            }
        }
        if (frame_fails_logically(code, table, frame.as_pauli())) {
            ++fail_count_by_weight_[weight];
        }
    }
}

double CodeCapacityExact::failure_rate(double p) const {
    double acc = 0;
    for (size_t w = 0; w <= n_; ++w) {
        if (fail_count_by_weight_[w] == 0) continue;
        acc += static_cast<double>(fail_count_by_weight_[w]) * std::pow(p / 3.0, w) *
               std::pow(1.0 - p, n_ - w);
    }
    return acc;
}

std::string MonteCarloReport::to_report_text() const {
    std::ostringstream out;
    out << "montecarlo-report v1\n";
    out << "seed " << seed << "\n";
    out << "mode " << mode << "\n";
    out << "code " << code_label << "\n";
    out << "fit-c " << (fit_c ? fmt_double(*fit_c) : "none") << "\n";
    out << "fit-exponent " << (fit_exponent ? fmt_double(*fit_exponent) : "none") << "\n";
    out << "pseudothreshold " << (pseudothreshold ? fmt_double(*pseudothreshold) : "none") << "\n";
    for (const auto& pt : points) {
        out << "point p " << fmt_double(pt.p) << " shots " << pt.shots << " failures "
            << pt.failures << " aborts " << pt.aborts << " p-l " << fmt_double(pt.p_l)
            << " ci-low " << fmt_double(pt.ci_low) << " ci-high " << fmt_double(pt.ci_high)
            << "\n";
    }
    return out.str();
}

std::string MonteCarloReport::to_csv() const {
    std::ostringstream out;
    out << "# seed " << seed << " mode " << mode << " code " << code_label << "\n";
    out << "p,shots,failures,p_l,ci_low,ci_high\n";
    for (const auto& pt : points) {
        out << fmt_double(pt.p) << "," << pt.shots << "," << pt.failures << ","
            << fmt_double(pt.p_l) << "," << fmt_double(pt.ci_low) << ","
            << fmt_double(pt.ci_high) << "\n";
    }
    return out.str();
}

}  // namespace qecc
