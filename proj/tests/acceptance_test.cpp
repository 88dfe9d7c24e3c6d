// Acceptance suite: one end-to-end check per release criterion, each printed
// as a pass/fail line with its runtime. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <numbers>
#include <string>
#include <vector>

#include "qecc/bounds.hpp"
#include "qecc/builder.hpp"
#include "qecc/decoder.hpp"
#include "qecc/dense.hpp"
#include "qecc/enumerate.hpp"
#include "qecc/gadgets.hpp"
#include "qecc/montecarlo.hpp"
#include "qecc/rng.hpp"
#include "qecc/tableau.hpp"

using namespace qecc;

namespace {

struct Check {
    std::string name;
    long long max_ms;  // stated runtime budget
    std::function<bool(std::string&)> body;
};

bool expect(bool cond, std::string& why, const std::string& message) {
    if (!cond && why.empty()) why = message;
    return cond;
}

// ---- criterion 1: five-qubit code certification ---------------------------

bool criterion_five_qubit_certification(std::string& why) {
    bool ok = true;
    auto code = five_qubit_code();
    ok &= expect(code.num_qubits() == 5 && code.num_logical() == 1, why, "not [[5,1]]");
    auto d = code.distance(5);
    ok &= expect(d.distance.has_value() && *d.distance == 3, why, "distance != 3");
    std::set<std::string> syndromes;
    syndromes.insert(code.syndrome(PauliOperator(5)).str());
    for_each_pauli_of_weight(5, 1, [&](const PauliOperator& e) {
        syndromes.insert(code.syndrome(e).str());
    });
    ok &= expect(syndromes.size() == 16, why, "syndromes of I + weight-1 errors not distinct");
    ok &= expect(singleton_check(5, 2, 3) && singleton_equality(5, 2, 3), why,
                 "Singleton equality 4 = 2*3-2 fails");
    return ok;
}

// ---- criterion 2: error-correction conditions oracle ----------------------

bool criterion_kl_oracle(std::string& why) {
    bool ok = true;
    auto code = five_qubit_code();
    std::vector<PauliOperator> errors = {PauliOperator(5)};
    for_each_pauli_of_weight(5, 1, [&](const PauliOperator& e) { errors.push_back(e); });
    auto report = check_kl(code, errors);
    ok &= expect(report.satisfied, why, "weight<=1 error set not certified");
    ok &= expect(report.max_offdiag_violation < 1e-10 && report.max_identity_violation < 1e-10,
                 why, "violations above 1e-10");
    std::optional<PauliOperator> logical;
    for_each_pauli_of_weight(5, 3, [&](const PauliOperator& p) {
        if (code.in_normalizer(p) && !code.in_stabilizer_up_to_phase(p)) {
            logical = p;
            return true;
        }
        return false;
    });
    ok &= expect(logical.has_value(), why, "no weight-3 logical operator found");
    if (logical) {
        errors.push_back(*logical);
        ok &= expect(!check_kl(code, errors).satisfied, why,
                     "logical operator not flagged as uncorrectable");
    }
    return ok;
}

// ---- criterion 3: CSS / Steane pipeline ------------------------------------

bool criterion_css_pipeline(std::string& why) {
    bool ok = true;
    auto hamming = ClassicalLinearCode::hamming7();
    auto code = css_code(hamming, hamming);
    ok &= expect(code.num_qubits() == 7 && code.num_logical() == 1, why, "not [[7,1]]");
    auto d = code.distance(7);
    ok &= expect(d.distance.has_value() && *d.distance == 3, why, "distance != 3");

    auto basis = codespace_basis(code);
    auto strings = encoded_css_basis(code);
    ok &= expect(strings.zero_strings.size() == 8, why, "|0>_L coset size != 8");
    double amp = 1.0 / std::sqrt(8.0);
    std::vector<cdouble> expected(1 << 7, cdouble{0, 0});
    for (const auto& w : strings.zero_strings) {
        ok &= expect(w.popcount() % 2 == 0, why, "odd-weight string in the |0>_L coset");
        uint64_t idx = 0;
        for (size_t q = 0; q < 7; ++q) {
            if (w.get(q)) idx |= uint64_t{1} << q;
        }
        expected[idx] = amp;
    }
    for (uint64_t i = 0; i < expected.size() && ok; ++i) {
        ok &= expect(std::abs(basis[0].amp(i) - expected[i]) < 1e-10, why,
                     "|0>_L deviates from the even-codeword superposition");
    }
    return ok;
}

// ---- criterion 4: transversality -------------------------------------------

bool criterion_transversality(std::string& why) {
    bool ok = true;
    auto code = steane_code();

    auto cnot = check_transversal_clifford(code, TransversalGate::Cnot);
    ok &= expect(cnot.preserves_code, why, "transversal CNOT breaks the code");
    ok &= expect(cnot.image_of_logical_x[0].str() == "XX" &&
                     cnot.image_of_logical_x[1].str() == "IX" &&
                     cnot.image_of_logical_z[0].str() == "ZI" &&
                     cnot.image_of_logical_z[1].str() == "ZZ",
                 why, "transversal CNOT is not logical CNOT");

    auto h = check_transversal_clifford(code, TransversalGate::Hadamard);
    ok &= expect(h.preserves_code && h.image_of_logical_x[0].str() == "Z" &&
                     h.image_of_logical_z[0].str() == "X",
                 why, "transversal H is not logical Hadamard");

    auto s = check_transversal_clifford(code, TransversalGate::PhaseS);
    ok &= expect(s.preserves_code && s.image_of_logical_x[0].str() == "-Y" &&
                     s.image_of_logical_z[0].str() == "Z",
                 why, "transversal S is not the inverse logical S");

    // 14-qubit dense cross-check on all four logical basis products.
    auto basis = codespace_basis(code);
    for (int x = 0; x < 2 && ok; ++x) {
        for (int y = 0; y < 2 && ok; ++y) {
            DenseState joint = basis[x].tensor(basis[y]);
            for (size_t q = 0; q < 7; ++q) joint = joint.apply_cnot(q, 7 + q);
            DenseState want = basis[x].tensor(basis[x ^ y]);
            ok &= expect(states_equal_up_to_phase(joint, want), why,
                         "dense transversal CNOT disagrees with logical CNOT");
        }
    }
    return ok;
}

// ---- criterion 5: tableau vs dense oracle ----------------------------------

bool criterion_tableau_oracle(std::string& why) {
    Rng rng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        size_t n = 1 + rng.next_below(6);
        Tableau t(n);
        DenseState s(n);
        int measurements = 0;
        int gates = static_cast<int>(10 + rng.next_below(31));  // <= 40
        for (int step = 0; step < gates; ++step) {
            bool measure_allowed = measurements < 5;
            uint64_t pick = rng.next_below(measure_allowed ? 4 : 3);
            size_t q = rng.next_below(n);
            switch (pick) {
                case 0: t.apply_h(q); s = s.apply_h(q); break;
                case 1: t.apply_s(q); s = s.apply_phase(q, cdouble{0, 1}); break;
                case 2: {
                    if (n == 1) { t.apply_h(q); s = s.apply_h(q); break; }
                    size_t r = (q + 1 + rng.next_below(n - 1)) % n;
                    t.apply_cx(q, r);
                    s = s.apply_cnot(q, r);
                    break;
                }
                default: {
                    ++measurements;
                    auto obs = PauliOperator::single(n, q, 'Z');
                    int forced = rng.next_bit() ? -1 : 1;
                    auto tab = t.measure_pauli_forced(obs, forced);
                    auto dense = s.measure_pauli(obs, tab.outcome, nullptr);
                    if (tab.deterministic) {
                        if (std::abs(dense.probability - 1.0) > 1e-10) {
                            why = "tableau called deterministic, dense branch probability " +
                                  std::to_string(dense.probability);
                            return false;
                        }
                    } else if (std::abs(dense.probability - 0.5) > 1e-10) {
                        why = "tableau called random, dense branch probability " +
                              std::to_string(dense.probability);
                        return false;
                    }
                    s = dense.post;
                    break;
                }
            }
        }
    }
    return true;
}

// ---- criterion 6: noiseless gadget correctness -----------------------------

DenseState with_ancillas(const DenseState& data, const Circuit& c) {
    return data.tensor(DenseState(c.n_qubits - data.num_qubits()));
}

DenseState extract_data(const DenseState& state, const Circuit& c, const DenseRunRecord& rec) {
    const Register* data = c.find_register("data");
    std::vector<int> final_bit(c.n_qubits, -1);
    std::vector<char> final_basis(c.n_qubits, 'Z');
    for (const auto& step : c.steps) {
        for (const auto& op : step) {
            if (op.kind == OpKind::MeasureZ || op.kind == OpKind::MeasureX) {
                final_bit[op.qubits[0]] = rec.wire_values[op.out_wire];
                final_basis[op.qubits[0]] = op.kind == OpKind::MeasureZ ? 'Z' : 'X';
            }
        }
    }
    DenseState cur = state;
    for (size_t q = c.n_qubits; q-- > 0;) {
        if (q >= data->offset && q < data->offset + data->size) continue;
        DenseState pre = final_basis[q] == 'X' ? cur.apply_h(q) : cur;
        cur = pre.condition_on(q, final_bit[q]);
    }
    return cur;
}

bool criterion_gadget_correctness(std::string& why) {
    Rng rng(606060);
    for (const auto& code : {five_qubit_code(), steane_code()}) {
        auto circuit = shor_ec_round(code, 3, 2);
        if (circuit.n_qubits > kDenseMaxQubits) {
            why = "shor gadget exceeds the dense capacity";
            return false;
        }
        auto basis = codespace_basis(code);
        // A random logical superposition, corrupted by every weight-1 Pauli.
        cdouble a = std::polar(0.8, 1.1), b = std::polar(0.6, -2.3);
        std::vector<cdouble> amps(basis[0].dim());
        for (uint64_t i = 0; i < amps.size(); ++i) {
            amps[i] = a * basis[0].amp(i) + b * basis[1].amp(i);
        }
        DenseState input = DenseState::from_amplitudes(code.num_qubits(), std::move(amps));
        for (size_t q = 0; q < code.num_qubits(); ++q) {
            for (char l : {'X', 'Y', 'Z'}) {
                auto corrupted =
                    input.apply_pauli(PauliOperator::single(code.num_qubits(), q, l));
                DenseRunOptions opts;
                opts.rng = &rng;
                auto [state, rec] = run_circuit_dense(circuit, with_ancillas(corrupted, circuit),
                                                      opts);
                if (rec.aborted) {
                    why = "noiseless gadget aborted";
                    return false;
                }
                auto data = extract_data(state, circuit, rec);
                if (!states_equal_up_to_phase(data, input)) {
                    why = std::string("shor EC failed to restore ") + l + std::to_string(q) +
                          " on [[" + std::to_string(code.num_qubits()) + ",1]]";
                    return false;
                }
            }
        }
    }
    // pi/8 injection on 5 random single-qubit states, both forced branches.
    auto circuit = pi8_injection_circuit();
    cdouble w = std::polar(1.0, std::numbers::pi / 4);
    double s = 1.0 / std::sqrt(2.0);
    DenseState resource = DenseState::from_amplitudes(1, {cdouble{s, 0}, w * s});
    for (int trial = 0; trial < 5; ++trial) {
        double theta = rng.next_unit() * 3.14159, phi = rng.next_unit() * 6.28318;
        cdouble a{std::cos(theta / 2), 0};
        cdouble b = std::polar(std::sin(theta / 2), phi);
        DenseState input = DenseState::from_amplitudes(1, {a, b});
        DenseState expect_out = DenseState::from_amplitudes(1, {a, w * b});
        for (int branch = 0; branch <= 1; ++branch) {
            DenseRunOptions opts;
            opts.forced_outcomes = {branch};
            auto [state, rec] = run_circuit_dense(circuit, input.tensor(resource), opts);
            auto out = state.condition_on(0, rec.wire_values[circuit.labeled("inject_outcome")]);
            if (!states_equal_up_to_phase(out, expect_out)) {
                why = "pi/8 injection branch " + std::to_string(branch) +
                      " deviates from diag(1, e^{i pi/4})";
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 7: exhaustive fault injection --------------------------------

bool criterion_fault_injection(std::string& why) {
    auto code = steane_code();
    auto circuit = shor_ec_round(code, 3, 2);
    auto sites = enumerate_fault_sites(circuit);
    size_t aborts = 0;
    for (const auto& site : sites) {
        auto out = propagate_fault(circuit, code, site);
        if (out.aborted) {
            ++aborts;
            continue;
        }
        for (size_t b = 0; b < out.block_weights.size(); ++b) {
            if (out.block_weights[b] > 1) {
                why = "fault " + site.fault.str() + " at step " + std::to_string(site.step) +
                      " spreads to " + std::to_string(out.block_weights[b]) + " errors in " +
                      out.block_names[b];
                return false;
            }
        }
    }
    if (sites.empty() || aborts == 0) {
        why = "fault enumeration looks degenerate";
        return false;
    }
    return true;
}

// ---- criterion 8 + 10: quadratic scaling and determinism --------------------

constexpr uint64_t kSweepSeed = 20260811;
const std::vector<double> kSweepPs = {2e-3, 5e-3, 1e-2, 2e-2};
constexpr uint64_t kSweepShots = 100000;

bool criterion_quadratic_scaling(std::string& why, MonteCarloReport& report_out) {
    auto code = steane_code();
    SweepProtocol proto(SweepMode::CodeCapacity, code);
    auto report = estimate_logical_rate(proto, kSweepPs, kSweepShots, kSweepSeed, 1);
    report_out = report;
    if (!report.fit_exponent) {
        why = "no fit (zero failures?)";
        return false;
    }
    if (*report.fit_exponent < 1.7 || *report.fit_exponent > 2.3) {
        why = "fitted exponent " + std::to_string(*report.fit_exponent) + " outside [1.7, 2.3]";
        return false;
    }
    auto table = DecoderTable::build(code, 1);
    CodeCapacityExact exact(code, table);
    for (const auto& pt : report.points) {
        double truth = exact.failure_rate(pt.p);
        if (truth < pt.ci_low || truth > pt.ci_high) {
            why = "exact rate " + std::to_string(truth) + " outside the 95% interval at p = " +
                  std::to_string(pt.p);
            return false;
        }
    }
    return true;
}

bool criterion_determinism(std::string& why, const MonteCarloReport& reference) {
    SweepProtocol proto(SweepMode::CodeCapacity, steane_code());
    auto workers3 = estimate_logical_rate(proto, kSweepPs, kSweepShots, kSweepSeed, 3);
    auto workers7 = estimate_logical_rate(proto, kSweepPs, kSweepShots, kSweepSeed, 7);
    if (workers3.to_csv() != reference.to_csv() || workers7.to_csv() != reference.to_csv()) {
        why = "CSV output depends on the worker count";
        return false;
    }
    return true;
}

// ---- criterion 9: concatenation formulas ------------------------------------

bool criterion_concatenation(std::string& why) {
    int tuples = 0;
    for (double p_t : {0.3, 0.05, 0.01, 1e-3, 2e-5}) {
        for (double ratio : {1.8, 1.0, 0.9, 0.5, 0.2, 0.05, 0.01, 1e-3, 0.7, 0.99}) {
            double p = p_t * ratio;
            for (int level = 0; level < 20; ++level) {
                ++tuples;
                double lhs = concatenated_rate(p, p_t, level + 1);
                double r = concatenated_rate(p, p_t, level);
                double rhs = p_t * ((r / p_t) * (r / p_t));
                if (lhs != rhs) {
                    why = "recursion identity broken at p_t=" + std::to_string(p_t) +
                          " ratio=" + std::to_string(ratio) + " L=" + std::to_string(level);
                    return false;
                }
            }
        }
    }
    if (tuples < 1000) {
        why = "grid smaller than 10^3 tuples";
        return false;
    }
    for (double p_t : {0.1, 0.01}) {
        for (double ratio : {0.8, 0.3, 0.02}) {
            for (double eps : {1e-2, 1e-5, 1e-9, 1e-14}) {
                double p = p_t * ratio;
                if (eps >= p_t) continue;
                int level = levels_needed(p, p_t, eps);
                if (concatenated_rate(p, p_t, level) > eps ||
                    (level > 0 && concatenated_rate(p, p_t, level - 1) <= eps)) {
                    why = "levels_needed not minimal at p=" + std::to_string(p) +
                          " eps=" + std::to_string(eps);
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    MonteCarloReport sweep_report;
    std::vector<Check> checks = {
        {"1: five-qubit code certification ([[5,1,3]], 16 distinct syndromes)", 1000,
         criterion_five_qubit_certification},
        {"2: error-correction conditions oracle on the five-qubit code", 5000,
         criterion_kl_oracle},
        {"3: CSS/Steane pipeline ([[7,1,3]], even-codeword |0>_L)", 5000,
         criterion_css_pipeline},
        {"4: transversal CNOT/H/S logical actions + 14-qubit dense check", 60000,
         criterion_transversality},
        {"5: tableau vs dense oracle on 200 random Clifford circuits", 60000,
         criterion_tableau_oracle},
        {"6: noiseless Shor EC restores corrupted codewords; pi/8 injection", 60000,
         criterion_gadget_correctness},
        {"7: exhaustive single-fault injection on the Steane Shor-EC gadget", 600000,
         criterion_fault_injection},
        {"8: quadratic scaling of the Steane code-capacity sweep", 600000,
         [&](std::string& why) { return criterion_quadratic_scaling(why, sweep_report); }},
        {"9: concatenation recursion identity and minimal levels", 1000,
         criterion_concatenation},
        {"10: sweep determinism across worker counts", 600000,
         [&](std::string& why) { return criterion_determinism(why, sweep_report); }},
    };

    int failures = 0;
    for (auto& check : checks) {
        auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = check.body(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (ok && ms > check.max_ms) {
            ok = false;
            why = "runtime " + std::to_string(ms) + " ms exceeds the " +
                  std::to_string(check.max_ms) + " ms budget";
        }
        std::printf("[%s] criterion %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL",
                    check.name.c_str(), static_cast<long long>(ms), why.empty() ? "" : " -- ",
                    why.c_str());
        if (!ok) ++failures;
    }
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
