// qecc command-line frontend: code I/O and validation, distance search,
// CSS construction, bound reports, transversality checks, gadget emission,
// and Monte Carlo sweeps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qecc/bounds.hpp"
#include "qecc/builder.hpp"
#include "qecc/classical.hpp"
#include "qecc/decoder.hpp"
#include "qecc/gadgets.hpp"
#include "qecc/montecarlo.hpp"
#include "qecc/stabilizer.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;   // validation / domain failure
constexpr int kExitCapped = 2;    // resource cap reached

qecc::StabilizerCode load_code(const std::string& path, std::optional<int> distance) {
    auto code = qecc::StabilizerCode::validate(qecc::read_stab_file(path));
    if (distance) code = code.with_known_distance(*distance);
    return code;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << content;
}

std::string describe_action(const qecc::LogicalAction& action) {
    std::string s;
    if (!action.preserves_code) {
        return "verdict: breaks-code\nreason: " + action.failure_reason + "\n";
    }
    s += "verdict: preserves-code\n";
    for (size_t i = 0; i < action.image_of_logical_x.size(); ++i) {
        s += "X" + std::to_string(i) + " -> " + action.image_of_logical_x[i].str() + "\n";
    }
    for (size_t i = 0; i < action.image_of_logical_z.size(); ++i) {
        s += "Z" + std::to_string(i) + " -> " + action.image_of_logical_z[i].str() + "\n";
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabilizer quantum error-correction toolkit"};
    app.require_subcommand(1);

    // ---- code validate / distance ----
    auto* code_cmd = app.add_subcommand("code", "stabilizer code operations");
    code_cmd->require_subcommand(1);

    std::string validate_path;
    auto* validate_cmd = code_cmd->add_subcommand("validate", "validate a .stab file");
    validate_cmd->add_option("path", validate_path, ".stab file")->required();

    std::string distance_path;
    int distance_cap = 7;
    auto* distance_cmd = code_cmd->add_subcommand("distance", "exhaustive distance search");
    distance_cmd->add_option("path", distance_path, ".stab file")->required();
    distance_cmd->add_option("--cap", distance_cap, "maximum weight to search")->default_val(7);

    // ---- css build ----
    auto* css_cmd = app.add_subcommand("css", "CSS constructions");
    css_cmd->require_subcommand(1);
    std::string css_h1, css_h2, css_out;
    auto* css_build = css_cmd->add_subcommand("build", "build a CSS code from two .pcm files");
    css_build->add_option("h1", css_h1, "Z-side parity check (.pcm)")->required();
    css_build->add_option("h2", css_h2, "X-side parity check (.pcm)")->required();
    css_build->add_option("--out", css_out, "output .stab path");

    // ---- bounds ----
    auto* bounds_cmd = app.add_subcommand("bounds", "Singleton / Hamming / GV bound report");
    size_t bounds_n = 0, bounds_k = 0;
    int bounds_d = 0;
    bounds_cmd->add_option("n", bounds_n, "physical qubits")->required();
    bounds_cmd->add_option("k", bounds_k, "logical qubits")->required();
    bounds_cmd->add_option("d", bounds_d, "distance")->required();

    // ---- ft check ----
    auto* ft_cmd = app.add_subcommand("ft", "fault-tolerance checks");
    ft_cmd->require_subcommand(1);
    std::string ft_path, ft_gate = "cnot", ft_pauli;
    auto* ft_check = ft_cmd->add_subcommand("check", "transversal gate logical action");
    ft_check->add_option("path", ft_path, ".stab file")->required();
    ft_check->add_option("--gate", ft_gate, "one of: h, s, cnot, pauli")->required();
    ft_check->add_option("--pauli", ft_pauli, "operator text for --gate pauli");

    // ---- gadget emit ----
    auto* gadget_cmd = app.add_subcommand("gadget", "fault-tolerant gadget circuits");
    gadget_cmd->require_subcommand(1);
    std::string gadget_path, gadget_kind, gadget_pauli, gadget_out;
    int gadget_verify_rounds = 2, gadget_reps = 3;
    std::optional<int> gadget_distance;
    auto* gadget_emit = gadget_cmd->add_subcommand("emit", "emit a gadget circuit as text");
    gadget_emit->add_option("path", gadget_path, ".stab file")->required();
    gadget_emit
        ->add_option("--gadget", gadget_kind,
                     "cat | shor | steane-ec | steane-ec-x | steane-ec-z | pi8-inject | "
                     "pi8-check | transversal-cnot")
        ->required();
    gadget_emit->add_option("--pauli", gadget_pauli, "operator to measure (cat gadget)");
    gadget_emit->add_option("--verify-rounds", gadget_verify_rounds, "cat verification rounds")
        ->default_val(2);
    gadget_emit->add_option("--repetitions", gadget_reps, "syndrome repetitions (odd)")
        ->default_val(3);
    gadget_emit->add_option("--distance", gadget_distance, "known distance annotation");
    gadget_emit->add_option("--out", gadget_out, "output path (default stdout)");

    // ---- sim sweep ----
    auto* sim_cmd = app.add_subcommand("sim", "Monte Carlo simulation");
    sim_cmd->require_subcommand(1);
    std::string sim_path, sim_mode = "code-capacity", sim_format = "human", sim_out;
    std::vector<double> sim_ps;
    uint64_t sim_shots = 10000, sim_seed = 0;
    int sim_workers = 1, sim_reps = 3, sim_verify = 2;
    std::optional<int> sim_distance;
    auto* sim_sweep = sim_cmd->add_subcommand("sweep", "logical error rate sweep");
    sim_sweep->add_option("path", sim_path, ".stab file")->required();
    sim_sweep->add_option("--p", sim_ps, "physical error rates")->required()->expected(-1);
    sim_sweep->add_option("--shots", sim_shots, "shots per point")->required();
    sim_sweep->add_option("--seed", sim_seed, "rng seed (required: runs are reproducible)")
        ->required();
    sim_sweep->add_option("--mode", sim_mode, "code-capacity | circuit-shor | circuit-steane")
        ->default_val("code-capacity");
    sim_sweep->add_option("--workers", sim_workers, "worker threads (never changes results)")
        ->default_val(1);
    sim_sweep->add_option("--repetitions", sim_reps, "circuit-shor repetitions")->default_val(3);
    sim_sweep->add_option("--verify-rounds", sim_verify, "cat verification rounds")->default_val(2);
    sim_sweep->add_option("--distance", sim_distance, "known distance annotation");
    sim_sweep->add_option("--format", sim_format, "human | csv | report")->default_val("human");
    sim_sweep->add_option("--out", sim_out, "output path (default stdout)");

    // ---- concat predict ----
    auto* concat_cmd = app.add_subcommand("concat", "concatenation formulas");
    concat_cmd->require_subcommand(1);
    double concat_p = 0, concat_pt = 0;
    std::optional<int> concat_levels;
    std::optional<double> concat_eps;
    auto* concat_predict = concat_cmd->add_subcommand("predict", "concatenated logical rates");
    concat_predict->add_option("--p", concat_p, "physical rate")->required();
    concat_predict->add_option("--pt", concat_pt, "threshold rate")->required();
    concat_predict->add_option("--levels", concat_levels, "levels to tabulate");
    concat_predict->add_option("--epsilon", concat_eps, "target logical rate");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate_cmd) {
            auto code = load_code(validate_path, std::nullopt);
            std::cout << "valid [[" << code.num_qubits() << "," << code.num_logical()
                      << "]] stabilizer code (" << code.num_generators() << " generators, "
                      << (code.is_css() ? "CSS" : "non-CSS") << ")\n";
            return kExitOk;
        }
        if (*distance_cmd) {
            auto code = load_code(distance_path, std::nullopt);
            auto result = code.distance(distance_cap);
            if (result.exceeded_cap()) {
                std::cout << "exceeds cap " << distance_cap << "\n";
                return kExitCapped;
            }
            std::cout << *result.distance << "\n";
            return kExitOk;
        }
        if (*css_build) {
            auto c1 = qecc::read_pcm_file(css_h1);
            auto c2 = qecc::read_pcm_file(css_h2);
            auto code = qecc::css_code(c1, c2);
            std::string header = "[[" + std::to_string(code.num_qubits()) + "," +
                                 std::to_string(code.num_logical()) + "]] CSS code";
            auto d1 = c1.distance(), d2 = c2.distance();
            if (d1 && d2) {
                header += "; distance >= " + std::to_string(std::min(*d1, *d2));
            }
            if (!css_out.empty()) {
                qecc::write_stab_file(css_out, code.generators(), header);
                std::cout << "wrote " << css_out << ": " << header << "\n";
            } else {
                std::cout << "# " << header << "\n";
                for (const auto& g : code.generators()) std::cout << g.str() << "\n";
            }
            return kExitOk;
        }
        if (*bounds_cmd) {
            auto report = qecc::bound_report(bounds_n, bounds_k, bounds_d);
            std::cout << "singleton: "
                      << (bounds_k == 0        ? "not applicable (K = 1)"
                          : report.singleton_ok ? (report.singleton_tight
                                                       ? "satisfied with equality"
                                                       : "satisfied")
                                                : "violated")
                      << "\n";
            std::printf("rate k/n:          %.6f\n",
                        static_cast<double>(bounds_k) / static_cast<double>(bounds_n));
            std::printf("hamming rate cap:  %.6f\n", report.hamming_rate_bound);
            std::printf("gv rate bound:     %.6f\n", report.gv_rate_bound);
            if (!report.notes.empty()) std::cout << "note: " << report.notes << "\n";
            return report.singleton_ok || bounds_k == 0 ? kExitOk : kExitFailure;
        }
        if (*ft_check) {
            auto code = load_code(ft_path, std::nullopt);
            qecc::LogicalAction action;
            if (ft_gate == "h") {
                action = qecc::check_transversal_clifford(code, qecc::TransversalGate::Hadamard);
            } else if (ft_gate == "s") {
                action = qecc::check_transversal_clifford(code, qecc::TransversalGate::PhaseS);
            } else if (ft_gate == "cnot") {
                action = qecc::check_transversal_clifford(code, qecc::TransversalGate::Cnot);
            } else if (ft_gate == "pauli") {
                if (ft_pauli.empty()) throw std::invalid_argument("--gate pauli needs --pauli");
                auto p = qecc::PauliOperator::parse(ft_pauli);
                action = qecc::check_transversal_clifford(code, qecc::TransversalGate::Pauli, &p);
            } else {
                throw std::invalid_argument("unknown gate '" + ft_gate + "'");
            }
            std::cout << describe_action(action);
            return action.preserves_code ? kExitOk : kExitFailure;
        }
        if (*gadget_emit) {
            auto code = load_code(gadget_path, gadget_distance);
            qecc::Circuit circuit;
            if (gadget_kind == "cat") {
                qecc::PauliOperator m = gadget_pauli.empty()
                                            ? code.generators().at(0)
                                            : qecc::PauliOperator::parse(gadget_pauli);
                circuit = qecc::cat_measurement_circuit(code, m, gadget_verify_rounds);
            } else if (gadget_kind == "shor") {
                circuit = qecc::shor_ec_round(code, gadget_reps, gadget_verify_rounds);
            } else if (gadget_kind == "steane-ec") {
                circuit = qecc::steane_ec_circuit(code);
            } else if (gadget_kind == "steane-ec-x") {
                circuit = qecc::steane_ec_half_circuit(code, false);
            } else if (gadget_kind == "steane-ec-z") {
                circuit = qecc::steane_ec_half_circuit(code, true);
            } else if (gadget_kind == "pi8-inject") {
                circuit = qecc::pi8_injection_circuit();
            } else if (gadget_kind == "pi8-check") {
                circuit = qecc::pi8_ancilla_check_circuit();
            } else if (gadget_kind == "transversal-cnot") {
                circuit = qecc::transversal_cnot(code);
            } else {
                throw std::invalid_argument("unknown gadget '" + gadget_kind + "'");
            }
            write_output(gadget_out, circuit.serialize());
            return kExitOk;
        }
        if (*sim_sweep) {
            auto code = load_code(sim_path, sim_distance);
            qecc::SweepMode mode;
            if (sim_mode == "code-capacity") mode = qecc::SweepMode::CodeCapacity;
            else if (sim_mode == "circuit-shor") mode = qecc::SweepMode::CircuitShor;
            else if (sim_mode == "circuit-steane") mode = qecc::SweepMode::CircuitSteane;
            else throw std::invalid_argument("unknown mode '" + sim_mode + "'");
            qecc::SweepProtocol proto(mode, code);
            proto.repetitions = sim_reps;
            proto.verify_rounds = sim_verify;
            auto report = qecc::estimate_logical_rate(proto, sim_ps, sim_shots, sim_seed,
                                                      sim_workers);
            if (sim_format == "csv") {
                write_output(sim_out, report.to_csv());
            } else if (sim_format == "report") {
                write_output(sim_out, report.to_report_text());
            } else {
                std::string s = "seed " + std::to_string(report.seed) + ", mode " + report.mode +
                                ", code " + report.code_label + "\n";
                for (const auto& pt : report.points) {
                    char buf[160];
                    std::snprintf(buf, sizeof(buf),
                                  "p %-10.4g failures %8llu / %llu  p_L %.4g  [%.4g, %.4g]\n",
                                  pt.p, static_cast<unsigned long long>(pt.failures),
                                  static_cast<unsigned long long>(pt.shots), pt.p_l, pt.ci_low,
                                  pt.ci_high);
                    s += buf;
                }
                if (report.fit_exponent) {
                    char buf[160];
                    std::snprintf(buf, sizeof(buf), "fit exponent %.4g, C %.4g\n",
                                  *report.fit_exponent, *report.fit_c);
                    s += buf;
                    if (report.pseudothreshold) {
                        std::snprintf(buf, sizeof(buf), "pseudothreshold %.4g\n",
                                      *report.pseudothreshold);
                        s += buf;
                    }
                }
                write_output(sim_out, s);
            }
            return kExitOk;
        }
        if (*concat_predict) {
            if (!concat_levels && !concat_eps) {
                throw std::invalid_argument("concat predict needs --levels or --epsilon");
            }
            if (concat_eps) {
                int l = qecc::levels_needed(concat_p, concat_pt, *concat_eps);
                std::cout << "levels needed: " << l << "\n";
                std::printf("rate at that level: %.6g\n",
                            qecc::concatenated_rate(concat_p, concat_pt, l));
            }
            if (concat_levels) {
                std::printf("%-8s %s\n", "level", "logical rate");
                for (int l = 0; l <= *concat_levels; ++l) {
                    std::printf("%-8d %.6g\n", l, qecc::concatenated_rate(concat_p, concat_pt, l));
                }
            }
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}
