#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qecc/circuit.hpp"
#include "qecc/decoder.hpp"
#include "qecc/gadgets.hpp"
#include "qecc/rng.hpp"
#include "qecc/stabilizer.hpp"
#include "qecc/tableau.hpp"

namespace qecc {

/// Reported threshold constants from the fault-tolerance literature; kept as
/// named reference values only, never as reproduction targets.
inline constexpr double kProvenThresholdLowerBound = 2e-5;
inline constexpr double kOptimisticThresholdEstimate = 5e-2;

/// Depolarizing circuit noise: single-qubit faults uniform over {X,Y,Z},
/// two-qubit faults uniform over the 15 nontrivial Pauli pairs, preparation
/// and measurement faults are flips. Classical processing is noiseless.
struct NoiseModel {
    double p_gate1 = 0;
    double p_gate2 = 0;
    double p_prep = 0;
    double p_meas = 0;
    double p_idle = 0;

    static NoiseModel uniform(double p) { return {p, p, p, p, p}; }
    void check() const;  // all probabilities in [0, 1]
};

struct RunOutcome {
    bool success = false;
    bool logical_failure = false;
    bool abort = false;
};

/// One shot of circuit-level noise: the ideal run lives on the tableau
/// engine, faults accumulate in a Pauli frame, and after the final ideal
/// decode+correct the shot fails iff the residual frame on the data block is
/// a nontrivial logical operator.
RunOutcome sample_run(const Circuit& circuit, const StabilizerCode& code,
                      const NoiseModel& noise, Rng& rng);

/// One shot of code-capacity noise: iid depolarizing of strength p on each
/// data qubit, perfect syndrome extraction, lookup decode.
RunOutcome sample_code_capacity(const StabilizerCode& code, const DecoderTable& table,
                                double p, Rng& rng);

enum class SweepMode { CodeCapacity, CircuitShor, CircuitSteane };

struct SweepProtocol {
    SweepMode mode;
    StabilizerCode code;
    int repetitions = 3;    // circuit-shor majority repetitions
    int verify_rounds = 2;  // cat verification rounds
    std::string label;      // free-form code label for reports

    SweepProtocol(SweepMode m, StabilizerCode c) : mode(m), code(std::move(c)) {}
};

struct McPoint {
    double p = 0;
    uint64_t shots = 0;
    uint64_t failures = 0;  // includes aborted shots
    uint64_t aborts = 0;
    double p_l = 0;
    double ci_low = 0;
    double ci_high = 0;
};

struct MonteCarloReport {
    std::vector<McPoint> points;
    std::optional<double> fit_c;         // constrained exponent-2 coefficient
    std::optional<double> fit_exponent;  // free log-log slope
    std::optional<double> pseudothreshold;
    uint64_t seed = 0;
    std::string mode;
    std::string code_label;

    /// Key-value single-object text form with nested point lines.
    std::string to_report_text() const;
    /// Flat CSV: p,shots,failures,p_l,ci_low,ci_high (seed in a '#' header).
    std::string to_csv() const;
};

/// Independent per-(point, shot) streams derived from the seed make the
/// report reproducible bit-for-bit for any worker count.
MonteCarloReport estimate_logical_rate(const SweepProtocol& protocol,
                                       const std::vector<double>& p_values, uint64_t shots,
                                       uint64_t seed, int workers = 1);

/// 95% Wilson score interval for failures/shots, clamped to [0, 1].
std::pair<double, double> wilson_interval(uint64_t failures, uint64_t shots);

/// Least-squares fit of log p_L against log p over the points with nonzero
/// failures: returns (C, exponent) with C from the constrained exponent-2
/// fit. Throws std::runtime_error unless >= 3 points have nonzero estimates.
std::pair<double, double> fit_quadratic(const std::vector<McPoint>& points);

/// Crossing of the freely fitted power law with p_L = p; falls back to 1/C
/// (the constrained fit) when the free slope is 1. Same precondition as
/// fit_quadratic.
double pseudothreshold(const std::vector<McPoint>& points);

/// Closed-form concatenation rate p_t (p/p_t)^(2^L).
double concatenated_rate(double p, double p_t, int level);
/// Least L with concatenated_rate(p, p_t, L) <= epsilon; requires p < p_t
/// (throws std::domain_error otherwise: encoding diverges).
int levels_needed(double p, double p_t, double epsilon);

/// Exact code-capacity failure probability by exhaustive enumeration of all
/// 4^n error patterns through the decoder (n <= 10).
class CodeCapacityExact {
public:
    CodeCapacityExact(const StabilizerCode& code, const DecoderTable& table);
    double failure_rate(double p) const;

private:
    size_t n_;
    std::vector<uint64_t> fail_count_by_weight_;
};

}  // namespace qecc
