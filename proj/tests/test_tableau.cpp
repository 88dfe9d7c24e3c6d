#include "qecc/tableau.hpp"

#include <gtest/gtest.h>

#include "qecc/builder.hpp"
#include "qecc/dense.hpp"
#include "qecc/rng.hpp"

using namespace qecc;

TEST(Tableau, FreshStateStabilizer) {
    Tableau t1(1);
    ASSERT_EQ(t1.stabilizer_generators().size(), 1u);
    EXPECT_EQ(t1.stabilizer_generators()[0].str(), "Z");
    Tableau t3(3);
    auto rows = t3.stabilizer_generators();
    EXPECT_EQ(rows[0].str(), "ZII");
    EXPECT_EQ(rows[1].str(), "IZI");
    EXPECT_EQ(rows[2].str(), "IIZ");
    Rng rng(1);
    for (size_t q = 0; q < 3; ++q) {
        auto r = t3.measure_z(q, rng);
        EXPECT_TRUE(r.deterministic);
        EXPECT_EQ(r.outcome, 1);
    }
}

TEST(Tableau, HadamardMapsZtoX) {
    Tableau t(1);
    t.apply_h(0);
    EXPECT_EQ(t.stabilizer_generators()[0].str(), "X");
}

TEST(Tableau, SMapsXtoY) {
    Tableau t(1);
    t.apply_h(0);  // stabilizer {X}
    t.apply_s(0);
    EXPECT_EQ(t.stabilizer_generators()[0].str(), "Y");
    t.apply_sdag(0);
    EXPECT_EQ(t.stabilizer_generators()[0].str(), "X");
}

TEST(Tableau, CnotLadderMakesCatState) {
    Tableau t(3);
    t.apply_h(0);
    t.apply_cx(0, 1);
    t.apply_cx(1, 2);
    EXPECT_EQ(t.deterministic_eigenvalue(PauliOperator::parse("XXX")), 1);
    EXPECT_EQ(t.deterministic_eigenvalue(PauliOperator::parse("ZZI")), 1);
    EXPECT_EQ(t.deterministic_eigenvalue(PauliOperator::parse("IZZ")), 1);
    EXPECT_FALSE(t.deterministic_eigenvalue(PauliOperator::parse("ZII")).has_value());
}

TEST(Tableau, MeasurementRepeatability) {
    Tableau t(1);
    Rng rng(7);
    auto first = t.measure_pauli(PauliOperator::parse("X"), rng);
    EXPECT_FALSE(first.deterministic);
    auto second = t.measure_pauli(PauliOperator::parse("X"), rng);
    EXPECT_TRUE(second.deterministic);
    EXPECT_EQ(second.outcome, first.outcome);
}

TEST(Tableau, MeasurementRejectsNonHermitian) {
    Tableau t(1);
    Rng rng(1);
    EXPECT_THROW(t.measure_pauli(PauliOperator::parse("+iZ"), rng), std::invalid_argument);
}

TEST(Tableau, PauliApplicationFlipsSigns) {
    Tableau t(1);
    t.apply_x(0);
    Rng rng(1);
    auto r = t.measure_z(0, rng);
    EXPECT_TRUE(r.deterministic);
    EXPECT_EQ(r.outcome, -1);
}

TEST(Tableau, StateEquality) {
    Tableau a(2), b(2);
    EXPECT_TRUE(a.state_equal(b));
    a.apply_h(0);
    EXPECT_FALSE(a.state_equal(b));
    a.apply_h(0);
    EXPECT_TRUE(a.state_equal(b));
    // Same group, different generator presentation.
    Tableau c(2), d(2);
    c.apply_h(0);
    c.apply_cx(0, 1);  // <XX, ZZ>
    d.apply_h(1);
    d.apply_cx(1, 0);
    EXPECT_TRUE(c.state_equal(d));
}

TEST(Tableau, GateInverseGroupLaw) {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        Tableau t(4);
        for (int g = 0; g < 30; ++g) {
            size_t q = rng.next_below(4);
            size_t r = (q + 1 + rng.next_below(3)) % 4;
            switch (rng.next_below(5)) {
                case 0: t.apply_h(q); break;
                case 1: t.apply_s(q); break;
                case 2: t.apply_cx(q, r); break;
                case 3: t.apply_cz(q, r); break;
                default: t.apply_cy(q, r); break;
            }
        }
        Tableau before = t;
        size_t q = rng.next_below(4);
        size_t r = (q + 1 + rng.next_below(3)) % 4;
        switch (trial % 5) {
            case 0: t.apply_h(q); t.apply_h(q); break;
            case 1: t.apply_s(q); t.apply_sdag(q); break;
            case 2: t.apply_cx(q, r); t.apply_cx(q, r); break;
            case 3: t.apply_cz(q, r); t.apply_cz(q, r); break;
            default: t.apply_cy(q, r); t.apply_cy(q, r); break;
        }
        EXPECT_TRUE(t.state_equal(before));
        t.assert_invariants();
    }
}

TEST(Tableau, PreparedCodewordIsStabilized) {
    for (const auto& code : {five_qubit_code(), steane_code()}) {
        Tableau t = prepare_codeword_state(code);
        for (const auto& g : code.generators()) {
            EXPECT_EQ(t.deterministic_eigenvalue(g), 1);
        }
        EXPECT_EQ(t.deterministic_eigenvalue(code.logical_z()[0]), 1);
        // Measuring a generator again is deterministic +1.
        Rng rng(2);
        auto r = t.measure_pauli(code.generators()[1], rng);
        EXPECT_TRUE(r.deterministic);
        EXPECT_EQ(r.outcome, 1);
    }
}

TEST(Tableau, MatchesDenseOracleOnRandomCircuits) {
    // Random Clifford circuits with interleaved measurements; the tableau's
    // deterministic/random calls must match dense branch probabilities, with
    // shared forced outcomes keeping both engines on one trajectory.
    Rng rng(2026);
    for (int trial = 0; trial < 60; ++trial) {
        size_t n = 1 + rng.next_below(4);
        Tableau t(n);
        DenseState s(n);
        int measurements = 0;
        for (int step = 0; step < 25; ++step) {
            uint64_t pick = rng.next_below(measurements < 5 ? 7 : 6);
            size_t q = rng.next_below(n);
            size_t r = n > 1 ? (q + 1 + rng.next_below(n - 1)) % n : 0;
            switch (pick) {
                case 0: t.apply_h(q); s = s.apply_h(q); break;
                case 1: t.apply_s(q); s = s.apply_phase(q, cdouble{0, 1}); break;
                case 2: t.apply_sdag(q); s = s.apply_phase(q, cdouble{0, -1}); break;
                case 3:
                    if (n > 1) { t.apply_cx(q, r); s = s.apply_cnot(q, r); }
                    break;
                case 4:
                    if (n > 1) { t.apply_cz(q, r); s = s.apply_cz(q, r); }
                    break;
                case 5:
                    if (n > 1) { t.apply_cy(q, r); s = s.apply_cy(q, r); }
                    break;
                default: {
                    ++measurements;
                    auto obs = PauliOperator::single(n, q, 'Z');
                    int forced = rng.next_bit() ? -1 : 1;
                    auto tab = t.measure_pauli_forced(obs, forced);
                    auto dense = s.measure_pauli(obs, tab.outcome, nullptr);
                    if (tab.deterministic) {
                        ASSERT_NEAR(dense.probability, 1.0, 1e-10);
                    } else {
                        ASSERT_NEAR(dense.probability, 0.5, 1e-10);
                    }
                    s = dense.post;
                    break;
                }
            }
        }
        t.assert_invariants();
    }
}

TEST(Tableau, DeterministicEigenvalueTracksSigns) {
    Tableau t(2);
    t.apply_h(0);
    t.apply_cx(0, 1);
    t.apply_z(0);  // |00> + |11> -> |00> - |11>
    EXPECT_EQ(t.deterministic_eigenvalue(PauliOperator::parse("XX")), -1);
    EXPECT_EQ(t.deterministic_eigenvalue(PauliOperator::parse("ZZ")), 1);
    EXPECT_EQ(t.deterministic_eigenvalue(PauliOperator::parse("YY")), 1);
}
