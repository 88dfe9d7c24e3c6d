#include "qecc/pauli.hpp"

#include <complex>
#include <gtest/gtest.h>
#include <stdexcept>
#include <vector>

#include "qecc/rng.hpp"

using namespace qecc;

namespace {

using cd = std::complex<double>;
using Matrix = std::vector<std::vector<cd>>;

// Independent oracle: the 2^n x 2^n complex matrix of a Pauli operator,
// assembled by Kronecker products of the four letter matrices.
Matrix letter_matrix(char l) {
    const cd i{0, 1};
    switch (l) {
        case 'I': return {{1, 0}, {0, 1}};
        case 'X': return {{0, 1}, {1, 0}};
        case 'Y': return {{0, -i}, {i, 0}};
        default: return {{1, 0}, {0, -1}};
    }
}

Matrix kron(const Matrix& a, const Matrix& b) {
    size_t na = a.size(), nb = b.size();
    Matrix out(na * nb, std::vector<cd>(na * nb));
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < na; ++j)
            for (size_t k = 0; k < nb; ++k)
                for (size_t l = 0; l < nb; ++l) out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
    return out;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    size_t n = a.size();
    Matrix out(n, std::vector<cd>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

// Qubit 0 is the leftmost letter; amplitude index bit q is qubit q. The
// matrix acting on index bits therefore places qubit 0 as the *low* bit,
// i.e. the letter of qubit 0 is the rightmost Kronecker factor.
Matrix to_matrix(const PauliOperator& p) {
    Matrix m{{1}};
    for (size_t q = 0; q < p.num_qubits(); ++q) m = kron(letter_matrix(p.letter(q)), m);
    const cd i{0, 1};
    cd phase = 1;
    for (unsigned e = 0; e < p.phase_exponent(); ++e) phase *= i;
    for (auto& row : m)
        for (auto& v : row) v *= phase;
    return m;
}

bool matrices_equal(const Matrix& a, const Matrix& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (std::abs(a[i][j] - b[i][j]) > 1e-12) return false;
    return true;
}

std::vector<PauliOperator> all_paulis(size_t n) {
    std::vector<PauliOperator> out;
    size_t letter_count = 1;
    for (size_t q = 0; q < n; ++q) letter_count *= 4;
    static const char kLetters[] = "IXYZ";
    for (size_t code = 0; code < letter_count; ++code) {
        std::string text;
        size_t rest = code;
        for (size_t q = 0; q < n; ++q) {
            text += kLetters[rest & 3];
            rest >>= 2;
        }
        for (unsigned phase = 0; phase < 4; ++phase) {
            static const char* kPrefix[] = {"", "+i", "-", "-i"};
            out.push_back(PauliOperator::parse(std::string(kPrefix[phase]) + text));
        }
    }
    return out;
}

PauliOperator random_pauli(size_t n, Rng& rng) {
    BitVector x(n), z(n);
    for (size_t q = 0; q < n; ++q) {
        uint64_t v = rng.next_below(4);
        if (v & 1) x.set(q, true);
        if (v & 2) z.set(q, true);
    }
    return PauliOperator(n, std::move(x), std::move(z), static_cast<unsigned>(rng.next_below(4)));
}

}  // namespace

TEST(Pauli, ParseExamples) {
    auto p = PauliOperator::parse("XZZXI");
    EXPECT_EQ(p.num_qubits(), 5u);
    EXPECT_EQ(p.x_bits().str(), "10010");
    EXPECT_EQ(p.z_bits().str(), "01100");
    EXPECT_EQ(p.phase_exponent(), 0u);

    auto minus_y = PauliOperator::parse("-Y");
    EXPECT_EQ(minus_y.phase_exponent(), 2u);
    EXPECT_EQ(minus_y.letter(0), 'Y');

    EXPECT_THROW(PauliOperator::parse("XA"), std::invalid_argument);
    try {
        PauliOperator::parse("XA");
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("index 1"), std::string::npos);
    }
    EXPECT_THROW(PauliOperator::parse(""), std::invalid_argument);
    EXPECT_THROW(PauliOperator::parse("-"), std::invalid_argument);
}

TEST(Pauli, FormatRoundTrip) {
    for (const char* text : {"XZZXI", "-Y", "+iXZ", "-iZZZ", "IIIII", "X"}) {
        auto p = PauliOperator::parse(text);
        EXPECT_EQ(PauliOperator::parse(p.str()), p) << text;
    }
    EXPECT_EQ(PauliOperator::parse("+X").str(), "X");
    EXPECT_EQ(PauliOperator::parse("-Y").str(), "-Y");
    EXPECT_EQ(PauliOperator::parse("+iZ").str(), "+iZ");
}

TEST(Pauli, WeightExamples) {
    EXPECT_EQ(PauliOperator::parse("IIIII").weight(), 0u);
    EXPECT_EQ(PauliOperator::parse("XZZXI").weight(), 4u);
    EXPECT_EQ(PauliOperator::parse("Y").weight(), 1u);
}

TEST(Pauli, CommutesExamples) {
    auto x = PauliOperator::parse("X");
    auto z = PauliOperator::parse("Z");
    EXPECT_FALSE(x.commutes_with(z));
    EXPECT_TRUE(x.commutes_with(x));
    std::vector<PauliOperator> gens = {
        PauliOperator::parse("XZZXI"), PauliOperator::parse("IXZZX"),
        PauliOperator::parse("XIXZZ"), PauliOperator::parse("ZXIXZ")};
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            EXPECT_TRUE(gens[i].commutes_with(gens[j])) << i << "," << j;
    EXPECT_THROW(x.commutes_with(PauliOperator::parse("XX")), std::invalid_argument);
}

TEST(Pauli, MultiplyExamples) {
    auto xz = PauliOperator::parse("X") * PauliOperator::parse("Z");
    EXPECT_EQ(xz.letter(0), 'Y');
    EXPECT_EQ(xz.phase_exponent(), 3u);  // XZ = -iY

    auto p = PauliOperator::parse("-iXYZ");
    EXPECT_EQ(p * PauliOperator(3), p);
    EXPECT_EQ((PauliOperator::parse("X") * PauliOperator::parse("X")), PauliOperator(1));
    EXPECT_THROW(PauliOperator::parse("X") * PauliOperator::parse("XX"), std::invalid_argument);
}

TEST(Pauli, MultiplyMatchesDenseMatrixOracleExhaustively) {
    for (size_t n : {1u, 2u}) {
        auto ops = all_paulis(n);
        for (const auto& a : ops) {
            Matrix ma = to_matrix(a);
            for (const auto& b : ops) {
                Matrix expected = matmul(ma, to_matrix(b));
                EXPECT_TRUE(matrices_equal(to_matrix(a * b), expected))
                    << a.str() << " * " << b.str() << " != " << (a * b).str();
            }
        }
    }
}

TEST(Pauli, SubadditivityExhaustiveSmallAndSampledLarge) {
    auto letters3 = all_paulis(3);
    for (const auto& a : letters3) {
        if (a.phase_exponent() != 0) continue;
        for (const auto& b : letters3) {
            if (b.phase_exponent() != 0) continue;
            EXPECT_LE((a * b).weight(), a.weight() + b.weight());
        }
    }
    Rng rng(123);
    for (int trial = 0; trial < 500; ++trial) {
        size_t n = 1 + rng.next_below(120);
        auto a = random_pauli(n, rng);
        auto b = random_pauli(n, rng);
        ASSERT_LE((a * b).weight(), a.weight() + b.weight());
    }
}

TEST(Pauli, CommutationSymmetricAndPhaseAntisymmetry) {
    Rng rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        size_t n = 1 + rng.next_below(70);
        auto a = random_pauli(n, rng);
        auto b = random_pauli(n, rng);
        EXPECT_EQ(a.commutes_with(b), b.commutes_with(a));
        unsigned diff = ((a * b).phase_exponent() + 4 - (b * a).phase_exponent()) & 3;
        EXPECT_EQ(diff, a.commutes_with(b) ? 0u : 2u);
    }
}

TEST(Pauli, MultiplyAssociativeAcrossWordBoundaries) {
    Rng rng(99);
    for (size_t n : {1u, 63u, 64u, 65u, 128u, 200u}) {
        for (int trial = 0; trial < 40; ++trial) {
            auto a = random_pauli(n, rng);
            auto b = random_pauli(n, rng);
            auto c = random_pauli(n, rng);
            EXPECT_EQ((a * b) * c, a * (b * c));
        }
    }
}

TEST(Pauli, HermiticityAndPhases) {
    EXPECT_TRUE(PauliOperator::parse("Y").is_hermitian());
    EXPECT_TRUE(PauliOperator::parse("-XZ").is_hermitian());
    EXPECT_FALSE(PauliOperator::parse("+iX").is_hermitian());
    // Products of Hermitian operators on disjoint supports stay Hermitian.
    auto a = PauliOperator::parse("XIZ");
    auto b = PauliOperator::parse("IYI");
    EXPECT_TRUE((a * b).is_hermitian());
}

TEST(Pauli, SliceAndEmbed) {
    auto p = PauliOperator::parse("-XYZII");
    EXPECT_EQ(p.slice(0, 3), PauliOperator::parse("-XYZ"));
    EXPECT_EQ(PauliOperator::parse("XY").embed(5, 2).str(), "IIXYI");
    EXPECT_THROW(p.slice(4, 3), std::invalid_argument);
    EXPECT_THROW(p.embed(5, 2), std::invalid_argument);
}

TEST(Pauli, SingleLetterConstructor) {
    EXPECT_EQ(PauliOperator::single(4, 2, 'Y').str(), "IIYI");
    EXPECT_THROW(PauliOperator::single(4, 4, 'X'), std::invalid_argument);
    EXPECT_THROW(PauliOperator::single(4, 0, 'Q'), std::invalid_argument);
}
