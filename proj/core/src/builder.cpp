#include "qecc/builder.hpp"

#include <stdexcept>

namespace qecc {

StabilizerCode css_code(const ClassicalLinearCode& c1, const ClassicalLinearCode& c2) {
    if (c1.n() != c2.n()) {
        throw std::invalid_argument("css_code: parity check matrices have different lengths");
    }
    size_t n = c1.n();
    const auto& h1 = c1.independent_rows();
    const auto& h2 = c2.independent_rows();
    for (size_t i = 0; i < h1.size(); ++i) {
        for (size_t j = 0; j < h2.size(); ++j) {
            if (parity_and(h1[i], h2[j])) {
                throw std::invalid_argument(
                    "css_code: H1 row " + std::to_string(i) + " (" + h1[i].str() +
                    ") and H2 row " + std::to_string(j) + " (" + h2[j].str() +
                    ") have odd overlap; the dual-containment condition fails");
            }
        }
    }
    std::vector<PauliOperator> gens;
    for (const auto& r : h1) gens.emplace_back(n, BitVector(n), r, 0);  // 1 -> Z
    for (const auto& r : h2) gens.emplace_back(n, r, BitVector(n), 0);  // 1 -> X
    return StabilizerCode::validate(std::move(gens), n);
}

StabilizerCode five_qubit_code() {
    std::vector<PauliOperator> gens = {
        PauliOperator::parse("XZZXI"),
        PauliOperator::parse("IXZZX"),
        PauliOperator::parse("XIXZZ"),
        PauliOperator::parse("ZXIXZ"),
    };
    return StabilizerCode::validate(std::move(gens)).with_known_distance(3);
}

StabilizerCode steane_code() {
    auto hamming = ClassicalLinearCode::hamming7();
    return css_code(hamming, hamming).with_known_distance(3);
}

StabilizerCode shor_code() {
    auto rep3 = ClassicalLinearCode::repetition(3);
    ClassicalLinearCode trivial({}, 3);
    StabilizerCode bit_flip = css_code(rep3, trivial);    // ZZI, IZZ
    StabilizerCode phase_flip = css_code(trivial, rep3);  // XXI, IXX
    return concatenate(phase_flip, bit_flip).with_known_distance(3);
}

CssBasisDescription encoded_css_basis(const StabilizerCode& code) {
    if (!code.is_css()) {
        throw std::invalid_argument("encoded_css_basis: code is not CSS");
    }
    if (code.num_logical() != 1) {
        throw std::invalid_argument("encoded_css_basis: requires k = 1, got k = " +
                                    std::to_string(code.num_logical()));
    }
    size_t n = code.num_qubits();
    std::vector<BitVector> x_rows;
    for (const auto& g : code.generators()) {
        if (g.x_bits().any()) x_rows.push_back(g.x_bits());
    }
    // The |0> strings are the span of the X-generator supports; |1> is its
    // coset under the (X-type) logical X support.
    Gf2Basis span(n);
    std::vector<BitVector> basis;
    for (const auto& r : x_rows) {
        if (span.insert(r)) basis.push_back(r);
    }
    const PauliOperator& lx = code.logical_x()[0];
    if (lx.z_bits().any()) {
        throw std::logic_error("encoded_css_basis: logical X is not X-type");
    }
    CssBasisDescription out;
    BitVector cur(n);
    out.zero_strings.push_back(cur);
    uint64_t gray = 0;
    for (uint64_t step = 1; step < (uint64_t{1} << basis.size()); ++step) {
        uint64_t next = step ^ (step >> 1);
        size_t bit = std::countr_zero(gray ^ next);
        gray = next;
        cur ^= basis[bit];
        out.zero_strings.push_back(cur);
    }
    for (const auto& w : out.zero_strings) out.one_strings.push_back(w ^ lx.x_bits());
    return out;
}

StabilizerCode concatenate(const StabilizerCode& outer, const StabilizerCode& inner) {
    if (outer.num_logical() != 1 || inner.num_logical() != 1) {
        throw std::invalid_argument("concatenate: both codes must encode exactly one qubit");
    }
    size_t no = outer.num_qubits(), ni = inner.num_qubits();
    size_t n = no * ni;
    std::vector<PauliOperator> gens;
    // Inner generators on each block.
    for (size_t b = 0; b < no; ++b) {
        for (const auto& g : inner.generators()) gens.push_back(g.embed(n, b * ni));
    }
    // Outer generators with letters lifted to inner logical operators. The
    // lifted bits are the XORed supports; signs are normalized to +1.
    const PauliOperator& lx = inner.logical_x()[0];
    const PauliOperator& lz = inner.logical_z()[0];
    for (const auto& g : outer.generators()) {
        BitVector x(n), z(n);
        for (size_t q = 0; q < no; ++q) {
            bool want_x = g.x_bit(q), want_z = g.z_bit(q);
            for (size_t j = 0; j < ni; ++j) {
                bool xb = (want_x && lx.x_bit(j)) ^ (want_z && lz.x_bit(j));
                bool zb = (want_x && lx.z_bit(j)) ^ (want_z && lz.z_bit(j));
                if (xb) x.set(q * ni + j, true);
                if (zb) z.set(q * ni + j, true);
            }
        }
        gens.emplace_back(n, std::move(x), std::move(z), 0);
    }
    return StabilizerCode::validate(std::move(gens), n);
}

}  // namespace qecc
