#pragma once

#include "qecc/classical.hpp"
#include "qecc/stabilizer.hpp"

namespace qecc {

/// CSS construction: Z-type generators from the rows of c1's parity check
/// (1 -> Z), X-type generators from c2's (1 -> X). Requires H1·H2ᵀ = 0;
/// dependent parity rows are dropped before conversion. k = k1 + k2 - n.
StabilizerCode css_code(const ClassicalLinearCode& c1, const ClassicalLinearCode& c2);

/// The [[5,1,3]] code (generators XZZXI, IXZZX, XIXZZ, ZXIXZ).
StabilizerCode five_qubit_code();
/// The [[7,1,3]] code: css_code(hamming7, hamming7).
StabilizerCode steane_code();
/// The [[9,1,3]] code: concatenate(phase-flip [[3,1]], bit-flip [[3,1]]).
StabilizerCode shor_code();

/// The two sets of classical bit strings whose equal-amplitude superpositions
/// are the logical |0> and |1> of a CSS code with k = 1.
struct CssBasisDescription {
    std::vector<BitVector> zero_strings;  // span of the X-generator supports
    std::vector<BitVector> one_strings;   // its coset under a logical X representative
};
CssBasisDescription encoded_css_basis(const StabilizerCode& code);

/// Encode each qubit of `outer` with `inner` (both k = 1): inner generators
/// on each block plus outer generators with every letter lifted to the
/// matching inner logical operator. Yields n_outer * n_inner - 1 generators.
StabilizerCode concatenate(const StabilizerCode& outer, const StabilizerCode& inner);

}  // namespace qecc
