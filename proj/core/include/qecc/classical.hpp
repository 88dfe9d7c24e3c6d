#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qecc/bitvec.hpp"

namespace qecc {

/// A binary linear code given by its parity check matrix: codewords are the
/// vectors v with Hv = 0. k = n - rank(H); rows may be dependent.
class ClassicalLinearCode {
public:
    ClassicalLinearCode(std::vector<BitVector> parity_rows, size_t n);

    /// Rows [1 1 0 ...], [0 1 1 0 ...]: the length-n repetition code.
    static ClassicalLinearCode repetition(size_t n);
    /// The [7,4,3] Hamming code (rows 0001111, 0110011, 1010101).
    static ClassicalLinearCode hamming7();

    size_t n() const { return n_; }
    size_t k() const { return n_ - rank_; }
    size_t rank() const { return rank_; }
    const std::vector<BitVector>& parity_rows() const { return rows_; }
    /// Independent subset of the parity rows (dependent rows dropped).
    const std::vector<BitVector>& independent_rows() const { return independent_rows_; }

    bool is_codeword(const BitVector& v) const;

    /// Minimum weight of a nonzero codeword by exhaustive enumeration of the
    /// codeword space; requires k <= 24. Returns nullopt for the trivial
    /// k = 0 code.
    std::optional<int> distance() const;

    /// All 2^k codewords (requires k <= 24).
    std::vector<BitVector> codewords() const;

private:
    size_t n_;
    size_t rank_;
    std::vector<BitVector> rows_;
    std::vector<BitVector> independent_rows_;
};

/// .pcm file format: text rows of space-separated 0/1, '#' comments.
ClassicalLinearCode read_pcm_file(const std::string& path);
void write_pcm_file(const std::string& path, const ClassicalLinearCode& code,
                    const std::string& header_comment = "");

}  // namespace qecc
