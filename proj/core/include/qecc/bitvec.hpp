#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qecc {

/// Fixed-length bit vector packed into 64-bit words. Bit i of the vector is
/// bit (i % 64) of word (i / 64); unused high bits of the last word stay zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitVector from_string(const std::string& bits);  // '0'/'1' chars, bit 0 first

    size_t size() const { return n_; }
    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    std::span<const uint64_t> words() const { return words_; }
    std::span<uint64_t> words() { return words_; }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }
    /// Index of the first set bit, or nullopt.
    std::optional<size_t> first_set() const;

    void operator^=(const BitVector& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { a ^= b; return a; }

    /// Parity of the AND of two vectors (GF(2) dot product).
    friend bool parity_and(const BitVector& a, const BitVector& b) {
        uint64_t acc = 0;
        for (size_t i = 0; i < a.words_.size(); ++i) acc ^= a.words_[i] & b.words_[i];
        return std::popcount(acc) & 1;
    }

    bool operator==(const BitVector& o) const { return n_ == o.n_ && words_ == o.words_; }

    std::string str() const;  // "0101..." with bit 0 first

    struct Hash {
        size_t operator()(const BitVector& v) const {
            uint64_t h = 0x9e3779b97f4a7c15ull ^ v.n_;
            for (uint64_t w : v.words_) {
                h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            }
            return static_cast<size_t>(h);
        }
    };

private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

/// Row-reduced basis of a set of bit vectors, kept in echelon form with
/// distinct pivots. Supports rank queries, membership tests, and recovery of
/// the combination of the original rows that produces a member.
class Gf2Basis {
public:
    explicit Gf2Basis(size_t n) : n_(n) {}

    /// Insert a vector; returns true if it enlarged the span.
    bool insert(const BitVector& v);

    size_t rank() const { return rows_.size(); }
    size_t dimension() const { return n_; }

    /// Reduce v against the basis; the residue is zero iff v is in the span.
    BitVector reduce(const BitVector& v) const;
    bool contains(const BitVector& v) const { return !reduce(v).any(); }

    /// For v in the span, the set of *inserted-row indices* whose XOR is v.
    /// (Only rows that enlarged the span count as inserted.) nullopt if v is
    /// not in the span.
    std::optional<std::vector<size_t>> express(const BitVector& v) const;

private:
    size_t n_;
    std::vector<BitVector> rows_;          // echelon rows
    std::vector<size_t> pivots_;           // pivot column of each row
    std::vector<BitVector> combos_;        // combos_[i]: inserted-row indices forming rows_[i]
    size_t inserted_ = 0;
};

/// Basis of the solution space of A x = 0 where the rows of `rows` are the
/// equations (each of length n). Returns `n - rank` independent solutions.
std::vector<BitVector> gf2_nullspace(const std::vector<BitVector>& rows, size_t n);

/// One solution of A x = b, or nullopt when inconsistent. Equations are rows
/// of A (length n) with right-hand sides b.
std::optional<BitVector> gf2_solve(const std::vector<BitVector>& rows,
                                   const std::vector<bool>& rhs, size_t n);

}  // namespace qecc
