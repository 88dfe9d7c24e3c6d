#include "qecc/bitvec.hpp"

#include <stdexcept>

namespace qecc {

BitVector BitVector::from_string(const std::string& bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') v.set(i, true);
        else if (bits[i] != '0') throw std::invalid_argument("BitVector: expected '0' or '1'");
    }
    return v;
}

std::optional<size_t> BitVector::first_set() const {
    for (size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) return w * 64 + std::countr_zero(words_[w]);
    }
    return std::nullopt;
}

std::string BitVector::str() const {
    std::string s(n_, '0');
    for (size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
    return s;
}

bool Gf2Basis::insert(const BitVector& v) {
    BitVector r = v;
    BitVector combo(0);
    // combo vectors are sized lazily: index space grows with insertions
    combo = BitVector(inserted_ + 1);
    combo.set(inserted_, true);
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (r.get(pivots_[i])) {
            r ^= rows_[i];
            // widen stored combo to current index space on demand
            for (size_t b = 0; b < combos_[i].size() && b < combo.size(); ++b) {
                if (combos_[i].get(b)) combo.flip(b);
            }
        }
    }
    ++inserted_;
    auto p = r.first_set();
    if (!p) return false;
    rows_.push_back(std::move(r));
    pivots_.push_back(*p);
    combos_.push_back(std::move(combo));
    return true;
}

BitVector Gf2Basis::reduce(const BitVector& v) const {
    BitVector r = v;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (r.get(pivots_[i])) r ^= rows_[i];
    }
    return r;
}

std::optional<std::vector<size_t>> Gf2Basis::express(const BitVector& v) const {
    BitVector r = v;
    BitVector combo(inserted_);
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (r.get(pivots_[i])) {
            r ^= rows_[i];
            for (size_t b = 0; b < combos_[i].size(); ++b) {
                if (combos_[i].get(b)) combo.flip(b);
            }
        }
    }
    if (r.any()) return std::nullopt;
    std::vector<size_t> idx;
    for (size_t b = 0; b < combo.size(); ++b) if (combo.get(b)) idx.push_back(b);
    return idx;
}

std::vector<BitVector> gf2_nullspace(const std::vector<BitVector>& rows, size_t n) {
    // Reduce the equation rows to echelon form, then back-substitute one
    // solution per free column.
    std::vector<BitVector> ech;
    std::vector<size_t> pivots;
    for (const auto& row : rows) {
        BitVector r = row;
        for (size_t i = 0; i < ech.size(); ++i) {
            if (r.get(pivots[i])) r ^= ech[i];
        }
        if (auto p = r.first_set()) {
            ech.push_back(std::move(r));
            pivots.push_back(*p);
        }
    }
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) is_pivot[p] = true;

    std::vector<BitVector> basis;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        BitVector x(n);
        x.set(free, true);
        // Solve pivot variables bottom-up so each equation is satisfied.
        for (size_t i = ech.size(); i-- > 0;) {
            if (parity_and(ech[i], x)) x.flip(pivots[i]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<BitVector> gf2_solve(const std::vector<BitVector>& rows,
                                   const std::vector<bool>& rhs, size_t n) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("gf2_solve: size mismatch");
    // Echelon form of the augmented system.
    std::vector<BitVector> ech;
    std::vector<bool> ech_rhs;
    std::vector<size_t> pivots;
    for (size_t k = 0; k < rows.size(); ++k) {
        BitVector r = rows[k];
        bool b = rhs[k];
        for (size_t i = 0; i < ech.size(); ++i) {
            if (r.get(pivots[i])) { r ^= ech[i]; b = b ^ ech_rhs[i]; }
        }
        if (auto p = r.first_set()) {
            ech.push_back(std::move(r));
            ech_rhs.push_back(b);
            pivots.push_back(*p);
        } else if (b) {
            return std::nullopt;  // 0 = 1, inconsistent
        }
    }
    BitVector x(n);
    for (size_t i = ech.size(); i-- > 0;) {
        bool v = ech_rhs[i] ^ parity_and(ech[i], x);
        if (v) x.set(pivots[i], true);
    }
    return x;
}

}  // namespace qecc
