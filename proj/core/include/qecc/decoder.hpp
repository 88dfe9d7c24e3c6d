#pragma once

#include <unordered_map>

#include "qecc/stabilizer.hpp"

namespace qecc {

/// Syndrome -> minimum-weight-correction lookup table. Entries cover every
/// syndrome reachable by an error of weight <= covered_weight; collisions are
/// resolved by weight, then lexicographic order of the text form, so tables
/// are bit-for-bit reproducible. Immutable after build.
class DecoderTable {
public:
    static DecoderTable build(const StabilizerCode& code, int t);

    int covered_weight() const { return covered_weight_; }
    size_t size() const { return table_.size(); }
    bool has(const Syndrome& s) const { return table_.count(s) != 0; }
    const StabilizerCode& code() const { return code_; }

    struct Decoded {
        PauliOperator correction;
        bool best_effort;  // syndrome was outside the table; found by extending the search
    };
    /// Never fails: unknown syndromes extend the enumeration to higher
    /// weights (the syndrome map is onto, so a match always exists).
    Decoded decode(const Syndrome& s) const;

private:
    DecoderTable(StabilizerCode code, int t) : code_(std::move(code)), covered_weight_(t) {}

    StabilizerCode code_;
    int covered_weight_;
    std::unordered_map<Syndrome, PauliOperator, Syndrome::Hash> table_;
};

}  // namespace qecc
