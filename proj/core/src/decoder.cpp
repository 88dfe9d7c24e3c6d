#include "qecc/decoder.hpp"

#include <algorithm>
#include <stdexcept>

#include "qecc/enumerate.hpp"

namespace qecc {

namespace {

/// All unsigned Paulis of weight w in lexicographic order of their text form
/// ('I' < 'X' < 'Y' < 'Z' holds in ASCII, so sorting by str() is exact).
std::vector<PauliOperator> paulis_of_weight_sorted(size_t n, size_t w) {
    std::vector<PauliOperator> out;
    for_each_pauli_of_weight(n, w, [&](const PauliOperator& p) { out.push_back(p); });
    std::sort(out.begin(), out.end(), [](const PauliOperator& a, const PauliOperator& b) {
        return a.str() < b.str();
    });
    return out;
}

}  // namespace

DecoderTable DecoderTable::build(const StabilizerCode& code, int t) {
    if (t < 0) throw std::invalid_argument("DecoderTable: t must be >= 0");
    DecoderTable dt(code, t);
    for (int w = 0; w <= t; ++w) {
        for (const auto& p : paulis_of_weight_sorted(code.num_qubits(), w)) {
            Syndrome s = dt.code_.syndrome(p);
            dt.table_.emplace(std::move(s), p);  // first (lightest, lex-least) entry wins
        }
    }
    return dt;
}

DecoderTable::Decoded DecoderTable::decode(const Syndrome& s) const {
    if (s.size() != code_.num_generators()) {
        throw std::invalid_argument("decode: syndrome length mismatch");
    }
    auto it = table_.find(s);
    if (it != table_.end()) return {it->second, false};
    for (size_t w = covered_weight_ + 1; w <= code_.num_qubits(); ++w) {
        for (const auto& p : paulis_of_weight_sorted(code_.num_qubits(), w)) {
            if (code_.syndrome(p) == s) return {p, true};
        }
    }
    // The syndrome map of an independent generator set is onto.
    throw std::logic_error("decode: no correction found for syndrome " + s.str());
}

}  // namespace qecc
