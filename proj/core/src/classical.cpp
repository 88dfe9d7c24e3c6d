#include "qecc/classical.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qecc {

ClassicalLinearCode::ClassicalLinearCode(std::vector<BitVector> parity_rows, size_t n)
    : n_(n), rows_(std::move(parity_rows)) {
    if (n == 0) throw std::invalid_argument("ClassicalLinearCode: n must be positive");
    Gf2Basis basis(n);
    for (const auto& r : rows_) {
        if (r.size() != n) throw std::invalid_argument("ClassicalLinearCode: row length mismatch");
        if (basis.insert(r)) independent_rows_.push_back(r);
    }
    rank_ = basis.rank();
}

ClassicalLinearCode ClassicalLinearCode::repetition(size_t n) {
    if (n < 2) throw std::invalid_argument("repetition: n must be >= 2");
    std::vector<BitVector> rows;
    for (size_t i = 0; i + 1 < n; ++i) {
        BitVector r(n);
        r.set(i, true);
        r.set(i + 1, true);
        rows.push_back(std::move(r));
    }
    return ClassicalLinearCode(std::move(rows), n);
}

ClassicalLinearCode ClassicalLinearCode::hamming7() {
    std::vector<BitVector> rows = {
        BitVector::from_string("0001111"),
        BitVector::from_string("0110011"),
        BitVector::from_string("1010101"),
    };
    return ClassicalLinearCode(std::move(rows), 7);
}

bool ClassicalLinearCode::is_codeword(const BitVector& v) const {
    if (v.size() != n_) throw std::invalid_argument("is_codeword: length mismatch");
    for (const auto& r : rows_) {
        if (parity_and(r, v)) return false;
    }
    return true;
}

std::vector<BitVector> ClassicalLinearCode::codewords() const {
    size_t kk = k();
    if (kk > 24) throw std::invalid_argument("codewords: k too large for enumeration");
    std::vector<BitVector> basis = gf2_nullspace(independent_rows_, n_);
    std::vector<BitVector> words;
    words.reserve(size_t{1} << kk);
    BitVector cur(n_);
    words.push_back(cur);
    // Gray-code walk over the span.
    uint64_t gray = 0;
    for (uint64_t step = 1; step < (uint64_t{1} << kk); ++step) {
        uint64_t next = step ^ (step >> 1);
        size_t bit = std::countr_zero(gray ^ next);
        gray = next;
        cur ^= basis[bit];
        words.push_back(cur);
    }
    return words;
}

std::optional<int> ClassicalLinearCode::distance() const {
    if (k() == 0) return std::nullopt;
    size_t best = n_ + 1;
    for (const auto& w : codewords()) {
        size_t wt = w.popcount();
        if (wt > 0 && wt < best) best = wt;
    }
    return static_cast<int>(best);
}

ClassicalLinearCode read_pcm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open parity check file: " + path);
    std::vector<std::vector<int>> raw;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        std::vector<int> row;
        std::string tok;
        while (ss >> tok) {
            if (tok == "0") row.push_back(0);
            else if (tok == "1") row.push_back(1);
            else throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                             ": expected 0 or 1, got '" + tok + "'");
        }
        if (!row.empty()) raw.push_back(std::move(row));
    }
    if (raw.empty()) throw std::invalid_argument(path + ": no matrix rows");
    size_t n = raw.front().size();
    std::vector<BitVector> rows;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (raw[i].size() != n) {
            throw std::invalid_argument(path + ": row " + std::to_string(i) +
                                        " has inconsistent length");
        }
        BitVector r(n);
        for (size_t j = 0; j < n; ++j) r.set(j, raw[i][j]);
        rows.push_back(std::move(r));
    }
    return ClassicalLinearCode(std::move(rows), n);
}

void write_pcm_file(const std::string& path, const ClassicalLinearCode& code,
                    const std::string& header_comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write parity check file: " + path);
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    for (const auto& r : code.parity_rows()) {
        for (size_t j = 0; j < code.n(); ++j) {
            out << (j ? " " : "") << (r.get(j) ? 1 : 0);
        }
        out << "\n";
    }
}

}  // namespace qecc
