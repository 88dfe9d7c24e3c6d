#include "qecc/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace qecc {

Tableau::Tableau(size_t n) : n_(n), words_((n + 63) / 64) {
    if (n == 0) throw std::invalid_argument("Tableau: n must be >= 1");
    xs_.assign(2 * n * words_, 0);
    zs_.assign(2 * n * words_, 0);
    phase_.assign(2 * n, 0);
    for (size_t q = 0; q < n; ++q) {
        row_x(q)[q >> 6] |= uint64_t{1} << (q & 63);        // destabilizer X_q
        row_z(n + q)[q >> 6] |= uint64_t{1} << (q & 63);    // stabilizer Z_q
    }
}

bool Tableau::row_anticommutes(size_t r, const uint64_t* px, const uint64_t* pz) const {
    uint64_t acc = 0;
    const uint64_t* rx = row_x(r);
    const uint64_t* rz = row_z(r);
    for (size_t w = 0; w < words_; ++w) acc ^= (rx[w] & pz[w]) ^ (rz[w] & px[w]);
    return std::popcount(acc) & 1;
}

void Tableau::row_mult(size_t dst, size_t src) {
    // In the X^x Z^z decomposition, (a)(b) picks up i^{2 |a_z & b_x|}.
    uint64_t* dx = row_x(dst);
    uint64_t* dz = row_z(dst);
    const uint64_t* sx = row_x(src);
    const uint64_t* sz = row_z(src);
    size_t swaps = 0;
    for (size_t w = 0; w < words_; ++w) {
        swaps += std::popcount(dz[w] & sx[w]);
        dx[w] ^= sx[w];
        dz[w] ^= sz[w];
    }
    phase_[dst] = (phase_[dst] + phase_[src] + 2 * (swaps & 1)) & 3;
}

void Tableau::apply_h(size_t q) {
    if (q >= n_) throw std::invalid_argument("apply_h: qubit out of range");
    uint64_t m = uint64_t{1} << (q & 63);
    size_t w = q >> 6;
    for (size_t r = 0; r < 2 * n_; ++r) {
        uint64_t* x = row_x(r);
        uint64_t* z = row_z(r);
        if (x[w] & z[w] & m) phase_[r] = (phase_[r] + 2) & 3;  // XZ -> ZX = -XZ
        uint64_t xb = x[w] & m, zb = z[w] & m;
        x[w] = (x[w] & ~m) | zb;
        z[w] = (z[w] & ~m) | xb;
    }
}

void Tableau::apply_s(size_t q) {
    if (q >= n_) throw std::invalid_argument("apply_s: qubit out of range");
    uint64_t m = uint64_t{1} << (q & 63);
    size_t w = q >> 6;
    for (size_t r = 0; r < 2 * n_; ++r) {
        if (row_x(r)[w] & m) {
            phase_[r] = (phase_[r] + 1) & 3;  // X -> i XZ
            row_z(r)[w] ^= m;
        }
    }
}

void Tableau::apply_sdag(size_t q) {
    if (q >= n_) throw std::invalid_argument("apply_sdag: qubit out of range");
    uint64_t m = uint64_t{1} << (q & 63);
    size_t w = q >> 6;
    for (size_t r = 0; r < 2 * n_; ++r) {
        if (row_x(r)[w] & m) {
            phase_[r] = (phase_[r] + 3) & 3;
            row_z(r)[w] ^= m;
        }
    }
}

void Tableau::apply_x(size_t q) { apply_pauli(PauliOperator::single(n_, q, 'X')); }
void Tableau::apply_y(size_t q) { apply_pauli(PauliOperator::single(n_, q, 'Y')); }
void Tableau::apply_z(size_t q) { apply_pauli(PauliOperator::single(n_, q, 'Z')); }

void Tableau::apply_cx(size_t control, size_t target) {
    if (control >= n_ || target >= n_ || control == target) {
        throw std::invalid_argument("apply_cx: bad qubit indices");
    }
    uint64_t cm = uint64_t{1} << (control & 63), tm = uint64_t{1} << (target & 63);
    size_t cw = control >> 6, tw = target >> 6;
    for (size_t r = 0; r < 2 * n_; ++r) {
        uint64_t* x = row_x(r);
        uint64_t* z = row_z(r);
        if (x[cw] & cm) x[tw] ^= tm;
        if (z[tw] & tm) z[cw] ^= cm;
    }
}

void Tableau::apply_cz(size_t a, size_t b) {
    if (a >= n_ || b >= n_ || a == b) throw std::invalid_argument("apply_cz: bad qubit indices");
    uint64_t am = uint64_t{1} << (a & 63), bm = uint64_t{1} << (b & 63);
    size_t aw = a >> 6, bw = b >> 6;
    for (size_t r = 0; r < 2 * n_; ++r) {
        uint64_t* x = row_x(r);
        uint64_t* z = row_z(r);
        bool xa = x[aw] & am, xb = x[bw] & bm;
        if (xa) z[bw] ^= bm;
        if (xb) z[aw] ^= am;
        if (xa && xb) phase_[r] = (phase_[r] + 2) & 3;
    }
}

void Tableau::apply_cy(size_t control, size_t target) {
    apply_sdag(target);
    apply_cx(control, target);
    apply_s(target);
}

void Tableau::apply_pauli(const PauliOperator& p) {
    if (p.num_qubits() != n_) throw std::invalid_argument("apply_pauli: dimension mismatch");
    auto px = p.x_bits().words();
    auto pz = p.z_bits().words();
    for (size_t r = 0; r < 2 * n_; ++r) {
        if (row_anticommutes(r, px.data(), pz.data())) phase_[r] = (phase_[r] + 2) & 3;
    }
}

Tableau::MeasureResult Tableau::measure_impl(const PauliOperator& p, Rng* rng,
                                             std::optional<int> forced) {
    if (p.num_qubits() != n_) throw std::invalid_argument("measure_pauli: dimension mismatch");
    if (!p.is_hermitian()) throw std::invalid_argument("measure_pauli: operator is not Hermitian");
    auto pxv = p.x_bits().words();
    auto pzv = p.z_bits().words();
    const uint64_t* px = pxv.data();
    const uint64_t* pz = pzv.data();
    // Phase of p in the X^x Z^z decomposition.
    size_t y = 0;
    for (size_t w = 0; w < words_; ++w) y += std::popcount(px[w] & pz[w]);
    uint8_t p_phase = (p.phase_exponent() + y) & 3;

    size_t pivot = 2 * n_;
    for (size_t r = n_; r < 2 * n_; ++r) {
        if (row_anticommutes(r, px, pz)) { pivot = r; break; }
    }
    if (pivot < 2 * n_) {
        // Random outcome: exactly 1/2 by stabilizer-state structure.
        for (size_t r = 0; r < 2 * n_; ++r) {
            if (r != pivot && row_anticommutes(r, px, pz)) row_mult(r, pivot);
        }
        // Old pivot row becomes its own destabilizer; the stabilizer row
        // becomes ±P.
        std::copy(row_x(pivot), row_x(pivot) + words_, row_x(pivot - n_));
        std::copy(row_z(pivot), row_z(pivot) + words_, row_z(pivot - n_));
        phase_[pivot - n_] = phase_[pivot];
        int outcome;
        if (forced.has_value()) {
            if (*forced != 1 && *forced != -1) {
                throw std::invalid_argument("measure_pauli: forced outcome must be +1 or -1");
            }
            outcome = *forced;
        } else {
            outcome = rng->next_bit() ? -1 : 1;
        }
        std::copy(px, px + words_, row_x(pivot));
        std::copy(pz, pz + words_, row_z(pivot));
        phase_[pivot] = (p_phase + (outcome == -1 ? 2 : 0)) & 3;
        return {outcome, false};
    }
    // Deterministic: P = Π stab_i over destabilizer-anticommutation flags.
    std::vector<uint64_t> sx(words_, 0), sz(words_, 0);
    unsigned s_phase = 0;
    for (size_t i = 0; i < n_; ++i) {
        if (!row_anticommutes(i, px, pz)) continue;
        const uint64_t* gx = row_x(n_ + i);
        const uint64_t* gz = row_z(n_ + i);
        size_t swaps = 0;
        for (size_t w = 0; w < words_; ++w) {
            swaps += std::popcount(sz[w] & gx[w]);
            sx[w] ^= gx[w];
            sz[w] ^= gz[w];
        }
        s_phase = (s_phase + phase_[n_ + i] + 2 * (swaps & 1)) & 3;
    }
    for (size_t w = 0; w < words_; ++w) {
        if (sx[w] != px[w] || sz[w] != pz[w]) {
            throw std::logic_error("tableau corrupted: deterministic product mismatch");
        }
    }
    unsigned delta = (s_phase + 4 - p_phase) & 3;
    if (delta & 1) throw std::logic_error("tableau corrupted: non-Hermitian phase");
    return {delta == 0 ? 1 : -1, true};
}

Tableau::MeasureResult Tableau::measure_pauli(const PauliOperator& p, Rng& rng) {
    return measure_impl(p, &rng, std::nullopt);
}

Tableau::MeasureResult Tableau::measure_pauli_forced(const PauliOperator& p, int forced_outcome) {
    return measure_impl(p, nullptr, forced_outcome);
}

std::optional<int> Tableau::deterministic_eigenvalue(const PauliOperator& p) const {
    auto pxv = p.x_bits().words();
    auto pzv = p.z_bits().words();
    for (size_t r = n_; r < 2 * n_; ++r) {
        if (row_anticommutes(r, pxv.data(), pzv.data())) return std::nullopt;
    }
    // No collapse happens for commuting measurements; reuse the full path.
    return const_cast<Tableau*>(this)->measure_impl(p, nullptr, std::nullopt).outcome;
}

Tableau::MeasureResult Tableau::measure_z(size_t q, Rng& rng) {
    return measure_pauli(PauliOperator::single(n_, q, 'Z'), rng);
}

PauliOperator Tableau::row_to_pauli(size_t r) const {
    BitVector x(n_), z(n_);
    size_t y = 0;
    for (size_t q = 0; q < n_; ++q) {
        bool xb = row_x(r)[q >> 6] >> (q & 63) & 1;
        bool zb = row_z(r)[q >> 6] >> (q & 63) & 1;
        if (xb) x.set(q, true);
        if (zb) z.set(q, true);
        if (xb && zb) ++y;
    }
    unsigned display = (phase_[r] + 4 * n_ - y) & 3;
    return PauliOperator(n_, std::move(x), std::move(z), display);
}

std::vector<PauliOperator> Tableau::stabilizer_generators() const {
    std::vector<PauliOperator> rows;
    rows.reserve(n_);
    for (size_t r = n_; r < 2 * n_; ++r) rows.push_back(row_to_pauli(r));
    return rows;
}

namespace {

/// Canonical form of a signed Pauli row set: Gaussian elimination with
/// column order x_0..x_{n-1}, z_0..z_{n-1}.
std::vector<PauliOperator> canonical_rows(std::vector<PauliOperator> rows) {
    size_t n = rows.empty() ? 0 : rows[0].num_qubits();
    size_t head = 0;
    auto bit_at = [&](const PauliOperator& p, size_t col) {
        return col < n ? p.x_bit(col) : p.z_bit(col - n);
    };
    for (size_t col = 0; col < 2 * n && head < rows.size(); ++col) {
        size_t pivot = head;
        while (pivot < rows.size() && !bit_at(rows[pivot], col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[head], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != head && bit_at(rows[r], col)) rows[r] = rows[r] * rows[head];
        }
        ++head;
    }
    rows.resize(head);
    return rows;
}

}  // namespace

bool Tableau::state_equal(const Tableau& other) const {
    if (n_ != other.n_) return false;
    auto a = canonical_rows(stabilizer_generators());
    auto b = canonical_rows(other.stabilizer_generators());
    return a == b;
}

void Tableau::assert_invariants() const {
    for (size_t r = 0; r < 2 * n_; ++r) {
        PauliOperator p = row_to_pauli(r);
        if (!p.is_hermitian()) throw std::logic_error("tableau row carries an i phase");
    }
    auto rows = stabilizer_generators();
    for (size_t i = 0; i < n_; ++i) {
        for (size_t j = i + 1; j < n_; ++j) {
            if (!rows[i].commutes_with(rows[j])) {
                throw std::logic_error("stabilizer rows anticommute");
            }
        }
    }
    for (size_t i = 0; i < n_; ++i) {
        PauliOperator d = row_to_pauli(i);
        for (size_t j = 0; j < n_; ++j) {
            bool anti = !d.commutes_with(rows[j]);
            if (anti != (i == j)) throw std::logic_error("destabilizer pairing broken");
        }
    }
}

Tableau prepare_codeword_state(const StabilizerCode& code) {
    size_t n = code.num_qubits();
    Tableau t(n);
    std::vector<PauliOperator> fixed;  // operators already forced to +1
    auto force_plus_one = [&](const PauliOperator& target, const PauliOperator* easy_fix) {
        auto res = t.measure_pauli_forced(target, +1);
        if (res.outcome == 1) return;
        // Deterministic -1: flip it with a Pauli that anticommutes with the
        // target but commutes with everything already fixed.
        PauliOperator fix(n);
        if (easy_fix) {
            fix = *easy_fix;
        } else {
            std::vector<BitVector> rows;
            std::vector<bool> rhs;
            for (const auto& f : fixed) {
                BitVector row(2 * n);
                for (size_t q = 0; q < n; ++q) {
                    if (f.z_bit(q)) row.set(q, true);
                    if (f.x_bit(q)) row.set(n + q, true);
                }
                rows.push_back(std::move(row));
                rhs.push_back(false);
            }
            BitVector trow(2 * n);
            for (size_t q = 0; q < n; ++q) {
                if (target.z_bit(q)) trow.set(q, true);
                if (target.x_bit(q)) trow.set(n + q, true);
            }
            rows.push_back(std::move(trow));
            rhs.push_back(true);
            auto sol = gf2_solve(rows, rhs, 2 * n);
            if (!sol) throw std::logic_error("codeword preparation: no sign fix exists");
            fix = pauli_from_symplectic(*sol);
        }
        t.apply_pauli(fix);
        auto again = t.measure_pauli_forced(target, +1);
        if (again.outcome != 1) throw std::logic_error("codeword preparation: sign fix failed");
    };
    for (const auto& g : code.generators()) {
        force_plus_one(g, nullptr);
        fixed.push_back(g);
    }
    for (size_t j = 0; j < code.num_logical(); ++j) {
        force_plus_one(code.logical_z()[j], &code.logical_x()[j]);
        fixed.push_back(code.logical_z()[j]);
    }
    return t;
}

}  // namespace qecc
