#include "qecc/stabilizer.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "qecc/enumerate.hpp"

namespace qecc {

BitVector pauli_to_symplectic(const PauliOperator& p) {
    size_t n = p.num_qubits();
    BitVector v(2 * n);
    for (size_t q = 0; q < n; ++q) {
        if (p.x_bit(q)) v.set(q, true);
        if (p.z_bit(q)) v.set(n + q, true);
    }
    return v;
}

PauliOperator pauli_from_symplectic(const BitVector& v, unsigned phase) {
    size_t n = v.size() / 2;
    BitVector x(n), z(n);
    for (size_t q = 0; q < n; ++q) {
        if (v.get(q)) x.set(q, true);
        if (v.get(n + q)) z.set(q, true);
    }
    return PauliOperator(n, std::move(x), std::move(z), phase);
}

bool symplectic_product(const BitVector& a, const BitVector& b) {
    size_t n = a.size() / 2;
    bool acc = false;
    for (size_t q = 0; q < n; ++q) {
        acc ^= (a.get(q) && b.get(n + q)) ^ (a.get(n + q) && b.get(q));
    }
    return acc;
}

StabilizerCode StabilizerCode::validate(std::vector<PauliOperator> generators) {
    if (generators.empty()) {
        throw std::invalid_argument("validate: empty generator list (pass the qubit count "
                                    "explicitly for a code with no generators)");
    }
    size_t n = generators.front().num_qubits();
    return validate(std::move(generators), n);
}

StabilizerCode StabilizerCode::validate(std::vector<PauliOperator> generators, size_t n) {
    if (n == 0) throw std::invalid_argument("validate: qubit count must be positive");
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].num_qubits() != n) {
            throw std::invalid_argument("validate: generator " + std::to_string(i) +
                                        " acts on " + std::to_string(generators[i].num_qubits()) +
                                        " qubits, expected " + std::to_string(n));
        }
        if (generators[i].phase_exponent() != 0) {
            throw std::invalid_argument("validate: generator " + std::to_string(i) + " (" +
                                        generators[i].str() + ") has nonzero phase");
        }
    }
    for (size_t i = 0; i < generators.size(); ++i) {
        for (size_t j = i + 1; j < generators.size(); ++j) {
            if (!generators[i].commutes_with(generators[j])) {
                throw std::invalid_argument("validate: generators " + std::to_string(i) + " (" +
                                            generators[i].str() + ") and " + std::to_string(j) +
                                            " (" + generators[j].str() + ") anticommute");
            }
        }
    }
    // A commuting independent set spans an isotropic subspace, so more than n
    // generators always trips the dependence check below.

    StabilizerCode code;
    code.n_ = n;
    code.row_basis_ = Gf2Basis(2 * n);
    for (size_t i = 0; i < generators.size(); ++i) {
        BitVector row = pauli_to_symplectic(generators[i]);
        if (!code.row_basis_.insert(row)) {
            auto combo = code.row_basis_.express(row);
            std::string msg = "validate: generator " + std::to_string(i) + " (" +
                              generators[i].str() + ") is dependent; the product of generators {";
            if (combo) {
                for (size_t k = 0; k < combo->size(); ++k) {
                    msg += (k ? "," : "") + std::to_string((*combo)[k]);
                }
            }
            msg += "," + std::to_string(i) + "} vanishes";
            throw std::invalid_argument(msg);
        }
    }
    code.generators_ = std::move(generators);
    code.compute_logicals();
    code.check_logical_invariants();
    return code;
}

StabilizerCode StabilizerCode::with_known_distance(int d) const {
    StabilizerCode c = *this;
    c.known_distance_ = d;
    return c;
}

StabilizerCode StabilizerCode::with_logicals(std::vector<PauliOperator> lx,
                                             std::vector<PauliOperator> lz) const {
    StabilizerCode c = *this;
    c.logical_x_ = std::move(lx);
    c.logical_z_ = std::move(lz);
    c.check_logical_invariants();
    return c;
}

bool StabilizerCode::is_css() const {
    for (const auto& g : generators_) {
        if (g.x_bits().any() && g.z_bits().any()) return false;
    }
    return true;
}

void StabilizerCode::compute_logicals() {
    logical_x_.clear();
    logical_z_.clear();
    if (num_logical() == 0) return;
    if (is_css()) {
        compute_logicals_css();
        return;
    }
    // Basis of the normalizer: null space of the symplectic-product map
    // against the generators (equation row for g has its halves swapped).
    std::vector<BitVector> eqs;
    for (const auto& g : generators_) {
        BitVector row(2 * n_);
        for (size_t q = 0; q < n_; ++q) {
            if (g.z_bit(q)) row.set(q, true);
            if (g.x_bit(q)) row.set(n_ + q, true);
        }
        eqs.push_back(std::move(row));
    }
    std::vector<BitVector> cand = gf2_nullspace(eqs, 2 * n_);

    // Symplectic Gram-Schmidt: peel off hyperbolic pairs; central leftovers
    // span the stabilizer itself.
    std::vector<std::pair<BitVector, BitVector>> pairs;
    while (!cand.empty()) {
        BitVector v = cand.front();
        cand.erase(cand.begin());
        size_t partner = cand.size();
        for (size_t i = 0; i < cand.size(); ++i) {
            if (symplectic_product(v, cand[i])) { partner = i; break; }
        }
        if (partner == cand.size()) continue;
        BitVector w = cand[partner];
        cand.erase(cand.begin() + partner);
        for (auto& u : cand) {
            bool a = symplectic_product(u, w);
            bool b = symplectic_product(u, v);
            if (a) u ^= v;
            if (b) u ^= w;
        }
        pairs.emplace_back(std::move(v), std::move(w));
    }
    if (pairs.size() != num_logical()) {
        throw std::logic_error("symplectic completion produced " + std::to_string(pairs.size()) +
                               " pairs, expected " + std::to_string(num_logical()));
    }
    for (auto& [v, w] : pairs) {
        bool v_zonly = true, w_zonly = true, v_xonly = true, w_xonly = true;
        for (size_t q = 0; q < n_; ++q) {
            if (v.get(q)) v_zonly = false;
            if (v.get(n_ + q)) v_xonly = false;
            if (w.get(q)) w_zonly = false;
            if (w.get(n_ + q)) w_xonly = false;
        }
        if ((v_zonly && !w_zonly) || (w_xonly && !v_xonly)) std::swap(v, w);
        logical_x_.push_back(pauli_from_symplectic(v));
        logical_z_.push_back(pauli_from_symplectic(w));
    }
}

void StabilizerCode::compute_logicals_css() {
    // Classical route: logical X from C1 / rowspace(H2), logical Z from
    // C2 / rowspace(H1), pairing fixed to the identity by a GF(2) inverse.
    std::vector<BitVector> h1, h2;  // Z-generator z-parts, X-generator x-parts
    for (const auto& g : generators_) {
        if (g.x_bits().any()) h2.push_back(g.x_bits());
        else h1.push_back(g.z_bits());
    }
    size_t k = num_logical();

    auto quotient_reps = [&](const std::vector<BitVector>& check_rows,
                             const std::vector<BitVector>& mod_rows) {
        Gf2Basis span(n_);
        for (const auto& r : mod_rows) span.insert(r);
        std::vector<BitVector> reps;
        for (const auto& v : gf2_nullspace(check_rows, n_)) {
            if (span.insert(v)) reps.push_back(v);
        }
        return reps;
    };
    std::vector<BitVector> u = quotient_reps(h1, h2);  // C1 mod C2-perp
    std::vector<BitVector> v = quotient_reps(h2, h1);  // C2 mod C1-perp
    if (u.size() != k || v.size() != k) {
        throw std::logic_error("CSS logical completion: quotient dimension mismatch");
    }

    // Invert the pairing matrix M[i][j] = u_i . v_j over GF(2).
    std::vector<BitVector> m(k, BitVector(k)), inv(k, BitVector(k));
    for (size_t i = 0; i < k; ++i) {
        inv[i].set(i, true);
        for (size_t j = 0; j < k; ++j) m[i].set(j, parity_and(u[i], v[j]));
    }
    for (size_t col = 0; col < k; ++col) {
        size_t piv = col;
        while (piv < k && !m[piv].get(col)) ++piv;
        if (piv == k) throw std::logic_error("CSS logical completion: degenerate pairing");
        std::swap(m[col], m[piv]);
        std::swap(inv[col], inv[piv]);
        for (size_t r = 0; r < k; ++r) {
            if (r != col && m[r].get(col)) { m[r] ^= m[col]; inv[r] ^= inv[col]; }
        }
    }
    for (size_t j = 0; j < k; ++j) {
        BitVector vz(n_);
        for (size_t l = 0; l < k; ++l) {
            if (inv[l].get(j)) vz ^= v[l];
        }
        logical_x_.push_back(PauliOperator(n_, u[j], BitVector(n_), 0));
        logical_z_.push_back(PauliOperator(n_, BitVector(n_), vz, 0));
    }
}

void StabilizerCode::check_logical_invariants() const {
    size_t k = num_logical();
    if (logical_x_.size() != k || logical_z_.size() != k) {
        throw std::logic_error("logical operator count must equal k");
    }
    for (size_t i = 0; i < k; ++i) {
        if (logical_x_[i].phase_exponent() != 0 || logical_z_[i].phase_exponent() != 0) {
            throw std::logic_error("logical operators must be sign-normalized");
        }
        for (const auto& g : generators_) {
            if (!logical_x_[i].commutes_with(g) || !logical_z_[i].commutes_with(g)) {
                throw std::logic_error("logical operator anticommutes with a generator");
            }
        }
        if (in_stabilizer_up_to_phase(logical_x_[i]) || in_stabilizer_up_to_phase(logical_z_[i])) {
            throw std::logic_error("logical operator lies in the stabilizer");
        }
        for (size_t j = 0; j < k; ++j) {
            bool want_anti = (i == j);
            if (logical_x_[i].commutes_with(logical_z_[j]) == want_anti) {
                throw std::logic_error("logical pairing is not symplectic");
            }
            if (j > i) {
                if (!logical_x_[i].commutes_with(logical_x_[j]) ||
                    !logical_z_[i].commutes_with(logical_z_[j])) {
                    throw std::logic_error("same-type logical operators must commute");
                }
            }
        }
    }
}

Syndrome StabilizerCode::syndrome(const PauliOperator& e) const {
    if (e.num_qubits() != n_) {
        throw std::invalid_argument("syndrome: operator acts on " +
                                    std::to_string(e.num_qubits()) + " qubits, code has " +
                                    std::to_string(n_));
    }
    BitVector bits(generators_.size());
    for (size_t i = 0; i < generators_.size(); ++i) {
        bits.set(i, !e.commutes_with(generators_[i]));
    }
    return Syndrome(std::move(bits));
}

bool StabilizerCode::in_normalizer(const PauliOperator& p) const {
    return syndrome(p).is_zero();
}

bool StabilizerCode::in_stabilizer_up_to_phase(const PauliOperator& p) const {
    if (p.num_qubits() != n_) throw std::invalid_argument("in_stabilizer: dimension mismatch");
    return row_basis_.contains(pauli_to_symplectic(p));
}

std::optional<PauliOperator> StabilizerCode::stabilizer_element_like(const PauliOperator& p) const {
    auto combo = row_basis_.express(pauli_to_symplectic(p));
    if (!combo) return std::nullopt;
    PauliOperator prod(n_);
    for (size_t idx : *combo) prod = prod * generators_[idx];
    return prod;
}

bool StabilizerCode::in_stabilizer(const PauliOperator& p) const {
    auto elem = stabilizer_element_like(p);
    return elem && *elem == p;
}

StabilizerCode::DistanceResult StabilizerCode::distance(int weight_cap) const {
    if (weight_cap < 1) throw std::invalid_argument("distance: weight_cap must be >= 1");
    bool state_mode = num_logical() == 0;  // k = 0: minimum nontrivial stabilizer weight
    for (int w = 1; w <= weight_cap && w <= static_cast<int>(n_); ++w) {
        bool found = for_each_pauli_of_weight(n_, w, [&](const PauliOperator& p) {
            if (!in_normalizer(p)) return false;
            return state_mode || !in_stabilizer_up_to_phase(p);
        });
        if (found) return {w, weight_cap};
    }
    return {std::nullopt, weight_cap};
}

bool StabilizerCode::is_degenerate(int d) const {
    if (d < 1) throw std::invalid_argument("is_degenerate: d must be >= 1");
    for (int w = 1; w < d; ++w) {
        bool found = for_each_pauli_of_weight(n_, w, [&](const PauliOperator& p) {
            return in_stabilizer_up_to_phase(p);
        });
        if (found) return true;
    }
    return false;
}

bool StabilizerCode::verify_detection(int d) const {
    for (int w = 1; w < d; ++w) {
        bool bad = for_each_pauli_of_weight(n_, w, [&](const PauliOperator& p) {
            return in_normalizer(p) && !in_stabilizer_up_to_phase(p);
        });
        if (bad) return false;
    }
    return true;
}

PauliOperator StabilizerCode::decode_erasure(const std::vector<size_t>& erased,
                                             const Syndrome& s) const {
    if (s.size() != generators_.size()) {
        throw std::invalid_argument("decode_erasure: syndrome length mismatch");
    }
    for (size_t q : erased) {
        if (q >= n_) throw std::invalid_argument("decode_erasure: erased position out of range");
    }
    // Unknowns: (x_e, z_e) on each erased position. Equation i demands the
    // candidate anticommute with generator i exactly when s_i is set.
    size_t e = erased.size();
    std::vector<BitVector> rows;
    std::vector<bool> rhs;
    for (size_t i = 0; i < generators_.size(); ++i) {
        BitVector row(2 * e);
        for (size_t j = 0; j < e; ++j) {
            if (generators_[i].z_bit(erased[j])) row.set(j, true);
            if (generators_[i].x_bit(erased[j])) row.set(e + j, true);
        }
        rows.push_back(std::move(row));
        rhs.push_back(s.get(i));
    }
    auto sol = gf2_solve(rows, rhs, 2 * e);
    if (!sol) {
        throw std::runtime_error("decode_erasure: no correction on the erased support is "
                                 "consistent with the syndrome");
    }
    BitVector x(n_), z(n_);
    for (size_t j = 0; j < e; ++j) {
        if (sol->get(j)) x.set(erased[j], true);
        if (sol->get(e + j)) z.set(erased[j], true);
    }
    return PauliOperator(n_, std::move(x), std::move(z), 0);
}

int StabilizerCode::min_weight_in_coset(const PauliOperator& p) const {
    if (p.num_qubits() != n_) throw std::invalid_argument("min_weight_in_coset: dimension mismatch");
    size_t m = generators_.size();
    if (m > 20) throw std::invalid_argument("min_weight_in_coset: stabilizer too large to walk");
    BitVector x = p.x_bits(), z = p.z_bits();
    size_t best = p.weight();
    // Gray-code walk over the 2^m group elements: one generator toggle apiece.
    uint64_t gray = 0;
    for (uint64_t step = 1; step < (uint64_t{1} << m); ++step) {
        uint64_t next = step ^ (step >> 1);
        uint64_t toggled = gray ^ next;
        gray = next;
        size_t gi = std::countr_zero(toggled);
        x ^= generators_[gi].x_bits();
        z ^= generators_[gi].z_bits();
        size_t w = 0;
        auto xw = x.words(), zw = z.words();
        for (size_t i = 0; i < xw.size(); ++i) w += std::popcount(xw[i] | zw[i]);
        best = std::min(best, w);
    }
    return static_cast<int>(best);
}

std::vector<PauliOperator> read_stab_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open stabilizer file: " + path);
    std::vector<PauliOperator> gens;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        try {
            gens.push_back(PauliOperator::parse(line.substr(first, last - first + 1)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return gens;
}

void write_stab_file(const std::string& path, const std::vector<PauliOperator>& generators,
                     const std::string& header_comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write stabilizer file: " + path);
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    for (const auto& g : generators) out << g.str() << "\n";
}

}  // namespace qecc
