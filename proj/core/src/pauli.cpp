#include "qecc/pauli.hpp"

#include <stdexcept>

namespace qecc {

PauliOperator::PauliOperator(size_t n, BitVector x, BitVector z, unsigned phase_exponent)
    : n_(n), x_(std::move(x)), z_(std::move(z)), phase_(phase_exponent & 3) {
    if (x_.size() != n_ || z_.size() != n_) {
        throw std::invalid_argument("PauliOperator: bit vectors must have exactly n bits");
    }
}

PauliOperator PauliOperator::single(size_t n, size_t q, char letter) {
    if (q >= n) throw std::invalid_argument("PauliOperator::single: qubit out of range");
    BitVector x(n), z(n);
    switch (letter) {
        case 'X': x.set(q, true); break;
        case 'Y': x.set(q, true); z.set(q, true); break;
        case 'Z': z.set(q, true); break;
        case 'I': break;
        default: throw std::invalid_argument("PauliOperator::single: unknown letter");
    }
    return PauliOperator(n, std::move(x), std::move(z), 0);
}

PauliOperator PauliOperator::parse(std::string_view text) {
    size_t i = 0;
    unsigned phase = 0;
    bool minus = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        minus = text[i] == '-';
        ++i;
    }
    if (i < text.size() && text[i] == 'i') {
        phase = 1;
        ++i;
    }
    if (minus) phase = (phase + 2) & 3;

    if (i >= text.size()) {
        throw std::invalid_argument("Pauli parse error at index " + std::to_string(i) +
                                    ": expected at least one of I, X, Y, Z");
    }
    size_t n = text.size() - i;
    BitVector x(n), z(n);
    for (size_t q = 0; q < n; ++q, ++i) {
        switch (text[i]) {
            case 'I': break;
            case 'X': x.set(q, true); break;
            case 'Y': x.set(q, true); z.set(q, true); break;
            case 'Z': z.set(q, true); break;
            default:
                throw std::invalid_argument("Pauli parse error at index " + std::to_string(i) +
                                            ": unknown character '" + std::string(1, text[i]) + "'");
        }
    }
    return PauliOperator(n, std::move(x), std::move(z), phase);
}

char PauliOperator::letter(size_t q) const {
    bool xb = x_.get(q), zb = z_.get(q);
    if (xb && zb) return 'Y';
    if (xb) return 'X';
    if (zb) return 'Z';
    return 'I';
}

std::string PauliOperator::str() const {
    static const char* prefix[4] = {"", "+i", "-", "-i"};
    std::string s = prefix[phase_];
    s.reserve(s.size() + n_);
    for (size_t q = 0; q < n_; ++q) s += letter(q);
    return s;
}

size_t PauliOperator::weight() const {
    size_t c = 0;
    auto xw = x_.words(), zw = z_.words();
    for (size_t i = 0; i < xw.size(); ++i) c += std::popcount(xw[i] | zw[i]);
    return c;
}

void PauliOperator::check_same_size(const PauliOperator& o) const {
    if (n_ != o.n_) {
        throw std::invalid_argument("Pauli dimension mismatch: " + std::to_string(n_) +
                                    " vs " + std::to_string(o.n_) + " qubits");
    }
}

bool PauliOperator::commutes_with(const PauliOperator& o) const {
    check_same_size(o);
    // Symplectic product p_X·q_Z + p_Z·q_X mod 2.
    uint64_t acc = 0;
    auto px = x_.words(), pz = z_.words(), qx = o.x_.words(), qz = o.z_.words();
    for (size_t i = 0; i < px.size(); ++i) acc ^= (px[i] & qz[i]) ^ (pz[i] & qx[i]);
    return (std::popcount(acc) & 1) == 0;
}

PauliOperator PauliOperator::operator*(const PauliOperator& o) const {
    check_same_size(o);
    // Work in the X^x Z^z decomposition: P = i^{phase + y(P)} · Π X^x Z^z,
    // where y(·) counts Y letters. Moving X factors of the right operand past
    // Z factors of the left one contributes (-1)^{|p_z & q_x|}.
    BitVector rx = x_ ^ o.x_;
    BitVector rz = z_ ^ o.z_;
    size_t y_p = 0, y_q = 0, y_r = 0, swaps = 0;
    auto px = x_.words(), pz = z_.words(), qx = o.x_.words(), qz = o.z_.words();
    auto rxw = rx.words(), rzw = rz.words();
    for (size_t i = 0; i < px.size(); ++i) {
        y_p += std::popcount(px[i] & pz[i]);
        y_q += std::popcount(qx[i] & qz[i]);
        y_r += std::popcount(rxw[i] & rzw[i]);
        swaps += std::popcount(pz[i] & qx[i]);
    }
    unsigned phase = (phase_ + o.phase_ + y_p + y_q + 2 * swaps + 4 * px.size() * 64 - y_r) & 3;
    return PauliOperator(n_, std::move(rx), std::move(rz), phase);
}

PauliOperator PauliOperator::slice(size_t begin, size_t count) const {
    if (begin + count > n_) throw std::invalid_argument("PauliOperator::slice: out of range");
    BitVector x(count), z(count);
    for (size_t q = 0; q < count; ++q) {
        x.set(q, x_.get(begin + q));
        z.set(q, z_.get(begin + q));
    }
    return PauliOperator(count, std::move(x), std::move(z), phase_);
}

PauliOperator PauliOperator::embed(size_t m, size_t offset) const {
    if (offset + n_ > m) throw std::invalid_argument("PauliOperator::embed: out of range");
    BitVector x(m), z(m);
    for (size_t q = 0; q < n_; ++q) {
        x.set(offset + q, x_.get(q));
        z.set(offset + q, z_.get(q));
    }
    return PauliOperator(m, std::move(x), std::move(z), phase_);
}

}  // namespace qecc
