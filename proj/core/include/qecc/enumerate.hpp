#pragma once

#include <vector>

#include "qecc/pauli.hpp"

namespace qecc {

/// Visit every unsigned n-qubit Pauli of exactly weight w: all position
/// choose-w supports, all 3^w letterings. fn may return void, or bool where
/// returning true stops the enumeration early (and makes this return true).
template <typename F>
bool for_each_pauli_of_weight(size_t n, size_t w, F&& fn) {
    if (w > n) return false;
    if (w == 0) {
        if constexpr (std::is_void_v<decltype(fn(PauliOperator(n)))>) {
            fn(PauliOperator(n));
            return false;
        } else {
            return fn(PauliOperator(n));
        }
    }
    std::vector<size_t> pos(w);
    for (size_t i = 0; i < w; ++i) pos[i] = i;
    static constexpr char kLetters[3] = {'X', 'Y', 'Z'};
    while (true) {
        std::vector<int> letter(w, 0);
        while (true) {
            BitVector x(n), z(n);
            for (size_t i = 0; i < w; ++i) {
                char c = kLetters[letter[i]];
                if (c != 'Z') x.set(pos[i], true);
                if (c != 'X') z.set(pos[i], true);
            }
            PauliOperator p(n, std::move(x), std::move(z), 0);
            if constexpr (std::is_void_v<decltype(fn(p))>) {
                fn(p);
            } else {
                if (fn(p)) return true;
            }
            // next lettering
            size_t i = w;
            while (i > 0 && letter[i - 1] == 2) letter[--i] = 0;
            if (i == 0) break;
            ++letter[i - 1];
        }
        // next support combination
        size_t i = w;
        while (i > 0 && pos[i - 1] == n - w + (i - 1)) --i;
        if (i == 0) break;
        ++pos[i - 1];
        for (size_t j = i; j < w; ++j) pos[j] = pos[j - 1] + 1;
    }
    return false;
}

}  // namespace qecc
