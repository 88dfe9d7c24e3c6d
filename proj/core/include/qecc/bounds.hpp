#pragma once

#include <string>

namespace qecc {

/// Binary entropy h(x) = -x log2 x - (1-x) log2(1-x), with h(0) = h(1) = 0.
double binary_entropy(double x);

/// Quantum Singleton (Knill-Laflamme) bound: n - log2 K >= 2d - 2.
/// Requires K >= 2 and d >= 1.
bool singleton_check(size_t n, double K, int d);
/// True when the bound holds with equality.
bool singleton_equality(size_t n, double K, int d);

/// Quantum Gilbert-Varshamov rate bound: 1 - delta*log2(3) - h(delta),
/// for delta in [0, 1] (endpoints by continuity).
double gv_rate(double delta);

/// Quantum Hamming rate bound: 1 - tau*log2(3) - h(tau) with tau = t/n,
/// for tau in [0, 1].
double hamming_rate(double tau);

struct BoundReport {
    bool singleton_ok = false;
    bool singleton_tight = false;
    double hamming_rate_bound = 0.0;
    double gv_rate_bound = 0.0;
    std::string notes;
};

/// Evaluate all bound checks for an [[n,k,d]] code (K = 2^k).
BoundReport bound_report(size_t n, size_t k, int d);

}  // namespace qecc
