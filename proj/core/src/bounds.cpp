#include "qecc/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace qecc {

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("binary_entropy: x must be in [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

bool singleton_check(size_t n, double K, int d) {
    if (K < 2.0) throw std::domain_error("singleton_check: K must be >= 2");
    if (d < 1) throw std::domain_error("singleton_check: d must be >= 1");
    return static_cast<double>(n) - std::log2(K) >= 2.0 * d - 2.0;
}

bool singleton_equality(size_t n, double K, int d) {
    if (K < 2.0) throw std::domain_error("singleton_check: K must be >= 2");
    if (d < 1) throw std::domain_error("singleton_check: d must be >= 1");
    return std::abs(static_cast<double>(n) - std::log2(K) - (2.0 * d - 2.0)) < 1e-9;
}

double gv_rate(double delta) {
    if (delta < 0.0 || delta > 1.0) throw std::domain_error("gv_rate: delta must be in [0, 1]");
    return 1.0 - delta * std::log2(3.0) - binary_entropy(delta);
}

double hamming_rate(double tau) {
    if (tau < 0.0 || tau > 1.0) throw std::domain_error("hamming_rate: tau must be in [0, 1]");
    return 1.0 - tau * std::log2(3.0) - binary_entropy(tau);
}

BoundReport bound_report(size_t n, size_t k, int d) {
    if (n == 0) throw std::domain_error("bound_report: n must be positive");
    if (k >= n) throw std::domain_error("bound_report: k must be < n for a nontrivial code");
    BoundReport r;
    if (k == 0) {
        r.notes = "K = 1: Singleton/Hamming/GV checks apply only to K >= 2";
        r.gv_rate_bound = gv_rate(static_cast<double>(d) / n);
        r.hamming_rate_bound = hamming_rate(static_cast<double>((d - 1) / 2) / n);
        return r;
    }
    double K = std::pow(2.0, static_cast<double>(k));
    r.singleton_ok = singleton_check(n, K, d);
    r.singleton_tight = r.singleton_ok && singleton_equality(n, K, d);
    int t = (d - 1) / 2;
    r.hamming_rate_bound = hamming_rate(static_cast<double>(t) / n);
    r.gv_rate_bound = gv_rate(static_cast<double>(d) / n);
    if (d % 2 == 0) r.notes = "d even: Hamming bound evaluated at t = (d-1)/2 rounded down";
    return r;
}

}  // namespace qecc
