#pragma once

#include "errors.hpp"

namespace germ {

// Caps enforced during basis computations. Defaults are deliberately generous
// for desk-scale germs; the CLI can lower or raise them.
struct ResourceLimits {
    long long max_pairs = 200000;      // S-pairs processed per basis computation
    int max_degree = 60;               // total degree of any intermediate polynomial
    long long max_coeff_bits = 1000000; // bits of any numerator or denominator
};

inline ResourceLimits& current_limits() {
    thread_local ResourceLimits limits;
    return limits;
}

// High-water marks observed since the last reset, reported by the CLI.
struct ResourceStats {
    long long peak_pairs = 0;
    int peak_degree = 0;
    long long peak_coeff_bits = 0;

    void reset() { *this = ResourceStats{}; }
};

inline ResourceStats& usage_stats() {
    thread_local ResourceStats stats;
    return stats;
}

// RAII override, used by the CLI and by tests that probe the caps.
class LimitsScope {
    ResourceLimits saved_;
public:
    explicit LimitsScope(const ResourceLimits& l) : saved_(current_limits()) {
        current_limits() = l;
    }
    ~LimitsScope() { current_limits() = saved_; }
    LimitsScope(const LimitsScope&) = delete;
    LimitsScope& operator=(const LimitsScope&) = delete;
};

inline void check_degree_cap(int degree) {
    auto& st = usage_stats();
    if (degree > st.peak_degree) st.peak_degree = degree;
    const auto& l = current_limits();
    if (degree > l.max_degree)
        throw ResourceLimitExceeded(ResourceLimitExceeded::Kind::degree, degree, l.max_degree);
}

inline void check_pair_cap(long long pairs) {
    auto& st = usage_stats();
    if (pairs > st.peak_pairs) st.peak_pairs = pairs;
    const auto& l = current_limits();
    if (pairs > l.max_pairs)
        throw ResourceLimitExceeded(ResourceLimitExceeded::Kind::pairs, pairs, l.max_pairs);
}

inline void check_coeff_bits_cap(long long bits) {
    auto& st = usage_stats();
    if (bits > st.peak_coeff_bits) st.peak_coeff_bits = bits;
    const auto& l = current_limits();
    if (bits > l.max_coeff_bits)
        throw ResourceLimitExceeded(ResourceLimitExceeded::Kind::coefficient_bits, bits, l.max_coeff_bits);
}

} // namespace germ
