#pragma once

#include <optional>
#include <vector>

#include "ideal.hpp"

namespace germ {

/// Krull dimension result. dim = -1 means the variety is empty. The witness is
/// a maximal set of variables that stays algebraically independent modulo the
/// ideal (empty for dim <= 0).
struct DimensionResult {
    int dim = -1;
    std::vector<int> witness_vars;
};

namespace detail {

/// Max size of a subset S of variables such that no leading monomial is
/// supported entirely inside S; this is the dimension of the monomial ideal.
inline DimensionResult monomial_ideal_dimension(const std::vector<Monomial>& lms, size_t nvars) {
    for (const auto& m : lms)
        if (m.is_one()) return {-1, {}};

    std::vector<std::vector<int>> supports;
    supports.reserve(lms.size());
    for (const auto& m : lms) {
        std::vector<int> s;
        for (size_t i = 0; i < nvars; ++i)
            if (m.e[i] > 0) s.push_back(static_cast<int>(i));
        supports.push_back(std::move(s));
    }

    if (nvars > 24) throw DomainError("dimension: too many variables");
    int best = -1;
    std::vector<int> witness;
    // subsets in decreasing-size, then lexicographic order; first hit is the witness
    for (int size = static_cast<int>(nvars); size >= 0; --size) {
        std::vector<int> subset(size);
        for (int i = 0; i < size; ++i) subset[i] = i;
        for (;;) {
            unsigned mask = 0;
            for (int i : subset) mask |= 1u << i;
            bool independent = true;
            for (const auto& s : supports) {
                bool inside = true;
                for (int v : s)
                    if (!(mask & (1u << v))) { inside = false; break; }
                if (inside) { independent = false; break; }
            }
            if (independent) {
                best = size;
                witness = subset;
                break;
            }
            // next combination
            int i = size - 1;
            while (i >= 0 && subset[i] == static_cast<int>(nvars) - size + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
        if (best >= 0) break;
    }
    return {best, witness};
}

/// Count of monomials outside a monomial ideal; nullopt if infinite.
inline std::optional<long long> staircase_count(const std::vector<Monomial>& lms, size_t nvars) {
    for (const auto& m : lms)
        if (m.is_one()) return 0;
    // finite iff every variable has a pure power among the leading monomials
    std::vector<int> bound(nvars, -1);
    for (const auto& m : lms) {
        int var = -1;
        bool pure = true;
        for (size_t i = 0; i < nvars; ++i) {
            if (m.e[i] == 0) continue;
            if (var >= 0) { pure = false; break; }
            var = static_cast<int>(i);
        }
        if (pure && var >= 0)
            bound[var] = bound[var] < 0 ? m.e[var] : std::min(bound[var], m.e[var]);
    }
    for (size_t i = 0; i < nvars; ++i)
        if (bound[i] < 0) return std::nullopt;

    // every standard monomial lies in the box below the pure-power bounds
    long long box = 1;
    for (size_t i = 0; i < nvars; ++i) {
        box *= bound[i];
        if (box > 50000000)
            throw ResourceLimitExceeded(ResourceLimitExceeded::Kind::degree, box, 50000000);
    }
    auto divisible = [&](const Monomial& m) {
        for (const auto& lm : lms)
            if (lm.divides(m)) return true;
        return false;
    };
    long long count = 0;
    Monomial cur(nvars);
    for (;;) {
        if (!divisible(cur)) ++count;
        size_t i = 0;
        while (i < nvars && ++cur.e[i] >= bound[i]) {
            cur.e[i] = 0;
            ++i;
        }
        if (i == nvars) break;
    }
    return count;
}

} // namespace detail

/// Dimension of V(A) in affine space (over the algebraic closure), from the
/// staircase of a degrevlex Groebner basis. -1 for the unit ideal.
template <class K>
DimensionResult dimension(const IdealT<K>& a) {
    const auto& b = a.groebner();
    if (b.is_zero()) {
        DimensionResult r;
        r.dim = static_cast<int>(a.ring()->nvars());
        for (size_t i = 0; i < a.ring()->nvars(); ++i) r.witness_vars.push_back(static_cast<int>(i));
        return r;
    }
    return detail::monomial_ideal_dimension(b.leading_monomials(), a.ring()->nvars());
}

/// Dimension of the germ of V(A) at the origin: the dimension of the leading
/// ideal of a local standard basis. -1 when the origin is excluded, i.e. some
/// basis element has a nonzero constant term.
template <class K>
DimensionResult local_dimension_at_origin(const IdealT<K>& a) {
    const auto& b = a.standard_local();
    if (b.is_zero()) {
        DimensionResult r;
        r.dim = static_cast<int>(a.ring()->nvars());
        for (size_t i = 0; i < a.ring()->nvars(); ++i) r.witness_vars.push_back(static_cast<int>(i));
        return r;
    }
    if (b.is_unit()) return {-1, {}};
    return detail::monomial_ideal_dimension(b.leading_monomials(), a.ring()->nvars());
}

/// Vector-space dimension of the local quotient ring O_0 / A (count of standard
/// monomials of a local standard basis); nullopt = infinite.
template <class K>
std::optional<long long> colength(const IdealT<K>& a) {
    const auto& b = a.standard_local();
    if (b.is_zero()) return a.ring()->nvars() == 0 ? std::optional<long long>(1) : std::nullopt;
    return detail::staircase_count(b.leading_monomials(), a.ring()->nvars());
}

/// Vector-space dimension of K[x]/A (all points together); nullopt = infinite.
template <class K>
std::optional<long long> colength_global(const IdealT<K>& a) {
    const auto& b = a.groebner();
    if (b.is_zero()) return a.ring()->nvars() == 0 ? std::optional<long long>(1) : std::nullopt;
    return detail::staircase_count(b.leading_monomials(), a.ring()->nvars());
}

} // namespace germ
