#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace germ {

/// Exponent vector, one entry per ambient variable.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    size_t nvars() const { return e.size(); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r(a.e.size());
        for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }

    bool divides(const Monomial& other) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > other.e[i]) return false;
        return true;
    }

    /// other / this; caller guarantees divisibility.
    Monomial divide_into(const Monomial& other) const {
        Monomial r(e.size());
        for (size_t i = 0; i < e.size(); ++i) r.e[i] = other.e[i] - e[i];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a.e.size());
        for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] > 0 && b.e[i] > 0) return false;
        return true;
    }
};

enum class OrderKind {
    lex,             // pure lexicographic
    degrevlex,       // total degree, ties by reverse lexicographic
    local_degrevlex, // smaller total degree wins; the order for local (germ) computations
    elim,            // block order: eliminated block by degrevlex first, rest by degrevlex
};

/// Monomial order on a fixed number of variables. `priority` optionally permutes
/// the variables (priority[0] is the most significant); `block[i]` marks variable i
/// as belonging to the eliminated front block of an `elim` order.
struct MonomialOrder {
    OrderKind kind = OrderKind::degrevlex;
    std::vector<int> priority;  // empty = identity
    std::vector<char> block;    // only for elim

    static MonomialOrder lex_order(std::vector<int> prio = {}) {
        return MonomialOrder{OrderKind::lex, std::move(prio), {}};
    }
    static MonomialOrder degrevlex_order(std::vector<int> prio = {}) {
        return MonomialOrder{OrderKind::degrevlex, std::move(prio), {}};
    }
    static MonomialOrder local_order(std::vector<int> prio = {}) {
        return MonomialOrder{OrderKind::local_degrevlex, std::move(prio), {}};
    }
    static MonomialOrder elim_order(std::vector<char> eliminated) {
        return MonomialOrder{OrderKind::elim, {}, std::move(eliminated)};
    }

    bool is_global() const { return kind != OrderKind::local_degrevlex; }

    /// >0 if a > b, <0 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (kind) {
        case OrderKind::lex: {
            if (priority.empty()) {
                for (size_t i = 0; i < a.e.size(); ++i)
                    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
                return 0;
            }
            for (int idx : priority)
                if (a.e[idx] != b.e[idx]) return a.e[idx] > b.e[idx] ? 1 : -1;
            return 0;
        }
        case OrderKind::degrevlex:
            return degrevlex_cmp(a, b, /*negate_degree=*/false);
        case OrderKind::local_degrevlex:
            return degrevlex_cmp(a, b, /*negate_degree=*/true);
        case OrderKind::elim: {
            int d1a = 0, d1b = 0;
            for (size_t i = 0; i < a.e.size(); ++i)
                if (block[i]) { d1a += a.e[i]; d1b += b.e[i]; }
            if (d1a != d1b) return d1a > d1b ? 1 : -1;
            // revlex within the front block
            for (size_t i = a.e.size(); i-- > 0;) {
                if (!block[i]) continue;
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            }
            int d2a = a.degree() - d1a, d2b = b.degree() - d1b;
            if (d2a != d2b) return d2a > d2b ? 1 : -1;
            for (size_t i = a.e.size(); i-- > 0;) {
                if (block[i]) continue;
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            }
            return 0;
        }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && a.priority == b.priority && a.block == b.block;
    }

    /// Stable string form, used as a cache key for per-order bases.
    std::string key() const {
        std::string s;
        switch (kind) {
        case OrderKind::lex: s = "lex"; break;
        case OrderKind::degrevlex: s = "degrevlex"; break;
        case OrderKind::local_degrevlex: s = "local"; break;
        case OrderKind::elim: s = "elim"; break;
        }
        if (!priority.empty()) {
            s += ":p";
            for (int i : priority) s += std::to_string(i) + ",";
        }
        if (!block.empty()) {
            s += ":b";
            for (char c : block) s += c ? '1' : '0';
        }
        return s;
    }

private:
    int degrevlex_cmp(const Monomial& a, const Monomial& b, bool negate_degree) const {
        int da = a.degree(), db = b.degree();
        if (da != db) {
            bool bigger = negate_degree ? da < db : da > db;
            return bigger ? 1 : -1;
        }
        if (priority.empty()) {
            for (size_t i = a.e.size(); i-- > 0;)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            return 0;
        }
        for (size_t r = priority.size(); r-- > 0;) {
            int idx = priority[r];
            if (a.e[idx] != b.e[idx]) return a.e[idx] < b.e[idx] ? 1 : -1;
        }
        return 0;
    }
};

} // namespace germ
