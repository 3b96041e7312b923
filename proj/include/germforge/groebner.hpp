#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "limits.hpp"
#include "polynomial.hpp"

namespace germ {

template <class K>
struct Basis {
    enum class Kind { reduced_groebner, standard_local };

    Ring ring;   // carries the order the basis was computed under
    Kind kind = Kind::reduced_groebner;
    std::vector<Polynomial<K>> elems;  // monic, sorted ascending by leading monomial

    bool is_unit() const {
        return elems.size() == 1 && elems[0].is_constant() && !elems[0].is_zero();
    }
    bool is_zero() const { return elems.empty(); }

    std::vector<Monomial> leading_monomials() const {
        std::vector<Monomial> r;
        r.reserve(elems.size());
        for (const auto& g : elems) r.push_back(g.leading_monomial());
        return r;
    }
};

namespace detail {

template <class K>
void check_poly_caps(const Polynomial<K>& p) {
    if (p.is_zero()) return;
    check_degree_cap(p.degree());
    check_coeff_bits_cap(p.max_coeff_bits());
}

// One cancellation step: h - (lc(h)/lc(g)) * x^(lm(h)-lm(g)) * g.
template <class K>
Polynomial<K> cancel_leading(const Polynomial<K>& h, const Polynomial<K>& g) {
    Monomial shift = g.leading_monomial().divide_into(h.leading_monomial());
    K c = h.leading_coeff() / g.leading_coeff();
    return h.axpy_step(c, shift, g);
}

// Classical division with full tail reduction. Requires a global order:
// leading monomials strictly decrease, so this terminates.
template <class K>
Polynomial<K> divide_global(const Polynomial<K>& f, const std::vector<Polynomial<K>>& gens) {
    Polynomial<K> h = f;
    std::vector<Term<K>> remainder;
    while (!h.is_zero()) {
        const Monomial& lm = h.leading_monomial();
        const Polynomial<K>* divisor = nullptr;
        for (const auto& g : gens) {
            if (!g.is_zero() && g.leading_monomial().divides(lm)) { divisor = &g; break; }
        }
        if (divisor) {
            h = cancel_leading(h, *divisor);
            check_poly_caps(h);
        } else {
            remainder.push_back(h.leading_term());
            h = h - Polynomial<K>::monomial_term(h.ring(), h.leading_term().coeff, lm);
        }
    }
    return Polynomial<K>::from_terms(f.ring(), std::move(remainder));
}

// Mora's weak normal form with the ecart selection rule. Valid for any order;
// for local orders it is the division that makes standard bases work. The
// returned remainder r satisfies u*f = sum q_i g_i + r with u a unit of the
// localization, which is exactly what germ-level membership needs.
template <class K>
Polynomial<K> mora_normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& gens) {
    Polynomial<K> h = f;
    std::vector<Polynomial<K>> t(gens.begin(), gens.end());
    long long steps = 0;
    while (!h.is_zero()) {
        const Monomial& lm = h.leading_monomial();
        int best = -1, best_ecart = 0;
        for (size_t i = 0; i < t.size(); ++i) {
            if (t[i].is_zero() || !t[i].leading_monomial().divides(lm)) continue;
            int e = t[i].ecart();
            if (best < 0 || e < best_ecart) { best = static_cast<int>(i); best_ecart = e; }
        }
        if (best < 0) break;
        if (best_ecart > h.ecart()) t.push_back(h);
        h = cancel_leading(h, t[best]);
        check_poly_caps(h);
        if (++steps > 5000000)
            throw ResourceLimitExceeded(ResourceLimitExceeded::Kind::pairs, steps, 5000000);
    }
    return h;
}

template <class K>
Polynomial<K> normal_form_impl(const Polynomial<K>& f, const std::vector<Polynomial<K>>& gens,
                               bool global) {
    return global ? divide_global(f, gens) : mora_normal_form(f, gens);
}

template <class K>
Polynomial<K> spoly(const Polynomial<K>& f, const Polynomial<K>& g) {
    Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Monomial sf = f.leading_monomial().divide_into(l);
    Monomial sg = g.leading_monomial().divide_into(l);
    Polynomial<K> a = Polynomial<K>::monomial_term(f.ring(), f.leading_coeff().inv(), sf) * f;
    Polynomial<K> b = Polynomial<K>::monomial_term(g.ring(), g.leading_coeff().inv(), sg) * g;
    return a - b;
}

// Buchberger's algorithm with the sugar selection strategy; with Mora's normal
// form in place of ordinary division it computes standard bases for local
// orders. Product criterion only under global orders, chain criterion always.
template <class K>
std::vector<Polynomial<K>> buchberger_loop(std::vector<Polynomial<K>> basis, bool global) {
    const Ring ring = basis.empty() ? Ring{} : basis[0].ring();
    const MonomialOrder* ord = ring ? &ring->order : nullptr;

    std::vector<int> sugar;
    for (auto& g : basis) sugar.push_back(g.degree());

    struct PairKey {
        int sugar;
        Monomial lcm_mon;
        int i, j;
    };
    auto key_less = [ord](const PairKey& a, const PairKey& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = ord->compare(a.lcm_mon, b.lcm_mon);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<PairKey> queue;
    std::set<std::pair<int, int>> pending;
    auto push_pair = [&](int i, int j) {
        Monomial l = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        int s = std::max(sugar[i] + l.degree() - basis[i].leading_monomial().degree(),
                         sugar[j] + l.degree() - basis[j].leading_monomial().degree());
        queue.push_back({s, std::move(l), i, j});
        pending.insert({i, j});
    };

    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            push_pair(static_cast<int>(i), static_cast<int>(j));

    long long processed = 0;
    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), key_less);
        PairKey pk = *it;
        queue.erase(it);
        pending.erase({pk.i, pk.j});
        check_pair_cap(++processed);

        const auto& fi = basis[pk.i];
        const auto& fj = basis[pk.j];
        if (global && coprime(fi.leading_monomial(), fj.leading_monomial())) continue;

        bool chained = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            int kk = static_cast<int>(k);
            if (kk == pk.i || kk == pk.j) continue;
            if (!basis[k].leading_monomial().divides(pk.lcm_mon)) continue;
            std::pair<int, int> p1{std::min(pk.i, kk), std::max(pk.i, kk)};
            std::pair<int, int> p2{std::min(pk.j, kk), std::max(pk.j, kk)};
            if (!pending.count(p1) && !pending.count(p2)) {
                chained = true;
                break;
            }
        }
        if (chained) continue;

        Polynomial<K> s = spoly(fi, fj);
        if (s.is_zero()) continue;
        check_poly_caps(s);
        Polynomial<K> h = normal_form_impl(s, basis, global);
        if (h.is_zero()) continue;
        h = h.monic();
        check_poly_caps(h);

        int h_sugar = std::max(pk.sugar, h.degree());
        int idx = static_cast<int>(basis.size());
        basis.push_back(std::move(h));
        sugar.push_back(h_sugar);
        if (basis[idx].is_constant()) break;  // unit ideal, nothing else matters
        for (int i = 0; i < idx; ++i) push_pair(i, idx);
    }
    return basis;
}

template <class K>
std::vector<Polynomial<K>> minimalize(std::vector<Polynomial<K>> basis,
                                      const MonomialOrder& ord) {
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const Polynomial<K>& p) { return p.is_zero(); }),
                basis.end());
    for (auto& g : basis)
        if (g.is_constant()) return {Polynomial<K>::constant(g.ring(), K(1))};
    std::sort(basis.begin(), basis.end(), [&](const auto& a, const auto& b) {
        return ord.less(a.leading_monomial(), b.leading_monomial());
    });
    std::vector<Polynomial<K>> out;
    for (auto& g : basis) {
        bool redundant = false;
        for (const auto& kept : out)
            if (kept.leading_monomial().divides(g.leading_monomial())) { redundant = true; break; }
        if (!redundant) out.push_back(std::move(g));
    }
    return out;
}

} // namespace detail

/// Reduced Groebner basis (global order) or minimal standard basis (local order)
/// of the given generators, computed in `ring` (whose order is used throughout).
template <class K>
Basis<K> compute_basis(const std::vector<Polynomial<K>>& gens, const Ring& ring) {
    bool global = ring->order.is_global();
    std::vector<Polynomial<K>> work;
    for (const auto& g : gens) {
        require_same_ring(g.ring(), ring, "basis computation generator");
        if (g.is_zero()) continue;
        detail::check_poly_caps(g);
        work.push_back(g.monic());
    }

    Basis<K> b;
    b.ring = ring;
    b.kind = global ? Basis<K>::Kind::reduced_groebner : Basis<K>::Kind::standard_local;
    if (work.empty()) return b;

    auto full = detail::buchberger_loop(std::move(work), global);
    auto minimal = detail::minimalize(std::move(full), ring->order);

    if (global) {
        // tail-reduce each element against the others: the reduced basis is
        // unique for the ideal and order, independent of generator presentation
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial<K>> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            minimal[i] = detail::divide_global(minimal[i], others).monic();
        }
    }
    for (auto& g : minimal) g = g.monic();
    b.elems = std::move(minimal);
    return b;
}

/// Remainder of f on division by the basis: ordinary division under global
/// orders, Mora's weak normal form under local ones. Zero iff f lies in the
/// ideal (respectively, in its localization at the origin).
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const Basis<K>& b) {
    Polynomial<K> g = f.in_ring(b.ring);
    if (b.elems.empty()) return g;
    return detail::normal_form_impl(g, b.elems, b.ring->order.is_global());
}

} // namespace germ
