#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ideal.hpp"

namespace germ {

namespace detail {

inline std::string fresh_var_name(const Ring& r, const std::string& stem) {
    if (r->var_index(stem) < 0) return stem;
    for (int i = 0;; ++i) {
        std::string cand = stem + std::to_string(i);
        if (r->var_index(cand) < 0) return cand;
    }
}

/// Ring with one auxiliary variable appended, under an order eliminating it.
inline Ring extend_ring_elim_last(const Ring& r, const std::string& stem, int* out_idx) {
    std::vector<std::string> vars = r->vars;
    vars.push_back(fresh_var_name(r, stem));
    *out_idx = static_cast<int>(vars.size()) - 1;
    std::vector<char> block(vars.size(), 0);
    block.back() = 1;
    return make_ring(std::move(vars), MonomialOrder::elim_order(std::move(block)));
}

/// Move p into a ring over a subset of the variables. `var_map[i]` is the index
/// in the target ring of source variable i, or -1 if the variable must be gone.
template <class K>
Polynomial<K> project_poly(const Polynomial<K>& p, const Ring& target,
                           const std::vector<int>& var_map) {
    std::vector<Term<K>> ts;
    ts.reserve(p.nterms());
    for (const auto& t : p.terms()) {
        Monomial m(target->nvars());
        for (size_t i = 0; i < var_map.size(); ++i) {
            if (t.mon.e[i] == 0) continue;
            if (var_map[i] < 0)
                throw DomainError("projection would drop a variable still present");
            m.e[var_map[i]] = t.mon.e[i];
        }
        ts.push_back({t.coeff, std::move(m)});
    }
    return Polynomial<K>::from_terms(target, std::move(ts));
}

template <class K>
bool involves_vars(const Polynomial<K>& p, const std::vector<char>& mask) {
    for (const auto& t : p.terms())
        for (size_t i = 0; i < mask.size(); ++i)
            if (mask[i] && t.mon.e[i] > 0) return true;
    return false;
}

} // namespace detail

template <class K>
IdealT<K> ideal_sum(const IdealT<K>& a, const IdealT<K>& b) {
    require_same_ring(a.ring(), b.ring(), "ideal sum");
    std::vector<Polynomial<K>> gens = a.gens();
    for (const auto& g : b.gens()) gens.push_back(g);
    return IdealT<K>(a.ring(), std::move(gens));
}

/// Generators of the ideal that do not involve the masked variables, read off a
/// basis under an order eliminating them. Result stays in the same ring.
template <class K>
IdealT<K> eliminate(const IdealT<K>& a, const std::vector<char>& mask) {
    if (mask.size() != a.ring()->nvars()) throw DomainError("eliminate: mask arity mismatch");
    const auto& b = a.basis(MonomialOrder::elim_order(mask));
    std::vector<Polynomial<K>> keep;
    for (const auto& g : b.elems)
        if (!detail::involves_vars(g, mask)) keep.push_back(g.in_ring(a.ring()));
    return IdealT<K>(a.ring(), std::move(keep));
}

template <class K>
IdealT<K> eliminate(const IdealT<K>& a, const std::vector<int>& var_indices) {
    std::vector<char> mask(a.ring()->nvars(), 0);
    for (int i : var_indices) mask.at(i) = 1;
    return eliminate(a, mask);
}

/// A ∩ B via the auxiliary-variable trick: eliminate t from t·A + (1−t)·B.
template <class K>
IdealT<K> ideal_intersection(const IdealT<K>& a, const IdealT<K>& b) {
    require_same_ring(a.ring(), b.ring(), "ideal intersection");
    if (!a.has_generators() || !b.has_generators()) return IdealT<K>::zero(a.ring());

    int t_idx = 0;
    Ring ext = detail::extend_ring_elim_last(a.ring(), "t", &t_idx);
    std::vector<int> var_map(a.ring()->nvars());
    for (size_t i = 0; i < var_map.size(); ++i) var_map[i] = static_cast<int>(i);

    auto lift = [&](const Polynomial<K>& p) {
        std::vector<Term<K>> ts;
        for (const auto& t : p.terms()) {
            Monomial m(ext->nvars());
            for (size_t i = 0; i < var_map.size(); ++i) m.e[i] = t.mon.e[i];
            ts.push_back({t.coeff, std::move(m)});
        }
        return Polynomial<K>::from_terms(ext, std::move(ts));
    };

    Polynomial<K> t = Polynomial<K>::variable(ext, t_idx);
    Polynomial<K> one_minus_t = Polynomial<K>::constant(ext, K(1)) - t;
    std::vector<Polynomial<K>> gens;
    for (const auto& g : a.gens()) gens.push_back(t * lift(g));
    for (const auto& g : b.gens()) gens.push_back(one_minus_t * lift(g));

    IdealT<K> j(ext, std::move(gens));
    std::vector<char> mask(ext->nvars(), 0);
    mask[t_idx] = 1;
    IdealT<K> elim = eliminate(j, mask);

    std::vector<int> back(ext->nvars(), -1);
    for (size_t i = 0; i + 1 < ext->nvars(); ++i) back[i] = static_cast<int>(i);
    std::vector<Polynomial<K>> out;
    for (const auto& g : elim.gens()) out.push_back(detail::project_poly(g, a.ring(), back));
    return IdealT<K>(a.ring(), std::move(out));
}

/// Exact division q = p / f for p known to lie in (f).
template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& p, const Polynomial<K>& f) {
    require_same_ring(p.ring(), f.ring(), "exact division");
    if (f.is_zero()) throw DomainError("exact division by zero polynomial");
    Ring work = with_order(p.ring(), p.ring()->order.is_global()
                                         ? p.ring()->order
                                         : MonomialOrder::degrevlex_order());
    Polynomial<K> h = p.in_ring(work), d = f.in_ring(work);
    std::vector<Term<K>> q;
    while (!h.is_zero()) {
        if (!d.leading_monomial().divides(h.leading_monomial()))
            throw DomainError("exact division failed: not a multiple");
        K c = h.leading_coeff() / d.leading_coeff();
        Monomial shift = d.leading_monomial().divide_into(h.leading_monomial());
        q.push_back({c, shift});
        h = h.axpy_step(c, shift, d);
    }
    return Polynomial<K>::from_terms(work, std::move(q)).in_ring(p.ring());
}

/// Greatest common divisor, monic; p*q divided by the generator of the
/// principal ideal (p) ∩ (q).
template <class K>
Polynomial<K> poly_gcd(const Polynomial<K>& p, const Polynomial<K>& q) {
    require_same_ring(p.ring(), q.ring(), "polynomial gcd");
    if (p.is_zero()) return q.is_zero() ? q : q.monic();
    if (q.is_zero()) return p.monic();
    if (p.is_constant() || q.is_constant())
        return Polynomial<K>::constant(p.ring(), K(1));
    IdealT<K> meet = ideal_intersection(IdealT<K>(p.ring(), {p}), IdealT<K>(p.ring(), {q}));
    const auto& b = meet.groebner();
    if (b.elems.size() != 1)
        throw DomainError("intersection of principal ideals came out non-principal");
    return exact_divide(p * q, b.elems[0].in_ring(p.ring())).monic();
}

/// Product of the distinct irreducible factors: g / gcd(g, all partials).
/// Sound over characteristic zero only.
template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& g) {
    if (g.is_zero() || g.is_constant()) return g;
    if (g.nterms() == 1) {
        Monomial m = g.leading_monomial();
        for (auto& e : m.e) e = e ? 1 : 0;
        return Polynomial<K>::monomial_term(g.ring(), K(1), std::move(m));
    }
    Polynomial<K> d = g;
    for (size_t i = 0; i < g.ring()->nvars() && !d.is_constant(); ++i) {
        Polynomial<K> gi = g.partial_derivative(i);
        if (!gi.is_zero()) d = poly_gcd(d, gi);
    }
    if (d.is_constant()) return g.monic();
    return exact_divide(g, d).monic();
}

/// A : (f), computed from A ∩ (f) by exact division.
template <class K>
IdealT<K> ideal_quotient(const IdealT<K>& a, const Polynomial<K>& f) {
    require_same_ring(a.ring(), f.ring(), "ideal quotient");
    if (f.is_zero()) return IdealT<K>::unit(a.ring());
    IdealT<K> principal(a.ring(), {f});
    IdealT<K> inter = ideal_intersection(a, principal);
    std::vector<Polynomial<K>> gens;
    for (const auto& g : inter.gens()) gens.push_back(exact_divide(g, f));
    if (gens.empty() && !a.has_generators()) return IdealT<K>::zero(a.ring());
    return IdealT<K>(a.ring(), std::move(gens));
}

/// A : B = ∩ over generators b of B of A : (b).
template <class K>
IdealT<K> ideal_quotient(const IdealT<K>& a, const IdealT<K>& b) {
    require_same_ring(a.ring(), b.ring(), "ideal quotient");
    if (!b.has_generators()) return IdealT<K>::unit(a.ring());
    bool first = true;
    IdealT<K> acc;
    for (const auto& g : b.gens()) {
        IdealT<K> q = ideal_quotient(a, g);
        acc = first ? q : ideal_intersection(acc, q);
        first = false;
    }
    return acc;
}

/// Saturation A : B^∞ by iterated quotient until the basis stabilizes.
/// Also reports the saturation index (number of quotient steps taken).
template <class K>
std::pair<IdealT<K>, int> saturate_with_index(const IdealT<K>& a, const IdealT<K>& b) {
    require_same_ring(a.ring(), b.ring(), "saturation");
    IdealT<K> cur = a;
    int steps = 0;
    for (;;) {
        IdealT<K> next = ideal_quotient(cur, b);
        if (ideal_equal(next, cur)) return {cur, steps};
        cur = next;
        ++steps;
        if (steps > 256)
            throw ResourceLimitExceeded(ResourceLimitExceeded::Kind::pairs, steps, 256);
    }
}

template <class K>
IdealT<K> saturate(const IdealT<K>& a, const IdealT<K>& b) {
    return saturate_with_index(a, b).first;
}

template <class K>
IdealT<K> saturate(const IdealT<K>& a, const Polynomial<K>& f) {
    return saturate(a, IdealT<K>(a.ring(), {f}));
}

/// Rabinowitsch test: f vanishes on V(A) iff 1 ∈ A + (1 − t·f).
template <class K>
bool radical_membership(const Polynomial<K>& f, const IdealT<K>& a) {
    require_same_ring(f.ring(), a.ring(), "radical membership");
    if (f.is_zero()) return true;
    int t_idx = 0;
    Ring ext = detail::extend_ring_elim_last(a.ring(), "t", &t_idx);

    auto lift = [&](const Polynomial<K>& p) {
        std::vector<Term<K>> ts;
        for (const auto& t : p.terms()) {
            Monomial m(ext->nvars());
            for (size_t i = 0; i + 1 < ext->nvars(); ++i) m.e[i] = t.mon.e[i];
            ts.push_back({t.coeff, std::move(m)});
        }
        return Polynomial<K>::from_terms(ext, std::move(ts));
    };

    std::vector<Polynomial<K>> gens;
    for (const auto& g : a.gens()) gens.push_back(lift(g));
    Polynomial<K> t = Polynomial<K>::variable(ext, t_idx);
    gens.push_back(Polynomial<K>::constant(ext, K(1)) - t * lift(f));
    return IdealT<K>(ext, std::move(gens)).is_unit();
}

} // namespace germ
