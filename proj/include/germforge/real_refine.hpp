#pragma once

#include "ideal.hpp"
#include "map_germ.hpp"

namespace germ {

namespace detail {

/// Split g when it is a weighted sum of squares of monomials: all exponents
/// even and all coefficients of one sign. Over the reals such a g vanishes
/// exactly where every square-root monomial does.
inline bool sos_split(const QPoly& g, std::vector<QPoly>& parts) {
    if (g.is_zero()) return false;
    int sign = 0;
    for (const auto& t : g.terms()) {
        for (int e : t.mon.e)
            if (e % 2 != 0) return false;
        int s = t.coeff.sign();
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    parts.clear();
    for (const auto& t : g.terms()) {
        Monomial half = t.mon;
        for (int& e : half.e) e /= 2;
        parts.push_back(QPoly::monomial_term(g.ring(), Rational(1), half));
    }
    // degree-0 parts mean g has a nonzero constant term, so V_R(g) is empty
    return !(parts.size() == 1 && parts[0] == g);
}

/// Split g = m * q with m the common monomial factor. When q is sign-definite
/// (nonzero constant term, even exponents, one sign throughout), the real
/// zeros of g are the zeros of m, and exponents in m can be capped at one.
inline bool strip_definite_cofactor(const QPoly& g, QPoly& out) {
    if (g.is_zero()) return false;
    Monomial m = g.leading_monomial();
    for (const auto& t : g.terms())
        for (size_t i = 0; i < m.e.size(); ++i)
            m.e[i] = std::min(m.e[i], t.mon.e[i]);
    bool has_const = false;
    int sign = 0;
    for (const auto& t : g.terms()) {
        bool unit_term = true;
        for (size_t i = 0; i < m.e.size(); ++i) {
            int q = t.mon.e[i] - m.e[i];
            if (q % 2 != 0) return false;
            if (q != 0) unit_term = false;
        }
        has_const = has_const || unit_term;
        int s = t.coeff.sign();
        if (sign == 0) sign = s;
        else if (s != sign) return false;
    }
    if (!has_const) return false;
    for (auto& e : m.e) e = e ? 1 : 0;
    out = QPoly::monomial_term(g.ring(), Rational(1), m);
    return !(out == g);
}

} // namespace detail

/// Real-points refinement: repeatedly replace sum-of-squares basis elements by
/// their square-root monomials and re-reduce. The result A' satisfies
/// V_R(A') = V_R(A) and V_C(A') subset of V_C(A); it is a sound partial step
/// toward the real radical, not the full real radical.
inline Ideal real_refine(const Ideal& a) {
    if (!a.has_generators()) return a;
    Ideal cur = a;
    for (int round = 0; round < 64; ++round) {
        const auto& basis = cur.groebner();
        if (basis.is_unit()) return Ideal::unit(a.ring());
        bool changed = false;
        std::vector<QPoly> gens;
        std::vector<QPoly> parts;
        QPoly stripped;
        for (const auto& g : basis.elems) {
            if (detail::sos_split(g, parts)) {
                changed = true;
                for (auto& p : parts) gens.push_back(std::move(p));
            } else if (detail::strip_definite_cofactor(g, stripped)) {
                changed = true;
                gens.push_back(stripped);
            } else {
                gens.push_back(g);
            }
        }
        if (!changed) return cur;
        cur = Ideal(a.ring(), gens);
    }
    return cur;
}

/// Apply the refinement only in real mode; complex mode keeps exact Zariski
/// semantics.
inline Ideal refine_for(Field field, const Ideal& a) {
    return field == Field::real ? real_refine(a) : a;
}

} // namespace germ
