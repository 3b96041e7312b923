#pragma once

#include <optional>

#include "milnor.hpp"

namespace germ {

/// Outcome of a set-germ inclusion test at the origin, with a re-checkable
/// certificate: either a basis element with nonzero constant term (the
/// decisive saturation excludes the origin) or a computed local dimension.
struct GermInclusionVerdict {
    bool holds = false;
    Ideal lhs_ideal;
    std::string rhs_description;
    std::string certificate_kind; // "origin-excluded" or "local-dim"
    std::string certificate;
    int local_dim = -2; // set for local-dim certificates
    std::vector<std::string> caveats;
};

/// V(A) ⊆ {0} as germs at the origin: the local dimension of A is at most 0
/// (covers both an isolated point at the origin and the empty germ).
inline GermInclusionVerdict germ_subset_of_origin(const Ideal& a) {
    GermInclusionVerdict v;
    v.lhs_ideal = a;
    v.rhs_description = "{0}";
    v.local_dim = local_dimension_at_origin(a).dim;
    v.holds = v.local_dim <= 0;
    v.certificate_kind = "local-dim";
    v.certificate = "local dimension at origin = " + std::to_string(v.local_dim);
    return v;
}

namespace detail {

/// The origin lies in V(A) iff every generator vanishes there.
inline const QPoly* origin_excluding_element(const Ideal& a) {
    for (const auto& g : a.gens())
        if (!g.constant_term().is_zero()) return &g;
    return nullptr;
}

} // namespace detail

/// Saturation interleaved with real refinement to a fixed point: refining can
/// expose square-root monomials that the next saturation round removes by.
/// In complex mode this is a single plain saturation.
inline Ideal saturate_refined(const Ideal& a, const Ideal& b, Field field) {
    Ideal s = saturate(a, b);
    if (field != Field::real) return s;
    for (int round = 0; round < 8; ++round) {
        Ideal next = saturate(real_refine(s), b);
        if (next.groebner().elems == s.groebner().elems) return next;
        s = std::move(next);
    }
    return s;
}

inline Ideal saturate_refined(const Ideal& a, const QPoly& g, Field field) {
    return saturate_refined(a, Ideal(g.ring(), {g}), field);
}

/// V(A) ⊆ V(B) as germs at the origin, decided generator by generator: for
/// each generator b of B, the closure of V(A) ∖ V(b) must miss the origin,
/// i.e. sat(A,(b)) must contain an element with nonzero constant term.
inline GermInclusionVerdict germ_subset(const Ideal& a, const Ideal& b,
                                        Field field = Field::complex) {
    require_same_ring(a.ring(), b.ring(), "germ inclusion");
    GermInclusionVerdict v;
    v.lhs_ideal = a;
    v.rhs_description = "V(" + std::to_string(b.gens().size()) + " generators)";
    v.holds = true;
    v.certificate_kind = "origin-excluded";
    for (const auto& g : b.gens()) {
        Ideal s = saturate_refined(a, g, field);
        const QPoly* witness = detail::origin_excluding_element(s);
        if (!witness) {
            v.holds = false;
            v.lhs_ideal = s;
            v.certificate_kind.clear();
            v.certificate = "V(sat(A,(" + g.str() + "))) contains the origin";
            return v;
        }
        if (v.certificate.empty())
            v.certificate = witness->str() + " in sat(A,(" + g.str() + "))";
    }
    if (b.gens().empty()) {
        // B = (0): V(B) is everything, inclusion is vacuous
        v.certificate_kind = "local-dim";
        v.certificate = "right-hand side is the whole space";
    }
    return v;
}

struct TamenessReport {
    std::string map_label;
    Field field = Field::real;
    std::string fast_path; // "zero-fiber" when the verdict came from a fast path
    std::string stratification_summary;
    std::optional<MilnorSetResult> milnor;
    std::optional<Ideal> t_ideal; // closure(M ∖ fiber) ∩ fiber
    GermInclusionVerdict tame;
    std::vector<std::string> caveats;
};

namespace detail {

inline std::string summarize(const Stratification& s) {
    std::string out;
    for (const auto& st : s.strata) {
        if (!out.empty()) out += ", ";
        out += st.label + " (dim " + std::to_string(st.dim) + ", rank " +
               std::to_string(st.expected_rank) + ")";
    }
    return out.empty() ? "(no strata meet the origin)" : out;
}

inline void dimension_scope_caveats(const MapGerm& g, std::vector<std::string>& caveats) {
    size_t m = g.source->nvars(), p = g.target->nvars();
    if (!(m > p && p >= 2))
        caveats.push_back("map dimensions outside m > p >= 2; the verdict is computed from "
                          "the same Milnor-set construction");
}

} // namespace detail

/// Tameness with respect to a given stratification: the closure of
/// M_W(G) ∖ G⁻¹(0) meets G⁻¹(0) at most at the origin.
inline TamenessReport is_tame(const MapGerm& g, const Stratification& s) {
    TamenessReport r;
    r.map_label = g.name;
    r.field = g.field;
    r.stratification_summary = detail::summarize(s);
    detail::dimension_scope_caveats(g, r.caveats);
    r.milnor = milnor_set(g, s);
    for (const auto& c : r.milnor->caveats) r.caveats.push_back(c);
    Ideal fib = refine_for(g.field, fiber_ideal(g));
    r.t_ideal = refine_for(
        g.field, ideal_sum(saturate_refined(r.milnor->union_ideal, fib, g.field), fib));
    r.tame = germ_subset_of_origin(*r.t_ideal);
    dedupe_caveats(r.caveats);
    return r;
}

/// Tameness with the stratification built from the rank strata of G. Maps
/// whose zero fiber is at most the origin are tame outright; that fast path
/// is taken first.
inline TamenessReport is_tame(const MapGerm& g) {
    Ideal fib = refine_for(g.field, fiber_ideal(g));
    GermInclusionVerdict fiber_check = germ_subset_of_origin(fib);
    if (fiber_check.holds) {
        TamenessReport r;
        r.map_label = g.name;
        r.field = g.field;
        r.fast_path = "zero-fiber";
        r.stratification_summary = "(not needed: zero fiber)";
        r.tame = fiber_check;
        r.tame.rhs_description = "{0} (the zero fiber itself)";
        detail::dimension_scope_caveats(g, r.caveats);
        return r;
    }
    Stratification s = refine_to_constant_rank(rank_stratification(g), g);
    return is_tame(g, s);
}

/// Sing F ∩ F⁻¹(0) ⊆ {0}: a sufficient condition for tameness (the zero
/// fiber away from the origin is then a Thom-regular stratum).
inline bool remark_36_shortcut(const MapGerm& f) {
    Ideal a = refine_for(f.field,
                         ideal_sum(singular_locus_ideal(f), fiber_ideal(f)));
    return germ_subset_of_origin(a).holds;
}

struct ComposabilityReport {
    MapGerm f, g, h;
    AdaptedStratifications strat;
    MilnorSetResult milnor_h;
    Ideal fiber_h; // refined I(H⁻¹(0))
    Ideal fiber_f; // refined I(F⁻¹(0))
    Ideal a1;      // closure(M_W(H) ∖ H⁻¹(0)) ∩ H⁻¹(0)
    GermInclusionVerdict composable; // a1 ⊆ F⁻¹(0) as germs
    std::vector<std::string> caveats;
};

/// Tamely composable: closure(M_W(H) ∖ H⁻¹(0)) ∩ H⁻¹(0) ⊆ F⁻¹(0) as germs,
/// with M_W(H) taken on the stratification adapted to the composition.
inline ComposabilityReport is_tamely_composable(const MapGerm& f, const MapGerm& g) {
    ComposabilityReport r;
    r.f = f;
    r.g = g;
    r.h = compose(g, f);
    r.strat = adapted_stratifications(f, g);
    r.caveats = r.strat.caveats;
    r.milnor_h = milnor_set(r.h, r.strat.w);
    r.fiber_h = refine_for(r.h.field, fiber_ideal(r.h));
    r.fiber_f = refine_for(r.h.field, fiber_ideal(f));
    r.a1 = refine_for(
        r.h.field,
        ideal_sum(saturate_refined(r.milnor_h.union_ideal, r.fiber_h, r.h.field),
                  r.fiber_h));
    r.composable = germ_subset(r.a1, r.fiber_f, r.h.field);
    r.composable.rhs_description = "F^-1(0)";
    dedupe_caveats(r.caveats);
    return r;
}

struct EquivalentFormsReport {
    GermInclusionVerdict first;       // the defining form, copied from the report
    GermInclusionVerdict with_sing_h; // same left side intersected with Sing H
    GermInclusionVerdict image_form;  // pushed to the middle space by F
    bool lhs_terms_equal = false;     // the first two left-hand germs coincide
    bool agree = false;               // all three verdicts coincide
    std::vector<std::string> caveats;
};

/// The two rewritings of the tamely-composable condition: intersecting the
/// left side with Sing H, and pushing the Milnor set forward by F. Computed
/// independently; disagreement is reported, never silently resolved.
inline EquivalentFormsReport check_equivalent_forms(const ComposabilityReport& r) {
    EquivalentFormsReport out;
    out.first = r.composable;

    Ideal a2 = refine_for(r.h.field, ideal_sum(r.a1, singular_locus_ideal(r.h)));
    out.with_sing_h = germ_subset(a2, r.fiber_f, r.h.field);
    out.with_sing_h.rhs_description = "F^-1(0)";
    out.lhs_terms_equal = germ_subset(r.a1, a2, r.h.field).holds &&
                          germ_subset(a2, r.a1, r.h.field).holds;
    if (!out.lhs_terms_equal)
        out.caveats.push_back("left-hand germs of the two source-side forms differ as "
                              "computed schemes");

    Ideal pushed = image_closure_ideal(
        r.f, saturate_refined(r.milnor_h.union_ideal, r.fiber_h, r.h.field));
    Ideal fiber_g = refine_for(r.g.field, fiber_ideal(r.g));
    Ideal a3 = refine_for(
        r.g.field, ideal_sum(saturate_refined(pushed, fiber_g, r.g.field), fiber_g));
    out.image_form = germ_subset_of_origin(a3);
    out.image_form.rhs_description = "{0} (image side)";
    out.image_form.caveats.push_back("image of the Milnor set taken as Zariski closure");

    out.agree = out.first.holds == out.with_sing_h.holds &&
                out.first.holds == out.image_form.holds;
    if (!out.agree)
        out.caveats.push_back("equivalent forms disagree on computed representatives; "
                              "scheme-theoretic artifacts are possible");
    return out;
}

/// (Disc F ∪ Sing G) ∩ G⁻¹(0) ⊆ {0}: the sufficient criterion for tame
/// composability via isolated singular values.
inline GermInclusionVerdict corollary_condition(const MapGerm& f, const MapGerm& g) {
    require_same_ring(f.target, g.source, "corollary condition");
    Ideal disc = discriminant_ideal(f);
    Ideal sing_g = singular_locus_ideal(g);
    Ideal u = ideal_intersection(disc, sing_g);
    Ideal fib_g = refine_for(g.field, fiber_ideal(g));
    GermInclusionVerdict v =
        germ_subset_of_origin(refine_for(g.field, ideal_sum(u, fib_g)));
    v.rhs_description = "{0}: (Disc F ∪ Sing G) ∩ G^-1(0)";
    v.caveats.push_back("Disc F computed as the Zariski closure of the image of Sing F");
    return v;
}

/// M_W(F) ∩ F⁻¹(0) ⊆ Sing F ∩ F⁻¹(0) away from the origin: the part of the
/// left side outside the right side must have empty germ at 0 (the origin
/// itself always sits in the Milnor set, so the inclusion is checked
/// punctured).
inline GermInclusionVerdict inclusion_21_check(const MapGerm& f) {
    Stratification s = refine_to_constant_rank(rank_stratification(f), f);
    MilnorSetResult mil = milnor_set(f, s);
    Ideal fib = refine_for(f.field, fiber_ideal(f));
    Ideal lhs = refine_for(f.field, ideal_sum(mil.union_ideal, fib));
    Ideal rhs = refine_for(f.field, ideal_sum(singular_locus_ideal(f), fib));
    GermInclusionVerdict v = germ_subset_of_origin(saturate_refined(lhs, rhs, f.field));
    v.rhs_description = "Sing F ∩ F^-1(0) (inclusion checked away from the origin)";
    return v;
}

} // namespace germ
