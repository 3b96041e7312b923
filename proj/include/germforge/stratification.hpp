#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dimension.hpp"
#include "real_refine.hpp"

namespace germ {

/// Locally closed piece W = V(closure) \ union of V(frontier_i), taken as a
/// germ at the origin.
struct Stratum {
    std::string label;
    Ideal closure;
    std::vector<Ideal> frontiers;
    int expected_rank = -1; // rank of the analyzed map restricted to the stratum
    int dim = -1;           // local dimension of the closure at the origin
};

struct Stratification {
    Ring ring;
    std::vector<Stratum> strata;
    std::vector<std::string> caveats;
};

/// Drop repeated caveat lines, keeping first occurrences in order.
inline void dedupe_caveats(std::vector<std::string>& v) {
    std::vector<std::string> seen;
    std::erase_if(v, [&](const std::string& c) {
        if (std::find(seen.begin(), seen.end(), c) != seen.end()) return true;
        seen.push_back(c);
        return false;
    });
}

namespace detail {

/// Closure of the stratum as a set: saturate away every frontier component.
/// Unit result means the stratum is empty (or misses the origin germ after
/// the local-dimension check done by the caller).
inline Ideal stratum_support(const Stratum& s) {
    Ideal cur = s.closure;
    for (const auto& f : s.frontiers) {
        if (cur.is_unit()) break;
        cur = saturate(cur, f);
    }
    return cur;
}

/// Rebuild the stratum with an honest closure; returns false when the stratum
/// is empty or its germ at the origin is empty.
inline bool normalize_stratum(Stratum& s, Field field) {
    s.closure = refine_for(field, s.closure);
    Ideal support = stratum_support(s);
    if (support.is_unit()) return false;
    s.closure = refine_for(field, support);
    // keep the reduced basis as the generator list: gradient rows and minor
    // counts downstream grow with the number of generators
    s.closure = Ideal(s.closure.ring(), s.closure.groebner().elems);
    // the closure is a set, so repeated factors in a generator only obstruct
    // the transversality checks; strip them
    {
        bool changed = false;
        std::vector<QPoly> gens;
        for (const auto& g : s.closure.gens()) {
            if (g.degree() < 2) {
                gens.push_back(g);
                continue;
            }
            QPoly sq = squarefree_part(g);
            changed = changed || sq.nterms() != g.nterms() || sq.degree() != g.degree();
            gens.push_back(std::move(sq));
        }
        if (changed) {
            s.closure = refine_for(field, Ideal(s.closure.ring(), std::move(gens)));
            s.closure = Ideal(s.closure.ring(), s.closure.groebner().elems);
        }
    }
    int d = local_dimension_at_origin(s.closure).dim;
    if (d < 0) return false;
    if (d == 0) {
        // the germ is the origin alone; the maximal ideal is its radical
        std::vector<QPoly> coords;
        for (size_t i = 0; i < s.closure.ring()->nvars(); ++i)
            coords.push_back(QPoly::variable(s.closure.ring(), i));
        s.closure = Ideal(s.closure.ring(), std::move(coords));
    }
    s.dim = d;
    return true;
}

} // namespace detail

inline Stratification trivial_stratification(const Ring& ring) {
    Stratification s{ring, {}, {}};
    Stratum whole;
    whole.label = "open";
    whole.closure = Ideal::zero(ring);
    whole.dim = static_cast<int>(ring->nvars());
    s.strata.push_back(std::move(whole));
    return s;
}

/// Rank level sets of the Jacobian: stratum r is {rank dF = r}, described as
/// V(minors of size r+1) minus V(minors of size r), empty levels dropped.
inline Stratification rank_stratification(const MapGerm& f) {
    Stratification out{f.source, {}, {}};
    PolyMatrix jac = jacobian(f);
    size_t m = f.source->nvars();
    size_t rmax = std::min(f.components.size(), m);
    for (size_t r = rmax + 1; r-- > 0;) {
        Ideal upper = (r == rmax) ? Ideal::zero(f.source) : minors_ideal(jac, r + 1, f.source);
        Stratum s;
        s.label = f.name + ".rank" + std::to_string(r);
        s.expected_rank = static_cast<int>(r);
        if (r > 0) {
            Ideal lower = minors_ideal(jac, r, f.source);
            s.closure = saturate(upper, lower);
            s.frontiers.push_back(std::move(lower));
        } else {
            s.closure = upper;
        }
        if (detail::normalize_stratum(s, f.field)) out.strata.push_back(std::move(s));
    }
    return out;
}

/// Pairwise intersections A_i with B_j; expected_rank inherited from the first
/// stratification.
inline Stratification common_refinement(const Stratification& a, const Stratification& b,
                                        Field field) {
    require_same_ring(a.ring, b.ring, "common refinement");
    Stratification out{a.ring, {}, a.caveats};
    for (const auto& c : b.caveats) out.caveats.push_back(c);
    for (const auto& sa : a.strata) {
        for (const auto& sb : b.strata) {
            Stratum s;
            s.label = sa.label + "&" + sb.label;
            s.closure = ideal_sum(sa.closure, sb.closure);
            s.frontiers = sa.frontiers;
            for (const auto& f : sb.frontiers) s.frontiers.push_back(f);
            s.expected_rank = sa.expected_rank;
            if (detail::normalize_stratum(s, field)) out.strata.push_back(std::move(s));
        }
    }
    return out;
}

/// Pull the strata of q back through f and intersect with the strata of w.
/// The pieces keep w's expected ranks: f has the same restricted rank on a
/// pullback piece as on the ambient stratum.
inline Stratification pullback_refine(const Stratification& w, const MapGerm& f,
                                      const Stratification& q) {
    require_same_ring(w.ring, f.source, "pullback: source stratification");
    require_same_ring(q.ring, f.target, "pullback: target stratification");
    Stratification out{f.source, {}, w.caveats};
    for (const auto& c : q.caveats) out.caveats.push_back(c);
    for (const auto& sw : w.strata) {
        for (const auto& sq : q.strata) {
            Stratum s;
            s.label = sw.label + "&" + f.name + "^-1(" + sq.label + ")";
            s.closure = ideal_sum(sw.closure, pullback(f, sq.closure));
            s.frontiers = sw.frontiers;
            for (const auto& fr : sq.frontiers) s.frontiers.push_back(pullback(f, fr));
            s.expected_rank = sw.expected_rank;
            if (detail::normalize_stratum(s, f.field)) out.strata.push_back(std::move(s));
        }
    }
    return out;
}

/// Turn a list of closed sets into disjoint locally closed strata: each
/// closure minus the strictly smaller closures it contains.
inline Stratification disjointify(const Ring& ring, std::vector<std::pair<std::string, Ideal>> closures,
                                  Field field) {
    Stratification out{ring, {}, {}};
    // drop duplicates (same variety up to reduced basis equality)
    std::vector<std::pair<std::string, Ideal>> distinct;
    for (auto& c : closures) {
        bool dup = false;
        for (const auto& d : distinct)
            if (ideal_equal(c.second, d.second)) { dup = true; break; }
        if (!dup) distinct.push_back(std::move(c));
    }
    auto contained_in = [](const Ideal& a, const Ideal& b) {
        // V(a) subset of V(b): every generator of b vanishes on V(a)
        for (const auto& g : b.gens())
            if (!radical_membership(g, a)) return false;
        return true;
    };
    for (size_t i = 0; i < distinct.size(); ++i) {
        Stratum s;
        s.label = distinct[i].first;
        s.closure = distinct[i].second;
        for (size_t j = 0; j < distinct.size(); ++j) {
            if (j == i) continue;
            if (contained_in(distinct[j].second, distinct[i].second) &&
                !contained_in(distinct[i].second, distinct[j].second))
                s.frontiers.push_back(distinct[j].second);
        }
        if (detail::normalize_stratum(s, field)) out.strata.push_back(std::move(s));
    }
    return out;
}

/// Stratification of the target by Zariski closures of stratum images.
/// These are closures of the exact (subanalytic) images, which is recorded as
/// a caveat.
inline Stratification image_stratification(const MapGerm& f, const Stratification& w) {
    require_same_ring(w.ring, f.source, "image stratification");
    std::vector<std::pair<std::string, Ideal>> closures;
    for (const auto& s : w.strata)
        closures.push_back({f.name + "(" + s.label + ")", image_closure_ideal(f, s.closure)});
    Stratification out = disjointify(f.target, std::move(closures), f.field);
    out.caveats.push_back("image strata are Zariski closures of stratum images");
    return out;
}

namespace detail {

inline PolyMatrix bordered_matrix(const PolyMatrix& jac, const Stratum& s) {
    PolyMatrix rows = jac;
    size_t m = s.closure.ring()->nvars();
    for (const auto& h : s.closure.gens()) {
        std::vector<QPoly> grad;
        for (size_t j = 0; j < m; ++j) grad.push_back(h.partial_derivative(j));
        rows.push_back(std::move(grad));
    }
    return rows;
}

} // namespace detail

/// Split strata until the restriction of the map has constant rank on each
/// piece. The restricted rank at a stratum point is rank[dF; dh] - codim; a
/// point where the bordered rank drops below its generic value goes to a
/// separate stratum. A caveat is recorded if splitting does not stabilize.
inline Stratification refine_to_constant_rank(const Stratification& w, const MapGerm& f) {
    require_same_ring(w.ring, f.source, "rank refinement");
    PolyMatrix jac = jacobian(f);
    Stratification out{w.ring, {}, w.caveats};
    std::vector<Stratum> queue = w.strata;
    int rounds = 0;
    while (!queue.empty()) {
        Stratum s = std::move(queue.back());
        queue.pop_back();
        PolyMatrix bordered = detail::bordered_matrix(jac, s);
        int generic = generic_rank_on(bordered, s.closure);
        int c_eff = static_cast<int>(w.ring->nvars()) - s.dim;
        s.expected_rank = generic - c_eff;
        if (generic == 0) {
            out.strata.push_back(std::move(s));
            continue;
        }
        Ideal drop = ideal_sum(s.closure, minors_ideal(bordered, static_cast<size_t>(generic), w.ring));
        Stratum low;
        low.label = s.label + ".drop";
        low.closure = drop;
        low.frontiers = s.frontiers;
        if (!detail::normalize_stratum(low, f.field)) {
            // rank already constant on the stratum germ
            out.strata.push_back(std::move(s));
            continue;
        }
        if (++rounds > 64) {
            out.caveats.push_back("rank refinement did not stabilize; stratum " + s.label +
                                  " kept with generic rank");
            out.strata.push_back(std::move(s));
            continue;
        }
        s.frontiers.push_back(std::move(drop));
        if (detail::normalize_stratum(s, f.field)) out.strata.push_back(std::move(s));
        queue.push_back(std::move(low));
    }
    return out;
}

struct AdaptedStratifications {
    Stratification w; // source of F, refined through F
    Stratification q; // middle space: rank strata of G refined by image strata of F
    Stratification s; // target of G: image strata
    std::vector<std::string> caveats;
};

/// The three stratifications adapted to the composition H = G o F: rank
/// strata of G are refined by the image strata of F, pulled back to refine
/// the rank strata of F, and pushed forward to the target of G. Whitney
/// regularity is not certified.
inline AdaptedStratifications adapted_stratifications(const MapGerm& f, const MapGerm& g) {
    if (f.target->nvars() != g.source->nvars())
        throw DomainError("adapted stratifications: dimensions do not chain");
    AdaptedStratifications out;
    Stratification w0 = refine_to_constant_rank(rank_stratification(f), f);
    Stratification qimg = image_stratification(f, w0);
    Stratification qrank = refine_to_constant_rank(rank_stratification(g), g);
    out.q = refine_to_constant_rank(common_refinement(qrank, qimg, g.field), g);
    out.w = pullback_refine(w0, f, out.q);
    MapGerm h = compose(g, f);
    out.w = refine_to_constant_rank(out.w, h);
    out.s = image_stratification(g, out.q);
    out.caveats.push_back("whitney-regularity-not-certified");
    for (const auto& c : out.w.caveats) out.caveats.push_back(c);
    for (const auto& c : out.q.caveats) out.caveats.push_back(c);
    for (const auto& c : out.s.caveats) out.caveats.push_back(c);
    dedupe_caveats(out.caveats);
    return out;
}

} // namespace germ
