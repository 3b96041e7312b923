#pragma once

#include "stratification.hpp"

namespace germ {

/// Milnor set of the map restricted to one stratum, as an ideal in the
/// source ring. `wholesale` marks strata where the restriction has discrete
/// fibers, so the whole stratum is critical for the distance function.
struct MilnorPiece {
    Stratum stratum;
    Ideal ideal;
    int restricted_rank = -1;
    bool wholesale = false;
};

struct MilnorSetResult {
    Ring ring;
    std::vector<MilnorPiece> per_stratum;
    Ideal union_ideal;
    std::vector<std::string> caveats;
};

namespace detail {

/// Germ-at-origin emptiness of {closure + extra} minus the frontiers.
inline bool germ_empty(const Ideal& closure, const Ideal& extra,
                       const std::vector<Ideal>& frontiers) {
    Ideal cur = ideal_sum(closure, extra);
    for (const auto& f : frontiers) {
        if (cur.is_unit()) return true;
        cur = saturate(cur, f);
    }
    if (cur.is_unit()) return true;
    return local_dimension_at_origin(cur).dim < 0;
}

} // namespace detail

/// Critical locus of (f, distance^2) on one stratum: points of the stratum
/// where the gradient of the squared distance lies in the row span of df and
/// the gradients of the stratum equations. With rho* the rank of that span,
/// the locus is cut out by the (rho*+1)-minors of the matrix
///
///     [ x_1 ... x_m ]       (gradient of the squared distance, halved)
///     [     df      ]
///     [ grad h_i    ]       (h_i the closure generators)
///
/// Requires the stratum to be rank-adapted: the gradient rows must have
/// generic rank equal to the stratum codimension, and the bordered rank must
/// be constant on the stratum germ; otherwise StratumTooCoarse is thrown.
inline MilnorPiece milnor_piece(const MapGerm& f, const Stratum& s) {
    const Ring& ring = f.source;
    size_t m = ring->nvars();
    PolyMatrix jac = jacobian(f);

    PolyMatrix grads;
    for (const auto& h : s.closure.gens()) {
        std::vector<QPoly> row;
        for (size_t j = 0; j < m; ++j) row.push_back(h.partial_derivative(j));
        grads.push_back(std::move(row));
    }
    int c_eff = static_cast<int>(m) - s.dim;
    if (generic_rank_on(grads, s.closure) != c_eff)
        throw StratumTooCoarse("stratum " + s.label +
                               ": closure equations do not cut the stratum transversally");

    PolyMatrix bordered = jac;
    for (const auto& row : grads) bordered.push_back(row);
    int rho = generic_rank_on(bordered, s.closure);
    if (rho > 0 &&
        !detail::germ_empty(s.closure, minors_ideal(bordered, static_cast<size_t>(rho), ring),
                            s.frontiers))
        throw StratumTooCoarse("stratum " + s.label +
                               ": restricted rank is not constant on the stratum");

    MilnorPiece out;
    out.stratum = s;
    out.restricted_rank = rho - c_eff;

    if (rho >= s.dim + c_eff) {
        // discrete fibers: every point of the stratum is critical
        out.wholesale = true;
        out.ideal = s.closure;
    } else {
        PolyMatrix full;
        std::vector<QPoly> xrow;
        for (size_t j = 0; j < m; ++j) xrow.push_back(QPoly::variable(ring, j));
        full.push_back(std::move(xrow));
        for (const auto& row : jac) full.push_back(row);
        for (const auto& row : grads) full.push_back(row);
        out.ideal = ideal_sum(s.closure, minors_ideal(full, static_cast<size_t>(rho) + 1, ring));
    }
    for (const auto& fr : s.frontiers) {
        if (out.ideal.is_unit()) break;
        out.ideal = saturate(out.ideal, fr);
    }
    out.ideal = refine_for(f.field, out.ideal);
    return out;
}

/// Milnor set of f relative to a stratification of its source: union of the
/// per-stratum critical loci.
inline MilnorSetResult milnor_set(const MapGerm& f, const Stratification& w) {
    require_same_ring(f.source, w.ring, "milnor set");
    MilnorSetResult out;
    out.ring = f.source;
    out.caveats = w.caveats;
    Ideal acc = Ideal::unit(f.source);
    for (const auto& s : w.strata) {
        MilnorPiece piece = milnor_piece(f, s);
        acc = acc.is_unit() ? piece.ideal : ideal_intersection(acc, piece.ideal);
        out.per_stratum.push_back(std::move(piece));
    }
    out.union_ideal = refine_for(f.field, acc);
    return out;
}

} // namespace germ
