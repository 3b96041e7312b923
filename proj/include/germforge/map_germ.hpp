#pragma once

#include <string>
#include <vector>

#include "ideal_ops.hpp"

namespace germ {

enum class Field { real, complex };

/// Analytic-style map germ (K^m,0) -> (K^p,0) with polynomial components.
/// Every component has zero constant term, so the origin maps to the origin.
struct MapGerm {
    std::string name;
    Ring source;
    Ring target;
    std::vector<QPoly> components; // one per target variable, in the source ring
    Field field = Field::real;
};

using PolyMatrix = std::vector<std::vector<QPoly>>;

inline MapGerm make_map_germ(std::string name, Ring source, Ring target,
                             std::vector<QPoly> components, Field field = Field::real) {
    if (components.empty()) throw DomainError("map germ needs at least one component");
    if (components.size() != target->nvars())
        throw DomainError("map " + name + ": component count " + std::to_string(components.size()) +
                          " does not match target dimension " + std::to_string(target->nvars()));
    for (const auto& c : components) {
        require_same_ring(c.ring(), source, "map component");
        if (!c.constant_term().is_zero())
            throw DomainError("map " + name + ": component does not vanish at the origin: " + c.str());
    }
    return MapGerm{std::move(name), std::move(source), std::move(target), std::move(components), field};
}

inline MapGerm identity_map(const Ring& source, const Ring& target, Field field = Field::real) {
    if (source->nvars() != target->nvars()) throw DomainError("identity map needs equal dimensions");
    std::vector<QPoly> comps;
    for (size_t i = 0; i < source->nvars(); ++i) comps.push_back(QPoly::variable(source, i));
    return make_map_germ("id", source, target, std::move(comps), field);
}

inline PolyMatrix jacobian(const MapGerm& f) {
    PolyMatrix m(f.components.size());
    for (size_t i = 0; i < f.components.size(); ++i)
        for (size_t j = 0; j < f.source->nvars(); ++j)
            m[i].push_back(f.components[i].partial_derivative(j));
    return m;
}

namespace detail {

/// Visit k-subsets of {0..n-1} in ascending lexicographic order.
template <class Fn>
void for_each_combination(size_t n, size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        size_t i = k;
        while (i-- > 0) {
            if (idx[i] != n - k + i) break;
            if (i == 0) return;
        }
        if (k == 0 || idx[i] == n - k + i) return;
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline QPoly poly_det(const PolyMatrix& m, const std::vector<size_t>& rows,
                      const std::vector<size_t>& cols) {
    const Ring& ring = m[rows[0]][cols[0]].ring();
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    QPoly det = QPoly::zero(ring);
    std::vector<size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<size_t> sub_cols;
    sub_cols.reserve(cols.size() - 1);
    for (size_t j = 0; j < cols.size(); ++j) {
        const QPoly& entry = m[rows[0]][cols[j]];
        if (entry.is_zero()) continue;
        sub_cols.clear();
        for (size_t l = 0; l < cols.size(); ++l)
            if (l != j) sub_cols.push_back(cols[l]);
        QPoly cofactor = entry * poly_det(m, sub_rows, sub_cols);
        det = (j % 2 == 0) ? det + cofactor : det - cofactor;
    }
    return det;
}

} // namespace detail

/// All k x k minors, row subsets ascending, column subsets ascending.
inline std::vector<QPoly> minors(const PolyMatrix& m, size_t k, const Ring& ring) {
    std::vector<QPoly> out;
    if (m.empty() || k == 0) return out;
    size_t rows = m.size(), cols = m[0].size();
    detail::for_each_combination(rows, k, [&](const std::vector<size_t>& ri) {
        detail::for_each_combination(cols, k, [&](const std::vector<size_t>& ci) {
            QPoly d = detail::poly_det(m, ri, ci);
            if (!d.is_zero()) out.push_back(std::move(d));
        });
    });
    if (out.empty()) out.push_back(QPoly::zero(ring));
    return out;
}

inline Ideal minors_ideal(const PolyMatrix& m, size_t k, const Ring& ring) {
    return Ideal(ring, minors(m, k, ring));
}

/// Rank of the matrix at a generic point of V(a): the largest k such that some
/// k-minor does not vanish identically on V(a) (radical membership test).
inline int generic_rank_on(const PolyMatrix& m, const Ideal& a) {
    if (m.empty()) return 0;
    size_t rmax = std::min(m.size(), m[0].size());
    for (size_t k = rmax; k >= 1; --k) {
        bool found = false;
        detail::for_each_combination(m.size(), k, [&](const std::vector<size_t>& ri) {
            if (found) return;
            detail::for_each_combination(m[0].size(), k, [&](const std::vector<size_t>& ci) {
                if (found) return;
                QPoly d = detail::poly_det(m, ri, ci);
                if (!d.is_zero() && !radical_membership(d, a)) found = true;
            });
        });
        if (found) return static_cast<int>(k);
    }
    return 0;
}

///// Generic rank over the whole space: largest k with a nonzero k-minor.
inline int generic_rank(const PolyMatrix& m, const Ring& ring) {
    return generic_rank_on(m, Ideal::zero(ring));
}

/// Ideal of the zero fiber, I(F^-1(0)) as a scheme.
inline Ideal fiber_ideal(const MapGerm& f) { return Ideal(f.source, f.components); }

/// Ideal of Sing F = { rank dF < p }, the p x p minors of the Jacobian.
inline Ideal singular_locus_ideal(const MapGerm& f) {
    size_t p = f.target->nvars();
    if (f.source->nvars() < p)
        throw DomainError("singular locus needs source dimension >= target dimension");
    return minors_ideal(jacobian(f), p, f.source);
}

/// Ring on source variables followed by target variables, degrevlex.
inline Ring product_ring(const MapGerm& f) {
    std::vector<std::string> vars = f.source->vars;
    auto taken = [&vars](const std::string& n) {
        for (const auto& s : vars)
            if (s == n) return true;
        return false;
    };
    // Target names that clash with source names (identity germs share the
    // ring) get a suffix; all downstream access is index-based.
    for (const auto& v : f.target->vars) {
        std::string name = v;
        while (taken(name)) name += "_t";
        vars.push_back(name);
    }
    return make_ring(vars, MonomialOrder::degrevlex_order());
}

/// Generators y_i - F_i(x) of the graph ideal, in the given product ring.
inline std::vector<QPoly> graph_generators(const MapGerm& f, const Ring& prod) {
    size_t m = f.source->nvars();
    std::vector<QPoly> gens;
    std::vector<QPoly> images;
    for (size_t j = 0; j < m; ++j) images.push_back(QPoly::variable(prod, j));
    for (size_t i = 0; i < f.components.size(); ++i) {
        QPoly yi = QPoly::variable(prod, m + i);
        gens.push_back(yi - f.components[i].substitute(images, prod));
    }
    return gens;
}

/// Zariski closure of F(V(a)): eliminate the source variables from the graph
/// ideal plus a, then read the result in the target ring.
inline Ideal image_closure_ideal(const MapGerm& f, const Ideal& a) {
    require_same_ring(a.ring(), f.source, "image of a source ideal");
    Ring prod = product_ring(f);
    size_t m = f.source->nvars();
    std::vector<QPoly> gens = graph_generators(f, prod);
    std::vector<QPoly> images;
    for (size_t j = 0; j < m; ++j) images.push_back(QPoly::variable(prod, j));
    for (const auto& g : a.gens()) gens.push_back(g.substitute(images, prod));

    std::vector<char> drop(prod->nvars(), 0);
    for (size_t j = 0; j < m; ++j) drop[j] = 1;
    Ideal eliminated = eliminate(Ideal(prod, gens), drop);

    std::vector<int> var_map(prod->nvars(), -1);
    for (size_t i = 0; i < f.target->nvars(); ++i) var_map[m + i] = static_cast<int>(i);
    std::vector<QPoly> out;
    for (const auto& g : eliminated.gens())
        out.push_back(detail::project_poly(g, f.target, var_map));
    return Ideal(f.target, out);
}

/// Disc F = closure of F(Sing F), in the target ring.
inline Ideal discriminant_ideal(const MapGerm& f) {
    return image_closure_ideal(f, singular_locus_ideal(f));
}

/// Pull a target-ring polynomial back through F (substitute the components).
inline QPoly pullback(const MapGerm& f, const QPoly& q) {
    if (q.ring()->nvars() != f.target->nvars())
        throw RingMismatch("pullback expects a polynomial in the target ring");
    return q.in_ring(f.target).substitute(f.components, f.source);
}

inline Ideal pullback(const MapGerm& f, const Ideal& q) {
    std::vector<QPoly> gens;
    for (const auto& g : q.gens()) gens.push_back(pullback(f, g));
    return Ideal(f.source, gens);
}

inline MapGerm compose(const MapGerm& g, const MapGerm& f) {
    if (g.source->nvars() != f.target->nvars())
        throw DomainError("compose: target dimension of " + f.name + " is " +
                          std::to_string(f.target->nvars()) + ", source of " + g.name + " needs " +
                          std::to_string(g.source->nvars()));
    std::vector<QPoly> comps;
    for (const auto& c : g.components) comps.push_back(c.substitute(f.components, f.source));
    Field field = (f.field == Field::complex || g.field == Field::complex) ? Field::complex : Field::real;
    return make_map_germ(g.name + "*" + f.name, f.source, g.target, std::move(comps), field);
}

/// Rank of the matrix evaluated at a rational point.
inline int rank_at(const PolyMatrix& m, const std::vector<Rational>& point) {
    if (m.empty()) return 0;
    std::vector<std::vector<Rational>> a(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const auto& e : m[i]) a[i].push_back(e.evaluate(point));
    size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    size_t pr = 0;
    for (size_t c = 0; c < cols && pr < rows; ++c) {
        size_t piv = pr;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[pr]);
        Rational inv = a[pr][c].inv();
        for (size_t i = pr + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            Rational factor = a[i][c] * inv;
            for (size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - factor * a[pr][j];
        }
        ++pr;
        ++rank;
    }
    return rank;
}

} // namespace germ
