#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "groebner.hpp"

namespace germ {

/// Finitely generated ideal in an explicit ambient ring. Bases are computed on
/// demand and cached per monomial order; an Ideal value is cheap to copy.
template <class K>
class IdealT {
    Ring ring_;
    std::vector<Polynomial<K>> gens_;
    std::shared_ptr<std::map<std::string, Basis<K>>> cache_ =
        std::make_shared<std::map<std::string, Basis<K>>>();

public:
    IdealT() = default;

    IdealT(Ring ring, std::vector<Polynomial<K>> gens) : ring_(std::move(ring)) {
        gens_.reserve(gens.size());
        for (auto& g : gens) {
            require_same_ring(g.ring(), ring_, "ideal generator");
            if (!g.is_zero()) gens_.push_back(std::move(g));
        }
    }

    static IdealT zero(Ring ring) { return IdealT(std::move(ring), {}); }

    static IdealT unit(Ring ring) {
        std::vector<Polynomial<K>> g{Polynomial<K>::constant(ring, K(1))};
        return IdealT(std::move(ring), std::move(g));
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial<K>>& gens() const { return gens_; }
    bool has_generators() const { return !gens_.empty(); }

    /// Basis under the given order (cached).
    const Basis<K>& basis(const MonomialOrder& order) const {
        std::string key = order.key();
        auto it = cache_->find(key);
        if (it != cache_->end()) return it->second;
        Ring work = with_order(ring_, order);
        std::vector<Polynomial<K>> work_gens;
        work_gens.reserve(gens_.size());
        for (const auto& g : gens_) work_gens.push_back(g.in_ring(work));
        auto [pos, _] = cache_->emplace(key, compute_basis(work_gens, work));
        return pos->second;
    }

    /// Reduced Groebner basis under the ring's order if global, else degrevlex.
    const Basis<K>& groebner() const {
        if (ring_->order.is_global()) return basis(ring_->order);
        return basis(MonomialOrder::degrevlex_order());
    }

    /// Standard basis under the local degree order (germ computations).
    const Basis<K>& standard_local() const {
        return basis(MonomialOrder::local_order());
    }

    bool is_unit() const { return groebner().is_unit(); }
    bool is_zero_ideal() const { return groebner().is_zero(); }

    bool contains(const Polynomial<K>& f) const {
        return normal_form(f, groebner()).is_zero();
    }

    /// Membership in the localization at the origin.
    bool contains_locally(const Polynomial<K>& f) const {
        return normal_form(f, standard_local()).is_zero();
    }
};

using Ideal = IdealT<Rational>;

/// Equality as ideals: identical reduced Groebner bases.
template <class K>
bool ideal_equal(const IdealT<K>& a, const IdealT<K>& b) {
    if (!same_ring(a.ring(), b.ring())) return false;
    MonomialOrder ord = MonomialOrder::degrevlex_order();
    const auto& ba = a.basis(ord);
    const auto& bb = b.basis(ord);
    if (ba.elems.size() != bb.elems.size()) return false;
    for (size_t i = 0; i < ba.elems.size(); ++i)
        if (ba.elems[i] != bb.elems[i]) return false;
    return true;
}

} // namespace germ
