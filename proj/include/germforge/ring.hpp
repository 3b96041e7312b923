#pragma once

#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "monomial.hpp"

namespace germ {

/// Ambient polynomial ring: named variables plus the order its polynomials are
/// kept sorted under. Rings are shared immutable values; two rings interoperate
/// iff they agree on both fields.
struct RingData {
    std::vector<std::string> vars;
    MonomialOrder order;

    size_t nvars() const { return vars.size(); }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        return -1;
    }
};

using Ring = std::shared_ptr<const RingData>;

inline Ring make_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::degrevlex_order()) {
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw DomainError("duplicate variable name: " + vars[i]);
    return std::make_shared<RingData>(RingData{std::move(vars), std::move(order)});
}

inline bool same_ring(const Ring& a, const Ring& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->vars == b->vars && a->order == b->order;
}

inline void require_same_ring(const Ring& a, const Ring& b, const char* what) {
    if (!same_ring(a, b))
        throw RingMismatch(std::string("ring mismatch in ") + what);
}

/// Same variables, different order. The workhorse for switching between the
/// ring's display order and the order a basis computation needs.
inline Ring with_order(const Ring& r, MonomialOrder order) {
    if (r->order == order) return r;
    return std::make_shared<RingData>(RingData{r->vars, std::move(order)});
}

} // namespace germ
