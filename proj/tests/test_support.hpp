#pragma once

#include <germforge/germforge.hpp>

#include <random>
#include <string>
#include <vector>

namespace testsupport {

using namespace germ;

inline Ring ring1() { return make_ring({"x"}); }
inline Ring ring2() { return make_ring({"x", "y"}); }
inline Ring ring3() { return make_ring({"x", "y", "z"}); }

inline QPoly P(const Ring& r, const std::string& s) { return parse_poly(s, r); }

/// Random sparse polynomial: up to max_terms terms of total degree <= max_deg,
/// coefficients in [-coeff_span, coeff_span]. May come out zero.
inline QPoly random_poly(const Ring& r, std::mt19937& rng, int max_deg, int max_terms,
                         long coeff_span = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<long> coeff(-coeff_span, coeff_span);
    std::vector<Term<Rational>> ts;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m(r->nvars());
        int budget = std::uniform_int_distribution<int>(0, max_deg)(rng);
        for (size_t i = 0; i < r->nvars() && budget > 0; ++i) {
            int e = std::uniform_int_distribution<int>(0, budget)(rng);
            m.e[i] = e;
            budget -= e;
        }
        ts.push_back({Rational(coeff(rng)), std::move(m)});
    }
    return QPoly::from_terms(r, std::move(ts));
}

inline QPoly random_nonzero_poly(const Ring& r, std::mt19937& rng, int max_deg, int max_terms,
                                 long coeff_span = 3) {
    for (;;) {
        QPoly p = random_poly(r, rng, max_deg, max_terms, coeff_span);
        if (!p.is_zero()) return p;
    }
}

} // namespace testsupport
