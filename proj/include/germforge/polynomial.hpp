#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace germ {

template <class K>
struct Term {
    K coeff;
    Monomial mon;
};

/// Sparse multivariate polynomial over an exact field K. Terms are kept
/// strictly descending under the ambient ring's order with no zero
/// coefficients, so equal polynomials have equal representations.
template <class K>
class Polynomial {
    Ring ring_;
    std::vector<Term<K>> terms_;

public:
    Polynomial() = default;
    explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

    static Polynomial zero(Ring ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(Ring ring, K c) {
        Polynomial p(std::move(ring));
        if (!c.is_zero()) p.terms_.push_back({std::move(c), Monomial(p.ring_->nvars())});
        return p;
    }

    static Polynomial variable(Ring ring, int idx) {
        Polynomial p(ring);
        Monomial m(ring->nvars());
        m.e[idx] = 1;
        p.terms_.push_back({K(1), std::move(m)});
        return p;
    }

    static Polynomial monomial_term(Ring ring, K c, Monomial m) {
        Polynomial p(ring);
        if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
        return p;
    }

    /// Build from unsorted, possibly repeated terms.
    static Polynomial from_terms(Ring ring, std::vector<Term<K>> ts) {
        struct Less {
            const MonomialOrder* o;
            bool operator()(const Monomial& a, const Monomial& b) const { return o->less(a, b); }
        };
        std::map<Monomial, K, Less> acc(Less{&ring->order});
        for (auto& t : ts) {
            auto [it, fresh] = acc.try_emplace(std::move(t.mon), t.coeff);
            if (!fresh) it->second += t.coeff;
        }
        Polynomial p(std::move(ring));
        for (auto it = acc.rbegin(); it != acc.rend(); ++it)
            if (!it->second.is_zero()) p.terms_.push_back({std::move(it->second), it->first});
        return p;
    }

    const Ring& ring() const { return ring_; }
    const std::vector<Term<K>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
    }

    K constant_term() const {
        for (const auto& t : terms_)
            if (t.mon.is_one()) return t.coeff;
        return K();
    }

    const Term<K>& leading_term() const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().mon; }
    const K& leading_coeff() const { return leading_term().coeff; }

    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mon.degree());
        return d;
    }

    /// degree(f) - degree(lm(f)); the selection weight of Mora's normal form.
    int ecart() const { return degree() - leading_monomial().degree(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!same_ring(a.ring_, b.ring_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mon != b.terms_[i].mon || !(a.terms_[i].coeff == b.terms_[i].coeff))
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_, "polynomial addition");
        return merge(a, b, false);
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_, "polynomial subtraction");
        return merge(a, b, true);
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_, "polynomial multiplication");
        std::vector<Term<K>> prod;
        prod.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_)
                prod.push_back({ta.coeff * tb.coeff, ta.mon * tb.mon});
        return from_terms(a.ring_, std::move(prod));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend Polynomial operator*(const K& c, const Polynomial& p) {
        if (c.is_zero()) return Polynomial(p.ring_);
        Polynomial r(p);
        for (auto& t : r.terms_) t.coeff = c * t.coeff;
        return r;
    }

    /// this - c * x^shift * g, the single reduction / S-polynomial step.
    Polynomial axpy_step(const K& c, const Monomial& shift, const Polynomial& g) const {
        std::vector<Term<K>> ts = terms_;
        ts.reserve(ts.size() + g.terms_.size());
        for (const auto& t : g.terms_)
            ts.push_back({-(c * t.coeff), t.mon * shift});
        return from_terms(ring_, std::move(ts));
    }

    Polynomial monic() const {
        if (terms_.empty()) return *this;
        return leading_coeff().inv() * *this;
    }

    Polynomial partial_derivative(int var) const {
        std::vector<Term<K>> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) {
            int e = t.mon.e[var];
            if (e == 0) continue;
            Monomial m = t.mon;
            m.e[var] -= 1;
            ts.push_back({t.coeff * K(e), std::move(m)});
        }
        return from_terms(ring_, std::move(ts));
    }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != ring_->nvars()) throw DomainError("evaluation point arity mismatch");
        K acc;
        for (const auto& t : terms_) {
            K v = t.coeff;
            for (size_t i = 0; i < point.size(); ++i)
                for (int k = 0; k < t.mon.e[i]; ++k) v *= point[i];
            acc += v;
        }
        return acc;
    }

    /// Substitute images[i] for variable i; the result lives in out_ring.
    /// Composition of map germs and coordinate shifts both go through here.
    Polynomial substitute(const std::vector<Polynomial>& images, const Ring& out_ring) const {
        if (images.size() != ring_->nvars()) throw DomainError("substitution arity mismatch");
        for (const auto& img : images) require_same_ring(img.ring(), out_ring, "substitution image");
        // cache powers of each image as needed
        std::vector<std::vector<Polynomial>> powers(images.size());
        auto power = [&](size_t i, int e) -> const Polynomial& {
            auto& tower = powers[i];
            if (tower.empty()) tower.push_back(Polynomial::constant(out_ring, K(1)));
            while (static_cast<int>(tower.size()) <= e) tower.push_back(tower.back() * images[i]);
            return tower[e];
        };
        Polynomial acc(out_ring);
        for (const auto& t : terms_) {
            Polynomial term = Polynomial::constant(out_ring, t.coeff);
            for (size_t i = 0; i < images.size(); ++i)
                if (t.mon.e[i] > 0) term = term * power(i, t.mon.e[i]);
            acc = acc + term;
        }
        return acc;
    }

    /// Same polynomial re-sorted into a ring with a different order.
    Polynomial in_ring(const Ring& target) const {
        if (same_ring(ring_, target)) return *this;
        if (ring_->vars != target->vars)
            throw RingMismatch("in_ring: variable lists differ");
        std::vector<Term<K>> ts = terms_;
        return from_terms(target, std::move(ts));
    }

    long long max_coeff_bits() const {
        long long b = 0;
        for (const auto& t : terms_) b = std::max(b, t.coeff.bits());
        return b;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& t : terms_) {
            K c = t.coeff;
            if (first) {
                if (c.sign() < 0) { s += "-"; c = -c; }
            } else {
                s += c.sign() < 0 ? " - " : " + ";
                if (c.sign() < 0) c = -c;
            }
            first = false;
            std::string body;
            if (!c.is_one() || t.mon.is_one()) body = c.str();
            for (size_t i = 0; i < t.mon.e.size(); ++i) {
                if (t.mon.e[i] == 0) continue;
                if (!body.empty()) body += "*";
                body += ring_->vars[i];
                if (t.mon.e[i] > 1) body += "^" + std::to_string(t.mon.e[i]);
            }
            s += body;
        }
        return s;
    }

private:
    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        const auto& ord = a.ring_->order;
        size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            int cmp;
            if (i == a.terms_.size()) cmp = -1;
            else if (j == b.terms_.size()) cmp = 1;
            else cmp = ord.compare(a.terms_[i].mon, b.terms_[j].mon);
            if (cmp > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (cmp < 0) {
                auto t = b.terms_[j++];
                if (subtract) t.coeff = -t.coeff;
                r.terms_.push_back(std::move(t));
            } else {
                K c = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                               : a.terms_[i].coeff + b.terms_[j].coeff;
                if (!c.is_zero()) r.terms_.push_back({std::move(c), a.terms_[i].mon});
                ++i; ++j;
            }
        }
        return r;
    }
};

using QPoly = Polynomial<Rational>;

} // namespace germ
