#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "rational.hpp"

namespace germ {

/// Context for the quotient field Q[t]/(m(t)), m monic of degree >= 1.
/// If m is reducible the quotient has zero divisors; inversion then throws
/// NotInvertible and callers fall back to aggregate reporting.
struct ExtensionContext {
    std::vector<Rational> modulus; // low-to-high, monic, size = degree + 1
    std::string var_name = "t";

    size_t degree() const { return modulus.size() - 1; }
};

using ExtCtx = std::shared_ptr<const ExtensionContext>;

/// Thrown when inversion meets a zero divisor; carries a monic nontrivial
/// divisor of the modulus so the caller can split the extension and retry.
struct ZeroDivisor : NotInvertible {
    std::vector<Rational> factor;
    ZeroDivisor(const std::string& msg, std::vector<Rational> f)
        : NotInvertible(msg), factor(std::move(f)) {}
};

inline ExtCtx make_extension(std::vector<Rational> modulus, std::string var_name = "t") {
    while (!modulus.empty() && modulus.back().is_zero()) modulus.pop_back();
    if (modulus.size() < 2) throw DomainError("extension modulus must have degree >= 1");
    if (!modulus.back().is_one()) {
        Rational lead_inv = modulus.back().inv();
        for (auto& c : modulus) c = c * lead_inv;
    }
    auto ctx = std::make_shared<ExtensionContext>();
    ctx->modulus = std::move(modulus);
    ctx->var_name = std::move(var_name);
    return ctx;
}

/// Element of Q[t]/(m(t)); a null context means a plain rational, which mixes
/// freely with any extension.
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;
    AlgebraicNumber(int n) : c_{Rational(n)} { trim(); }
    AlgebraicNumber(const Rational& r) : c_{r} { trim(); }
    AlgebraicNumber(ExtCtx ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        reduce();
    }

    static AlgebraicNumber generator(ExtCtx ctx) {
        return AlgebraicNumber(std::move(ctx), {Rational(0), Rational(1)});
    }

    const ExtCtx& context() const { return ctx_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_rational() const { return c_.size() <= 1; }
    Rational rational_value() const {
        if (c_.empty()) return Rational(0);
        if (c_.size() > 1) throw DomainError("not a rational element");
        return c_[0];
    }

    int sign() const { return c_.empty() ? 0 : c_.back().sign(); }

    long long bits() const {
        long long b = 0;
        for (const auto& x : c_) b = std::max(b, x.bits());
        return b;
    }

    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

    AlgebraicNumber operator-() const {
        AlgebraicNumber r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        ExtCtx ctx = merge_ctx(a, b);
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
        return AlgebraicNumber(std::move(ctx), std::move(c));
    }

    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a + (-b);
    }

    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        ExtCtx ctx = merge_ctx(a, b);
        if (a.c_.empty() || b.c_.empty()) return AlgebraicNumber(std::move(ctx), {});
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return AlgebraicNumber(std::move(ctx), std::move(c));
    }

    /// Inverse via the extended Euclidean algorithm in Q[t]; throws
    /// NotInvertible on a zero divisor (gcd with the modulus non-constant).
    AlgebraicNumber inv() const {
        if (is_zero()) throw DomainError("inverse of zero");
        if (is_rational()) {
            AlgebraicNumber r = *this;
            r.c_[0] = r.c_[0].inv();
            return r;
        }
        // invariant: r0 = s0 * this (mod m), r1 = s1 * this (mod m)
        std::vector<Rational> r0 = ctx_->modulus, r1 = c_;
        std::vector<AlgebraicNumber> s{AlgebraicNumber(ctx_, {}), AlgebraicNumber(ctx_, {Rational(1)})};
        while (!r1.empty()) {
            auto [q, rem] = poly_divmod(r0, r1);
            AlgebraicNumber s2 = s[0] - AlgebraicNumber(ctx_, std::move(q)) * s[1];
            r0 = std::move(r1);
            r1 = std::move(rem);
            s[0] = std::move(s[1]);
            s[1] = std::move(s2);
        }
        if (r0.size() != 1) {
            Rational lead_inv = r0.back().inv();
            for (auto& x : r0) x = x * lead_inv;
            throw ZeroDivisor("zero divisor in Q[t]/(m): gcd with modulus has degree " +
                                  std::to_string(r0.size() - 1),
                              std::move(r0));
        }
        return AlgebraicNumber(Rational(1) / r0[0]) * s[0];
    }

    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a * b.inv();
    }

    AlgebraicNumber& operator+=(const AlgebraicNumber& o) { return *this = *this + o; }
    AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this = *this - o; }
    AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }
    AlgebraicNumber& operator/=(const AlgebraicNumber& o) { return *this = *this / o; }

    std::string str() const {
        if (c_.empty()) return "0";
        std::string s;
        const std::string& t = ctx_ ? ctx_->var_name : std::string("t");
        for (size_t k = c_.size(); k-- > 0;) {
            Rational x = c_[k];
            if (x.is_zero()) continue;
            if (s.empty()) {
                if (x.sign() < 0) { s += "-"; x = -x; }
            } else {
                s += x.sign() < 0 ? " - " : " + ";
                if (x.sign() < 0) x = -x;
            }
            std::string body;
            if (!x.is_one() || k == 0) body = x.str();
            if (k > 0) {
                if (!body.empty()) body += "*";
                body += t;
                if (k > 1) body += "^" + std::to_string(k);
            }
            s += body;
        }
        return s.empty() ? "0" : s;
    }

private:
    ExtCtx ctx_;              // nullptr = plain rational
    std::vector<Rational> c_; // low-to-high, trimmed, degree < degree(modulus)

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    void reduce() {
        trim();
        if (!ctx_) {
            if (c_.size() > 1) throw DomainError("extension element without context");
            return;
        }
        const auto& m = ctx_->modulus;
        while (c_.size() >= m.size()) {
            // c -= lead(c) * t^(deg c - deg m) * m ; m is monic
            Rational lead = c_.back();
            size_t shift = c_.size() - m.size();
            for (size_t i = 0; i < m.size(); ++i) c_[shift + i] = c_[shift + i] - lead * m[i];
            trim();
        }
    }

    static ExtCtx merge_ctx(const AlgebraicNumber& a, const AlgebraicNumber& b) {
        if (!a.ctx_) return b.ctx_;
        if (!b.ctx_) return a.ctx_;
        if (a.ctx_ == b.ctx_ || a.ctx_->modulus == b.ctx_->modulus) return a.ctx_;
        throw RingMismatch("algebraic numbers from different extensions");
    }

    /// Division with remainder in Q[t]; divisor need not be monic.
    static std::pair<std::vector<Rational>, std::vector<Rational>> poly_divmod(
        std::vector<Rational> num, const std::vector<Rational>& den) {
        std::vector<Rational> q;
        if (den.empty()) throw DomainError("division by zero polynomial");
        if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Rational(0));
        Rational lead_inv = den.back().inv();
        while (num.size() >= den.size()) {
            Rational f = num.back() * lead_inv;
            size_t shift = num.size() - den.size();
            q[shift] = f;
            for (size_t i = 0; i < den.size(); ++i) num[shift + i] = num[shift + i] - f * den[i];
            while (!num.empty() && num.back().is_zero()) num.pop_back();
        }
        return {std::move(q), std::move(num)};
    }
};

} // namespace germ
