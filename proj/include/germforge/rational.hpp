#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>

#include "errors.hpp"

namespace germ {

/// Exact rational number. Always stored canonically: gcd(num, den) = 1, den >= 1.
/// GMP does the heavy lifting; this wrapper fixes the canonical form, adds the
/// parsing/printing conventions used everywhere else, and exposes the bit-size
/// hook the resource caps need.
class Rational {
    mpq_class v_;

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }

    /// Accepts "p", "-p", "p/q" with arbitrary-precision integers.
    static Rational from_string(const std::string& s) {
        try {
            mpq_class v(s);
            if (v.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
            v.canonicalize();
            return Rational(std::move(v));
        } catch (const std::invalid_argument&) {
            throw DomainError("not a rational literal: " + s);
        }
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inv() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    /// Larger of the numerator/denominator bit sizes; feeds the coefficient cap.
    long long bits() const {
        size_t nb = mpz_sizeinbase(v_.get_num().get_mpz_t(), 2);
        size_t db = mpz_sizeinbase(v_.get_den().get_mpz_t(), 2);
        return static_cast<long long>(nb > db ? nb : db);
    }

    /// "p" or "p/q", canonical.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    double to_double() const { return v_.get_d(); }
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

} // namespace germ
