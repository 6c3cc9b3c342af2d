// Rational functions of the coupling g with exact rational coefficients.
//
// RatFuncG is the coefficient field used for symmetric-function expansions
// that are kept symbolic in g.  Canonical form: numerator and denominator
// are coprime, the denominator is monic and nonzero, and zero is 0/1, so
// equality of canonical forms is equality of rational functions.
//
// specialize() evaluates at a rational coupling value and throws
// PoleAtCoupling when the (reduced) denominator vanishes there.

#pragma once

#include "dcs/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace dcs {

struct PoleAtCoupling : std::runtime_error {
    explicit PoleAtCoupling(const std::string& what) : std::runtime_error(what) {}
};

class RatFuncG {
  public:
    RatFuncG() : num_(), den_(Rat(1)) {}
    RatFuncG(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT: implicit by design
    RatFuncG(long c) : num_(Rat(c)), den_(Rat(1)) {}   // NOLINT: implicit by design
    explicit RatFuncG(Poly num) : num_(std::move(num)), den_(Rat(1)) {}
    RatFuncG(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    // The coupling variable g as a rational function.
    static RatFuncG g() { return RatFuncG(Poly::var()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const {
        if (!is_constant()) throw std::domain_error("RatFuncG: not a constant");
        return num_.constant_value();  // den is monic constant == 1
    }

    RatFuncG operator-() const {
        RatFuncG r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    // Arithmetic keeps the canonical form with as few polynomial gcds as
    // possible: sums use Henrici's two-small-gcd scheme, products and
    // quotients cross-cancel, and purely rational operands never trigger a
    // gcd at all.
    friend RatFuncG operator+(const RatFuncG& a, const RatFuncG& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_constant() && b.den_.is_constant())  // both denominators are 1
            return RatFuncG(a.num_ + b.num_);
        const Poly d1 = Poly::gcd(a.den_, b.den_);
        if (d1.is_constant()) {
            Poly num = a.num_ * b.den_ + b.num_ * a.den_;
            if (num.is_zero()) return RatFuncG();
            return RatFuncG(std::move(num), a.den_ * b.den_, Canonical{});
        }
        const Poly at = a.den_ / d1;
        Poly t = a.num_ * (b.den_ / d1) + b.num_ * at;
        if (t.is_zero()) return RatFuncG();
        const Poly d2 = Poly::gcd(t, d1);
        if (d2.is_constant()) return RatFuncG(std::move(t), at * b.den_, Canonical{});
        return RatFuncG(t / d2, at * (b.den_ / d2), Canonical{});
    }
    friend RatFuncG operator-(const RatFuncG& a, const RatFuncG& b) { return a + (-b); }
    friend RatFuncG operator*(const RatFuncG& a, const RatFuncG& b) {
        if (a.is_zero() || b.is_zero()) return RatFuncG();
        if (a.is_constant()) return b.scaled(a.num_.constant_value());
        if (b.is_constant()) return a.scaled(b.num_.constant_value());
        Poly an = a.num_, bd = b.den_;
        cross_cancel(an, bd);
        Poly bn = b.num_, ad = a.den_;
        cross_cancel(bn, ad);
        return RatFuncG(an * bn, ad * bd, Canonical{});
    }
    friend RatFuncG operator/(const RatFuncG& a, const RatFuncG& b) {
        if (b.is_zero()) throw std::domain_error("RatFuncG: division by zero");
        if (a.is_zero()) return RatFuncG();
        Poly an = a.num_, bn = b.num_;
        cross_cancel(an, bn);
        Poly ad = a.den_, bd = b.den_;
        cross_cancel(bd, ad);
        Poly num = an * bd, den = ad * bn;
        const Rat lead = den.leading();
        if (lead != 1) {
            num = num.scaled(Rat(1) / lead);
            den = den.scaled(Rat(1) / lead);
        }
        return RatFuncG(std::move(num), std::move(den), Canonical{});
    }

    RatFuncG& operator+=(const RatFuncG& b) { return *this = *this + b; }
    RatFuncG& operator-=(const RatFuncG& b) { return *this = *this - b; }
    RatFuncG& operator*=(const RatFuncG& b) { return *this = *this * b; }
    RatFuncG& operator/=(const RatFuncG& b) { return *this = *this / b; }

    friend bool operator==(const RatFuncG& a, const RatFuncG& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFuncG& a, const RatFuncG& b) { return !(a == b); }

    RatFuncG scaled(const Rat& c) const {
        if (c == 0 || is_zero()) return RatFuncG();
        return RatFuncG(num_.scaled(c), den_, Canonical{});
    }

    RatFuncG pow(long k) const {
        if (k < 0) {
            if (is_zero()) throw std::domain_error("RatFuncG: negative power of zero");
            return (Rat(1) / *this).pow(-k);
        }
        RatFuncG result(Rat(1)), base(*this);
        unsigned long e = static_cast<unsigned long>(k);
        while (e) {
            if (e & 1UL) result *= base;
            base *= base;
            e >>= 1UL;
        }
        return result;
    }

    // Evaluate at g = g0 (exact).  Throws PoleAtCoupling on a genuine pole.
    Rat specialize(const Rat& g0) const {
        Rat d = den_.eval(g0);
        if (d == 0)
            throw PoleAtCoupling("RatFuncG::specialize: pole at g = " + rat_to_string(g0));
        return num_.eval(g0) / d;
    }

    std::string to_string() const {
        if (den_ == Poly(Rat(1))) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

  private:
    // Tag constructor for inputs already known to be canonical (coprime,
    // monic denominator, nonzero numerator).
    struct Canonical {};
    RatFuncG(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    // Divide a common factor out of x and y (no-op when either is constant).
    static void cross_cancel(Poly& x, Poly& y) {
        if (x.is_constant() || y.is_constant()) return;
        const Poly d = Poly::gcd(x, y);
        if (d.degree() > 0) {
            x = x / d;
            y = y / d;
        }
    }

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RatFuncG: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Rat(1));
            return;
        }
        Poly d = Poly::gcd(num_, den_);
        if (d.degree() > 0) {
            num_ = num_ / d;
            den_ = den_ / d;
        }
        Rat lead = den_.leading();
        if (lead != 1) {
            num_ = num_.scaled(Rat(1) / lead);
            den_ = den_.scaled(Rat(1) / lead);
        }
    }

    Poly num_;
    Poly den_;  // monic, coprime with num_
};

inline bool is_zero(const RatFuncG& x) { return x.is_zero(); }
inline bool is_zero(const Rat& x) { return x == 0; }

}  // namespace dcs
