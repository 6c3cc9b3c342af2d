// Model parameters and the quadratic scalar field Q(sqrt(r*s)).
//
// The coupling is fixed to g = r/s with r, s positive coprime integers.
// The natural scalars of the bosonic realization are
//     nu    = t/s,   nu0 = t/(r*s),   -1/nu = -t/r,     where t = sqrt(r*s).
// QuadScalar represents a + b*t exactly, with rational a, b.  When r*s is a
// perfect square (e.g. r = s = 1) the t-part is folded into the rational
// part on construction, so equality of representations remains equality of
// numbers.  Every nonzero element is invertible: for non-square r*s the
// norm a^2 - r*s*b^2 vanishes only at a = b = 0, and for square r*s the
// canonical form always has b = 0.

#pragma once

#include "dcs/rational.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace dcs {

class QuadScalar {
  public:
    QuadScalar() : a_(0), b_(0), disc_(0) {}
    explicit QuadScalar(const Rat& a) : a_(a), b_(0), disc_(0) {}
    QuadScalar(Rat a, Rat b, long disc) : a_(std::move(a)), b_(std::move(b)), disc_(disc) {
        if (b_ != 0 && disc_ <= 0)
            throw std::invalid_argument("QuadScalar: irrational part requires a positive discriminant");
        canonicalize();
    }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long disc() const { return disc_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("QuadScalar: value is irrational");
        return a_;
    }

    QuadScalar operator-() const { return raw(-a_, -b_, disc_); }

    friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
        return raw(x.a_ + y.a_, x.b_ + y.b_, merged_disc(x, y));
    }
    friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) { return x + (-y); }
    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
        const long d = merged_disc(x, y);
        return raw(x.a_ * y.a_ + Rat(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) { return x * y.inverse(); }

    QuadScalar& operator+=(const QuadScalar& y) { return *this = *this + y; }
    QuadScalar& operator-=(const QuadScalar& y) { return *this = *this - y; }
    QuadScalar& operator*=(const QuadScalar& y) { return *this = *this * y; }
    QuadScalar& operator/=(const QuadScalar& y) { return *this = *this / y; }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

    QuadScalar inverse() const {
        if (is_zero()) throw std::domain_error("QuadScalar: inverse of zero");
        if (b_ == 0) return raw(Rat(1) / a_, Rat(0), disc_);
        Rat n = a_ * a_ - Rat(disc_) * b_ * b_;
        // disc_ is non-square here (square discriminants canonicalize to b == 0),
        // so the norm of a nonzero element never vanishes.
        return raw(a_ / n, -b_ / n, disc_);
    }

    QuadScalar pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        QuadScalar result(Rat(1)), base(*this);
        result.disc_ = disc_;
        unsigned long e = static_cast<unsigned long>(k);
        while (e) {
            if (e & 1UL) result *= base;
            base *= base;
            e >>= 1UL;
        }
        return result;
    }

    // Scale by a plain rational (cheap, no disc merging needed).
    QuadScalar scaled(const Rat& c) const { return raw(a_ * c, b_ * c, disc_); }

    std::string to_string() const {
        if (b_ == 0) return rat_to_string(a_);
        return rat_to_string(a_) + " + " + rat_to_string(b_) + "*sqrt(" + std::to_string(disc_) + ")";
    }

  private:
    static QuadScalar raw(Rat a, Rat b, long disc) {
        QuadScalar q;
        q.a_ = std::move(a);
        q.b_ = std::move(b);
        q.disc_ = disc;
        q.canonicalize();
        return q;
    }

    static long merged_disc(const QuadScalar& x, const QuadScalar& y) {
        if (x.disc_ == 0) return y.disc_;
        if (y.disc_ == 0 || x.disc_ == y.disc_) return x.disc_;
        throw std::invalid_argument("QuadScalar: mixing scalars over different discriminants");
    }

    void canonicalize() {
        if (b_ == 0) return;
        if (auto k = perfect_sqrt(Int(disc_))) {
            a_ += b_ * Rat(*k);
            b_ = 0;
        }
    }

    Rat a_, b_;
    long disc_;
};

inline bool is_zero(const QuadScalar& x) { return x.is_zero(); }

struct ModelParams {
    long r = 2;
    long s = 1;

    ModelParams() = default;
    ModelParams(long r_, long s_) : r(r_), s(s_) {
        if (r < 1 || s < 1) throw std::invalid_argument("ModelParams: r, s must be positive");
        if (std::gcd(r, s) != 1) throw std::invalid_argument("ModelParams: r, s must be coprime");
    }

    long disc() const { return r * s; }          // t^2
    Rat g() const { return Rat(r, s); }          // coupling g = nu^2

    QuadScalar from_rat(const Rat& x) const { return QuadScalar(x, Rat(0), disc()); }
    QuadScalar zero() const { return from_rat(Rat(0)); }
    QuadScalar one() const { return from_rat(Rat(1)); }

    QuadScalar nu() const { return QuadScalar(Rat(0), Rat(1, s), disc()); }       // t/s
    QuadScalar nu0() const { return QuadScalar(Rat(0), Rat(1, r * s), disc()); }  // t/(r*s)
    QuadScalar neg_inv_nu() const { return QuadScalar(Rat(0), Rat(-1, r), disc()); }

    // General statistics parameter m*nu0 (the lattice nu0*Z of allowed
    // vertex-operator exponents); m = r gives nu, m = -s gives -1/nu.
    QuadScalar stat_param(long m) const { return QuadScalar(Rat(0), Rat(m, r * s), disc()); }

    friend bool operator==(const ModelParams& x, const ModelParams& y) {
        return x.r == y.r && x.s == y.s;
    }
};

}  // namespace dcs
