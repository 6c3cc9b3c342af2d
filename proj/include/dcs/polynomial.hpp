// Dense univariate polynomials over the rationals.
//
// These are the building blocks of the rational-function coefficients in
// the coupling variable g (see ratfunc.hpp).  Coefficients are stored in
// ascending degree order with no trailing zeros, so the zero polynomial is
// the empty vector and degree() of a nonzero polynomial is coeffs.size()-1.

#pragma once

#include "dcs/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcs {

class Poly {
  public:
    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) c_.push_back(c);
    }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    // The indeterminate itself.
    static Poly var() { return Poly({Rat(0), Rat(1)}); }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    bool is_constant() const { return c_.size() <= 1; }
    Rat constant_value() const { return coeff(0); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rat eval(const Rat& x) const {
        Rat v(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
        return v;
    }

    Poly scaled(const Rat& s) const {
        if (s == 0) return Poly();
        Poly r(*this);
        for (auto& x : r.c_) x *= s;
        return r;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(Rat(1) / leading());
    }

    // Exact Euclidean division: a = q*b + r with deg(r) < deg(b).
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
        std::vector<Rat> rem = a.c_;
        std::vector<Rat> quot;
        const long db = b.degree();
        long dr = static_cast<long>(rem.size()) - 1;
        if (dr >= db) quot.assign(static_cast<std::size_t>(dr - db) + 1, Rat(0));
        while (dr >= db) {
            Rat f = rem[static_cast<std::size_t>(dr)] / b.leading();
            quot[static_cast<std::size_t>(dr - db)] = f;
            for (long i = 0; i <= db; ++i)
                rem[static_cast<std::size_t>(dr - db + i)] -= f * b.c_[static_cast<std::size_t>(i)];
            while (!rem.empty() && rem.back() == 0) rem.pop_back();
            dr = static_cast<long>(rem.size()) - 1;
        }
        q = Poly(std::move(quot));
        r = Poly(std::move(rem));
    }

    friend Poly operator/(const Poly& a, const Poly& b) {
        Poly q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) throw std::domain_error("Poly::operator/: inexact division");
        return q;
    }

    // Monic gcd via the Euclidean algorithm.  Remainders are re-normalized
    // to monic at every step, which keeps the rational coefficients from
    // compounding across iterations.
    static Poly gcd(Poly a, Poly b) {
        a = a.monic();
        b = b.monic();
        while (!b.is_zero()) {
            Poly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = r.monic();
        }
        return a;
    }

    std::string to_string(const std::string& var_name = "g") const {
        if (is_zero()) return "0";
        std::string out;
        for (long k = degree(); k >= 0; --k) {
            const Rat& ck = c_[static_cast<std::size_t>(k)];
            if (ck == 0) continue;
            if (!out.empty()) out += (ck > 0) ? " + " : " - ";
            else if (ck < 0) out += "-";
            Rat a = rat_abs(ck);
            const bool unit = (a == 1) && k > 0;
            if (!unit) out += rat_to_string(a);
            if (k > 0) {
                if (!unit) out += "*";
                out += var_name;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

}  // namespace dcs
