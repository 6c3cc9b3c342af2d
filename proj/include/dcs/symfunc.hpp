// Symmetric functions in the power-sum and monomial bases.
//
// A symmetric function is stored as a map partition -> coefficient; the
// meaning of the keys (p-basis vs m-basis) is tracked by usage, with the
// p-basis the default interchange format of the library.  The monomial
// basis appears in the per-degree transition matrices (computed by
// iterated multiplication m_lambda * p_r and exact inversion) and in the
// triangular Gram-Schmidt construction of Jack polynomials.
//
// The deformed evaluation sends p_n to sum_j z_j^n - (1/g) sum_k w_k^n;
// expand_deformed produces the corresponding exact multivariate polynomial
// in the N + M variables (z_1..z_N, w_1..w_M).

#pragma once

#include "dcs/partition.hpp"
#include "dcs/ratfunc.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dcs {

template <typename C>
using SymFunc = std::map<Partition, C>;

using SymFuncQ = SymFunc<Rat>;
using SymFuncG = SymFunc<RatFuncG>;

template <typename C>
void add_scaled(SymFunc<C>& into, const SymFunc<C>& f, const C& scale) {
    for (const auto& [mu, c] : f) {
        auto it = into.find(mu);
        if (it == into.end()) {
            C v = c * scale;
            if (!is_zero(v)) into.emplace(mu, std::move(v));
        } else {
            it->second += c * scale;
            if (is_zero(it->second)) into.erase(it);
        }
    }
}

// Product in the p-basis: p_lambda * p_mu = p_{lambda union mu}.
template <typename C>
SymFunc<C> p_multiply(const SymFunc<C>& f, const SymFunc<C>& h) {
    SymFunc<C> out;
    for (const auto& [lam, a] : f)
        for (const auto& [mu, b] : h) {
            std::vector<long> parts = lam;
            parts.insert(parts.end(), mu.begin(), mu.end());
            Partition key = sorted_partition(std::move(parts));
            C v = a * b;
            auto it = out.find(key);
            if (it == out.end()) {
                if (!is_zero(v)) out.emplace(std::move(key), std::move(v));
            } else {
                it->second += v;
                if (is_zero(it->second)) out.erase(it);
            }
        }
    return out;
}

// --- m-basis <-> p-basis transitions ------------------------------------

// Multiply an m-basis expansion by the power sum p_r: each monomial term
// either gains a new part r or has one existing part value raised by r;
// the coefficient is the multiplicity, in the target partition, of the new
// or modified part value.
inline SymFuncQ m_times_p(const SymFuncQ& f, long r) {
    SymFuncQ out;
    auto add = [&out](Partition key, const Rat& v) {
        auto it = out.find(key);
        if (it == out.end()) out.emplace(std::move(key), v);
        else it->second += v;
    };
    for (const auto& [lam, c] : f) {
        {
            Partition nu = insert_part(lam, r);
            add(nu, c * Rat(multiplicity_of(nu, r)));
        }
        std::vector<long> seen;
        for (long v : lam) {
            if (std::find(seen.begin(), seen.end(), v) != seen.end()) continue;
            seen.push_back(v);
            Partition nu = insert_part(remove_part(lam, v), v + r);
            add(nu, c * Rat(multiplicity_of(nu, v + r)));
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

// Expansion of p_mu in the monomial basis (integer coefficients).
inline SymFuncQ p_to_m_single(const Partition& mu) {
    SymFuncQ f{{Partition{}, Rat(1)}};
    for (long r : mu) f = m_times_p(f, r);
    return f;
}

struct DegreeTransition {
    std::vector<Partition> parts;              // partitions of d, ascending lex
    std::map<Partition, SymFuncQ> p_in_m;      // p_mu as m-expansion
    std::map<Partition, SymFuncQ> m_in_p;      // m_lambda as p-expansion
};

// Per-degree transition data, cached.  The matrix (p_mu in m-basis) is
// dominance-triangular with nonzero diagonal, hence exactly invertible.
inline const DegreeTransition& p_m_transition(long d) {
    static std::map<long, DegreeTransition> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    if (d < 0) throw std::invalid_argument("p_m_transition: negative degree");

    DegreeTransition t;
    t.parts = partitions_of(d);
    const std::size_t n = t.parts.size();
    for (const auto& mu_ : t.parts) t.p_in_m.emplace(mu_, p_to_m_single(mu_));

    // Invert by Gaussian elimination on the n x n coefficient matrix
    // A[mu][lam] = coeff of m_lam in p_mu, solving X A = I so that
    // m_lam = sum_mu X[lam][mu] p_mu.
    std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = t.p_in_m.at(t.parts[i]);
        for (std::size_t j = 0; j < n; ++j) {
            auto itc = row.find(t.parts[j]);
            if (itc != row.end()) A[i][j] = itc->second;
        }
    }
    // Augment with identity and row-reduce A^T (solving A^T Y = I gives
    // Y = (A^T)^{-1}, and X = Y^T).
    std::vector<std::vector<Rat>> T(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) T[i][j] = A[j][i];
        T[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && T[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("p_m_transition: singular transition matrix");
        std::swap(T[col], T[piv]);
        const Rat pv = T[col][col];
        for (auto& x : T[col]) x /= pv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || T[i][col] == 0) continue;
            const Rat f = T[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) T[i][j] -= f * T[col][j];
        }
    }
    for (std::size_t lam = 0; lam < n; ++lam) {
        SymFuncQ expansion;
        for (std::size_t mu_ = 0; mu_ < n; ++mu_) {
            // X[lam][mu] = Y[mu][lam] with Y in the augmented right half.
            const Rat& v = T[mu_][n + lam];
            if (v != 0) expansion.emplace(t.parts[mu_], v);
        }
        t.m_in_p.emplace(t.parts[lam], std::move(expansion));
    }
    return cache.emplace(d, std::move(t)).first->second;
}

// Convert a homogeneous-or-not p-expansion into the m-basis and back.
inline SymFuncQ p_basis_to_m(const SymFuncQ& f) {
    SymFuncQ out;
    for (const auto& [mu, c] : f)
        add_scaled(out, p_m_transition(weight(mu)).p_in_m.at(mu), c);
    return out;
}

inline SymFuncQ m_basis_to_p(const SymFuncQ& f) {
    SymFuncQ out;
    for (const auto& [lam, c] : f)
        add_scaled(out, p_m_transition(weight(lam)).m_in_p.at(lam), c);
    return out;
}

// --- Hall inner product --------------------------------------------------

// <p_lambda, p_mu> = delta_{lambda,mu} z_lambda alpha^{l(lambda)} with
// alpha = 1/g.  Both arguments in the p-basis; alpha_inv_g passed by the
// caller as the coefficient-ring value of 1/g.
template <typename C>
C hall_inner(const SymFunc<C>& f, const SymFunc<C>& h, const C& alpha_inv_g) {
    C acc{};
    for (const auto& [lam, a] : f) {
        auto it = h.find(lam);
        if (it == h.end()) continue;
        C term = a * it->second * C(Rat(z_lambda(lam)));
        C al = alpha_inv_g;
        for (long i = 0; i < num_parts(lam); ++i) term = term * al;
        acc += term;
    }
    return acc;
}

// --- coefficient specialization ------------------------------------------

inline SymFuncQ specialize_coeffs(const SymFuncG& f, const Rat& g0) {
    SymFuncQ out;
    for (const auto& [mu, c] : f) {
        Rat v = c.specialize(g0);
        if (v != 0) out.emplace(mu, v);
    }
    return out;
}

// --- deformed evaluation ---------------------------------------------------

// Deformed power sum p_n^{N,M}(z, w) = sum z_j^n - (1/g) sum w_k^n, for a
// generic scalar type S (exact rationals, quadratic scalars, complex...).
template <typename S>
S deformed_power_sum(long n, const std::vector<S>& z, const std::vector<S>& w, const S& inv_g) {
    if (n <= 0) throw std::invalid_argument("deformed_power_sum: n must be positive");
    auto pow_n = [n](const S& x) {
        S acc = x;
        for (long i = 1; i < n; ++i) acc = acc * x;
        return acc;
    };
    S zsum{};
    for (const auto& zj : z) zsum += pow_n(zj);
    S wsum{};
    for (const auto& wk : w) wsum += pow_n(wk);
    return zsum - inv_g * wsum;
}

// Evaluate a p-basis expansion with coefficients already in the scalar
// type S at the deformed alphabet (z, w).
template <typename S>
S eval_deformed(const SymFunc<S>& f, const std::vector<S>& z, const std::vector<S>& w,
                const S& inv_g) {
    S acc{};
    for (const auto& [mu, c] : f) {
        S term = c;
        for (long part : mu) term = term * deformed_power_sum(part, z, w, inv_g);
        acc += term;
    }
    return acc;
}

// --- exact multivariate polynomials ---------------------------------------

// Sparse multivariate polynomial: exponent vector -> coefficient.  Used to
// expand deformed symmetric functions into the z/w monomial basis exactly.
template <typename C>
class MultiPoly {
  public:
    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

    std::size_t nvars() const { return nvars_; }
    const std::map<std::vector<long>, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static MultiPoly constant(std::size_t nvars, const C& c) {
        MultiPoly p(nvars);
        p.add_term(std::vector<long>(nvars, 0), c);
        return p;
    }
    static MultiPoly monomial(std::size_t nvars, std::size_t var, long exp, const C& c) {
        MultiPoly p(nvars);
        std::vector<long> e(nvars, 0);
        e.at(var) = exp;
        p.add_term(std::move(e), c);
        return p;
    }

    void add_term(std::vector<long> e, const C& c) {
        if (is_zero_c(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) terms_.emplace(std::move(e), c);
        else {
            it->second += c;
            if (is_zero_c(it->second)) terms_.erase(it);
        }
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const {
        check(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, C{} - c);
        return r;
    }
    MultiPoly operator*(const MultiPoly& o) const {
        check(o);
        MultiPoly r(nvars_);
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                std::vector<long> e(nvars_);
                for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
                r.add_term(std::move(e), c1 * c2);
            }
        return r;
    }
    MultiPoly scaled(const C& c) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c0] : terms_) r.add_term(e, c0 * c);
        return r;
    }

    MultiPoly derivative(std::size_t var) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e.at(var) == 0) continue;
            std::vector<long> e2 = e;
            --e2[var];
            r.add_term(std::move(e2), c * C(Rat(e[var])));
        }
        return r;
    }

    // Identify variable `from` with variable `to` (substitute x_from = x_to).
    MultiPoly collapse(std::size_t from, std::size_t to) const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) {
            std::vector<long> e2 = e;
            e2.at(to) += e2.at(from);
            e2.at(from) = 0;
            r.add_term(std::move(e2), c);
        }
        return r;
    }

    template <typename S>
    S eval(const std::vector<S>& x, S (*convert)(const C&)) const {
        S acc{};
        for (const auto& [e, c] : terms_) {
            S term = convert(c);
            for (std::size_t i = 0; i < nvars_; ++i)
                for (long k = 0; k < e[i]; ++k) term = term * x[i];
            acc += term;
        }
        return acc;
    }

  private:
    static bool is_zero_c(const C& c) {
        using dcs::is_zero;
        return is_zero(c);
    }
    void check(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
    }
    std::size_t nvars_;
    std::map<std::vector<long>, C> terms_;
};

// Exact monomial expansion of a p-basis symmetric function on the deformed
// alphabet: variables are (z_1..z_N, w_1..w_M) and every p_n factor is
// expanded as sum_j z_j^n + minus_inv_g * sum_k w_k^n.
template <typename C>
MultiPoly<C> expand_deformed(const SymFunc<C>& f, long N, long M, const C& minus_inv_g) {
    const std::size_t V = static_cast<std::size_t>(N + M);
    MultiPoly<C> acc(V);
    for (const auto& [mu, c] : f) {
        MultiPoly<C> term = MultiPoly<C>::constant(V, c);
        for (long part : mu) {
            MultiPoly<C> pn(V);
            for (long j = 0; j < N; ++j) {
                std::vector<long> e(V, 0);
                e[static_cast<std::size_t>(j)] = part;
                pn.add_term(std::move(e), C(Rat(1)));
            }
            for (long k = 0; k < M; ++k) {
                std::vector<long> e(V, 0);
                e[static_cast<std::size_t>(N + k)] = part;
                pn.add_term(std::move(e), minus_inv_g);
            }
            term = term * pn;
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace dcs
