// The charged bosonic Fock space over Q(sqrt(r*s)).
//
// Basis states |Q; lambda>_u = a_{-lambda_1} a_{-lambda_2} ... R^Q |0> are
// stored sparsely as (charge, partition) -> QuadScalar.  The oscillator
// relations [a_n, a_m] = n delta_{n+m,0} make annihilation act by part
// removal with multiplicity weight, creation by part insertion, and the
// pairing of unnormalized basis vectors diagonal with weight z_lambda.
// Normalized states |Q,lambda> = z_lambda^{-1/2} |Q;lambda>_u are never
// materialized (their normalization leaves Q(sqrt(r*s))).
//
// Operators:
//   Qop          = nu0 * a_0                       (charge scalar)
//   H^1          = (nu0/mu) a_0
//   H^2          = Qop^2/2 + sum_{n>0} a_{-n} a_n
//   H^3          = mu * sum_{i,j>0} (a_{-i}a_{-j}a_{i+j} + a_{-i-j}a_i a_j)
//                  + sum_{n>0} [(1-mu^2) n + 2 mu Qop] a_{-n} a_n
//                  + (mu/3) Qop^3 - (mu^3/12) Qop
//   C            = sum_{n>0} n a_{-n} a_n
//   W^1          = Qop
//   W^2          = H^2
//   W^3          = (1/3) sum :aaa: + 2 Qop sum_{n>0} a_{-n}a_n
//                  + Qop^3/3 - (mu^2/12) Qop
// where mu is the statistics parameter: mu = nu for the model operators,
// and general mu = m*nu0 (m integer) parameterizes the dual family; the
// identity H^3 = mu W^3 + (1 - mu^2) C holds for every mu.
//
// Vertex-operator Fourier modes phi-hat_mu(n) shift the charge by m
// (mu = m*nu0) and raise the degree by exactly n; mode 0 maps |Q> to
// |Q+m> with coefficient 1, which fixes the overall normalization.

#pragma once

#include "dcs/params.hpp"
#include "dcs/partition.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dcs {

using FockKey = std::pair<long, Partition>;  // (charge Q, oscillator content)
using FockVector = std::map<FockKey, QuadScalar>;

inline FockVector fock_basis(long Q, Partition lambda = {}) {
    require_partition(lambda, "fock_basis");
    return FockVector{{{Q, std::move(lambda)}, QuadScalar(Rat(1))}};
}

inline void fock_add_scaled(FockVector& into, const FockVector& v, const QuadScalar& c) {
    if (c.is_zero()) return;
    for (const auto& [key, x] : v) {
        auto it = into.find(key);
        if (it == into.end()) {
            QuadScalar y = x * c;
            if (!y.is_zero()) into.emplace(key, std::move(y));
        } else {
            it->second += x * c;
            if (it->second.is_zero()) into.erase(it);
        }
    }
}

inline FockVector fock_scaled(const FockVector& v, const QuadScalar& c) {
    FockVector out;
    fock_add_scaled(out, v, c);
    return out;
}

inline long fock_max_degree(const FockVector& v) {
    long d = 0;
    for (const auto& [key, c] : v) d = std::max(d, weight(key.second));
    return d;
}

// <v, w> in the diagonal z_lambda pairing of the unnormalized basis.
inline QuadScalar inner(const FockVector& v, const FockVector& w) {
    QuadScalar acc;
    for (const auto& [key, cv] : v) {
        auto it = w.find(key);
        if (it == w.end()) continue;
        acc += (cv * it->second).scaled(Rat(Int(z_lambda(key.second))));
    }
    return acc;
}

// --- oscillator modes -----------------------------------------------------

inline FockVector apply_a(long n, const FockVector& v) {
    if (n == 0) throw std::invalid_argument("apply_a: use apply_a0 for the zero mode");
    FockVector out;
    for (const auto& [key, c] : v) {
        if (n < 0) {
            FockKey k2{key.first, insert_part(key.second, -n)};
            auto it = out.find(k2);
            if (it == out.end()) out.emplace(std::move(k2), c);
            else if ((it->second += c).is_zero()) out.erase(it);
        } else {
            const long mult = multiplicity_of(key.second, n);
            if (mult == 0) continue;
            FockKey k2{key.first, remove_part(key.second, n)};
            QuadScalar x = c.scaled(Rat(n * mult));
            auto it = out.find(k2);
            if (it == out.end()) out.emplace(std::move(k2), std::move(x));
            else if ((it->second += x).is_zero()) out.erase(it);
        }
    }
    return out;
}

// a_0 multiplies each term by its charge.
inline FockVector apply_a0(const FockVector& v) {
    FockVector out;
    for (const auto& [key, c] : v) {
        QuadScalar x = c.scaled(Rat(key.first));
        if (!x.is_zero()) out.emplace(key, std::move(x));
    }
    return out;
}

// The charge operator Qop = nu0 * a_0.
inline FockVector apply_charge(const FockVector& v, const ModelParams& p) {
    return fock_scaled(apply_a0(v), p.nu0());
}

// --- diagonal operators ----------------------------------------------------

// sum_{n>0} a_{-n} a_n: multiplies each term by its degree |lambda|.
inline FockVector apply_number(const FockVector& v) {
    FockVector out;
    for (const auto& [key, c] : v) {
        if (weight(key.second) == 0) continue;
        out.emplace(key, c.scaled(Rat(weight(key.second))));
    }
    return out;
}

// C = sum_{n>0} n a_{-n} a_n: multiplies each term by sum_i lambda_i^2.
inline FockVector apply_C(const FockVector& v) {
    FockVector out;
    for (const auto& [key, c] : v) {
        long sq = 0;
        for (long part : key.second) sq += part * part;
        if (sq == 0) continue;
        out.emplace(key, c.scaled(Rat(sq)));
    }
    return out;
}

// --- the cubic oscillator term ---------------------------------------------

// sum_{i,j>0} ( a_{-i} a_{-j} a_{i+j} + a_{-i-j} a_i a_j ), the reduction
// of the normal-ordered triple sum (1/3) sum_{n1+n2+n3=0, ni != 0} :aaa:
// by the multiplicity of orderings (6 for {i,j} distinct, 3 for i = j,
// against the 2 resp. 1 ordered pairs (i,j) producing the same multiset).
inline FockVector apply_cubic(const FockVector& v) {
    FockVector out;
    const long D = fock_max_degree(v);
    for (long i = 1; i <= D; ++i) {
        for (long j = 1; j <= D; ++j) {
            if (i + j <= D)
                fock_add_scaled(out, apply_a(-i, apply_a(-j, apply_a(i + j, v))),
                                QuadScalar(Rat(1)));
            fock_add_scaled(out, apply_a(-(i + j), apply_a(i, apply_a(j, v))),
                            QuadScalar(Rat(1)));
        }
    }
    return out;
}

// --- Hamiltonians and W operators -------------------------------------------

// H^k with an explicit statistics parameter mu (mu = p.nu() gives the model
// Hamiltonians; mu = -1/nu gives the duals).
inline FockVector apply_H_stat(int k, const FockVector& v, const ModelParams& p,
                               const QuadScalar& mu) {
    const QuadScalar nu0 = p.nu0();
    FockVector out;
    switch (k) {
        case 1: {
            // (nu0/mu) a_0
            fock_add_scaled(out, apply_a0(v), nu0 / mu);
            return out;
        }
        case 2: {
            // Qop^2/2 + degree
            fock_add_scaled(out, apply_a0(apply_a0(v)), (nu0 * nu0).scaled(Rat(1, 2)));
            fock_add_scaled(out, apply_number(v), QuadScalar(Rat(1)));
            return out;
        }
        case 3: {
            const QuadScalar one(Rat(1));
            fock_add_scaled(out, apply_cubic(v), mu);
            fock_add_scaled(out, apply_C(v), one - mu * mu);
            fock_add_scaled(out, apply_a0(apply_number(v)), (mu * nu0).scaled(Rat(2)));
            fock_add_scaled(out, apply_a0(apply_a0(apply_a0(v))),
                            (mu * nu0.pow(3)).scaled(Rat(1, 3)));
            fock_add_scaled(out, apply_a0(v), -(mu.pow(3) * nu0).scaled(Rat(1, 12)));
            return out;
        }
        default:
            throw std::invalid_argument("apply_H_stat: k must be 1, 2 or 3");
    }
}

inline FockVector apply_H(int k, const FockVector& v, const ModelParams& p) {
    return apply_H_stat(k, v, p, p.nu());
}

inline FockVector apply_W_stat(int k, const FockVector& v, const ModelParams& p,
                               const QuadScalar& mu) {
    const QuadScalar nu0 = p.nu0();
    FockVector out;
    switch (k) {
        case 1:
            return apply_charge(v, p);
        case 2:
            return apply_H_stat(2, v, p, mu);
        case 3: {
            fock_add_scaled(out, apply_cubic(v), QuadScalar(Rat(1)));
            fock_add_scaled(out, apply_a0(apply_number(v)), nu0.scaled(Rat(2)));
            fock_add_scaled(out, apply_a0(apply_a0(apply_a0(v))),
                            nu0.pow(3).scaled(Rat(1, 3)));
            fock_add_scaled(out, apply_a0(v), -(mu * mu * nu0).scaled(Rat(1, 12)));
            return out;
        }
        default:
            throw std::invalid_argument("apply_W_stat: k must be 1, 2 or 3");
    }
}

inline FockVector apply_W(int k, const FockVector& v, const ModelParams& p) {
    return apply_W_stat(k, v, p, p.nu());
}

// --- vertex-operator Fourier modes -------------------------------------------

namespace detail {
// All sub-multisets sigma of lambda together with the contraction factor
// prod_v (m_v falling take_v) * v^{take_v} over distinct part values v (the
// number of ordered ways annihilators can pick take_v of the m_v parts,
// each removal carrying the oscillator weight v).
inline void fock_submultisets(const std::vector<std::pair<long, long>>& mults, std::size_t idx,
                              Partition& sigma, const Int& fac,
                              std::vector<std::pair<Partition, Int>>& out) {
    if (idx == mults.size()) {
        out.emplace_back(sigma, fac);
        return;
    }
    const auto [value, mult] = mults[idx];
    Int f = fac;
    for (long take = 0; take <= mult; ++take) {
        if (take > 0) {
            f *= Int(mult - take + 1) * Int(value);
            sigma.push_back(value);
        }
        fock_submultisets(mults, idx + 1, sigma, f, out);
    }
    for (long take = 1; take <= mult; ++take) sigma.pop_back();
}
}  // namespace detail

namespace detail {
// Precomputed contraction data for one basis partition: each sub-multiset
// sigma contributes its weight, length, combinatorial factor over z_sigma,
// and the leftover parts.
struct ContractionEntry {
    long w = 0;
    long len = 0;
    Rat fac_over_z;
    Partition rest;
};

inline const std::vector<ContractionEntry>& contraction_table(const Partition& lam) {
    thread_local std::map<Partition, std::vector<ContractionEntry>> cache;
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<Partition, Int>> sigmas;
    {
        Partition scratch;
        fock_submultisets(part_multiplicities(lam), 0, scratch, Int(1), sigmas);
    }
    std::vector<ContractionEntry> table;
    table.reserve(sigmas.size());
    for (const auto& [sigma, fac] : sigmas) {
        ContractionEntry e;
        e.w = weight(sigma);
        e.len = num_parts(sigma);
        e.fac_over_z = Rat(fac, z_lambda(sigma));
        e.rest = lam;
        for (long val : sigma) e.rest = remove_part(e.rest, val);
        table.push_back(std::move(e));
    }
    return cache.emplace(lam, std::move(table)).first->second;
}

// Partitions of d with their lengths and 1/z factors, cached per degree.
struct CreationEntry {
    Partition kappa;
    long len = 0;
    Rat inv_z;
};

inline const std::vector<CreationEntry>& creation_table(long d) {
    thread_local std::map<long, std::vector<CreationEntry>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    std::vector<CreationEntry> table;
    for (auto& kappa : partitions_of(d)) {
        CreationEntry e;
        e.len = num_parts(kappa);
        e.inv_z = Rat(Int(1), z_lambda(kappa));
        e.kappa = std::move(kappa);
        table.push_back(std::move(e));
    }
    return cache.emplace(d, std::move(table)).first->second;
}
}  // namespace detail

// The n-th Fourier mode of the vertex operator with statistics parameter
// mu = m*nu0 and charge shift m.  Expanding both exponentials and collecting
// the coefficient of the n-th power of the position phase gives, per basis
// term |Q; lambda>_u,
//   sum over sub-multisets sigma of lambda (annihilator contractions)
//   sum over partitions kappa of n + |sigma| (creation content)
//     mu^{l(kappa)} (-mu)^{l(sigma)} contraction(sigma, lambda)
//     / (z_kappa z_sigma) * |Q + m; (lambda - sigma) + kappa>_u.
inline FockVector vertex_mode_stat(long m, long n, const FockVector& v, const ModelParams& p) {
    const QuadScalar mu = p.stat_param(m);
    std::vector<QuadScalar> mupow{p.one()};
    auto mu_pow = [&](long l) -> const QuadScalar& {
        while (static_cast<long>(mupow.size()) <= l) mupow.push_back(mupow.back() * mu);
        return mupow[static_cast<std::size_t>(l)];
    };
    FockVector out;
    for (const auto& [key, coeff] : v) {
        const long Q2 = key.first + m;
        for (const auto& se : detail::contraction_table(key.second)) {
            const long deg_new = n + se.w;
            if (deg_new < 0) continue;
            QuadScalar c1 = coeff.scaled((se.len % 2) ? -se.fac_over_z : se.fac_over_z);
            c1 *= mu_pow(se.len);
            if (c1.is_zero()) continue;
            for (const auto& ce : detail::creation_table(deg_new)) {
                QuadScalar c2 = c1 * mu_pow(ce.len);
                c2 = c2.scaled(ce.inv_z);
                if (c2.is_zero()) continue;
                std::vector<long> parts = se.rest;
                parts.insert(parts.end(), ce.kappa.begin(), ce.kappa.end());
                FockKey k2{Q2, sorted_partition(std::move(parts))};
                auto it = out.find(k2);
                if (it == out.end()) out.emplace(std::move(k2), std::move(c2));
                else if ((it->second += c2).is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

enum class VertexKind { Plus, Minus };  // phi_nu (shift +r) / phi_{-1/nu} (shift -s)

inline FockVector vertex_mode(VertexKind kind, long n, const FockVector& v,
                              const ModelParams& p) {
    return vertex_mode_stat(kind == VertexKind::Plus ? p.r : -p.s, n, v, p);
}

// --- sector matrices ---------------------------------------------------------

inline constexpr long kSectorDegreeCap = 16;

struct SectorMatrix {
    long Q = 0;
    long d = 0;
    std::vector<Partition> basis;                   // partitions of d, ascending lex
    std::vector<std::vector<QuadScalar>> entries;   // entries[i][j]: row i, column j
};

// Matrix of a charge- and degree-preserving operator on the (Q, d) sector
// in the unnormalized basis: column j lists the coefficients of
// op(|Q; basis_j>_u).  Throws if the operator leaks out of the sector.
inline SectorMatrix sector_matrix(const std::function<FockVector(const FockVector&)>& op,
                                  long Q, long d) {
    if (d < 0 || d > kSectorDegreeCap)
        throw std::invalid_argument("sector_matrix: degree outside supported range");
    SectorMatrix m;
    m.Q = Q;
    m.d = d;
    m.basis = partitions_of(d);
    const std::size_t n = m.basis.size();
    std::map<Partition, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(m.basis[i], i);
    m.entries.assign(n, std::vector<QuadScalar>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const FockVector w = op(fock_basis(Q, m.basis[j]));
        for (const auto& [key, c] : w) {
            if (key.first != Q || weight(key.second) != d)
                throw std::logic_error("sector_matrix: operator leaks out of the sector");
            m.entries[index.at(key.second)][j] = c;
        }
    }
    return m;
}

}  // namespace dcs
