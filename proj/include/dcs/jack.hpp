// Jack and super Jack polynomials.
//
// Jack polynomials are built per degree by Gram-Schmidt in the monomial
// basis under the Hall inner product <p_lam, p_mu> = delta z_lam (1/g)^len,
// processing partitions in ascending lexicographic order (a linear
// extension of dominance).  The result is P-normalized: the coefficient
// of m_lambda is 1, and the m-support is dominance-bounded by lambda.
//
// The super Jack polynomial attached to a fat-hook partition has the very
// same p-coefficients; only the evaluation alphabet changes (each p_n is
// read as the deformed Newton sum on (z, w)).  kernel_condition_exact
// verifies the defining symmetry: applying d/dz_j + g d/dw_k and then
// identifying z_j = w_k annihilates the polynomial.

#pragma once

#include "dcs/symfunc.hpp"
#include "dcs/labels.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace dcs {

inline constexpr long kJackDegreeCap = 12;

namespace detail {
struct JackDegreeData {
    std::map<Partition, SymFuncG> polys;   // P_lambda in the p-basis
    std::map<Partition, RatFuncG> norms;   // <P_lambda, P_lambda>
};

inline const JackDegreeData& jack_degree(long d) {
    static std::map<long, JackDegreeData> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    if (d < 0 || d > kJackDegreeCap)
        throw std::invalid_argument("jack_p: degree outside supported range");

    const DegreeTransition& tr = p_m_transition(d);
    const RatFuncG inv_g = RatFuncG(Rat(1)) / RatFuncG::g();

    JackDegreeData data;
    std::vector<Partition> done;
    for (const auto& lam : tr.parts) {  // ascending lex
        // Start from m_lambda expressed in p-coordinates.
        SymFuncG v;
        for (const auto& [mu, c] : tr.m_in_p.at(lam)) v.emplace(mu, RatFuncG(c));
        for (const auto& prev : done) {
            const SymFuncG& pprev = data.polys.at(prev);
            RatFuncG ip = hall_inner(v, pprev, inv_g);
            if (ip.is_zero()) continue;
            RatFuncG coeff = ip / data.norms.at(prev);
            add_scaled(v, pprev, -coeff);
        }
        RatFuncG nrm = hall_inner(v, v, inv_g);
        if (nrm.is_zero()) throw std::logic_error("jack_p: degenerate Gram matrix");
        data.norms.emplace(lam, std::move(nrm));
        data.polys.emplace(lam, std::move(v));
        done.push_back(lam);
    }
    return cache.emplace(d, std::move(data)).first->second;
}
}  // namespace detail

// The Jack polynomial P_lambda (P-normalized) in the p-basis, coefficients
// rational functions of g.
inline const SymFuncG& jack_p(const Partition& lambda) {
    require_partition(lambda, "jack_p");
    return detail::jack_degree(weight(lambda)).polys.at(lambda);
}

// The Hall norm <P_lambda, P_lambda> as a rational function of g.
inline const RatFuncG& jack_norm(const Partition& lambda) {
    require_partition(lambda, "jack_norm");
    return detail::jack_degree(weight(lambda)).norms.at(lambda);
}

// A super Jack polynomial: identical p-coefficients plus the (N,M)
// substitution tag for the deformed alphabet.
struct SuperJackP {
    Partition lambda;
    long N = 0;
    long M = 0;
    SymFuncG coeffs;
};

inline SuperJackP super_jack_p(const Partition& lambda, long N, long M) {
    require_partition(lambda, "super_jack_p");
    if (!in_fat_hook(lambda, N, M))
        throw NotInFatHook("super_jack_p: partition not in the fat (N,M)-hook");
    return SuperJackP{lambda, N, M, jack_p(lambda)};
}

// Exact evaluation of a p-basis symmetric function on the deformed
// alphabet (z, w): each p_n is read as sum_j z_j^n - (1/g) sum_k w_k^n.
inline Rat eval_deformed_rat(const SymFuncQ& f, const std::vector<Rat>& z,
                             const std::vector<Rat>& w, const Rat& g) {
    if (g == 0) throw std::invalid_argument("eval_deformed_rat: coupling must be nonzero");
    std::map<long, Rat> pval;
    auto psum = [&](long n) {
        auto it = pval.find(n);
        if (it != pval.end()) return it->second;
        Rat s(0);
        for (const Rat& zj : z) {
            Rat t(1);
            for (long i = 0; i < n; ++i) t *= zj;
            s += t;
        }
        for (const Rat& wk : w) {
            Rat t(1);
            for (long i = 0; i < n; ++i) t *= wk;
            s -= t / g;
        }
        pval.emplace(n, s);
        return s;
    };
    Rat out(0);
    for (const auto& [mu, c] : f) {
        Rat term = c;
        for (long n : mu) term *= psum(n);
        out += term;
    }
    return out;
}

// Tagged variant: checks the point arity against the (N, M) substitution
// tag before specializing the coefficients at the coupling.
inline Rat eval_super_jack_rat(const SuperJackP& sj, const std::vector<Rat>& z,
                               const std::vector<Rat>& w, const Rat& g) {
    if (z.size() != static_cast<std::size_t>(sj.N) || w.size() != static_cast<std::size_t>(sj.M))
        throw std::invalid_argument("eval_super_jack_rat: point arity does not match the (N,M) tag");
    return eval_deformed_rat(specialize_coeffs(sj.coeffs, g), z, w, g);
}

// Exact kernel condition: for each pair (j, k) apply d/dz_j + g d/dw_k to
// the monomial expansion of the deformed polynomial and identify
// z_j = w_k; the result must be the zero polynomial over Q(g).
inline bool kernel_condition_exact(const SymFuncG& f, long N, long M) {
    if (N < 1 || M < 1) throw std::invalid_argument("kernel_condition_exact: need N, M >= 1");
    const RatFuncG minus_inv_g = RatFuncG(Rat(-1)) / RatFuncG::g();
    MultiPoly<RatFuncG> poly = expand_deformed(f, N, M, minus_inv_g);
    const RatFuncG g = RatFuncG::g();
    for (long j = 0; j < N; ++j)
        for (long k = 0; k < M; ++k) {
            const std::size_t zj = static_cast<std::size_t>(j);
            const std::size_t wk = static_cast<std::size_t>(N + k);
            MultiPoly<RatFuncG> d = poly.derivative(zj) + poly.derivative(wk).scaled(g);
            if (!d.collapse(wk, zj).is_zero()) return false;
        }
    return true;
}

}  // namespace dcs
