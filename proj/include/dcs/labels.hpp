// Spectral labels (N, M, Q, n), the fat-hook bijection, the tail-sum
// partial order, and admissible-label enumeration.
//
// A label carries N first-species and M second-species mode numbers
// n = (n_1, ..., n_{N+M}) together with an initial charge Q.  The final
// charge of the state the label names is Q1 = Q + N*r - M*s and its degree
// is |n|; the grading exponent (in units of q^{1/(2rs)}) is Q1^2 + 2rs|n|.
//
// Admissibility (the index set of the complete-basis conjecture):
//   r >= s:  Q in [1-s, r-s],
//            n_1 >= ... >= n_N >= M,
//            n_{N+1} >= ... >= n_{N+M} >= chi(Q > 0);
//   r <  s:  Q in [r-s, r-1],
//            n_1 >= ... >= n_N >= chi(Q < 0),
//            n_{N+1} >= ... >= n_{N+M} >= N,
// the two branches being exact images of one another under the species
// swap (N,M,Q,r,s) -> (M,N,-Q,s,r); they coincide at r = s.

#pragma once

#include "dcs/params.hpp"
#include "dcs/partition.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dcs {

struct NotInFatHook : std::invalid_argument {
    explicit NotInFatHook(const std::string& what) : std::invalid_argument(what) {}
};

// An integer vector split into N first-species and M second-species slots.
struct IntegerVector {
    long N = 0;
    long M = 0;
    std::vector<long> n;  // size N+M

    IntegerVector() = default;
    IntegerVector(long N_, long M_, std::vector<long> n_) : N(N_), M(M_), n(std::move(n_)) {
        if (N < 0 || M < 0 || n.size() != static_cast<std::size_t>(N + M))
            throw std::invalid_argument("IntegerVector: size mismatch");
    }

    long total() const {
        long t = 0;
        for (long x : n) t += x;
        return t;
    }

    friend bool operator==(const IntegerVector& a, const IntegerVector& b) {
        return a.N == b.N && a.M == b.M && a.n == b.n;
    }
    friend bool operator<(const IntegerVector& a, const IntegerVector& b) {
        if (a.N != b.N) return a.N < b.N;
        if (a.M != b.M) return a.M < b.M;
        return a.n < b.n;
    }
};

struct SpectralLabel {
    long N = 0;
    long M = 0;
    long Q = 0;
    std::vector<long> n;  // size N+M

    SpectralLabel() = default;
    SpectralLabel(long N_, long M_, long Q_, std::vector<long> n_)
        : N(N_), M(M_), Q(Q_), n(std::move(n_)) {
        if (N < 0 || M < 0 || n.size() != static_cast<std::size_t>(N + M))
            throw std::invalid_argument("SpectralLabel: size mismatch");
    }

    IntegerVector vec() const { return IntegerVector(N, M, n); }
    long degree() const {
        long t = 0;
        for (long x : n) t += x;
        return t;
    }
    long final_charge(const ModelParams& p) const { return Q + N * p.r - M * p.s; }

    std::string to_string() const {
        std::string out = "(N=" + std::to_string(N) + ",M=" + std::to_string(M) +
                          ",Q=" + std::to_string(Q) + ",n=[";
        for (std::size_t i = 0; i < n.size(); ++i)
            out += (i ? "," : "") + std::to_string(n[i]);
        return out + "])";
    }

    friend bool operator==(const SpectralLabel& a, const SpectralLabel& b) {
        return a.N == b.N && a.M == b.M && a.Q == b.Q && a.n == b.n;
    }
    friend bool operator<(const SpectralLabel& a, const SpectralLabel& b) {
        if (a.Q != b.Q) return a.Q < b.Q;
        if (a.N != b.N) return a.N < b.N;
        if (a.M != b.M) return a.M < b.M;
        return a.n < b.n;
    }
};

// Grading exponent of the label in units of q^{1/(2rs)}.
inline long unit_exponent(const SpectralLabel& l, const ModelParams& p) {
    const long q1 = l.final_charge(p);
    return q1 * q1 + 2 * p.r * p.s * l.degree();
}

// --- fat-hook bijection -----------------------------------------------

// lambda -> n: the first N rows become the first-species entries, the
// conjugate of what remains becomes the M second-species entries.
inline IntegerVector lambda_to_n(const Partition& lambda, long N, long M) {
    require_partition(lambda, "lambda_to_n");
    if (!in_fat_hook(lambda, N, M))
        throw NotInFatHook("lambda_to_n: partition does not fit the fat (N,M)-hook");
    std::vector<long> n(static_cast<std::size_t>(N + M), 0);
    for (long j = 0; j < N && j < num_parts(lambda); ++j)
        n[static_cast<std::size_t>(j)] = lambda[static_cast<std::size_t>(j)];
    Partition rest(lambda.begin() + std::min<std::ptrdiff_t>(N, lambda.size()), lambda.end());
    Partition restc = conjugate(rest);  // at most M parts by the hook condition
    for (long k = 0; k < num_parts(restc); ++k)
        n[static_cast<std::size_t>(N + k)] = restc[static_cast<std::size_t>(k)];
    return IntegerVector(N, M, std::move(n));
}

// n -> lambda, the inverse map.  Requires both blocks weakly decreasing
// and nonnegative, and the reassembled row list to be a partition.
inline Partition n_to_lambda(const IntegerVector& v) {
    const auto& n = v.n;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] < 0) throw std::invalid_argument("n_to_lambda: negative entry");
        const bool same_block = (i > 0) && (static_cast<long>(i) != v.N);
        if (same_block && n[i] > n[i - 1])
            throw std::invalid_argument("n_to_lambda: block not weakly decreasing");
    }
    Partition tail(n.begin() + v.N, n.end());
    while (!tail.empty() && tail.back() == 0) tail.pop_back();
    Partition lambda(n.begin(), n.begin() + v.N);
    Partition tailc = conjugate(tail);
    lambda.insert(lambda.end(), tailc.begin(), tailc.end());
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    if (!is_partition(lambda))
        throw std::invalid_argument("n_to_lambda: blocks do not assemble into a partition");
    return lambda;
}

// --- tail-sum partial order -------------------------------------------

// m preceq n: every tail sum of m is bounded by the matching tail sum of n.
inline bool preceq(const std::vector<long>& m, const std::vector<long>& n) {
    if (m.size() != n.size()) throw std::invalid_argument("preceq: size mismatch");
    long tm = 0, tn = 0;
    for (std::size_t j = m.size(); j-- > 0;) {
        tm += m[j];
        tn += n[j];
        if (tm > tn) return false;
    }
    return true;
}

inline bool tails_nonneg(const std::vector<long>& m) {
    long t = 0;
    for (std::size_t j = m.size(); j-- > 0;) {
        t += m[j];
        if (t < 0) return false;
    }
    return true;
}

// --- admissibility ------------------------------------------------------

namespace detail {
inline void admissible_floors(const ModelParams& p, long N, long M, long Q, long& f1, long& f2) {
    if (p.r >= p.s) {
        f1 = M;
        f2 = (Q > 0) ? 1 : 0;
    } else {
        f1 = (Q < 0) ? 1 : 0;
        f2 = N;
    }
}
}  // namespace detail

inline void charge_window(const ModelParams& p, long& qlo, long& qhi) {
    if (p.r >= p.s) {
        qlo = 1 - p.s;
        qhi = p.r - p.s;
    } else {
        qlo = p.r - p.s;
        qhi = p.r - 1;
    }
}

inline bool admissible(const SpectralLabel& l, const ModelParams& p) {
    long qlo, qhi;
    charge_window(p, qlo, qhi);
    if (l.Q < qlo || l.Q > qhi) return false;
    long f1, f2;
    detail::admissible_floors(p, l.N, l.M, l.Q, f1, f2);
    for (long j = 0; j < l.N; ++j) {
        const long x = l.n[static_cast<std::size_t>(j)];
        if (x < f1) return false;
        if (j > 0 && x > l.n[static_cast<std::size_t>(j - 1)]) return false;
    }
    for (long k = 0; k < l.M; ++k) {
        const long x = l.n[static_cast<std::size_t>(l.N + k)];
        if (x < f2) return false;
        if (k > 0 && x > l.n[static_cast<std::size_t>(l.N + k - 1)]) return false;
    }
    return true;
}

namespace detail {
// Weakly decreasing vectors of length k, entries >= floor, summing to total.
inline void dec_vectors(long k, long floor, long total, long cap, std::vector<long>& cur,
                        std::vector<std::vector<long>>& out) {
    if (k == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    const long rest_min = floor * (k - 1);
    for (long first = std::min(cap, total - rest_min); first >= floor; --first) {
        if (total - first < floor * (k - 1)) continue;
        cur.push_back(first);
        dec_vectors(k - 1, floor, total - first, first, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<long>> dec_vectors(long k, long floor, long total) {
    std::vector<std::vector<long>> out;
    if (total < floor * k) return out;
    std::vector<long> cur;
    dec_vectors(k, floor, total, total, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace detail

// All admissible labels with unit_exponent <= weight_cap, ordered by
// (unit_exponent, Q, N, M, n) lexicographically.
//
// Bounding N and M: when the opposite species is empty the exponent term
// Q1^2 grows quadratically, and otherwise the floor contribution N*f1+M*f2
// is at least min(N, M), so both species counts are bounded by
// sqrt(cap) + max|Q| + cap/(2rs) + 2.
inline std::vector<SpectralLabel> enumerate_admissible(const ModelParams& p, long weight_cap) {
    std::vector<SpectralLabel> out;
    if (weight_cap < 0) return out;
    long qlo, qhi;
    charge_window(p, qlo, qhi);
    const long unit = 2 * p.r * p.s;
    long isqrt_cap = 0;
    while ((isqrt_cap + 1) * (isqrt_cap + 1) <= weight_cap) ++isqrt_cap;
    const long nm_cap =
        isqrt_cap + std::max(std::abs(qlo), std::abs(qhi)) + weight_cap / unit + 2;
    for (long Q = qlo; Q <= qhi; ++Q) {
        for (long N = 0; N <= nm_cap; ++N) {
            for (long M = 0; M <= nm_cap; ++M) {
                long f1, f2;
                detail::admissible_floors(p, N, M, Q, f1, f2);
                const long q1 = Q + N * p.r - M * p.s;
                if (q1 * q1 > weight_cap) continue;
                const long budget = (weight_cap - q1 * q1) / unit;  // max |n|
                for (long d = N * f1 + M * f2; d <= budget; ++d) {
                    for (long d1 = f1 * N; d1 <= d - f2 * M; ++d1) {
                        auto firsts = detail::dec_vectors(N, f1, d1);
                        if (firsts.empty()) continue;
                        auto seconds = detail::dec_vectors(M, f2, d - d1);
                        for (const auto& a : firsts)
                            for (const auto& b : seconds) {
                                std::vector<long> n = a;
                                n.insert(n.end(), b.begin(), b.end());
                                out.emplace_back(N, M, Q, std::move(n));
                            }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](const SpectralLabel& a, const SpectralLabel& b) {
        const long ea = unit_exponent(a, p), eb = unit_exponent(b, p);
        if (ea != eb) return ea < eb;
        if (a.Q != b.Q) return a.Q < b.Q;
        if (a.N != b.N) return a.N < b.N;
        if (a.M != b.M) return a.M < b.M;
        return a.n < b.n;
    });
    return out;
}

}  // namespace dcs
