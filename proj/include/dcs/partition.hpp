// Integer partitions and the combinatorial helpers built on them.
//
// A partition is a weakly decreasing vector of positive longs; the empty
// vector is the empty partition.  Vectors compare lexicographically (the
// std::vector order), which on fixed weight refines the dominance order:
// if mu is dominated by lambda then mu < lambda lexicographically.

#pragma once

#include "dcs/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace dcs {

using Partition = std::vector<long>;

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline void require_partition(const Partition& p, const char* where) {
    if (!is_partition(p)) throw std::invalid_argument(std::string(where) + ": not a partition");
}

inline long weight(const Partition& p) {
    long w = 0;
    for (long x : p) w += x;
    return w;
}

inline long num_parts(const Partition& p) { return static_cast<long>(p.size()); }

// Sort a vector of positive entries into a partition (used when assembling
// partitions from unordered part lists).
inline Partition sorted_partition(std::vector<long> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

inline Partition conjugate(const Partition& p) {
    require_partition(p, "conjugate");
    if (p.empty()) return {};
    Partition c(static_cast<std::size_t>(p[0]), 0);
    for (long part : p)
        for (long j = 0; j < part; ++j) ++c[static_cast<std::size_t>(j)];
    return c;
}

// Distinct part values with their multiplicities, largest part first.
inline std::vector<std::pair<long, long>> part_multiplicities(const Partition& p) {
    std::vector<std::pair<long, long>> m;
    for (long part : p) {
        if (!m.empty() && m.back().first == part) ++m.back().second;
        else m.emplace_back(part, 1);
    }
    return m;
}

// z_lambda = prod_v v^{m_v} * m_v!  (the symmetry factor of the conjugacy
// class labelled by lambda).
inline Int z_lambda(const Partition& p) {
    Int z = 1;
    for (const auto& [v, m] : part_multiplicities(p)) {
        for (long i = 0; i < m; ++i) z *= v;
        z *= factorial_int(m);
    }
    return z;
}

// Dominance order on partitions of equal weight: mu <= lambda iff all
// prefix sums of mu are bounded by those of lambda.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (weight(mu) != weight(lambda)) return false;
    long su = 0, sl = 0;
    const std::size_t n = std::max(mu.size(), lambda.size());
    for (std::size_t i = 0; i < n; ++i) {
        su += i < mu.size() ? mu[i] : 0;
        sl += i < lambda.size() ? lambda[i] : 0;
        if (su > sl) return false;
    }
    return true;
}

/// The fat (N,M)-hook: at most M columns beyond the first N rows, i.e.
// lambda_{N+1} <= M.
inline bool in_fat_hook(const Partition& p, long N, long M) {
    if (N < 0 || M < 0) throw std::invalid_argument("in_fat_hook: negative N or M");
    if (num_parts(p) <= N) return true;
    return p[static_cast<std::size_t>(N)] <= M;
}

namespace detail {
inline void partitions_rec(long remaining, long maxpart, Partition& cur,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (long part = std::min(remaining, maxpart); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

// All partitions of d with parts at most maxpart, sorted ascending
// lexicographically (a linear extension of dominance, smallest first).
inline std::vector<Partition> partitions_of(long d, long maxpart = -1) {
    if (d < 0) return {};
    if (maxpart < 0) maxpart = d;
    std::vector<Partition> out;
    Partition cur;
    detail::partitions_rec(d, maxpart, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::size_t count_partitions(long d) { return partitions_of(d).size(); }

// Remove one part equal to v (throws if absent).
inline Partition remove_part(const Partition& p, long v) {
    Partition q = p;
    auto it = std::find(q.begin(), q.end(), v);
    if (it == q.end()) throw std::invalid_argument("remove_part: part not present");
    q.erase(it);
    return q;
}

// Insert a part keeping the weakly decreasing order.
inline Partition insert_part(const Partition& p, long v) {
    if (v <= 0) throw std::invalid_argument("insert_part: part must be positive");
    Partition q = p;
    auto it = std::upper_bound(q.begin(), q.end(), v, std::greater<long>());
    q.insert(it, v);
    return q;
}

inline long multiplicity_of(const Partition& p, long v) {
    return static_cast<long>(std::count(p.begin(), p.end(), v));
}

}  // namespace dcs
