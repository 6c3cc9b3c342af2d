#pragma once

// Truncated formal q-series on the fractional lattice q^{1/(2rs)}, both sides
// of the completeness identity for the admissible-label grading, and the
// label-count audit tying the series to the enumerated labels.

#include <cstdlib>
#include <string>
#include <vector>

#include "dcs/labels.hpp"
#include "dcs/params.hpp"
#include "dcs/rational.hpp"

namespace dcs {

// Dense truncated series: coeffs[k] is the coefficient of q^{k/unit}, kept
// through k <= cap.  All arithmetic truncates at the cap.
struct QSeries {
    long unit = 1;
    std::vector<Rat> coeffs;

    QSeries() = default;
    QSeries(long unit_, long cap) : unit(unit_), coeffs(static_cast<std::size_t>(cap + 1)) {
        if (unit_ <= 0) throw std::invalid_argument("QSeries: unit must be positive");
        if (cap < 0) throw std::invalid_argument("QSeries: negative cap");
    }

    long cap() const { return static_cast<long>(coeffs.size()) - 1; }
    const Rat& at(long k) const {
        if (k < 0 || k > cap()) throw std::out_of_range("QSeries::at: exponent out of range");
        return coeffs[static_cast<std::size_t>(k)];
    }
    Rat& at(long k) {
        if (k < 0 || k > cap()) throw std::out_of_range("QSeries::at: exponent out of range");
        return coeffs[static_cast<std::size_t>(k)];
    }

    void require_compatible(const QSeries& other, const char* where) const {
        if (unit != other.unit || cap() != other.cap())
            throw std::invalid_argument(std::string(where) + ": unit/cap mismatch");
    }

    QSeries& operator+=(const QSeries& other) {
        require_compatible(other, "QSeries::operator+=");
        for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] += other.coeffs[k];
        return *this;
    }

    // Multiply in place by 1/(1 - q^{a/unit}), the geometric inverse factor.
    QSeries& apply_inverse_factor(long a) {
        if (a <= 0) throw std::invalid_argument("QSeries::apply_inverse_factor: need a > 0");
        for (long k = a; k <= cap(); ++k)
            coeffs[static_cast<std::size_t>(k)] += coeffs[static_cast<std::size_t>(k - a)];
        return *this;
    }

    // Multiply in place by q^{a/unit} (drops coefficients pushed past the cap).
    QSeries& shift(long a) {
        if (a < 0) throw std::invalid_argument("QSeries::shift: need a >= 0");
        for (long k = cap(); k >= 0; --k)
            coeffs[static_cast<std::size_t>(k)] =
                (k >= a) ? coeffs[static_cast<std::size_t>(k - a)] : Rat(0);
        return *this;
    }

    friend bool operator==(const QSeries& x, const QSeries& y) {
        return x.unit == y.unit && x.coeffs == y.coeffs;
    }
    friend bool operator!=(const QSeries& x, const QSeries& y) { return !(x == y); }
};

// Character of the full charged Fock space graded by the shifted energy:
//   sum_{Q in Z} q^{Q^2/(2rs)} / prod_{n>=1} (1 - q^n),
// truncated at cap units of q^{1/(2rs)}.
inline QSeries lhs_series(const ModelParams& p, long cap) {
    if (cap < 0) throw std::invalid_argument("lhs_series: negative cap");
    const long unit = 2 * p.r * p.s;
    QSeries base(unit, cap);
    base.at(0) = Rat(1);
    for (long n = 1; n * unit <= cap; ++n) base.apply_inverse_factor(n * unit);
    QSeries out(unit, cap);
    for (long Q = 0; Q * Q <= cap; ++Q) {
        const long mult = (Q == 0) ? 1 : 2;  // +-Q give the same exponent
        for (long k = Q * Q; k <= cap; ++k)
            out.coeffs[static_cast<std::size_t>(k)] +=
                Rat(mult) * base.coeffs[static_cast<std::size_t>(k - Q * Q)];
    }
    return out;
}

namespace detail {
// Leading exponent, in units of 1/(2rs), of the (Q, N, M) family: the unit
// exponent of the label with every mode at its admissibility floor.
inline long family_floor_exponent(long Q, long N, long M, const ModelParams& p) {
    const long Q1 = Q + N * p.r - M * p.s;
    long floor_weight = N * M;
    if (p.r >= p.s)
        floor_weight += (Q > 0 ? M : 0);
    else
        floor_weight += (Q < 0 ? N : 0);
    return Q1 * Q1 + 2 * p.r * p.s * floor_weight;
}
}  // namespace detail

// The same character resolved into anyon sectors: a finite charge window and,
// per (Q, N, M), a leading power times the two bounded-mode partition
// denominators,
//   sum_{Q in window} sum_{N,M >= 0}
//     q^{E0(Q,N,M)} / (prod_{n=1}^N (1-q^n) prod_{m=1}^M (1-q^m)).
inline QSeries rhs_series(const ModelParams& p, long cap) {
    if (cap < 0) throw std::invalid_argument("rhs_series: negative cap");
    const long unit = 2 * p.r * p.s;
    QSeries out(unit, cap);
    const long qlo = (p.r >= p.s) ? 1 - p.s : p.r - p.s;
    const long qhi = (p.r >= p.s) ? p.r - p.s : p.r - 1;
    // every contributing family has Q1^2 <= cap and floor weight <= cap/(2rs)
    long bound = 2;
    while (bound * bound <= cap) ++bound;
    bound += p.r + p.s;
    for (long Q = qlo; Q <= qhi; ++Q)
        for (long N = 0; N <= bound; ++N)
            for (long M = 0; M <= bound; ++M) {
                const long e0 = detail::family_floor_exponent(Q, N, M, p);
                if (e0 > cap) continue;
                QSeries cell(unit, cap);
                cell.at(e0) = Rat(1);
                for (long n = 1; n <= N; ++n) {
                    if (e0 + n * unit > cap) break;
                    cell.apply_inverse_factor(n * unit);
                }
                for (long m = 1; m <= M; ++m) {
                    if (e0 + m * unit > cap) break;
                    cell.apply_inverse_factor(m * unit);
                }
                out += cell;
            }
    return out;
}

// --- label-count audit ----------------------------------------------------------

struct CountAuditReport {
    long cap = 0;            // in units of 1/(2rs)
    long first_mismatch = -1;  // unit exponent of the first discrepancy, -1 if none
    std::string detail;
    bool pass() const { return first_mismatch < 0; }
};

// Compares a label-count histogram (counts indexed by unit exponent) against
// both series: the sector-resolved side must match definitionally, the full
// character must match by the completeness identity.
inline CountAuditReport count_audit_with_histogram(const std::vector<long>& hist,
                                                   const ModelParams& p, long cap) {
    CountAuditReport rep;
    rep.cap = cap;
    if (static_cast<long>(hist.size()) != cap + 1)
        throw std::invalid_argument("count_audit_with_histogram: histogram size != cap + 1");
    const QSeries rhs = rhs_series(p, cap);
    const QSeries lhs = lhs_series(p, cap);
    for (long k = 0; k <= cap; ++k) {
        const Rat h(hist[static_cast<std::size_t>(k)]);
        if (!(rhs.at(k) == h)) {
            rep.first_mismatch = k;
            rep.detail = "label count disagrees with the sector-resolved series at unit exponent " +
                         std::to_string(k);
            return rep;
        }
        if (!(lhs.at(k) == h)) {
            rep.first_mismatch = k;
            rep.detail = "label count disagrees with the full character at unit exponent " +
                         std::to_string(k);
            return rep;
        }
    }
    return rep;
}

inline std::vector<long> admissible_histogram(const ModelParams& p, long cap) {
    std::vector<long> hist(static_cast<std::size_t>(cap + 1), 0);
    for (const auto& l : enumerate_admissible(p, cap)) {
        const long e = unit_exponent(l, p);
        if (e <= cap) ++hist[static_cast<std::size_t>(e)];
    }
    return hist;
}

inline CountAuditReport count_audit(const ModelParams& p, long cap) {
    return count_audit_with_histogram(admissible_histogram(p, cap), p, cap);
}

}  // namespace dcs
