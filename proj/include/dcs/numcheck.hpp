// Floating-point verification of the differential statements behind the
// exact layer: the deformed Calogero-Sutherland eigenfunction property,
// the first-order grading identity, the kernel condition on the deformed
// polynomials, and the vertex-product series identity.
//
// All derivatives are analytic: the logarithmic derivative of the ground
// state factor is a finite cotangent sum, and polynomial derivatives flow
// through the power-sum chain rule (d p_n / d x_j = i n z_j^n on the
// angle variables).  No finite differences appear anywhere, so residuals
// are limited only by arithmetic roundoff; computations run at a chosen
// binary floating precision (64- or 128-bit mantissa) and doubling the
// precision should shrink roundoff-dominated residuals dramatically.
//
// Evaluation points live on the strip with strictly decreasing imaginary
// parts (first-kind coordinates above second-kind ones); the series check
// additionally needs sizable gaps between consecutive imaginary parts so
// that the mode sum converges geometrically.

#pragma once

#include "dcs/jack.hpp"
#include "dcs/spectra.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <complex>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dcs {

using Real64 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<64, boost::multiprecision::digit_base_2>>;
using Real128 = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>>;

enum class Precision { bits64, bits128 };

struct NearSingularPoint : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TruncationTooSmall : std::runtime_error {
    double bound;
    TruncationTooSmall(const std::string& msg, double b) : std::runtime_error(msg), bound(b) {}
};

// An evaluation point: N first-kind angles x and M second-kind angles y,
// stored as (Re, Im) pairs at double precision.  The coordinates of a
// valid point carry strictly decreasing imaginary parts in the combined
// order (x_1, ..., x_N, y_1, ..., y_M); exact conversion into the working
// precision keeps the point identical across precision levels.
struct EvalPoint {
    std::vector<std::pair<double, double>> x;
    std::vector<std::pair<double, double>> y;
};

struct SampleOptions {
    double first_im = -0.25;  // imaginary part of the first coordinate (at most)
    double min_gap = 0.1;     // smallest spacing between consecutive imaginary parts
    double max_gap = 0.35;
    unsigned long long seed = 20260821ULL;
};

inline std::vector<EvalPoint> sample_points(long N, long M, int count,
                                            const SampleOptions& opt = {}) {
    if (N < 0 || M < 0 || count < 0)
        throw std::invalid_argument("sample_points: negative argument");
    if (!(opt.min_gap > 0) || opt.max_gap < opt.min_gap)
        throw std::invalid_argument("sample_points: bad gap range");
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> re_dist(-3.1, 3.1);
    std::uniform_real_distribution<double> gap_dist(opt.min_gap, opt.max_gap);
    std::uniform_real_distribution<double> jitter(0.0, 0.1);
    std::vector<EvalPoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        EvalPoint pt;
        double im = opt.first_im - jitter(rng);
        for (long j = 0; j < N + M; ++j) {
            std::pair<double, double> c{re_dist(rng), im};
            if (j < N)
                pt.x.push_back(c);
            else
                pt.y.push_back(c);
            im -= gap_dist(rng);
        }
        pts.push_back(std::move(pt));
    }
    return pts;
}

// ---------------------------------------------------------------------------
// Complex arithmetic over an arbitrary real type.

template <class R>
struct Cx {
    R re{};
    R im{};
    Cx() : re(0), im(0) {}
    Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cx(const R& r) : re(r), im(0) {}
};

template <class R> Cx<R> operator+(const Cx<R>& a, const Cx<R>& b) { return {a.re + b.re, a.im + b.im}; }
template <class R> Cx<R> operator-(const Cx<R>& a, const Cx<R>& b) { return {a.re - b.re, a.im - b.im}; }
template <class R> Cx<R> operator-(const Cx<R>& a) { return {-a.re, -a.im}; }
template <class R> Cx<R> operator*(const Cx<R>& a, const Cx<R>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R> Cx<R> operator*(const R& s, const Cx<R>& b) { return {s * b.re, s * b.im}; }
template <class R> Cx<R> operator/(const Cx<R>& a, const Cx<R>& b) {
    const R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
template <class R> Cx<R>& operator+=(Cx<R>& a, const Cx<R>& b) { a.re += b.re; a.im += b.im; return a; }
template <class R> Cx<R>& operator-=(Cx<R>& a, const Cx<R>& b) { a.re -= b.re; a.im -= b.im; return a; }

template <class R> R cx_abs(const Cx<R>& a) {
    using std::sqrt;
    return sqrt(a.re * a.re + a.im * a.im);
}

// e^{i u} for complex u = a + i b: modulus e^{-b}, argument a.
template <class R> Cx<R> cx_exp_i(const Cx<R>& u) {
    using std::exp; using std::sin; using std::cos;
    const R m = exp(-u.im);
    return {m * cos(u.re), m * sin(u.re)};
}

template <class R> Cx<R> cx_sin(const Cx<R>& u) {
    using std::sin; using std::cos; using std::sinh; using std::cosh;
    return {sin(u.re) * cosh(u.im), cos(u.re) * sinh(u.im)};
}

template <class R> Cx<R> cx_cos(const Cx<R>& u) {
    using std::sin; using std::cos; using std::sinh; using std::cosh;
    return {cos(u.re) * cosh(u.im), -sin(u.re) * sinh(u.im)};
}

// Principal power z^e for real exponent e; requires z away from the cut
// (all uses keep z in the right half plane).
template <class R> Cx<R> cx_pow(const Cx<R>& z, const R& e) {
    using std::log; using std::atan2; using std::exp; using std::sin; using std::cos;
    const R lr = log(z.re * z.re + z.im * z.im) / 2;
    const R la = atan2(z.im, z.re);
    const R m = exp(e * lr);
    const R a = e * la;
    return {m * cos(a), m * sin(a)};
}

template <class R> Cx<R> cx_pow_int(Cx<R> z, long n) {
    if (n < 0) return Cx<R>(R(1)) / cx_pow_int(z, -n);
    Cx<R> out{R(1), R(0)};
    while (n > 0) {
        if (n & 1) out = out * z;
        z = z * z;
        n >>= 1;
    }
    return out;
}

template <class R> R real_from_rat(const Rat& q) {
    return R(numerator(q)) / R(denominator(q));
}

template <class R> R real_from_quad(const QuadScalar& q) {
    using std::sqrt;
    R v = real_from_rat<R>(q.a());
    if (!(q.b() == 0)) v += real_from_rat<R>(q.b()) * sqrt(R(q.disc()));
    return v;
}

namespace detail {

// Guard against coordinate collisions: every pairwise half-angle sine must
// stay away from zero.  Double precision suffices for the guard.
inline void require_regular(const EvalPoint& pt) {
    std::vector<std::complex<double>> u;
    for (const auto& c : pt.x) u.emplace_back(c.first, c.second);
    for (const auto& c : pt.y) u.emplace_back(c.first, c.second);
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = a + 1; b < u.size(); ++b)
            if (std::abs(std::sin(0.5 * (u[a] - u[b]))) <= 1e-6)
                throw NearSingularPoint("evaluation point too close to a coordinate collision");
}

template <class R>
std::vector<Cx<R>> lift_coords(const std::vector<std::pair<double, double>>& c) {
    std::vector<Cx<R>> out;
    out.reserve(c.size());
    for (const auto& [re, im] : c) out.push_back(Cx<R>{R(re), R(im)});
    return out;
}

// Evaluation of a p-basis polynomial on the deformed alphabet together
// with first and second derivatives in the angle variables.  Variables
// are indexed 0..N-1 (angles of z_j = e^{i x_j}) and N..N+M-1 (angles of
// w_k = e^{i y_k}); d p_n / d x_j = i n z_j^n and
// d p_n / d y_k = -(1/g) i n w_k^n.
template <class R>
struct PolyEval {
    Cx<R> value{R(1), R(0)};
    std::vector<Cx<R>> d1;
    std::vector<Cx<R>> d2;
};

template <class R>
PolyEval<R> eval_poly_deformed(const SymFuncQ& f, const std::vector<Cx<R>>& z,
                               const std::vector<Cx<R>>& w, const R& g, bool want_second) {
    const std::size_t nvar = z.size() + w.size();
    const R inv_g = R(1) / g;

    // Power-sum values and per-variable derivative atoms, indexed by part size.
    std::map<long, Cx<R>> pval;
    std::map<long, std::vector<Cx<R>>> atom1;  // d p_n / d(var)
    std::map<long, std::vector<Cx<R>>> atom2;  // d^2 p_n / d(var)^2
    auto ensure = [&](long n) {
        if (pval.count(n)) return;
        Cx<R> s{R(0), R(0)};
        std::vector<Cx<R>> a1(nvar), a2(nvar);
        for (std::size_t j = 0; j < z.size(); ++j) {
            const Cx<R> zn = cx_pow_int(z[j], n);
            s += zn;
            a1[j] = Cx<R>{R(0), R(n)} * zn;       // i n z^n
            a2[j] = R(-static_cast<double>(n) * static_cast<double>(n)) * zn;
        }
        for (std::size_t k = 0; k < w.size(); ++k) {
            const Cx<R> wn = cx_pow_int(w[k], n);
            s -= inv_g * wn;
            a1[z.size() + k] = Cx<R>{R(0), -R(n) * inv_g} * wn;
            a2[z.size() + k] = (R(static_cast<double>(n) * static_cast<double>(n)) * inv_g) * wn;
        }
        pval.emplace(n, s);
        atom1.emplace(n, std::move(a1));
        atom2.emplace(n, std::move(a2));
    };

    PolyEval<R> out;
    out.value = Cx<R>{R(0), R(0)};
    out.d1.assign(nvar, Cx<R>{R(0), R(0)});
    if (want_second) out.d2.assign(nvar, Cx<R>{R(0), R(0)});

    for (const auto& [mu, coeff] : f) {
        const std::vector<long> parts(mu.begin(), mu.end());
        for (long n : parts) ensure(n);
        const std::size_t l = parts.size();
        const R c = real_from_rat<R>(coeff);

        Cx<R> full{R(1), R(0)};
        for (long n : parts) full = full * pval.at(n);
        out.value += c * full;

        for (std::size_t v = 0; v < nvar; ++v) {
            Cx<R> s1{R(0), R(0)};
            Cx<R> s2{R(0), R(0)};
            for (std::size_t i = 0; i < l; ++i) {
                Cx<R> rest{R(1), R(0)};
                for (std::size_t t = 0; t < l; ++t)
                    if (t != i) rest = rest * pval.at(parts[t]);
                s1 += atom1.at(parts[i])[v] * rest;
                if (want_second) {
                    s2 += atom2.at(parts[i])[v] * rest;
                    for (std::size_t t = 0; t < l; ++t) {
                        if (t == i) continue;
                        Cx<R> rest2{R(1), R(0)};
                        for (std::size_t q = 0; q < l; ++q)
                            if (q != i && q != t) rest2 = rest2 * pval.at(parts[q]);
                        s2 += atom1.at(parts[i])[v] * atom1.at(parts[t])[v] * rest2;
                    }
                }
            }
            out.d1[v] += c * s1;
            if (want_second) out.d2[v] += c * s2;
        }
    }
    return out;
}

// (H Psi) / Psi at one point, for Psi = e^{i q0 (|x| - |y|/g)} Psi_0 P.
// Uses L_v = d_v log Psi and (d_v^2 Psi)/Psi = d_v L_v + L_v^2.
template <class R>
Cx<R> h_over_psi_impl(long N, long M, const SymFuncQ& P, const Rat& g, const Rat& q0,
                      const EvalPoint& pt) {
    require_regular(pt);
    const auto x = lift_coords<R>(pt.x);
    const auto y = lift_coords<R>(pt.y);
    if (x.size() != static_cast<std::size_t>(N) || y.size() != static_cast<std::size_t>(M))
        throw std::invalid_argument("h_over_psi: point arity mismatch");
    const R gR = real_from_rat<R>(g);
    const R q0R = real_from_rat<R>(q0);
    const std::size_t nvar = static_cast<std::size_t>(N + M);

    std::vector<Cx<R>> z, w;
    for (const auto& c : x) z.push_back(cx_exp_i(c));
    for (const auto& c : y) w.push_back(cx_exp_i(c));

    std::vector<Cx<R>> L(nvar, Cx<R>{R(0), R(0)});
    std::vector<Cx<R>> dL(nvar, Cx<R>{R(0), R(0)});

    // Charge phase: d/dx_j contributes i q0, d/dy_k contributes -i q0 / g.
    for (long j = 0; j < N; ++j) L[j] += Cx<R>{R(0), q0R};
    for (long k = 0; k < M; ++k) L[N + k] += Cx<R>{R(0), -q0R / gR};

    // Ground-state factor: pair (u, v) with exponent e contributes
    // +e/2 cot(h) to L_u, -e/2 cot(h) to L_v and -e/4 csc^2(h) to both
    // second derivatives, h = (u - v)/2.
    Cx<R> potential{R(0), R(0)};
    auto pair_term = [&](std::size_t a, std::size_t b, const Cx<R>& ua, const Cx<R>& ub,
                         const R& expo, const R& coupling) {
        const Cx<R> h = R(0.5) * (ua - ub);
        const Cx<R> s = cx_sin(h);
        const Cx<R> cot = cx_cos(h) / s;
        const Cx<R> csc2 = Cx<R>{R(1), R(0)} / (s * s);
        L[a] += (expo / R(2)) * cot;
        L[b] -= (expo / R(2)) * cot;
        dL[a] -= (expo / R(4)) * csc2;
        dL[b] -= (expo / R(4)) * csc2;
        potential += (coupling / R(2)) * csc2;
    };
    for (long j = 0; j < N; ++j)
        for (long jp = j + 1; jp < N; ++jp)
            pair_term(static_cast<std::size_t>(j), static_cast<std::size_t>(jp), x[j], x[jp],
                      gR, gR * (gR - R(1)));
    for (long k = 0; k < M; ++k)
        for (long kp = k + 1; kp < M; ++kp)
            pair_term(static_cast<std::size_t>(N + k), static_cast<std::size_t>(N + kp), y[k],
                      y[kp], R(1) / gR, (gR - R(1)) / gR);
    for (long j = 0; j < N; ++j)
        for (long k = 0; k < M; ++k)
            pair_term(static_cast<std::size_t>(j), static_cast<std::size_t>(N + k), x[j], y[k],
                      R(-1), R(1) - gR);

    // Polynomial factor.
    const PolyEval<R> pe = eval_poly_deformed(P, z, w, gR, true);
    for (std::size_t v = 0; v < nvar; ++v) {
        const Cx<R> c1 = pe.d1[v] / pe.value;
        L[v] += c1;
        dL[v] += pe.d2[v] / pe.value - c1 * c1;
    }

    Cx<R> h{R(0), R(0)};
    for (long j = 0; j < N; ++j) {
        const std::size_t v = static_cast<std::size_t>(j);
        h -= dL[v] + L[v] * L[v];
    }
    for (long k = 0; k < M; ++k) {
        const std::size_t v = static_cast<std::size_t>(N + k);
        h += gR * (dL[v] + L[v] * L[v]);
    }
    return h + potential;
}

// Dedicated single-kind path (M = 0): an independent implementation of
// the standard trigonometric model, sharing only the polynomial
// coefficients.  Power sums are the plain Newton sums of z.
template <class R>
Cx<R> h_over_psi_single_kind_impl(long N, const SymFuncQ& P, const Rat& g, const Rat& q0,
                                  const EvalPoint& pt) {
    require_regular(pt);
    if (!pt.y.empty()) throw std::invalid_argument("single-kind path: point has second-kind coordinates");
    const auto x = lift_coords<R>(pt.x);
    if (x.size() != static_cast<std::size_t>(N))
        throw std::invalid_argument("single-kind path: point arity mismatch");
    const R gR = real_from_rat<R>(g);
    const R q0R = real_from_rat<R>(q0);

    std::vector<Cx<R>> z;
    for (const auto& c : x) z.push_back(cx_exp_i(c));

    // Newton sums and their derivative atoms, built independently of the
    // deformed evaluator.
    std::map<long, Cx<R>> pval;
    auto power_sum = [&](long n) {
        auto it = pval.find(n);
        if (it != pval.end()) return it->second;
        Cx<R> s{R(0), R(0)};
        for (const auto& zj : z) s += cx_pow_int(zj, n);
        pval.emplace(n, s);
        return s;
    };

    std::vector<Cx<R>> L(static_cast<std::size_t>(N), Cx<R>{R(0), q0R});
    std::vector<Cx<R>> dL(static_cast<std::size_t>(N), Cx<R>{R(0), R(0)});
    Cx<R> potential{R(0), R(0)};
    for (long j = 0; j < N; ++j)
        for (long jp = j + 1; jp < N; ++jp) {
            const Cx<R> half = R(0.5) * (x[j] - x[jp]);
            const Cx<R> s = cx_sin(half);
            const Cx<R> cot = cx_cos(half) / s;
            const Cx<R> csc2 = Cx<R>{R(1), R(0)} / (s * s);
            L[j] += (gR / R(2)) * cot;
            L[jp] -= (gR / R(2)) * cot;
            dL[j] -= (gR / R(4)) * csc2;
            dL[jp] -= (gR / R(4)) * csc2;
            potential += (gR * (gR - R(1)) / R(2)) * csc2;
        }

    // Polynomial part evaluated monomial by monomial.
    Cx<R> val{R(0), R(0)};
    std::vector<Cx<R>> p1(static_cast<std::size_t>(N), Cx<R>{R(0), R(0)});
    std::vector<Cx<R>> p2(static_cast<std::size_t>(N), Cx<R>{R(0), R(0)});
    for (const auto& [mu, coeff] : P) {
        const std::vector<long> parts(mu.begin(), mu.end());
        const std::size_t l = parts.size();
        const R c = real_from_rat<R>(coeff);
        Cx<R> full{R(1), R(0)};
        for (long n : parts) full = full * power_sum(n);
        val += c * full;
        for (long j = 0; j < N; ++j) {
            Cx<R> s1{R(0), R(0)}, s2{R(0), R(0)};
            for (std::size_t i = 0; i < l; ++i) {
                const Cx<R> zn = cx_pow_int(z[j], parts[i]);
                const Cx<R> a1 = Cx<R>{R(0), R(parts[i])} * zn;
                const Cx<R> a2 =
                    R(-static_cast<double>(parts[i]) * static_cast<double>(parts[i])) * zn;
                Cx<R> rest{R(1), R(0)};
                for (std::size_t t = 0; t < l; ++t)
                    if (t != i) rest = rest * power_sum(parts[t]);
                s1 += a1 * rest;
                s2 += a2 * rest;
                for (std::size_t t = 0; t < l; ++t) {
                    if (t == i) continue;
                    const Cx<R> b1 = Cx<R>{R(0), R(parts[t])} * cx_pow_int(z[j], parts[t]);
                    Cx<R> rest2{R(1), R(0)};
                    for (std::size_t q = 0; q < l; ++q)
                        if (q != i && q != t) rest2 = rest2 * power_sum(parts[q]);
                    s2 += a1 * b1 * rest2;
                }
            }
            p1[j] += c * s1;
            p2[j] += c * s2;
        }
    }
    for (long j = 0; j < N; ++j) {
        const Cx<R> c1 = p1[j] / val;
        L[j] += c1;
        dL[j] += p2[j] / val - c1 * c1;
    }

    Cx<R> h{R(0), R(0)};
    for (long j = 0; j < N; ++j) h -= dL[j] + L[j] * L[j];
    return h + potential;
}

template <class F>
double dispatch_precision(Precision prec, F&& f) {
    switch (prec) {
        case Precision::bits64: return f(Real64());
        case Precision::bits128: return f(Real128());
    }
    throw std::logic_error("dispatch_precision: unknown precision");
}

}  // namespace detail

enum class QZeroMode {
    canonical,  // q0 = (N g - M)/2, the neutral-charge value of the phase exponent
    zero,
};

// Eigenvalue of the second-order operator on the state labeled by lambda,
// as the signed square sum of the pseudo-momenta at the given q0.
inline Rat cs_energy_at(long N, long M, const Partition& lambda, const Rat& g, const Rat& q0) {
    const IntegerVector v = lambda_to_n(lambda, N, M);
    const auto pm = cs_pseudo_momenta_sym(v, RatFuncG(q0));
    Rat e(0);
    for (long j = 0; j < N; ++j) {
        const Rat r = pm[static_cast<std::size_t>(j)].specialize(g);
        e += r * r;
    }
    for (long k = 0; k < M; ++k) {
        const Rat r = pm[static_cast<std::size_t>(N + k)].specialize(g);
        e -= g * r * r;
    }
    return e;
}

inline Rat canonical_q0(long N, long M, const Rat& g) { return (Rat(N) * g - Rat(M)) / 2; }

// Max |(H Psi)/Psi - E| over the points, at an explicit q0.
inline double residual_H_at(long N, long M, const Partition& lambda, const Rat& g, const Rat& q0,
                            const std::vector<EvalPoint>& pts,
                            Precision prec = Precision::bits128) {
    const SymFuncQ P = specialize_coeffs(super_jack_p(lambda, N, M).coeffs, g);
    const Rat E = cs_energy_at(N, M, lambda, g, q0);
    return detail::dispatch_precision(prec, [&](auto tag) {
        using R = decltype(tag);
        const R eR = real_from_rat<R>(E);
        R worst(0);
        for (const auto& pt : pts) {
            const Cx<R> h = detail::h_over_psi_impl<R>(N, M, P, g, q0, pt);
            const R r = cx_abs(Cx<R>{h.re - eR, h.im});
            if (r > worst) worst = r;
        }
        return worst.template convert_to<double>();
    });
}

inline double residual_H(long N, long M, const Partition& lambda, const Rat& g, QZeroMode mode,
                         const std::vector<EvalPoint>& pts,
                         Precision prec = Precision::bits128) {
    const Rat q0 = mode == QZeroMode::canonical ? canonical_q0(N, M, g) : Rat(0);
    return residual_H_at(N, M, lambda, g, q0, pts, prec);
}

// (H Psi)/Psi at a single point, rounded to double; exposed so tests can
// compare the general evaluator against the dedicated single-kind path.
inline std::complex<double> eval_H_over_psi(long N, long M, const Partition& lambda, const Rat& g,
                                            const Rat& q0, const EvalPoint& pt,
                                            Precision prec = Precision::bits128) {
    const SymFuncQ P = specialize_coeffs(super_jack_p(lambda, N, M).coeffs, g);
    std::complex<double> out;
    detail::dispatch_precision(prec, [&](auto tag) {
        using R = decltype(tag);
        const Cx<R> h = detail::h_over_psi_impl<R>(N, M, P, g, q0, pt);
        out = {h.re.template convert_to<double>(), h.im.template convert_to<double>()};
        return 0.0;
    });
    return out;
}

inline std::complex<double> eval_H_over_psi_single_kind(long N, const Partition& lambda,
                                                        const Rat& g, const Rat& q0,
                                                        const EvalPoint& pt,
                                                        Precision prec = Precision::bits128) {
    const SymFuncQ P = specialize_coeffs(super_jack_p(lambda, N, 0).coeffs, g);
    std::complex<double> out;
    detail::dispatch_precision(prec, [&](auto tag) {
        using R = decltype(tag);
        const Cx<R> h = detail::h_over_psi_single_kind_impl<R>(N, P, g, q0, pt);
        out = {h.re.template convert_to<double>(), h.im.template convert_to<double>()};
        return 0.0;
    });
    return out;
}

inline double residual_H_single_kind(long N, const Partition& lambda, const Rat& g, const Rat& q0,
                                     const std::vector<EvalPoint>& pts,
                                     Precision prec = Precision::bits128) {
    const SymFuncQ P = specialize_coeffs(super_jack_p(lambda, N, 0).coeffs, g);
    const Rat E = cs_energy_at(N, 0, lambda, g, q0);
    return detail::dispatch_precision(prec, [&](auto tag) {
        using R = decltype(tag);
        const R eR = real_from_rat<R>(E);
        R worst(0);
        for (const auto& pt : pts) {
            const Cx<R> h = detail::h_over_psi_single_kind_impl<R>(N, P, g, q0, pt);
            const R r = cx_abs(Cx<R>{h.re - eR, h.im});
            if (r > worst) worst = r;
        }
        return worst.template convert_to<double>();
    });
}

namespace detail {

// D (Psi_0 P) / (Psi_0 P) - expected, where D = -i (sum of all first
// derivatives).  The ground-state contribution cancels pairwise: each pair
// contributes +c to one variable and -c to the other, computed from the
// same cotangent value, so its total is an exact floating-point zero and
// the empty polynomial gives residual exactly 0.
template <class R>
R residual_D_point(long N, long M, const SymFuncQ& P, const Rat& g, const EvalPoint& pt,
                   long expected) {
    require_regular(pt);
    const auto x = lift_coords<R>(pt.x);
    const auto y = lift_coords<R>(pt.y);
    if (x.size() != static_cast<std::size_t>(N) || y.size() != static_cast<std::size_t>(M))
        throw std::invalid_argument("residual_D: point arity mismatch");
    const R gR = real_from_rat<R>(g);
    std::vector<Cx<R>> z, w;
    for (const auto& c : x) z.push_back(cx_exp_i(c));
    for (const auto& c : y) w.push_back(cx_exp_i(c));

    Cx<R> total{R(0), R(0)};
    // Pair terms: (d_u + d_v) log theta(u - v) = c - c computed once.
    auto pair_zero = [&](const Cx<R>& ua, const Cx<R>& ub, const R& expo) {
        const Cx<R> h = R(0.5) * (ua - ub);
        const Cx<R> c = (expo / R(2)) * (cx_cos(h) / cx_sin(h));
        total += c - c;
    };
    for (long j = 0; j < N; ++j)
        for (long jp = j + 1; jp < N; ++jp) pair_zero(x[j], x[jp], gR);
    for (long k = 0; k < M; ++k)
        for (long kp = k + 1; kp < M; ++kp) pair_zero(y[k], y[kp], R(1) / gR);
    for (long j = 0; j < N; ++j)
        for (long k = 0; k < M; ++k) pair_zero(x[j], y[k], R(-1));

    const PolyEval<R> pe = eval_poly_deformed(P, z, w, gR, false);
    for (const Cx<R>& d : pe.d1) total += d / pe.value;

    // D = -i * total; expected real value.
    const Cx<R> dv{total.im, -total.re};
    return cx_abs(Cx<R>{dv.re - R(expected), dv.im});
}

inline double residual_D_impl(long N, long M, const SymFuncQ& P, const Rat& g,
                              const std::vector<EvalPoint>& pts, long expected, Precision prec) {
    return dispatch_precision(prec, [&](auto tag) {
        using R = decltype(tag);
        R worst(0);
        for (const auto& pt : pts) {
            const R r = residual_D_point<R>(N, M, P, g, pt, expected);
            if (r > worst) worst = r;
        }
        return worst.template convert_to<double>();
    });
}

}  // namespace detail

// Grading identity on the eigenpolynomial: D (Psi_0 P_lambda)/(Psi_0 P_lambda) = |lambda|.
inline double residual_D(long N, long M, const Partition& lambda, const Rat& g,
                         const std::vector<EvalPoint>& pts,
                         Precision prec = Precision::bits128) {
    const SymFuncQ P = specialize_coeffs(super_jack_p(lambda, N, M).coeffs, g);
    return detail::residual_D_impl(N, M, P, g, pts, weight(lambda), prec);
}

// Power-sum variant: the monomial prod p_{mu_i} is homogeneous of degree |mu|.
inline double residual_D_p(long N, long M, const Partition& mu, const Rat& g,
                           const std::vector<EvalPoint>& pts,
                           Precision prec = Precision::bits128) {
    require_partition(mu, "residual_D_p");
    SymFuncQ P;
    P.emplace(mu, Rat(1));
    return detail::residual_D_impl(N, M, P, g, pts, weight(mu), prec);
}

// Numeric kernel condition: (d/dz_j + g d/dw_k) P vanishes on the locus
// z_j = w_k.  The two derivative sums are evaluated through separate
// loops, so the result measures genuine floating cancellation.  Points
// are mapped to the torus (z = e^{ix}, w = e^{iy}) before collapsing.
inline double kernel_condition_residual(const Partition& lambda, long N, long M, const Rat& g,
                                        const std::vector<EvalPoint>& pts,
                                        Precision prec = Precision::bits128) {
    if (N < 1 || M < 1)
        throw std::invalid_argument("kernel_condition_residual: need N, M >= 1");
    const SymFuncQ P = specialize_coeffs(super_jack_p(lambda, N, M).coeffs, g);
    return detail::dispatch_precision(prec, [&](auto tag) {
        using R = decltype(tag);
        const R gR = real_from_rat<R>(g);
        const R inv_g = R(1) / gR;
        R worst(0);
        for (const auto& pt : pts) {
            const auto xa = detail::lift_coords<R>(pt.x);
            const auto ya = detail::lift_coords<R>(pt.y);
            if (xa.size() != static_cast<std::size_t>(N) ||
                ya.size() != static_cast<std::size_t>(M))
                throw std::invalid_argument("kernel_condition_residual: point arity mismatch");
            std::vector<Cx<R>> zbase, wbase;
            for (const auto& c : xa) zbase.push_back(cx_exp_i(c));
            for (const auto& c : ya) wbase.push_back(cx_exp_i(c));
            for (long j = 0; j < N; ++j)
                for (long k = 0; k < M; ++k) {
                    std::vector<Cx<R>> z = zbase, w = wbase;
                    w[static_cast<std::size_t>(k)] = z[static_cast<std::size_t>(j)];
                    // Power sums at the collapsed point.
                    std::map<long, Cx<R>> pval;
                    auto psum = [&](long n) {
                        auto it = pval.find(n);
                        if (it != pval.end()) return it->second;
                        Cx<R> s{R(0), R(0)};
                        for (const auto& zz : z) s += cx_pow_int(zz, n);
                        for (const auto& ww : w) s -= inv_g * cx_pow_int(ww, n);
                        pval.emplace(n, s);
                        return s;
                    };
                    auto monomial_derivative = [&](const Cx<R>& coord, const R& scale) {
                        Cx<R> acc{R(0), R(0)};
                        for (const auto& [mu, coeff] : P) {
                            const std::vector<long> parts(mu.begin(), mu.end());
                            const R c = real_from_rat<R>(coeff);
                            Cx<R> s{R(0), R(0)};
                            for (std::size_t i = 0; i < parts.size(); ++i) {
                                Cx<R> term = (scale * R(parts[i])) * cx_pow_int(coord, parts[i] - 1);
                                for (std::size_t t = 0; t < parts.size(); ++t)
                                    if (t != i) term = term * psum(parts[t]);
                                s += term;
                            }
                            acc += c * s;
                        }
                        return acc;
                    };
                    const Cx<R> dz = monomial_derivative(z[static_cast<std::size_t>(j)], R(1));
                    const Cx<R> dw =
                        monomial_derivative(w[static_cast<std::size_t>(k)], -inv_g);
                    const R r = cx_abs(dz + gR * dw);
                    if (r > worst) worst = r;
                }
        }
        return worst.template convert_to<double>();
    });
}

// ---------------------------------------------------------------------------
// Vertex-product series check.
//
// The periodic dressings of the vertex operators satisfy an exact product
// law: between charge states, the ordered product equals the pairwise
// factor prod_{j<k} (1 - e^{i(u_j - u_k)})^{e_jk} with exponents g, -1,
// 1/g for first/first, mixed, and second/second pairs.  The left side is
// resummed from the exact Fock mode coefficients <Q1| phi(n_1)...phi(n_K
// )|Q>, which vanish unless every tail sum of n is nonnegative and the
// total is zero; the tail sums are truncated at a configurable degree and
// the dropped remainder is estimated geometrically from the boundary
// shell.

struct CorrelatorTerm {
    std::vector<long> n;   // mode vector, length N + M
    QuadScalar coeff;      // <Q1 | eta(n) | Q> component on the bare charge state
    bool shell = false;    // true when some tail sum equals the truncation degree
};

inline std::vector<CorrelatorTerm> correlator_mode_terms(long N, long M, const ModelParams& p,
                                                         long Q, long trunc) {
    if (N < 0 || M < 0 || N + M < 1)
        throw std::invalid_argument("correlator_mode_terms: need at least one operator");
    if (trunc < 0) throw std::invalid_argument("correlator_mode_terms: negative truncation");
    const long K = N + M;
    const long Q1 = Q + N * p.r - M * p.s;
    std::vector<CorrelatorTerm> out;
    std::vector<long> tails(static_cast<std::size_t>(K) + 1, 0);

    // Apply modes right to left; after applying positions j..K the state
    // has degree tail_j and the next mode is n_{j-1} = tail_{j-1} - tail_j.
    auto kind_of = [&](long pos) { return pos <= N ? p.r : -p.s; };
    std::function<void(long, const FockVector&)> walk = [&](long pos, const FockVector& state) {
        if (state.empty()) return;
        if (pos == 1) {
            const long t2 = K >= 2 ? tails[2] : 0;
            const FockVector fin = vertex_mode_stat(kind_of(1), -t2, state, p);
            const auto it = fin.find(FockKey{Q1, Partition{}});
            if (it == fin.end() || it->second.is_zero()) return;
            CorrelatorTerm term;
            term.n.resize(static_cast<std::size_t>(K));
            term.n[0] = -t2;
            long maxt = 0;
            // n_j = t_j - t_{j+1} for j >= 2, with t_{K+1} = 0.
            for (long j = 2; j <= K; ++j) {
                const long tj = tails[static_cast<std::size_t>(j)];
                const long tj1 = j == K ? 0 : tails[static_cast<std::size_t>(j) + 1];
                term.n[static_cast<std::size_t>(j - 1)] = tj - tj1;
                maxt = std::max(maxt, tj);
            }
            term.coeff = it->second;
            term.shell = maxt == trunc;
            out.push_back(std::move(term));
            return;
        }
        for (long t = 0; t <= trunc; ++t) {
            tails[static_cast<std::size_t>(pos)] = t;
            const long tnext = pos == K ? 0 : tails[static_cast<std::size_t>(pos) + 1];
            const FockVector next = vertex_mode_stat(kind_of(pos), t - tnext, state, p);
            walk(pos - 1, next);
        }
        tails[static_cast<std::size_t>(pos)] = 0;
    };
    walk(K, fock_basis(Q));
    return out;
}

// Exact coefficient lookup for tests: the mode-sum coefficient at a given
// integer vector (zero if outside the computed set).
inline QuadScalar correlator_coeff(const std::vector<CorrelatorTerm>& terms,
                                   const std::vector<long>& n) {
    for (const auto& t : terms)
        if (t.n == n) return t.coeff;
    return QuadScalar();
}

inline double anyon_correlator_check(long N, long M, const ModelParams& p,
                                     const std::vector<EvalPoint>& pts, long trunc = 6,
                                     long Q = 0, Precision prec = Precision::bits128,
                                     double tail_tol = 1e-9) {
    const auto terms = correlator_mode_terms(N, M, p, Q, trunc);
    const Rat g = p.g();
    const long K = N + M;
    return detail::dispatch_precision(prec, [&](auto tag) {
        using R = decltype(tag);
        const R gR = real_from_rat<R>(g);
        R worst(0);
        for (const auto& pt : pts) {
            detail::require_regular(pt);
            std::vector<Cx<R>> u;
            for (const auto& c : detail::lift_coords<R>(pt.x)) u.push_back(c);
            for (const auto& c : detail::lift_coords<R>(pt.y)) u.push_back(c);
            if (u.size() != static_cast<std::size_t>(K))
                throw std::invalid_argument("anyon_correlator_check: point arity mismatch");
            double min_gap = 1e300;
            for (std::size_t j = 1; j < u.size(); ++j) {
                const double gap = (u[j - 1].im - u[j].im).template convert_to<double>();
                if (gap <= 0)
                    throw std::invalid_argument(
                        "anyon_correlator_check: imaginary parts must strictly decrease");
                min_gap = std::min(min_gap, gap);
            }

            // Mode side with boundary-shell magnitude for the tail estimate.
            Cx<R> mode_sum{R(0), R(0)};
            R shell_abs(0);
            for (const auto& term : terms) {
                Cx<R> phase{R(0), R(0)};
                for (std::size_t j = 0; j < u.size(); ++j)
                    phase -= R(term.n[j]) * u[j];
                const Cx<R> val = real_from_quad<R>(term.coeff) * cx_exp_i(phase);
                mode_sum += val;
                if (term.shell) shell_abs += cx_abs(val);
            }
            if (K > 1) {
                const double rho = std::exp(-min_gap);
                const double shell = shell_abs.template convert_to<double>();
                const double bound =
                    2.0 * shell * rho / std::pow(1.0 - rho, static_cast<double>(K - 1));
                if (bound > tail_tol)
                    throw TruncationTooSmall(
                        "anyon_correlator_check: truncation degree too small (estimated tail " +
                            std::to_string(bound) + ")",
                        bound);
            }

            // Product side.
            Cx<R> prod{R(1), R(0)};
            for (long a = 0; a < K; ++a)
                for (long b = a + 1; b < K; ++b) {
                    const Cx<R> wfac = cx_exp_i(u[static_cast<std::size_t>(a)] -
                                                u[static_cast<std::size_t>(b)]);
                    const Cx<R> base = Cx<R>{R(1) - wfac.re, -wfac.im};
                    R expo;
                    if (a < N && b < N)
                        expo = gR;
                    else if (a >= N && b >= N)
                        expo = R(1) / gR;
                    else
                        expo = R(-1);
                    prod = prod * cx_pow(base, expo);
                }

            const R r = cx_abs(mode_sum - prod);
            if (r > worst) worst = r;
        }
        return worst.template convert_to<double>();
    });
}

}  // namespace dcs
