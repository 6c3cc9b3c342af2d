// Acceptance suite: eleven self-contained checks covering the whole
// library, each returning a pass/fail verdict with human-readable notes.
// Tolerances and runtime limits are pinned here as constants.
//
// The checks (by index):
//   1  exact eigenstates            orthogonalized states satisfy all three
//                                   eigen-relations exactly, full label sweep
//   2  super Jack reconstruction    eigenstates transcribe to super Jack
//                                   polynomials up to a nonzero scalar
//   3  cubic action formula         closed-form action of the cubic charge
//                                   on anyon states, sampled labels
//   4  character identity           graded state count equals the product
//                                   side coefficient-by-coefficient
//   5  sector completeness          joint eigenspace multiplicities account
//                                   for every charge/degree sector
//   6  zero-state regression        the known vanishing combination with
//                                   coefficients {1, g-1, g(g-1)/2}
//   7  generalized commutators      mode-shift commutation identities on a
//                                   basis-state window
//   8  operator identities          cubic Hamiltonian decomposition and the
//                                   statistics-inversion duality, as exact
//                                   sector matrices
//   9  eigenvalue formula agreement partition-form vs pseudo-momentum-form
//                                   spectra over the symbolic coupling
//  10  numeric differential checks  eigenfunction, momentum, and kernel
//                                   residuals at 128-bit precision
//  11  vertex product series        mode-resummed correlator vs the product
//                                   formula

#pragma once

#include "dcs/jack.hpp"
#include "dcs/numcheck.hpp"
#include "dcs/qseries.hpp"
#include "dcs/spectra.hpp"
#include "dcs/threads.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace dcs::acceptance {

// --- pinned tolerances and limits -------------------------------------------

inline constexpr double kTolNumericResidual = 1e-8;   // criteria 10: H and D residuals
inline constexpr double kTolKernelResidual = 1e-10;   // criterion 10: kernel condition
inline constexpr double kTolCorrelator = 1e-9;        // criterion 11
inline constexpr double kLimitSecondsEigenstates = 600.0;  // criterion 1
inline constexpr double kLimitSecondsCharacter = 60.0;     // criterion 4
inline constexpr std::uint64_t kDefaultSeed = 20260821ULL;

// --- common structure ---------------------------------------------------------

struct CriterionRun {
    int index = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::vector<std::string> notes;
};

inline const std::vector<ModelParams>& model_grid() {
    static const std::vector<ModelParams> grid{ModelParams(2, 1), ModelParams(1, 2),
                                               ModelParams(3, 1), ModelParams(3, 2)};
    return grid;
}

inline const std::vector<ModelParams>& character_grid() {
    static const std::vector<ModelParams> grid{ModelParams(1, 1), ModelParams(2, 1),
                                               ModelParams(3, 1), ModelParams(3, 2)};
    return grid;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline double elapsed(Clock::time_point since) {
    return std::chrono::duration<double>(Clock::now() - since).count();
}

inline std::string model_str(const ModelParams& p) {
    return "(" + std::to_string(p.r) + "," + std::to_string(p.s) + ")";
}

inline std::string partition_str(const Partition& lam) {
    std::string out = "[";
    for (std::size_t i = 0; i < lam.size(); ++i)
        out += (i ? "," : "") + std::to_string(lam[i]);
    return out + "]";
}

// Deterministic Fisher-Yates shuffle (independent of library internals).
template <typename T>
void shuffle_deterministic(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[static_cast<std::size_t>(rng() % i)]);
}

}  // namespace detail

// All admissible labels with N+M <= nm_cap and total degree <= degree_cap,
// the charge running over the model's admissible window.
inline std::vector<SpectralLabel> admissible_labels_by_degree(const ModelParams& p, long nm_cap,
                                                              long degree_cap) {
    std::vector<SpectralLabel> out;
    long qlo = 0, qhi = 0;
    charge_window(p, qlo, qhi);
    for (long Q = qlo; Q <= qhi; ++Q)
        for (long N = 0; N <= nm_cap; ++N)
            for (long M = 0; N + M <= nm_cap; ++M) {
                long f1 = 0, f2 = 0;
                dcs::detail::admissible_floors(p, N, M, Q, f1, f2);
                for (long d = N * f1 + M * f2; d <= degree_cap; ++d)
                    for (long d1 = f1 * N; d1 <= d - f2 * M; ++d1) {
                        const auto firsts = dcs::detail::dec_vectors(N, f1, d1);
                        if (firsts.empty()) continue;
                        const auto seconds = dcs::detail::dec_vectors(M, f2, d - d1);
                        for (const auto& a : firsts)
                            for (const auto& b : seconds) {
                                std::vector<long> n = a;
                                n.insert(n.end(), b.begin(), b.end());
                                out.emplace_back(N, M, Q, std::move(n));
                            }
                    }
            }
    return out;
}

// --- criterion 1: exact eigenstates ------------------------------------------

inline CriterionRun run_eigenstates(unsigned threads) {
    const auto t0 = detail::Clock::now();
    CriterionRun run{1, "exact eigenstates", false, 0.0, {}};

    struct Item {
        const ModelParams* p;
        SpectralLabel l;
    };
    std::vector<Item> items;
    std::vector<std::size_t> per_model;
    for (const auto& p : model_grid()) {
        const auto labels = admissible_labels_by_degree(p, 3, 6);
        per_model.push_back(labels.size());
        for (const auto& l : labels) items.push_back(Item{&p, l});
    }

    // 0 = verified, 2 = degenerate (reported, excluded), 3 = failure
    std::vector<int> kind(items.size(), 0);
    std::vector<std::string> text(items.size());
    parallel_for(items.size(), threads, [&](std::size_t i) {
        const ModelParams& p = *items[i].p;
        const SpectralLabel& l = items[i].l;
        try {
            const OrthoResult res = orthogonalize(l, p);
            for (int k = 1; k <= 3; ++k) {
                FockVector residual = apply_H(k, res.state, p);
                fock_add_scaled(residual, res.state,
                                res.eigenvalues[static_cast<std::size_t>(k - 1)].scaled(Rat(-1)));
                if (!residual.empty()) {
                    kind[i] = 3;
                    text[i] = detail::model_str(p) + " " + l.to_string() +
                              ": nonzero residual for operator " + std::to_string(k);
                    return;
                }
            }
        } catch (const Degenerate& d) {
            kind[i] = 2;
            std::string witness = "(";
            for (std::size_t j = 0; j < d.m.n.size(); ++j)
                witness += (j ? "," : "") + std::to_string(d.m.n[j]);
            witness += ")";
            text[i] = detail::model_str(p) + " " + l.to_string() + ": degenerate against m=" +
                      witness;
        } catch (const std::exception& e) {
            kind[i] = 3;
            text[i] = detail::model_str(p) + " " + l.to_string() + ": " + e.what();
        }
    });

    std::size_t verified = 0, degenerate = 0, failures = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (kind[i] == 0) ++verified;
        if (kind[i] == 2) {
            ++degenerate;
            run.notes.push_back("degenerate (excluded): " + text[i]);
        }
        if (kind[i] == 3) {
            ++failures;
            if (run.notes.size() < 40) run.notes.push_back("FAIL " + text[i]);
        }
    }
    {
        std::ostringstream os;
        os << "labels per model";
        for (std::size_t m = 0; m < model_grid().size(); ++m)
            os << " " << detail::model_str(model_grid()[m]) << ":" << per_model[m];
        run.notes.insert(run.notes.begin(), os.str());
    }
    run.notes.insert(run.notes.begin() + 1,
                     "verified " + std::to_string(verified) + ", degenerate " +
                         std::to_string(degenerate) + ", failures " + std::to_string(failures));
    run.seconds = detail::elapsed(t0);
    if (run.seconds >= kLimitSecondsEigenstates)
        run.notes.push_back("runtime limit exceeded (" + std::to_string(kLimitSecondsEigenstates) +
                            " s)");
    run.pass = failures == 0 && run.seconds < kLimitSecondsEigenstates;
    return run;
}

// --- criterion 2: super Jack reconstruction -----------------------------------

inline CriterionRun run_reconstruction(unsigned threads) {
    const auto t0 = detail::Clock::now();
    CriterionRun run{2, "super Jack reconstruction", false, 0.0, {}};

    struct Item {
        const ModelParams* p;
        SpectralLabel l;
        Partition lam;
    };
    std::vector<Item> items;
    std::size_t outside_bijection = 0;
    for (const auto& p : model_grid())
        for (const auto& l : admissible_labels_by_degree(p, 3, 6)) {
            try {
                Partition lam = n_to_lambda(l.vec());
                if (weight(lam) <= 5) items.push_back(Item{&p, l, std::move(lam)});
            } catch (const std::invalid_argument&) {
                ++outside_bijection;  // admissible label outside the fat-hook image
            }
        }

    // 0 = proportional, 2 = skipped (degenerate/zero), 3 = failure
    std::vector<int> kind(items.size(), 0);
    std::vector<std::string> text(items.size());
    parallel_for(items.size(), threads, [&](std::size_t i) {
        const ModelParams& p = *items[i].p;
        const SpectralLabel& l = items[i].l;
        try {
            const OrthoResult res = orthogonalize(l, p);
            if (res.zero_state) {
                kind[i] = 2;
                text[i] = "zero state";
                return;
            }
            if (!proportional_to_super_jack(reconstruct_polynomial(res.state, p), items[i].lam,
                                            l.N, l.M, p)) {
                kind[i] = 3;
                text[i] = detail::model_str(p) + " " + l.to_string() + " vs lambda=" +
                          detail::partition_str(items[i].lam);
            }
        } catch (const Degenerate&) {
            kind[i] = 2;
            text[i] = "degenerate";
        } catch (const std::exception& e) {
            kind[i] = 3;
            text[i] = detail::model_str(p) + " " + l.to_string() + ": " + e.what();
        }
    });

    std::size_t matched = 0, skipped = 0, failures = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (kind[i] == 0) ++matched;
        if (kind[i] == 2) ++skipped;
        if (kind[i] == 3) {
            ++failures;
            if (run.notes.size() < 40) run.notes.push_back("FAIL " + text[i]);
        }
    }
    run.notes.insert(run.notes.begin(),
                     "proportional " + std::to_string(matched) + ", skipped " +
                         std::to_string(skipped) + " (degenerate or zero state), outside bijection " +
                         std::to_string(outside_bijection) + ", failures " +
                         std::to_string(failures));
    run.seconds = detail::elapsed(t0);
    run.pass = failures == 0;
    return run;
}

// --- criterion 3: cubic action formula ----------------------------------------

inline CriterionRun run_action_formula(std::uint64_t seed) {
    const auto t0 = detail::Clock::now();
    CriterionRun run{3, "cubic action formula", false, 0.0, {}};

    struct Item {
        const ModelParams* p;
        SpectralLabel l;
    };
    std::vector<Item> pool;
    for (const auto& p : model_grid())
        for (const auto& l : admissible_labels_by_degree(p, 3, 5)) pool.push_back(Item{&p, l});

    std::mt19937_64 rng(seed);
    detail::shuffle_deterministic(pool, rng);
    const std::size_t count = std::min<std::size_t>(50, pool.size());

    std::size_t failures = 0;
    std::array<std::size_t, 4> hits{};
    for (std::size_t i = 0; i < count; ++i) {
        const ModelParams& p = *pool[i].p;
        for (std::size_t m = 0; m < model_grid().size(); ++m)
            if (&model_grid()[m] == pool[i].p) ++hits[m];
        if (!verify_action_formula(pool[i].l, p)) {
            ++failures;
            run.notes.push_back("FAIL " + detail::model_str(p) + " " + pool[i].l.to_string());
        }
    }
    {
        std::ostringstream os;
        os << count << " labels sampled from a pool of " << pool.size() << "; per-model";
        for (std::size_t m = 0; m < model_grid().size(); ++m)
            os << " " << detail::model_str(model_grid()[m]) << ":" << hits[m];
        run.notes.insert(run.notes.begin(), os.str());
    }
    run.seconds = detail::elapsed(t0);
    run.pass = failures == 0 && count == 50;
    return run;
}

// --- criterion 4: character identity ------------------------------------------

inline CriterionRun run_character() {
    const auto t0 = detail::Clock::now();
    CriterionRun run{4, "character identity", false, 0.0, {}};

    std::size_t failures = 0;
    for (const auto& p : character_grid()) {
        const long unit = 2 * p.r * p.s;
        const long cap = 24 * unit;
        const QSeries lhs = lhs_series(p, cap);
        const QSeries rhs = rhs_series(p, cap);
        long first_mismatch = -1;
        for (long k = 0; k <= cap; ++k)
            if (!(lhs.at(k) == rhs.at(k))) {
                first_mismatch = k;
                break;
            }
        if (first_mismatch >= 0) {
            ++failures;
            run.notes.push_back("FAIL " + detail::model_str(p) + ": first mismatch at unit exponent " +
                                std::to_string(first_mismatch));
        } else {
            run.notes.push_back(detail::model_str(p) + ": equal through unit exponent " +
                                std::to_string(cap) + " (q-order 24)");
        }
    }
    run.seconds = detail::elapsed(t0);
    if (run.seconds >= kLimitSecondsCharacter)
        run.notes.push_back("runtime limit exceeded (" + std::to_string(kLimitSecondsCharacter) +
                            " s)");
    run.pass = failures == 0 && run.seconds < kLimitSecondsCharacter;
    return run;
}

// --- criterion 5: sector completeness -----------------------------------------

inline CriterionRun run_sector_completeness() {
    const auto t0 = detail::Clock::now();
    CriterionRun run{5, "sector completeness", false, 0.0, {}};

    const ModelParams p(2, 1);
    std::size_t sectors = 0, total_dim = 0, total_labels = 0, failures = 0;
    for (long q1 = -2; q1 <= 2; ++q1)
        for (long d = 0; d <= 6; ++d) {
            const SectorAuditReport rep = sector_audit(q1, d, p);
            ++sectors;
            total_dim += rep.dim;
            total_labels += rep.label_count;
            if (!rep.pass()) {
                ++failures;
                for (const auto& f : rep.findings)
                    run.notes.push_back("FAIL (Q1=" + std::to_string(q1) + ",d=" +
                                        std::to_string(d) + ") " + f);
            }
        }
    run.notes.insert(run.notes.begin(),
                     std::to_string(sectors) + " sectors at " + detail::model_str(p) +
                         ", total dimension " + std::to_string(total_dim) + ", matched by " +
                         std::to_string(total_labels) + " admissible labels");
    run.seconds = detail::elapsed(t0);
    run.pass = failures == 0;
    return run;
}

// --- criterion 6: zero-state regression ---------------------------------------

inline CriterionRun run_zero_state() {
    const auto t0 = detail::Clock::now();
    CriterionRun run{6, "zero-state regression", false, 0.0, {}};

    bool ok = true;
    // symbolic coefficients over the coupling
    {
        const auto u = orthogonalize_symbolic_u(IntegerVector(2, 0, {1, 2}));
        const RatFuncG g = RatFuncG::g(), one = RatFuncG(Rat(1));
        const RatFuncG expect12 = one;
        const RatFuncG expect21 = g - one;
        const RatFuncG expect30 = (g * g - g).scaled(Rat(1, 2));
        const bool sym_ok = u.size() == 3 && u.count(IntegerVector(2, 0, {1, 2})) &&
                            u.count(IntegerVector(2, 0, {2, 1})) &&
                            u.count(IntegerVector(2, 0, {3, 0})) &&
                            u.at(IntegerVector(2, 0, {1, 2})) == expect12 &&
                            u.at(IntegerVector(2, 0, {2, 1})) == expect21 &&
                            u.at(IntegerVector(2, 0, {3, 0})) == expect30;
        if (sym_ok) {
            run.notes.push_back("symbolic u-table is {1, g - 1, (g^2 - g)/2}");
        } else {
            ok = false;
            run.notes.push_back("FAIL symbolic u-table differs from {1, g - 1, (g^2 - g)/2}");
        }
    }
    // the assembled combination vanishes at every model on the grid
    for (const auto& p : model_grid()) {
        try {
            const OrthoResult res = orthogonalize(SpectralLabel(2, 0, 0, {1, 2}), p);
            if (!res.zero_state || !res.state.empty()) {
                ok = false;
                run.notes.push_back("FAIL " + detail::model_str(p) + ": state did not vanish");
            }
        } catch (const std::exception& e) {
            ok = false;
            run.notes.push_back("FAIL " + detail::model_str(p) + ": " + e.what());
        }
    }
    // the g = 2 instance: all three coefficients specialize to 1
    {
        const ModelParams p(2, 1);
        const OrthoResult res = orthogonalize(SpectralLabel(2, 0, 0, {1, 2}), p);
        const QuadScalar one(Rat(1));
        const bool num_ok = res.coefficients.size() == 3 &&
                            res.coefficients.at(IntegerVector(2, 0, {1, 2})) == one &&
                            res.coefficients.at(IntegerVector(2, 0, {2, 1})) == one &&
                            res.coefficients.at(IntegerVector(2, 0, {3, 0})) == one;
        if (num_ok) {
            run.notes.push_back("at g = 2 the coefficients specialize to {1, 1, 1} and the state is zero");
        } else {
            ok = false;
            run.notes.push_back("FAIL g = 2 coefficients differ from {1, 1, 1}");
        }
    }
    run.seconds = detail::elapsed(t0);
    run.pass = ok;
    return run;
}

// --- criterion 7: generalized commutators --------------------------------------

inline CriterionRun run_commutators(unsigned threads) {
    const auto t0 = detail::Clock::now();
    CriterionRun run{7, "generalized commutators", false, 0.0, {}};

    const std::vector<ModelParams> models{ModelParams(1, 1), ModelParams(2, 1)};
    std::vector<GenCommReport> reports(models.size());
    parallel_for(models.size(), std::min(threads, 2u),
                 [&](std::size_t i) { reports[i] = verify_gen_commutators(models[i], 4, 4, 2); });

    bool ok = true;
    for (std::size_t i = 0; i < models.size(); ++i) {
        std::ostringstream os;
        os << detail::model_str(models[i]) << ": " << reports[i].cases << " cases, "
           << reports[i].failures << " failures (degree <= 4, |Q| <= 2, modes |n|,|m| <= 4)";
        run.notes.push_back(os.str());
        if (!reports[i].pass()) ok = false;
    }
    run.seconds = detail::elapsed(t0);
    run.pass = ok;
    return run;
}

// --- criterion 8: operator identities -------------------------------------------

inline CriterionRun run_operator_identities() {
    const auto t0 = detail::Clock::now();
    CriterionRun run{8, "operator identities", false, 0.0, {}};

    // Literal mode-sum assemblies, independent of the closed forms used by
    // the library operators.
    const auto lit_number = [](const FockVector& v) {
        FockVector out;
        const long D = fock_max_degree(v);
        for (long n = 1; n <= D; ++n)
            fock_add_scaled(out, apply_a(-n, apply_a(n, v)), QuadScalar(Rat(1)));
        return out;
    };
    const auto lit_c = [](const FockVector& v) {
        FockVector out;
        const long D = fock_max_degree(v);
        for (long n = 1; n <= D; ++n)
            fock_add_scaled(out, apply_a(-n, apply_a(n, v)), QuadScalar(Rat(n)));
        return out;
    };
    const auto lit_cubic = [](const FockVector& v) {
        FockVector acc;
        const long D = fock_max_degree(v);
        const long B = 2 * D;
        for (long n1 = -B; n1 <= B; ++n1)
            for (long n2 = -B; n2 <= B; ++n2) {
                const long n3 = -n1 - n2;
                if (n1 == 0 || n2 == 0 || n3 == 0 || std::abs(n3) > B) continue;
                std::array<long, 3> t{n1, n2, n3};
                std::sort(t.begin(), t.end());
                FockVector w = apply_a(t[2], v);
                if (w.empty()) continue;
                w = apply_a(t[1], w);
                w = apply_a(t[0], w);
                fock_add_scaled(acc, w, QuadScalar(Rat(1, 3)));
            }
        return acc;
    };

    const std::vector<ModelParams> models{ModelParams(1, 1), ModelParams(2, 1), ModelParams(1, 2),
                                          ModelParams(3, 1), ModelParams(3, 2)};
    std::size_t matrices = 0, failures = 0;
    for (const auto& p : models) {
        const QuadScalar nu = p.nu(), nu0 = p.nu0(), one = p.one();
        const QuadScalar minus_inv = p.stat_param(-p.s);  // equals -1/nu

        const auto w3_literal = [&](const FockVector& v) {
            FockVector out = lit_cubic(v);
            fock_add_scaled(out, apply_a0(lit_number(v)), nu0.scaled(Rat(2)));
            fock_add_scaled(out, apply_a0(apply_a0(apply_a0(v))), nu0.pow(3).scaled(Rat(1, 3)));
            fock_add_scaled(out, apply_a0(v), -(nu * nu * nu0).scaled(Rat(1, 12)));
            return out;
        };
        const auto decomposition_rhs = [&](const FockVector& v) {
            FockVector out = fock_scaled(w3_literal(v), nu);
            fock_add_scaled(out, lit_c(v), one - nu * nu);
            return out;
        };
        const auto h3_library = [&](const FockVector& v) { return apply_H(3, v, p); };
        const auto tilde3 = [&](const QuadScalar& mu) {
            return [&, mu](const FockVector& v) {
                FockVector out = fock_scaled(apply_H_stat(3, v, p, mu), p.one() / mu);
                fock_add_scaled(out, apply_charge(v, p), (mu * mu).scaled(Rat(1, 12)));
                return out;
            };
        };
        const auto tilde1 = [&](const QuadScalar& mu) {
            return [&, mu](const FockVector& v) {
                return fock_scaled(apply_H_stat(1, v, p, mu), mu);
            };
        };

        for (long Q = -2; Q <= 2; ++Q)
            for (long d = 0; d <= 5; ++d) {
                const auto check = [&](const SectorMatrix& a, const SectorMatrix& b,
                                       const char* what) {
                    ++matrices;
                    if (!(a.entries == b.entries)) {
                        ++failures;
                        run.notes.push_back(std::string("FAIL ") + what + " at " +
                                            detail::model_str(p) + " Q=" + std::to_string(Q) +
                                            " d=" + std::to_string(d));
                    }
                };
                check(sector_matrix(h3_library, Q, d), sector_matrix(decomposition_rhs, Q, d),
                      "cubic decomposition");
                check(sector_matrix(tilde3(nu), Q, d), sector_matrix(tilde3(minus_inv), Q, d),
                      "cubic duality");
                check(sector_matrix(tilde1(nu), Q, d), sector_matrix(tilde1(minus_inv), Q, d),
                      "linear duality");
            }
    }
    run.notes.insert(run.notes.begin(),
                     std::to_string(matrices) + " sector-matrix identities over " +
                         std::to_string(models.size()) + " models (d <= 5, |Q| <= 2), " +
                         std::to_string(failures) + " failures");
    run.seconds = detail::elapsed(t0);
    run.pass = failures == 0;
    return run;
}

// --- criterion 9: eigenvalue formula agreement -----------------------------------

inline CriterionRun run_eigenvalue_forms(std::uint64_t seed) {
    const auto t0 = detail::Clock::now();
    CriterionRun run{9, "eigenvalue formula agreement", false, 0.0, {}};

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick_nm(0, 4), pick_d(0, 8);
    std::size_t done = 0, failures = 0;
    while (done < 200) {
        const long N = pick_nm(rng), M = pick_nm(rng);
        if (N + M == 0) continue;
        const auto parts = partitions_of(pick_d(rng));
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        const Partition lam = parts[pick(rng)];
        if (!in_fat_hook(lam, N, M)) continue;
        const IntegerVector n = lambda_to_n(lam, N, M);
        const bool e2_ok = cs_E2_n_sym(n, RatFuncG()) == RatFuncG(cs_E2_lambda(lam));
        const bool e3_ok = cs_E3_n_sym(n, RatFuncG()) == cs_E3_lambda_sym(lam, N, M);
        if (!e2_ok || !e3_ok) {
            ++failures;
            run.notes.push_back("FAIL (N=" + std::to_string(N) + ",M=" + std::to_string(M) +
                                ") lambda=" + detail::partition_str(lam));
        }
        ++done;
    }
    run.notes.insert(run.notes.begin(), "200 random fat-hook labels (N,M <= 4, degree <= 8), " +
                                            std::to_string(failures) + " failures");
    run.seconds = detail::elapsed(t0);
    run.pass = failures == 0;
    return run;
}

// --- criterion 10: numeric differential checks -----------------------------------

struct NumericRow {
    long N = 0;
    long M = 0;
    Partition lambda;
    Rat g;
    double h_canonical = 0;  // eigenfunction residual, canonical phase offset
    double h_zero = 0;       // eigenfunction residual, zero phase offset
    double d_residual = 0;   // momentum-grading residual
    double kernel = 0;       // kernel-condition residual (valid if has_kernel)
    bool has_kernel = false;
};

struct NumericReport {
    std::vector<NumericRow> rows;
    double worst_h = 0;
    double worst_d = 0;
    double worst_kernel = 0;
    bool pass = false;
};

inline CriterionRun run_numeric(unsigned threads, std::uint64_t seed,
                                NumericReport* detail_out = nullptr) {
    const auto t0 = detail::Clock::now();
    CriterionRun run{10, "numeric differential checks", false, 0.0, {}};

    const std::vector<Rat> couplings{Rat(1, 2), Rat(3, 2), Rat(2)};
    std::vector<NumericRow> rows;
    for (long N = 0; N <= 4; ++N)
        for (long M = 0; N + M <= 4; ++M) {
            if (N + M == 0) continue;
            for (long d = 0; d <= 4; ++d)
                for (const auto& lam : partitions_of(d)) {
                    if (!in_fat_hook(lam, N, M)) continue;
                    for (const auto& g : couplings) {
                        NumericRow row;
                        row.N = N;
                        row.M = M;
                        row.lambda = lam;
                        row.g = g;
                        row.has_kernel = N >= 1 && M >= 1;
                        rows.push_back(std::move(row));
                    }
                }
        }

    parallel_for(rows.size(), threads, [&](std::size_t i) {
        NumericRow& row = rows[i];
        SampleOptions opt;
        opt.seed = seed ^ (0x9e3779b97f4a7c15ULL * (i + 1));
        const auto pts = sample_points(row.N, row.M, 10, opt);
        row.h_canonical =
            residual_H(row.N, row.M, row.lambda, row.g, QZeroMode::canonical, pts);
        row.h_zero = residual_H(row.N, row.M, row.lambda, row.g, QZeroMode::zero, pts);
        row.d_residual = residual_D(row.N, row.M, row.lambda, row.g, pts);
        if (row.has_kernel)
            row.kernel = kernel_condition_residual(row.lambda, row.N, row.M, row.g, pts);
    });

    double worst_h = 0, worst_d = 0, worst_kernel = 0;
    std::size_t failures = 0;
    for (const auto& row : rows) {
        worst_h = std::max({worst_h, row.h_canonical, row.h_zero});
        worst_d = std::max(worst_d, row.d_residual);
        if (row.has_kernel) worst_kernel = std::max(worst_kernel, row.kernel);
        const bool row_ok = row.h_canonical < kTolNumericResidual &&
                            row.h_zero < kTolNumericResidual &&
                            row.d_residual < kTolNumericResidual &&
                            (!row.has_kernel || row.kernel < kTolKernelResidual);
        if (!row_ok) {
            ++failures;
            if (run.notes.size() < 40) {
                std::ostringstream os;
                os << "FAIL (N=" << row.N << ",M=" << row.M
                   << ") lambda=" << detail::partition_str(row.lambda)
                   << " g=" << rat_to_string(row.g) << " residuals " << row.h_canonical << " "
                   << row.h_zero << " " << row.d_residual << " " << row.kernel;
                run.notes.push_back(os.str());
            }
        }
    }
    {
        std::ostringstream os;
        os << rows.size() << " cases (N+M <= 4, degree <= 4, g in {1/2, 3/2, 2}, 10 points each); "
           << "worst residuals: H " << worst_h << ", D " << worst_d << ", kernel " << worst_kernel
           << " (tolerances " << kTolNumericResidual << ", " << kTolNumericResidual << ", "
           << kTolKernelResidual << ")";
        run.notes.insert(run.notes.begin(), os.str());
    }
    run.seconds = detail::elapsed(t0);
    run.pass = failures == 0;
    if (detail_out) {
        detail_out->rows = std::move(rows);
        detail_out->worst_h = worst_h;
        detail_out->worst_d = worst_d;
        detail_out->worst_kernel = worst_kernel;
        detail_out->pass = run.pass;
    }
    return run;
}

// --- criterion 11: vertex product series ------------------------------------------

struct CorrelatorRow {
    long r = 0;
    long s = 0;
    long N = 0;
    long M = 0;
    double residual = 0;
};

struct CorrelatorReport {
    std::vector<CorrelatorRow> rows;
    double worst = 0;
    bool pass = false;
};

inline CriterionRun run_correlator(std::uint64_t seed, CorrelatorReport* detail_out = nullptr) {
    const auto t0 = detail::Clock::now();
    CriterionRun run{11, "vertex product series", false, 0.0, {}};

    const std::vector<std::pair<long, long>> species{{2, 0}, {1, 1}, {0, 2}};
    std::vector<CorrelatorRow> rows;
    std::size_t failures = 0;
    std::size_t idx = 0;
    for (const auto& p : model_grid())
        for (const auto& [N, M] : species) {
            SampleOptions opt;
            opt.first_im = -0.25;
            opt.min_gap = 3.5;  // keeps the truncation tail below the tolerance
            opt.max_gap = 4.0;
            opt.seed = seed ^ (0xbf58476d1ce4e5b9ULL * (++idx));
            const auto pts = sample_points(N, M, 4, opt);
            CorrelatorRow row{p.r, p.s, N, M, 0.0};
            try {
                row.residual =
                    anyon_correlator_check(N, M, p, pts, 6, 0, Precision::bits128, kTolCorrelator);
                if (!(row.residual < kTolCorrelator)) {
                    ++failures;
                    std::ostringstream os;
                    os << "FAIL " << detail::model_str(p) << " (N=" << N << ",M=" << M
                       << "): residual " << row.residual;
                    run.notes.push_back(os.str());
                }
            } catch (const std::exception& e) {
                row.residual = std::nan("");
                ++failures;
                run.notes.push_back("FAIL " + detail::model_str(p) + " (N=" + std::to_string(N) +
                                    ",M=" + std::to_string(M) + "): " + e.what());
            }
            rows.push_back(row);
        }

    double worst = 0;
    for (const auto& row : rows)
        if (!std::isnan(row.residual)) worst = std::max(worst, row.residual);
    {
        std::ostringstream os;
        os << rows.size() << " model/species pairs at truncation degree 6; worst residual " << worst
           << " (tolerance " << kTolCorrelator << ")";
        run.notes.insert(run.notes.begin(), os.str());
    }
    run.seconds = detail::elapsed(t0);
    run.pass = failures == 0;
    if (detail_out) {
        detail_out->rows = std::move(rows);
        detail_out->worst = worst;
        detail_out->pass = run.pass;
    }
    return run;
}

// --- drivers -------------------------------------------------------------------

inline CriterionRun run_criterion(int index, unsigned threads, std::uint64_t seed) {
    switch (index) {
        case 1: return run_eigenstates(threads);
        case 2: return run_reconstruction(threads);
        case 3: return run_action_formula(seed);
        case 4: return run_character();
        case 5: return run_sector_completeness();
        case 6: return run_zero_state();
        case 7: return run_commutators(threads);
        case 8: return run_operator_identities();
        case 9: return run_eigenvalue_forms(seed);
        case 10: return run_numeric(threads, seed);
        case 11: return run_correlator(seed);
        default: throw std::invalid_argument("run_criterion: index must be 1..11");
    }
}

inline std::vector<CriterionRun> run_all(unsigned threads, std::uint64_t seed) {
    std::vector<CriterionRun> out;
    out.reserve(11);
    for (int k = 1; k <= 11; ++k) out.push_back(run_criterion(k, threads, seed));
    return out;
}

}  // namespace dcs::acceptance
