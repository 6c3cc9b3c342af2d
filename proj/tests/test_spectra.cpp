// Pseudo-momenta, exact eigenvalues, anyon states, the closed-form
// triangular action of the cubic charge, the orthogonalization recursion,
// generalized commutators, charge reduction, and sector audits.

#include <catch2/catch_amalgamated.hpp>

#include "dcs/spectra.hpp"

#include <random>

using namespace dcs;

namespace {
const std::vector<ModelParams> kModels{{2, 1}, {1, 2}, {3, 1}, {3, 2}};

RatFuncG G() { return RatFuncG::g(); }
}  // namespace

TEST_CASE("pseudo-momenta") {
    for (const auto& p : kModels) {
        const Rat g(p.r, p.s);
        CHECK(pseudo_momenta(SpectralLabel(1, 0, 0, {0}), p).values ==
              std::vector<Rat>{g / 2});
        CHECK(pseudo_momenta(SpectralLabel(0, 1, 0, {0}), p).values ==
              std::vector<Rat>{Rat(1) / (2 * g)});
        // charge shifts: +1/s on the first species, -1/r on the second
        const SpectralLabel a(1, 1, 2, {3, 1}), b(1, 1, 3, {3, 1});
        const auto pa = pseudo_momenta(a, p), pb = pseudo_momenta(b, p);
        CHECK(pb.values[0] - pa.values[0] == Rat(1, p.s));
        CHECK(pb.values[1] - pa.values[1] == Rat(-1, p.r));
        CHECK(pa.q0 == (Rat(1) * g - 1) / 2 + Rat(2, p.s));
        CHECK(pa.Q1 == 2 + p.r - p.s);
    }
}

TEST_CASE("eigenvalues on charge states and low labels") {
    for (const auto& p : kModels) {
        const long r = p.r, s = p.s;
        const Rat g(r, s);
        for (long Q = -2; Q <= 2; ++Q) {
            const SpectralLabel l(0, 0, Q, {});
            CHECK(eigenvalue_rat(1, l, p) == Rat(Q, r));
            CHECK(eigenvalue_rat(2, l, p) == Rat(Q * Q, 2 * r * s));
            CHECK(eigenvalue_rat(3, l, p) == Rat(Q * Q * Q, 3 * r * s * s) - Rat(r * Q, 12 * s * s));
        }
        CHECK(eigenvalue_rat(2, SpectralLabel(1, 1, 0, {0, 0}), p) ==
              g / 2 + Rat(1) / (2 * g) - 1);
        // scalar wrapper agrees
        CHECK(eigenvalue(2, SpectralLabel(1, 1, 0, {0, 0}), p) ==
              p.from_rat(g / 2 + Rat(1) / (2 * g) - 1));
    }
}

TEST_CASE("empty-label constants on both sides of the correspondence") {
    const ModelParams p(3, 2);
    const Rat g(3, 2);
    for (long N = 1; N <= 4; ++N) {
        std::vector<long> zeros(static_cast<std::size_t>(N), 0);
        // Fock side: the charges' eigenvalue formula
        CHECK(eigenvalue_rat(3, SpectralLabel(N, 0, 0, zeros), p) ==
              g * g * Rat(4 * N * N * N - N, 12));
        // differential-operator side: empty-partition constant
        CHECK(cs_E3_lambda_sym({}, N, 0) ==
              (G() * G()).scaled(Rat(N * N * N - N, 12)));
    }
    // mixed-species constant: (g^2/12)[(N - M/g)^3 - (N - M/g^3)]
    const RatFuncG nm = RatFuncG(Rat(2)) - RatFuncG(Rat(1)) / G();
    const RatFuncG nm3 = RatFuncG(Rat(2)) - RatFuncG(Rat(1)) / (G() * G() * G());
    CHECK(cs_E3_lambda_sym({}, 2, 1) == (G() * G() * (nm * nm * nm - nm3)).scaled(Rat(1, 12)));
    // one particle of the first kind: a free second derivative, eigenvalue d^2
    for (long d = 1; d <= 5; ++d)
        CHECK(cs_E3_lambda_sym({d}, 1, 0) == RatFuncG(Rat(d * d)));
    // one particle of the second kind: the second derivative enters with a
    // factor +g, so the degree-d state has eigenvalue -g d^2
    for (long d = 1; d <= 3; ++d)
        CHECK(cs_E3_lambda_sym(Partition(static_cast<std::size_t>(d), 1), 0, 1) ==
              G().scaled(Rat(-d * d)));
}

TEST_CASE("partition-form and pseudo-momentum-form eigenvalues agree symbolically") {
    std::mt19937_64 rng(314159);
    std::uniform_int_distribution<long> pickN(0, 3), pickM(0, 3), pickd(0, 6);
    int done = 0;
    while (done < 60) {
        const long N = pickN(rng), M = pickM(rng);
        if (N + M == 0) continue;
        const auto parts = partitions_of(pickd(rng));
        std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
        const Partition lam = parts[pick(rng)];
        if (!in_fat_hook(lam, N, M)) continue;
        const IntegerVector n = lambda_to_n(lam, N, M);
        CHECK(cs_E2_n_sym(n, RatFuncG()) == RatFuncG(cs_E2_lambda(lam)));
        CHECK(cs_E3_n_sym(n, RatFuncG()) == cs_E3_lambda_sym(lam, N, M));
        // offset shifts: first form moves linearly, second picks up the
        // cross term with the first
        const RatFuncG q0 = G().scaled(Rat(1, 7)) + RatFuncG(Rat(2, 3));
        const RatFuncG nm = RatFuncG(Rat(N)) - RatFuncG(Rat(M)) / G();
        CHECK(cs_E2_n_sym(n, q0) == cs_E2_n_sym(n, RatFuncG()) + q0 * nm);
        CHECK(cs_E3_n_sym(n, q0) ==
              cs_E3_n_sym(n, RatFuncG()) + (q0 * cs_E2_n_sym(n, RatFuncG())).scaled(Rat(2)) +
                  q0 * q0 * nm);
        ++done;
    }
}

TEST_CASE("fixed-coupling pseudo-momenta are the symbolic ones at the label offset") {
    for (const auto& p : kModels) {
        const Rat g(p.r, p.s);
        for (const SpectralLabel& l :
             {SpectralLabel(2, 1, 1, {4, 2, 3}), SpectralLabel(1, 2, -1, {0, 2, 1})}) {
            const PseudoMomenta pm = pseudo_momenta(l, p);
            const auto sym = cs_pseudo_momenta_sym(l.vec(), RatFuncG(pm.q0));
            REQUIRE(sym.size() == pm.values.size());
            for (std::size_t i = 0; i < sym.size(); ++i)
                CHECK(sym[i].specialize(g) == pm.values[i]);
        }
    }
}

TEST_CASE("pair weights") {
    const ModelParams p(2, 1);  // g = 2
    CHECK(gamma_jk(1, 2, 2, 0, p) == Rat(2));
    CHECK(gamma_jk(1, 2, 1, 1, p) == Rat(-1));
    CHECK(gamma_jk(1, 2, 0, 2, p) == Rat(1, 2));
    const ModelParams free_point(1, 1);  // g = 1: all weights vanish
    for (long cfgN : {0L, 1L, 2L})
        CHECK(gamma_jk(1, 2, cfgN, 2 - cfgN, free_point) == Rat(0));
    // symbolic forms specialize to the fixed-coupling values
    for (const auto& q : kModels) {
        const Rat g(q.r, q.s);
        CHECK(gamma_jk_sym(1, 2, 2, 0).specialize(g) == gamma_jk(1, 2, 2, 0, q));
        CHECK(gamma_jk_sym(1, 2, 1, 1).specialize(g) == gamma_jk(1, 2, 1, 1, q));
        CHECK(gamma_jk_sym(2, 3, 1, 2).specialize(g) == gamma_jk(2, 3, 1, 2, q));
    }
    CHECK_THROWS_AS(gamma_jk(2, 2, 1, 1, p), std::invalid_argument);
}

TEST_CASE("anyon state assembly") {
    for (const auto& p : kModels) {
        for (long Q : {-1L, 0L, 2L}) {
            CHECK(build_eta(SpectralLabel(1, 0, Q, {0}), p) == fock_basis(Q + p.r, {}));
            CHECK(build_eta(SpectralLabel(0, 1, Q, {0}), p) == fock_basis(Q - p.s, {}));
            CHECK(build_eta(SpectralLabel(2, 0, Q, {0, -1}), p).empty());
            CHECK(build_eta(SpectralLabel(1, 1, Q, {-1, 0}), p).empty());
        }
        CHECK(build_eta(SpectralLabel(1, 0, 0, {1}), p) ==
              fock_scaled(fock_basis(p.r, {1}), p.nu()));
        // degree and final charge of a generic nonzero state
        const SpectralLabel l(1, 1, 1, {2, 1});
        const FockVector eta = build_eta(l, p);
        REQUIRE_FALSE(eta.empty());
        for (const auto& [key, c] : eta) {
            CHECK(key.first == l.final_charge(p));
            CHECK(weight(key.second) == 3);
        }
    }
}

TEST_CASE("triangular action of the cubic charge on anyon states") {
    // single-species, single-particle labels: no pairs, pure eigenstate
    for (const auto& p : kModels)
        for (long d = 0; d <= 6; ++d) {
            CHECK(verify_action_formula(SpectralLabel(1, 0, 0, {d}), p));
            CHECK(verify_action_formula(SpectralLabel(0, 1, 1, {d}), p));
        }
    // spot checks with genuine raising terms
    CHECK(verify_action_formula(SpectralLabel(2, 0, 0, {2, 0}), ModelParams(2, 1)));
    CHECK(verify_action_formula(SpectralLabel(1, 1, 0, {2, 1}), ModelParams(3, 2)));
    // arbitrary integer vectors, including non-admissible ones
    for (const auto& p : kModels) {
        CHECK(verify_action_formula(SpectralLabel(1, 1, 2, {0, 3}), p));
        CHECK(verify_action_formula(SpectralLabel(2, 0, 0, {1, 2}), p));
        CHECK(verify_action_formula(SpectralLabel(1, 1, -1, {-1, 1}), p));
        CHECK(verify_action_formula(SpectralLabel(0, 2, 0, {2, 2}), p));
    }
    // sweep over admissible labels of small size
    for (const auto& p : kModels)
        for (const auto& l : enumerate_admissible(p, 9 + 8 * p.r * p.s)) {
            if (l.N + l.M > 2 || l.degree() > 4) continue;
            CHECK(verify_action_formula(l, p));
        }
}

TEST_CASE("two-particle eigenvalue differences match the closed form") {
    // single mixed pair: b = mu^2 + 2 mu (n1 - 1) + g mu (2 n2 - mu) + mu (1 + g)
    for (const auto& p : kModels) {
        const Rat g(p.r, p.s);
        for (long n1 : {1L, 2L, 4L})
            for (long n2 : {0L, 1L, 3L})
                for (long Q : {-1L, 0L, 1L})
                    for (long mu = 1; mu <= n2; ++mu) {
                        const SpectralLabel n(1, 1, Q, {n1, n2});
                        const SpectralLabel m(1, 1, Q, {n1 + mu, n2 - mu});
                        const Rat b = eigenvalue_rat(3, m, p) - eigenvalue_rat(3, n, p);
                        CHECK(b == Rat(mu * mu) + Rat(2 * mu * (n1 - 1)) +
                                       g * Rat(mu) * Rat(2 * n2 - mu) + Rat(mu) * (1 + g));
                        if (n1 >= 1 && n2 >= 0) CHECK(b > 0);
                    }
    }
}

TEST_CASE("orthogonalization recursion: frozen zero-state example") {
    // symbolic coefficients
    const auto u = orthogonalize_symbolic_u(IntegerVector(2, 0, {1, 2}));
    REQUIRE(u.size() == 3);
    CHECK(u.at(IntegerVector(2, 0, {1, 2})) == RatFuncG(Rat(1)));
    CHECK(u.at(IntegerVector(2, 0, {2, 1})) == G() - RatFuncG(Rat(1)));
    CHECK(u.at(IntegerVector(2, 0, {3, 0})) == (G() * G() - G()).scaled(Rat(1, 2)));
    // specialized: the assembled state vanishes identically
    for (const auto& p : kModels) {
        const Rat g(p.r, p.s);
        const OrthoResult res = orthogonalize(SpectralLabel(2, 0, 0, {1, 2}), p);
        CHECK(res.zero_state);
        CHECK(res.state.empty());
        CHECK(res.coefficients.at(IntegerVector(2, 0, {2, 1})) == p.from_rat(g - 1));
        CHECK(res.coefficients.at(IntegerVector(2, 0, {3, 0})) == p.from_rat(g * (g - 1) / 2));
    }
    // at g = 2 the coefficients collapse to {1, 1, 1}
    const OrthoResult res21 = orthogonalize(SpectralLabel(2, 0, 0, {1, 2}), ModelParams(2, 1));
    for (const auto& [m, c] : res21.coefficients) CHECK(c == QuadScalar(Rat(1)));
}

TEST_CASE("orthogonalization: degenerate difference is detected, not skipped") {
    // at g = 2 the candidate (1,2) of (0,3) has the same pseudo-momenta up to
    // permutation, so the eigenvalue difference b = 2(1 + 0 - 3 + g) vanishes
    const ModelParams p(2, 1);
    try {
        orthogonalize(SpectralLabel(2, 0, 0, {0, 3}), p);
        FAIL("expected Degenerate");
    } catch (const Degenerate& e) {
        CHECK(e.m == IntegerVector(2, 0, {1, 2}));
    }
    // the symbolic recursion sails through with a pole at g = 2 instead
    const auto u = orthogonalize_symbolic_u(IntegerVector(2, 0, {0, 3}));
    CHECK(u.size() == 4);
    // no degeneracy at a coupling away from the pole
    CHECK_NOTHROW(orthogonalize(SpectralLabel(2, 0, 0, {0, 3}), ModelParams(3, 2)));
}

TEST_CASE("orthogonalized states are joint eigenstates, pairwise orthogonal") {
    for (const ModelParams& p : {ModelParams(2, 1), ModelParams(1, 2)}) {
        std::map<std::pair<long, long>, std::vector<OrthoResult>> sectors;
        for (const auto& l : enumerate_admissible(p, 9 + 8 * p.r * p.s)) {
            if (l.N + l.M > 2 || l.degree() > 4) continue;
            OrthoResult res = orthogonalize(l, p);  // verifies eigen-relations internally
            if (!res.zero_state)
                sectors[{l.final_charge(p), l.degree()}].push_back(std::move(res));
        }
        for (const auto& [sec, states] : sectors)
            for (std::size_t i = 0; i < states.size(); ++i)
                for (std::size_t j = i + 1; j < states.size(); ++j) {
                    const bool same = states[i].eigenvalues == states[j].eigenvalues;
                    if (!same)
                        CHECK(inner(states[i].state, states[j].state).is_zero());
                }
    }
}

TEST_CASE("reconstruction lands on super Jack polynomials") {
    for (const auto& p : kModels) {
        // pure charge state reconstructs to the constant 1
        const auto c0 = reconstruct_polynomial(fock_basis(5, {}), p);
        REQUIRE(c0.size() == 1);
        CHECK(c0.at(Partition{}) == QuadScalar(Rat(1)));

        // single-species single-particle states: one-row Jack
        for (long d = 1; d <= 4; ++d) {
            const OrthoResult res = orthogonalize(SpectralLabel(1, 0, 0, {d}), p);
            REQUIRE_FALSE(res.zero_state);
            CHECK(proportional_to_super_jack(reconstruct_polynomial(res.state, p),
                                             Partition{d}, 1, 0, p));
        }
        // mixed species: the fat-hook bijection names the right label
        for (const std::vector<long>& n : {std::vector<long>{2, 1}, {3, 1}, {2, 2}}) {
            const SpectralLabel l(1, 1, 0, n);
            const Partition lam = n_to_lambda(l.vec());
            const OrthoResult res = orthogonalize(l, p);
            if (res.zero_state) continue;
            CHECK(proportional_to_super_jack(reconstruct_polynomial(res.state, p), lam, 1, 1, p));
        }
        // wrong label (same hook, different degree) is rejected
        const OrthoResult res = orthogonalize(SpectralLabel(1, 0, 0, {2}), p);
        CHECK_FALSE(proportional_to_super_jack(reconstruct_polynomial(res.state, p),
                                               Partition{1}, 1, 0, p));
    }
    // mixed charge or degree is malformed input
    FockVector bad = fock_basis(0, {1});
    fock_add_scaled(bad, fock_basis(0, {2}), QuadScalar(Rat(1)));
    CHECK_THROWS_AS(reconstruct_polynomial(bad, ModelParams(2, 1)), std::invalid_argument);
}

TEST_CASE("generalized commutators") {
    for (const ModelParams& p : {ModelParams(1, 1), ModelParams(2, 1)}) {
        const GenCommReport rep = verify_gen_commutators(p, 3, 4, 2);
        CHECK(rep.pass());
        CHECK(rep.cases > 0);
    }
    // a couple of degree-4 spot checks at the mode-window edge
    const ModelParams p(2, 1);
    for (const auto& lam : partitions_of(4)) {
        CHECK(gen_commutator_lhs(p.r, 4, -3, fock_basis(1, lam), p).empty());
        CHECK(gen_commutator_lhs(-p.s, -2, 3, fock_basis(-1, lam), p).empty());
        CHECK(gen_commutator_mixed(3, -4, fock_basis(0, lam), p));
    }
}

TEST_CASE("trailing zero modes reduce to charge shifts") {
    for (const auto& p : kModels) {
        for (long Q : {-1L, 0L, 2L}) {
            CHECK(build_eta(SpectralLabel(0, 1, Q, {0}), p) == fock_basis(Q - p.s, {}));
            CHECK(charge_reduction_check(SpectralLabel(0, 1, Q, {0}), p));
            CHECK(charge_reduction_check(SpectralLabel(1, 2, Q, {2, 0, 0}), p));
            CHECK(build_eta(SpectralLabel(1, 2, Q, {2, 0, 0}), p) ==
                  build_eta(SpectralLabel(1, 0, Q - 2 * p.s, {2}), p));
            // no trailing zeros: reduction is the identity
            CHECK(charge_reduction_check(SpectralLabel(1, 1, Q, {2, 1}), p));
        }
    }
}

TEST_CASE("sector audits") {
    // trivial sector
    for (const auto& p : kModels) {
        const SectorAuditReport r0 = sector_audit(0, 0, p);
        CHECK(r0.pass());
        CHECK(r0.dim == 1);
    }
    // free-fermion point
    for (long d = 0; d <= 4; ++d) {
        const SectorAuditReport r = sector_audit(0, d, ModelParams(1, 1));
        INFO("(1,1) d=" << d << (r.findings.empty() ? "" : (": " + r.findings[0])));
        CHECK(r.pass());
    }
    // generic model
    for (long q1 : {0L, 1L, 2L})
        for (long d = 0; d <= 4; ++d) {
            const SectorAuditReport r = sector_audit(q1, d, ModelParams(2, 1));
            INFO("(2,1) Q1=" << q1 << " d=" << d
                             << (r.findings.empty() ? "" : (": " + r.findings[0])));
            CHECK(r.pass());
            CHECK(r.label_count == count_partitions(d));
        }
    CHECK_THROWS_AS(sector_audit(0, kSectorDegreeCap + 1, ModelParams(2, 1)),
                    std::invalid_argument);
}
