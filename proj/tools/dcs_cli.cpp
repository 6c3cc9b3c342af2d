// Command-line front end.
//
// Subcommands: jack, superjack, bijection, eta, orthogonalize, audit-sector,
// character, verify.  Structured results are emitted as JSON; the character
// series table is emitted as CSV.  Exit codes: 0 success, 1 verification
// finding (an identity or audit that did not hold), 2 usage error,
// 3 internal error.  Output is deterministic for a fixed seed and thread
// count; the thread count comes from --threads, then the DCS_THREADS
// environment variable, then hardware concurrency.

#include "dcs/acceptance.hpp"
#include "dcs/serialize.hpp"
#include "dcs/threads.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace dcs;

// --- small parsing helpers (throw std::invalid_argument on bad input) --------

std::vector<long> parse_longs(const std::string& s) {
    std::vector<long> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer list element '" + tok + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument("malformed integer list element '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

Partition parse_partition(const std::string& s) {
    const std::vector<long> v = parse_longs(s);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 1) throw std::invalid_argument("partition parts must be >= 1");
        if (i > 0 && v[i] > v[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    return Partition(v.begin(), v.end());
}

ModelParams parse_rs(const std::string& s) {
    const std::vector<long> v = parse_longs(s);
    if (v.size() != 2) throw std::invalid_argument("--rs expects two integers r,s");
    return ModelParams(v[0], v[1]);
}

// Writes to the given path, or stdout when the path is empty.
int emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(path);
    if (!f) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return 2;
    }
    f << text;
    return 0;
}

std::string csv_rat(const Rat& x) {
    if (rat_den(x) == 1) return rat_num(x).str();
    return rat_to_string(x);
}

// --- per-subcommand option bags ------------------------------------------------

struct CommonOut {
    std::string output;  // empty = stdout
};

struct JackOpts : CommonOut {
    std::string lambda;
    std::string g;  // optional "p/q"
};

struct SuperJackOpts : CommonOut {
    std::string lambda;
    long N = 0, M = 0;
    std::string g;
    std::string z, w;  // optional exact evaluation points (rational lists)
};

struct BijectionOpts : CommonOut {
    std::string lambda;  // exactly one of lambda / n
    std::string n;
    long N = 0, M = 0;
};

struct EtaOpts : CommonOut {
    std::string rs;
    long N = 0, M = 0, Q = 0;
    std::string n;
};

struct OrthoOpts : CommonOut {
    std::string rs;
    long N = 0, M = 0, Q = 0;
    std::string n;
    bool symbolic = false;
};

struct AuditOpts : CommonOut {
    std::string rs;
    long Q1 = 0;
    long degree = 0;
};

struct CharacterOpts : CommonOut {
    std::string rs;
    long order = 24;
};

struct VerifyOpts : CommonOut {
    std::string suite = "all";
    long threads = 0;
    std::uint64_t seed = acceptance::kDefaultSeed;
};

// --- handlers -------------------------------------------------------------------

int run_jack(const JackOpts& o) {
    const Partition lam = parse_partition(o.lambda);
    if (weight(lam) > kJackDegreeCap)
        throw std::invalid_argument("--lambda exceeds the supported degree cap " +
                                    std::to_string(kJackDegreeCap));
    const SymFuncG& f = jack_p(lam);
    Json out{{"lambda", json_partition(lam)},
             {"basis", "p"},
             {"coefficients", json_symfunc(f)},
             {"norm", jack_norm(lam).to_string()}};
    if (!o.g.empty()) {
        const Rat g = rat_from_string(o.g);
        out["specialized"] = Json{{"g", rat_to_string(g)},
                                  {"coefficients", json_symfunc_q(specialize_coeffs(f, g))}};
    }
    return emit(o.output, out.dump(2) + "\n");
}

int run_superjack(const SuperJackOpts& o) {
    const Partition lam = parse_partition(o.lambda);
    if (weight(lam) > kJackDegreeCap)
        throw std::invalid_argument("--lambda exceeds the supported degree cap " +
                                    std::to_string(kJackDegreeCap));
    const SuperJackP sj = super_jack_p(lam, o.N, o.M);
    Json out{{"lambda", json_partition(lam)},
             {"N", o.N},
             {"M", o.M},
             {"basis", "p (deformed alphabet)"},
             {"coefficients", json_symfunc(sj.coeffs)}};
    if (!o.z.empty() || !o.w.empty() || !o.g.empty()) {
        if (o.g.empty())
            throw std::invalid_argument("evaluation requires --g together with --z/--w");
        const Rat g = rat_from_string(o.g);
        std::vector<Rat> z, w;
        {
            std::stringstream ss(o.z);
            std::string tok;
            while (std::getline(ss, tok, ',')) z.push_back(rat_from_string(tok));
        }
        {
            std::stringstream ss(o.w);
            std::string tok;
            while (std::getline(ss, tok, ',')) w.push_back(rat_from_string(tok));
        }
        const Rat value = eval_super_jack_rat(sj, z, w, g);
        out["evaluation"] =
            Json{{"g", rat_to_string(g)}, {"value", rat_to_string(value)}};
    }
    return emit(o.output, out.dump(2) + "\n");
}

int run_bijection(const BijectionOpts& o) {
    const bool have_lambda = !o.lambda.empty(), have_n = !o.n.empty();
    if (have_lambda == have_n)
        throw std::invalid_argument("provide exactly one of --lambda or --n");
    Json out{{"N", o.N}, {"M", o.M}};
    if (have_lambda) {
        const Partition lam = parse_partition(o.lambda);
        const IntegerVector v = lambda_to_n(lam, o.N, o.M);
        out["lambda"] = json_partition(lam);
        out["n"] = json_longs(v.n);
        out["roundtrip"] = n_to_lambda(v) == lam;
    } else {
        const IntegerVector v(o.N, o.M, parse_longs(o.n));
        const Partition lam = n_to_lambda(v);
        out["n"] = json_longs(v.n);
        out["lambda"] = json_partition(lam);
        out["roundtrip"] = lambda_to_n(lam, o.N, o.M) == v;
    }
    return emit(o.output, out.dump(2) + "\n");
}

int run_eta(const EtaOpts& o) {
    const ModelParams p = parse_rs(o.rs);
    const SpectralLabel l(o.N, o.M, o.Q, parse_longs(o.n));
    const FockVector v = build_eta(l, p);
    const Json out{{"rs", Json{{"r", p.r}, {"s", p.s}}},
                   {"label", json_label(l)},
                   {"admissible", admissible(l, p)},
                   {"final_charge", l.final_charge(p)},
                   {"unit_exponent", unit_exponent(l, p)},
                   {"term_count", v.size()},
                   {"terms", json_fock(v)}};
    return emit(o.output, out.dump(2) + "\n");
}

int run_orthogonalize(const OrthoOpts& o) {
    const ModelParams p = parse_rs(o.rs);
    const SpectralLabel l(o.N, o.M, o.Q, parse_longs(o.n));
    Json out{{"rs", Json{{"r", p.r}, {"s", p.s}}}, {"label", json_label(l)},
             {"admissible", admissible(l, p)}};
    if (o.symbolic) {
        Json u = Json::array();
        for (const auto& [m, c] : orthogonalize_symbolic_u(l.vec()))
            u.push_back(Json{{"m", json_longs(m.n)}, {"coeff", c.to_string()}});
        out["u_symbolic"] = u;
    }
    try {
        const OrthoResult res = orthogonalize(l, p);
        const Json ortho = json_ortho(res);
        for (auto it = ortho.begin(); it != ortho.end(); ++it) out[it.key()] = it.value();
        out["status"] = res.zero_state ? "zero_state" : "eigenstate";
    } catch (const Degenerate& d) {
        out["status"] = "degenerate";
        out["witness_m"] = json_longs(d.m.n);
    }
    return emit(o.output, out.dump(2) + "\n");
}

int run_audit_sector(const AuditOpts& o) {
    const ModelParams p = parse_rs(o.rs);
    const SectorAuditReport rep = sector_audit(o.Q1, o.degree, p);
    Json findings = Json::array();
    for (const auto& f : rep.findings) findings.push_back(f);
    const Json out{{"rs", Json{{"r", p.r}, {"s", p.s}}},
                   {"Q1", rep.Q1},
                   {"degree", rep.d},
                   {"dimension", rep.dim},
                   {"label_count", rep.label_count},
                   {"findings", findings},
                   {"pass", rep.pass()}};
    const int rc = emit(o.output, out.dump(2) + "\n");
    if (rc != 0) return rc;
    return rep.pass() ? 0 : 1;
}

int run_character(const CharacterOpts& o) {
    const ModelParams p = parse_rs(o.rs);
    if (o.order < 0) throw std::invalid_argument("--order must be nonnegative");
    const long cap = o.order * 2 * p.r * p.s;
    const QSeries lhs = lhs_series(p, cap);
    const QSeries rhs = rhs_series(p, cap);
    std::ostringstream csv;
    csv << "unit_exponent,lhs_coeff,rhs_coeff,equal\n";
    bool all_equal = true;
    for (long k = 0; k <= cap; ++k) {
        const bool eq = lhs.at(k) == rhs.at(k);
        all_equal = all_equal && eq;
        csv << k << "," << csv_rat(lhs.at(k)) << "," << csv_rat(rhs.at(k)) << ","
            << (eq ? "true" : "false") << "\n";
    }
    const int rc = emit(o.output, csv.str());
    if (rc != 0) return rc;
    return all_equal ? 0 : 1;
}

Json json_numeric_rows(const acceptance::NumericReport& rep) {
    Json rows = Json::array();
    for (const auto& row : rep.rows) {
        Json j{{"N", row.N},
               {"M", row.M},
               {"lambda", json_partition(row.lambda)},
               {"g", rat_to_string(row.g)},
               {"residual_h_canonical", row.h_canonical},
               {"residual_h_zero", row.h_zero},
               {"residual_d", row.d_residual}};
        if (row.has_kernel)
            j["residual_kernel"] = row.kernel;
        else
            j["residual_kernel"] = nullptr;
        rows.push_back(std::move(j));
    }
    return rows;
}

Json json_correlator_rows(const acceptance::CorrelatorReport& rep) {
    Json rows = Json::array();
    for (const auto& row : rep.rows)
        rows.push_back(Json{{"r", row.r},
                            {"s", row.s},
                            {"N", row.N},
                            {"M", row.M},
                            {"residual", row.residual}});
    return rows;
}

Json json_run(const acceptance::CriterionRun& run) {
    Json notes = Json::array();
    for (const auto& n : run.notes) notes.push_back(n);
    return Json{{"criterion", run.index},
                {"name", run.name},
                {"pass", run.pass},
                {"seconds", run.seconds},
                {"notes", notes}};
}

int run_verify(const VerifyOpts& o) {
    static const std::map<std::string, int> suites{
        {"eigenstates", 1},    {"reconstruction", 2},      {"action-formula", 3},
        {"character", 4},      {"sector-completeness", 5}, {"zero-state", 6},
        {"commutators", 7},    {"operator-identities", 8}, {"eigenvalue-forms", 9},
        {"numeric", 10},       {"correlator", 11},         {"all", 0}};
    const auto it = suites.find(o.suite);
    if (it == suites.end()) {
        std::string names;
        for (const auto& [k, v] : suites) names += (names.empty() ? "" : ", ") + k;
        throw std::invalid_argument("unknown suite '" + o.suite + "' (choose from: " + names + ")");
    }
    const unsigned threads = resolve_thread_count(o.threads);

    const auto run_one = [&](int index) {
        if (index == 10) {
            acceptance::NumericReport rep;
            auto run = acceptance::run_numeric(threads, o.seed, &rep);
            Json j = json_run(run);
            j["rows"] = json_numeric_rows(rep);
            return std::pair<Json, bool>(std::move(j), run.pass);
        }
        if (index == 11) {
            acceptance::CorrelatorReport rep;
            auto run = acceptance::run_correlator(o.seed, &rep);
            Json j = json_run(run);
            j["rows"] = json_correlator_rows(rep);
            return std::pair<Json, bool>(std::move(j), run.pass);
        }
        const auto run = acceptance::run_criterion(index, threads, o.seed);
        return std::pair<Json, bool>(json_run(run), run.pass);
    };

    bool pass = true;
    Json payload;
    if (it->second == 0) {
        Json runs = Json::array();
        for (int k = 1; k <= 11; ++k) {
            auto [j, ok] = run_one(k);
            std::cerr << "criterion " << k << "/11 " << (ok ? "PASS" : "FAIL") << " "
                      << j["name"].get<std::string>() << " (" << j["seconds"].get<double>()
                      << " s)\n";
            pass = pass && ok;
            runs.push_back(std::move(j));
        }
        payload = Json{{"suite", "all"}, {"pass", pass}, {"runs", std::move(runs)}};
    } else {
        auto [j, ok] = run_one(it->second);
        std::cerr << "criterion " << it->second << "/11 " << (ok ? "PASS" : "FAIL") << " "
                  << j["name"].get<std::string>() << " (" << j["seconds"].get<double>() << " s)\n";
        pass = ok;
        payload = std::move(j);
        payload["suite"] = o.suite;
    }
    const int rc = emit(o.output, payload.dump(2) + "\n");
    if (rc != 0) return rc;
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact collective-field computations for the deformed quantum many-body model: "
                 "Jack and super Jack polynomials, charged Fock-space eigenstates, character "
                 "identities, and numeric differential checks."};
    app.require_subcommand(1);

    JackOpts jack_o;
    auto* cmd_jack = app.add_subcommand("jack", "Jack polynomial in the power-sum basis");
    cmd_jack->add_option("--lambda", jack_o.lambda, "partition, e.g. 2,1")->required();
    cmd_jack->add_option("--g", jack_o.g, "also specialize coefficients at coupling g = p/q");
    cmd_jack->add_option("-o,--output", jack_o.output, "write JSON to file instead of stdout");

    SuperJackOpts sj_o;
    auto* cmd_sj = app.add_subcommand("superjack", "super Jack polynomial for a fat-hook label");
    cmd_sj->add_option("--lambda", sj_o.lambda, "partition, e.g. 2,1")->required();
    cmd_sj->add_option("--N", sj_o.N, "first-species variable count")->required();
    cmd_sj->add_option("--M", sj_o.M, "second-species variable count")->required();
    cmd_sj->add_option("--g", sj_o.g, "coupling g = p/q (needed for evaluation)");
    cmd_sj->add_option("--z", sj_o.z, "first-species evaluation point, rational list");
    cmd_sj->add_option("--w", sj_o.w, "second-species evaluation point, rational list");
    cmd_sj->add_option("-o,--output", sj_o.output, "write JSON to file instead of stdout");

    BijectionOpts bij_o;
    auto* cmd_bij = app.add_subcommand("bijection", "fat-hook partition <-> integer vector");
    cmd_bij->add_option("--lambda", bij_o.lambda, "partition (forward direction)");
    cmd_bij->add_option("--n", bij_o.n, "integer vector (backward direction)");
    cmd_bij->add_option("--N", bij_o.N, "first-species count")->required();
    cmd_bij->add_option("--M", bij_o.M, "second-species count")->required();
    cmd_bij->add_option("-o,--output", bij_o.output, "write JSON to file instead of stdout");

    EtaOpts eta_o;
    auto* cmd_eta = app.add_subcommand("eta", "assemble an anyon state from vertex-operator modes");
    cmd_eta->add_option("--rs", eta_o.rs, "model parameters r,s (coprime positive)")->required();
    cmd_eta->add_option("--N", eta_o.N, "first-species mode count")->required();
    cmd_eta->add_option("--M", eta_o.M, "second-species mode count")->required();
    cmd_eta->add_option("--Q", eta_o.Q, "initial charge")->required();
    cmd_eta->add_option("--n", eta_o.n, "mode integers, e.g. 2,1")->required();
    cmd_eta->add_option("-o,--output", eta_o.output, "write JSON to file instead of stdout");

    OrthoOpts ortho_o;
    auto* cmd_ortho =
        app.add_subcommand("orthogonalize", "triangular eigenstate recursion for a label");
    cmd_ortho->add_option("--rs", ortho_o.rs, "model parameters r,s")->required();
    cmd_ortho->add_option("--N", ortho_o.N, "first-species mode count")->required();
    cmd_ortho->add_option("--M", ortho_o.M, "second-species mode count")->required();
    cmd_ortho->add_option("--Q", ortho_o.Q, "initial charge")->required();
    cmd_ortho->add_option("--n", ortho_o.n, "mode integers, e.g. 1,2")->required();
    cmd_ortho->add_flag("--symbolic", ortho_o.symbolic,
                        "include the recursion coefficients over the symbolic coupling");
    cmd_ortho->add_option("-o,--output", ortho_o.output, "write JSON to file instead of stdout");

    AuditOpts audit_o;
    auto* cmd_audit =
        app.add_subcommand("audit-sector", "joint-eigenspace completeness audit of one sector");
    cmd_audit->add_option("--rs", audit_o.rs, "model parameters r,s")->required();
    cmd_audit->add_option("--Q1", audit_o.Q1, "final charge of the sector")->required();
    cmd_audit->add_option("--degree", audit_o.degree, "sector degree")->required();
    cmd_audit->add_option("-o,--output", audit_o.output, "write JSON to file instead of stdout");

    CharacterOpts char_o;
    auto* cmd_char =
        app.add_subcommand("character", "graded character identity as a CSV coefficient table");
    cmd_char->add_option("--rs", char_o.rs, "model parameters r,s")->required();
    cmd_char->add_option("--order", char_o.order,
                         "number of integer q-orders to compare (default 24)");
    cmd_char->add_option("-o,--output", char_o.output, "write CSV to file instead of stdout");

    VerifyOpts verify_o;
    auto* cmd_verify = app.add_subcommand("verify", "run an acceptance suite");
    cmd_verify->add_option("--suite", verify_o.suite,
                           "eigenstates | reconstruction | action-formula | character | "
                           "sector-completeness | zero-state | commutators | operator-identities "
                           "| eigenvalue-forms | numeric | correlator | all (default)");
    cmd_verify->add_option("--threads", verify_o.threads,
                           "worker threads (0 = DCS_THREADS env or hardware)");
    cmd_verify->add_option("--seed", verify_o.seed, "random seed for sampled checks");
    cmd_verify->add_option("-o,--output", verify_o.output,
                           "write JSON to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_jack)) return run_jack(jack_o);
        if (app.got_subcommand(cmd_sj)) return run_superjack(sj_o);
        if (app.got_subcommand(cmd_bij)) return run_bijection(bij_o);
        if (app.got_subcommand(cmd_eta)) return run_eta(eta_o);
        if (app.got_subcommand(cmd_ortho)) return run_orthogonalize(ortho_o);
        if (app.got_subcommand(cmd_audit)) return run_audit_sector(audit_o);
        if (app.got_subcommand(cmd_char)) return run_character(char_o);
        if (app.got_subcommand(cmd_verify)) return run_verify(verify_o);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const PoleAtCoupling& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
