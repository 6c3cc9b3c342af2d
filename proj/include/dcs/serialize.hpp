// JSON renderings of the library's value types, used by the command-line
// front end.  Rationals are rendered as canonical "p/q" strings so output
// is exact and diff-able; quadratic scalars carry their two rational
// components plus a human-readable text form.
//
// Requires the single-header nlohmann JSON library on the include path.

#pragma once

#include "dcs/fock.hpp"
#include "dcs/labels.hpp"
#include "dcs/spectra.hpp"
#include "dcs/symfunc.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace dcs {

using Json = nlohmann::json;

inline Json json_rat(const Rat& x) { return rat_to_string(x); }

inline Json json_quad(const QuadScalar& c) {
    return Json{{"a", rat_to_string(c.a())},
                {"b", rat_to_string(c.b())},
                {"disc", c.disc()},
                {"text", c.to_string()}};
}

inline Json json_longs(const std::vector<long>& v) {
    Json a = Json::array();
    for (long x : v) a.push_back(x);
    return a;
}

inline Json json_partition(const Partition& lam) { return json_longs(lam); }

inline Json json_symfunc(const SymFuncG& f) {
    Json a = Json::array();
    for (const auto& [mu, c] : f)
        a.push_back(Json{{"mu", json_partition(mu)}, {"coeff", c.to_string()}});
    return a;
}

inline Json json_symfunc_q(const SymFuncQ& f) {
    Json a = Json::array();
    for (const auto& [mu, c] : f)
        a.push_back(Json{{"mu", json_partition(mu)}, {"coeff", rat_to_string(c)}});
    return a;
}

inline Json json_label(const SpectralLabel& l) {
    return Json{{"N", l.N}, {"M", l.M}, {"Q", l.Q}, {"n", json_longs(l.n)}};
}

inline Json json_fock(const FockVector& v) {
    Json a = Json::array();
    for (const auto& [key, c] : v)
        a.push_back(
            Json{{"Q", key.first}, {"lambda", json_partition(key.second)}, {"coeff", json_quad(c)}});
    return a;
}

inline Json json_ortho(const OrthoResult& res) {
    Json u = Json::array();
    for (const auto& [m, c] : res.coefficients)
        u.push_back(Json{{"m", json_longs(m.n)}, {"coeff", json_quad(c)}});
    return Json{{"label", json_label(res.label)},
                {"zero_state", res.zero_state},
                {"u", u},
                {"eigenvalues",
                 Json{{"E1", json_quad(res.eigenvalues[0])},
                      {"E2", json_quad(res.eigenvalues[1])},
                      {"E3", json_quad(res.eigenvalues[2])}}},
                {"state", json_fock(res.state)}};
}

}  // namespace dcs
