/*
   Copyright 2026 The fourcirc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FOURCIRC_REPORT_HPP
#define FOURCIRC_REPORT_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "asympt.hpp"
#include "bigint.hpp"
#include "census.hpp"
#include "crt.hpp"
#include "factorization.hpp"
#include "four_circulant.hpp"
#include "galois.hpp"
#include "polyring.hpp"

namespace fourcirc {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

/// Everything needed to reproduce a report; embedded next to every body.
struct RunManifest {
    std::string command;
    FieldPtr field;  // may be null
    std::uint64_t cap = kDefaultWorkloadCap;
    unsigned workers = 1;
    double wall_time_ms = 0.0;
};

namespace report {

/// Integers beyond 64 bits are written as decimal strings.
inline json big(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
    return v.str();
}

inline json coeffs(std::span<const FieldElem> c) {
    json out = json::array();
    for (auto x : c) out.push_back(x.value);
    return out;
}
inline json coeffs(const Poly& p) { return coeffs(p.coeffs()); }
inline json coeffs(const RingElem& r) { return coeffs(r.coeffs()); }

inline json field(const GaloisField& F) {
    return {{"q", F.q()}, {"p", F.p()}, {"k", F.k()}, {"modulus", F.modulus()}};
}

inline json manifest(const RunManifest& m) {
    json out = {{"command", m.command}, {"version", kVersion}};
    out["field"] = m.field ? field(*m.field) : json(nullptr);
    out["cap"] = m.cap;
    out["workers"] = m.workers;
    out["wall_time_ms"] = m.wall_time_ms;
    return out;
}

inline json envelope(const std::string& kind, const RunManifest& m, json body) {
    return {{"schema", "fourcirc." + kind + "/1"}, {"manifest", manifest(m)}, {"report", std::move(body)}};
}

inline json factorization(const FactorizationReport& f) {
    json sr = json::array(), pairs = json::array(), degrees = json::array();
    for (const auto& g : f.self_reciprocal) sr.push_back(coeffs(g.poly));
    for (const auto& [h, hs] : f.pairs) pairs.push_back(json::array({coeffs(h.poly), coeffs(hs.poly)}));
    for (const auto& g : f.factors()) degrees.push_back(g.poly.degree());
    return {{"q", f.field->q()},   {"n", f.n},         {"alpha", f.alpha.value},
            {"self_reciprocal", sr}, {"pairs", pairs}, {"cosets", f.cosets},
            {"degrees", degrees}};
}

inline json check(const FourCirculantCode& code) {
    return {{"self_dual", code.is_self_dual_poly()},
            {"lcd", code.is_lcd()},
            {"criterion_residue", coeffs(code.criterion_residue())},
            {"self_dual_matrix", code.is_self_dual_matrix()}};
}

inline json distance(const DistanceResult& r) {
    return {{"d", r.distance},
            {"witness_message", {{"c", coeffs(r.witness.c)}, {"d", coeffs(r.witness.d)}}},
            {"witness_weight", r.witness.weight()},
            {"witness", coeffs(r.witness.flatten())}};
}

inline json constituents(const std::vector<Constituent>& cons) {
    json out = json::array();
    for (const auto& c : cons) {
        json item = {{"factor", coeffs(c.factor)},
                     {"field", c.field->label()},
                     {"kind", to_string(c.kind)},
                     {"root", c.root.value},
                     {"a_image", c.a_image.value},
                     {"b_image", c.b_image.value}};
        item["hermitian_self_dual"] = c.kind == ConstituentKind::SelfReciprocal ? json(constituent_self_dual(c)) : json(nullptr);
        item["criterion_vanishes"] = constituent_criterion(c);
        out.push_back(std::move(item));
    }
    return out;
}

inline json census(const CensusReport& r) {
    json pairs = json::array();
    for (const auto& p : r.pairs) {
        json item = {{"a", coeffs(RingElem::from_index(r.field, r.n, p.a))}, {"b", coeffs(RingElem::from_index(r.field, r.n, p.b))}};
        item["distance"] = p.distance ? json(*p.distance) : json(nullptr);
        pairs.push_back(std::move(item));
    }
    json hist = json::object();
    for (const auto& [d, m] : r.distance_histogram) hist[std::to_string(d)] = m;
    return {{"q", r.field->q()},
            {"n", r.n},
            {"formula_applicable", r.formula_applicable},
            {"formula_count", r.formula_count ? big(*r.formula_count) : json(nullptr)},
            {"pair_count", r.pair_count},
            {"distinct_code_count", r.distinct_code_count},
            {"formula_matches", r.formula_matches()},
            {"distance_histogram", hist},
            {"pairs", pairs}};
}

inline json search(const FieldPtr& F, std::size_t n, const std::vector<SelfDualPair>& best) {
    json codes = json::array();
    for (const auto& p : best)
        codes.push_back({{"a", coeffs(RingElem::from_index(F, n, p.a))},
                         {"b", coeffs(RingElem::from_index(F, n, p.b))},
                         {"distance", *p.distance}});
    return {{"q", F->q()}, {"n", n}, {"codes", codes}};
}

inline json counts(const std::string& identity, std::uint64_t q, const CountPair& c) {
    return {{"identity", identity}, {"q", q}, {"brute_force", c.brute_force}, {"formula", c.formula}, {"agree", c.agree()}};
}

inline json artin(std::uint64_t q, std::uint64_t limit, const ArtinScan& s) {
    return {{"q", q}, {"limit", limit}, {"primes", s.primes}, {"eligible", s.eligible}, {"density", s.density}, {"q_is_square", s.q_is_square}};
}

inline json bound(const BoundReport& b) {
    json bad = json::array();
    for (const auto& v : b.bad_bound) bad.push_back(big(v));
    return {{"q", b.q},
            {"n", b.n},
            {"total_self_dual", big(b.total_self_dual)},
            {"bad_bound", bad},
            {"guaranteed_distance", b.guaranteed_distance},
            {"delta_star", b.delta_star},
            {"entropy_at_guarantee", b.entropy_at_guarantee ? json(*b.entropy_at_guarantee) : json(nullptr)},
            {"notes", b.notes}};
}

inline std::string csv_field(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ",") + csv_field(x);
        return "\"" + s + "\"";
    }
    return v.dump();
}

/// CSV rendering of a report body. Columns per schema:
///   enumerate, search: a,b,distance
///   artin: prime
///   bound: d,bad_bound
///   factor: kind,coefficients
///   crt: factor,field,kind,a_image,b_image,hermitian_self_dual
///   anything else: key,value over the top-level fields
inline std::string to_csv(const std::string& kind, const json& body) {
    std::ostringstream out;
    auto row = [&](std::initializer_list<std::string> cells) {
        bool first = true;
        for (const auto& c : cells) {
            out << (first ? "" : ",") << c;
            first = false;
        }
        out << '\n';
    };
    if (kind == "enumerate" || kind == "search") {
        row({"a", "b", "distance"});
        for (const auto& p : body.at(kind == "enumerate" ? "pairs" : "codes"))
            row({csv_field(p.at("a")), csv_field(p.at("b")), csv_field(p.at("distance"))});
    } else if (kind == "artin") {
        row({"prime"});
        for (const auto& p : body.at("primes")) row({csv_field(p)});
    } else if (kind == "bound") {
        row({"d", "bad_bound"});
        std::size_t d = 0;
        for (const auto& v : body.at("bad_bound")) row({std::to_string(d++), csv_field(v)});
    } else if (kind == "factor") {
        row({"kind", "coefficients"});
        for (const auto& g : body.at("self_reciprocal")) row({"self-reciprocal", csv_field(g)});
        for (const auto& pr : body.at("pairs")) {
            row({"pair-first", csv_field(pr.at(0))});
            row({"pair-second", csv_field(pr.at(1))});
        }
    } else if (kind == "crt") {
        row({"factor", "field", "kind", "a_image", "b_image", "hermitian_self_dual"});
        for (const auto& c : body.at("constituents"))
            row({csv_field(c.at("factor")), csv_field(c.at("field")), csv_field(c.at("kind")), csv_field(c.at("a_image")),
                 csv_field(c.at("b_image")), csv_field(c.at("hermitian_self_dual"))});
    } else {
        row({"key", "value"});
        for (const auto& [k, v] : body.items()) row({k, v.is_structured() ? "\"" + v.dump() + "\"" : csv_field(v)});
    }
    return out.str();
}

inline std::string poly_text(const json& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto v = c[i].get<std::uint64_t>();
        if (v == 0) continue;
        std::string term = i == 0 ? std::to_string(v) : (v == 1 ? "" : std::to_string(v)) + (i == 1 ? "x" : "x^" + std::to_string(i));
        s += (s.empty() ? "" : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

/// Plain-text rendering: one "key: value" line per top-level field; the
/// factorisation additionally gets a product line.
inline std::string to_text(const std::string& kind, const json& body) {
    std::ostringstream out;
    if (kind == "factor") {
        out << "x^" << body.at("n") << " - 1 =";
        for (const auto& g : body.at("self_reciprocal")) out << " (" << poly_text(g) << ")";
        for (const auto& pr : body.at("pairs")) out << " (" << poly_text(pr.at(0)) << ")(" << poly_text(pr.at(1)) << ")";
        out << '\n';
    }
    for (const auto& [k, v] : body.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return out.str();
}

}  // namespace report
}  // namespace fourcirc

#endif
