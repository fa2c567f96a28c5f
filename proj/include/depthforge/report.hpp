#pragma once

// Machine-readable reports. Every report is an ordered JSON document with a
// fixed key order; the text format is rendered from the same document so both
// carry identical values.

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "depthforge/constructions.hpp"
#include "depthforge/parse.hpp"

namespace depthforge {

inline constexpr const char* kEngineName = "depthforge";
inline constexpr const char* kEngineVersion = "0.1.0";

using Json = nlohmann::ordered_json;

/// Integers above 2^53 - 1 are emitted as decimal strings.
inline Json json_int(std::uint64_t v) {
    constexpr std::uint64_t kMaxSafe = (std::uint64_t{1} << 53) - 1;
    if (v > kMaxSafe) return std::to_string(v);
    return v;
}

inline Json json_int(std::int64_t v) {
    constexpr std::int64_t kMaxSafe = (std::int64_t{1} << 53) - 1;
    if (v > kMaxSafe || v < -kMaxSafe) return std::to_string(v);
    return v;
}

inline Json envelope(const std::string& command, const FieldSpec& field) {
    Json j;
    j["engine"] = kEngineName;
    j["version"] = kEngineVersion;
    j["command"] = command;
    j["field_characteristic"] = json_int(std::uint64_t{field.characteristic()});
    return j;
}

inline Json to_json(const std::vector<MonomialPrime>& primes, const RingContext& ctx) {
    Json arr = Json::array();
    for (const auto& p : primes) {
        Json vars = Json::array();
        for (auto v : p.vars()) vars.push_back(ctx.name(v));
        arr.push_back(vars);
    }
    return arr;
}

inline Json to_json(const std::vector<IrreducibleComponent>& comps, const RingContext& ctx) {
    Json arr = Json::array();
    for (const auto& c : comps) arr.push_back(format_generators(c.ideal(), ctx));
    return arr;
}

inline Json to_json(const BettiTable& table, const RingContext& ctx) {
    Json j;
    Json totals = Json::array();
    for (auto t : table.totals()) totals.push_back(json_int(t));
    j["totals"] = totals;
    Json entries = Json::array();
    for (const auto& [key, value] : table.entries()) {
        Json e;
        e["homological_degree"] = json_int(std::uint64_t{key.degree});
        Json md = Json::array();
        for (auto x : key.multidegree.exponents()) md.push_back(json_int(std::uint64_t{x}));
        e["multidegree"] = md;
        e["monomial"] = format_monomial(key.multidegree, ctx);
        e["rank"] = json_int(value);
        entries.push_back(e);
    }
    j["entries"] = entries;
    j["projective_dimension"] = json_int(std::uint64_t{table.projective_dimension()});
    j["depth"] = json_int(std::uint64_t{table.depth()});
    return j;
}

inline Json to_json(const HilbertSeries& h) {
    Json j;
    Json coeffs = Json::array();
    for (auto c : h.numerator().coefficients()) coeffs.push_back(json_int(c));
    j["numerator"] = coeffs;
    j["numerator_text"] = h.numerator().to_string();
    j["denominator_exponent"] = json_int(std::uint64_t{h.denominator_exponent()});
    return j;
}

inline Json ring_json(const RingContext& ctx, const MonomialIdeal& I) {
    Json j;
    j["variables"] = ctx.names();
    j["generators"] = format_generators(I, ctx);
    j["expression"] = format_ideal(I, ctx);
    return j;
}

inline Json to_json(const RingInvariants& inv, const RingContext& ctx) {
    Json j;
    j["dim"] = json_int(std::uint64_t{inv.dim});
    j["depth"] = json_int(std::uint64_t{inv.depth});
    j["projective_dimension"] = json_int(std::uint64_t{inv.pd});
    j["cmd"] = json_int(std::uint64_t{inv.cmd});
    j["cohen_macaulay"] = inv.cohen_macaulay;
    j["almost_cohen_macaulay"] = inv.almost_cohen_macaulay;
    j["ass_primes"] = to_json(inv.decomposition.ass_primes, ctx);
    j["min_primes"] = to_json(inv.decomposition.min_primes, ctx);
    Json totals = Json::array();
    for (auto t : inv.betti.totals()) totals.push_back(json_int(t));
    j["betti_totals"] = totals;
    return j;
}

inline Json to_json(const std::vector<Claim>& claims) {
    Json arr = Json::array();
    for (const auto& c : claims) {
        Json j;
        j["claim"] = c.name;
        j["expected"] = c.expected;
        j["computed"] = c.computed;
        j["verdict"] = to_string(c.verdict);
        arr.push_back(j);
    }
    return arr;
}

inline Json to_json(const RingReport& r) {
    Json j;
    j["label"] = r.ring.label;
    j["recipe"] = r.ring.recipe;
    j["ring"] = ring_json(r.ring.context, r.ring.ideal);
    Json expected;
    expected["dim"] = json_int(std::uint64_t{r.ring.expected_dim});
    expected["depth"] = json_int(std::uint64_t{r.ring.expected_depth});
    j["expected"] = expected;
    j["computed"] = to_json(r.invariants, r.ring.context);
    j["claims"] = to_json(r.claims);
    return j;
}

inline Json to_json(const MorphismReport& r) {
    Json j;
    Json params;
    params["dim_a"] = json_int(r.params.dim_a);
    params["depth_a"] = json_int(r.params.depth_a);
    params["dim_b"] = json_int(r.params.dim_b);
    params["depth_b"] = json_int(r.params.depth_b);
    j["inputs"] = params;
    Json rings = Json::array();
    rings.push_back(to_json(r.source));
    rings.push_back(to_json(r.auxiliary));
    rings.push_back(to_json(r.target));
    j["rings"] = rings;
    Json fiber;
    fiber["dim"] = json_int(std::uint64_t{r.fiber_computed.dim});
    fiber["depth"] = json_int(std::uint64_t{r.fiber_computed.depth});
    j["fiber"] = fiber;
    Json hilbert;
    hilbert["A"] = to_json(r.hilbert_source);
    hilbert["C"] = to_json(r.hilbert_auxiliary);
    hilbert["B"] = to_json(r.hilbert_target);
    j["hilbert"] = hilbert;
    j["flatness"] = r.flatness_argument;
    j["claims"] = to_json(r.claims);
    return j;
}

namespace detail {

inline void render_text(const Json& j, const std::string& indent, std::ostringstream& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        const std::string key = j.is_object() ? it.key() : "-";
        if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()))) {
            if (v.is_array() && v.front().is_array()) {
                out << indent << key << ": ";
                std::string sep;
                for (const auto& e : v) {
                    out << sep << e.dump();
                    sep = " ";
                }
                out << "\n";
                continue;
            }
            out << indent << key << ":\n";
            render_text(v, indent + "  ", out);
        } else if (v.is_string()) {
            out << indent << key << ": " << v.get<std::string>() << "\n";
        } else {
            out << indent << key << ": " << v.dump() << "\n";
        }
    }
}

}  // namespace detail

/// Indented key: value rendering of a report.
inline std::string render_text(const Json& j) {
    std::ostringstream out;
    detail::render_text(j, "", out);
    return out.str();
}

}  // namespace depthforge
