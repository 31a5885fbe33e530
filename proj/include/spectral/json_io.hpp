#pragma once

// JSON encoding of instances, decisions, graphs, truncations and validation
// reports. Big integers always travel as decimal strings.

#include "spectral/attractor.hpp"
#include "spectral/bigint.hpp"
#include "spectral/eigen.hpp"
#include "spectral/instance.hpp"
#include "spectral/spectra.hpp"
#include "spectral/validate.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace spectral {

using Json = nlohmann::ordered_json;

inline Json big_array(const std::vector<BigInt>& values) {
    Json out = Json::array();
    for (const BigInt& v : values) out.push_back(to_decimal(v));
    return out;
}

/// Integer field given either as a JSON number or as a decimal string.
inline BigInt big_from_json(const Json& value) {
    if (value.is_string()) return parse_integer(value.get<std::string>());
    if (value.is_number_integer()) return BigInt(value.get<long long>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

inline Rational rational_from_json(const Json& value) {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    return Rational(big_from_json(value));
}

inline Json instance_to_json(const ProblemInstance& inst) {
    Json out;
    out["N"] = to_decimal(inst.N());
    out["R"] = to_decimal(inst.R());
    out["q"] = inst.q();
    out["p"] = inst.p();
    return out;
}

/// Full derived view: descriptor plus M, c, D, B, L.
inline Json instance_details_to_json(const ProblemInstance& inst) {
    Json out = instance_to_json(inst);
    out["M"] = to_decimal(inst.M());
    out["c"] = to_decimal(inst.c());
    out["D"] = big_array(inst.D());
    out["B"] = big_array(inst.B());
    out["L"] = big_array(inst.L());
    return out;
}

inline ProblemInstance instance_from_json(const Json& j, InstanceLimits limits = {}) {
    for (const char* key : {"N", "R", "q"}) {
        if (!j.contains(key)) throw std::invalid_argument(std::string("instance descriptor is missing \"") + key + "\"");
    }
    std::vector<long long> p;
    if (j.contains("p")) {
        for (const Json& pj : j.at("p")) p.push_back(big_from_json(pj).convert_to<long long>());
    }
    return build_instance(big_from_json(j.at("N")), big_from_json(j.at("R")),
                          big_from_json(j.at("q")).convert_to<long long>(), p, limits);
}

inline Json cycle_to_json(const CycleWitness& w) {
    Json out;
    out["nodes"] = big_array(w.nodes);
    out["digits"] = big_array(w.digits);
    return out;
}

inline Json decision_to_json(const EigenDecision& d) {
    Json out;
    out["t"] = to_decimal(d.t);
    if (d.omega) out["omega"] = d.omega->pattern();
    out["verdict"] = to_string(d.verdict);
    out["reason"] = to_string(d.reason);
    out["integer_points"] = d.integer_point_count ? Json(*d.integer_point_count) : Json(nullptr);
    if (d.cycle) out["cycle"] = cycle_to_json(*d.cycle);
    if (d.missing_frequency) out["missing_frequency"] = to_decimal(*d.missing_frequency);
    return out;
}

inline Json graph_to_json(const AttractorSystem& sys) {
    Json out;
    out["base"] = to_decimal(sys.base);
    out["digits"] = big_array(sys.digits);
    out["nodes"] = big_array(sys.nodes);
    Json edges = Json::array();
    for (const AttractorEdge& e : sys.edges) {
        Json edge;
        edge["from"] = to_decimal(sys.nodes[e.from]);
        edge["digit"] = to_decimal(e.digit);
        edge["to"] = to_decimal(sys.nodes[e.to]);
        edges.push_back(std::move(edge));
    }
    out["edges"] = std::move(edges);
    return out;
}

inline Json truncation_to_json(const SpectrumTruncation& trunc) {
    Json out;
    out["t"] = to_decimal(trunc.t);
    if (trunc.omega) out["omega"] = trunc.omega->pattern();
    out["level"] = trunc.level;
    out["elements"] = big_array(trunc.elements);
    return out;
}

inline Json report_to_json(const ValidationReport& r) {
    Json out;
    out["orthogonal"] = r.orthogonal;
    if (r.failing_pair) out["failing_pair"] = Json::array({to_decimal(r.failing_pair->first), to_decimal(r.failing_pair->second)});
    out["monotone"] = r.monotone;
    out["bessel"] = r.bessel;
    Json samples = Json::array();
    for (const QSample& s : r.q_samples) {
        Json row;
        row["xi"] = s.xi;
        row["level"] = s.level;
        row["q"] = s.value;
        samples.push_back(std::move(row));
    }
    out["q_samples"] = std::move(samples);
    if (r.missing_frequency_check) {
        Json check;
        check["frequency"] = to_decimal(r.missing_frequency_check->frequency);
        check["confirmed"] = r.missing_frequency_check->confirmed;
        out["missing_frequency_check"] = std::move(check);
    }
    return out;
}

}  // namespace spectral
