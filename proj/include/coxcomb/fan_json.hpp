#pragma once

#include <json.hpp> // vendored nlohmann/json
#include <string>

#include "coxcomb/fan.hpp"

namespace coxcomb {

using json = nlohmann::json;

/// Fan document: {"field_d": int, "labels": [...], "faces": [[label...]],
/// "ambient_dim": int, "rays": {label: [scalar-string...]}}. Maximal faces
/// suffice; the downward closure is computed on load.
inline Fan fan_from_json(const json& doc) {
    if (!doc.is_object()) raise(errc::parse_error, "fan document must be a JSON object");
    for (const char* key : {"field_d", "labels", "faces", "ambient_dim", "rays"})
        if (!doc.contains(key)) raise(errc::parse_error, std::string("fan document is missing '") + key + "'");

    Fan fan;
    if (!doc["field_d"].is_number_integer()) raise(errc::parse_error, "'field_d' must be an integer");
    fan.field = FieldContext(doc["field_d"].get<long>());

    if (!doc["labels"].is_array()) raise(errc::parse_error, "'labels' must be an array");
    for (const auto& l : doc["labels"]) {
        if (!l.is_string()) raise(errc::parse_error, "labels must be strings");
        fan.labels.push_back(l.get<std::string>());
    }
    std::set<std::string> unique(fan.labels.begin(), fan.labels.end());
    if (unique.size() != fan.labels.size()) raise(errc::malformed_complex, "duplicate labels");

    if (!doc["ambient_dim"].is_number_integer() || doc["ambient_dim"].get<long>() < 0)
        raise(errc::parse_error, "'ambient_dim' must be a non-negative integer");
    fan.ambient_dim = doc["ambient_dim"].get<size_t>();

    std::vector<Face> maximal;
    if (!doc["faces"].is_array()) raise(errc::parse_error, "'faces' must be an array of label arrays");
    for (const auto& jface : doc["faces"]) {
        if (!jface.is_array()) raise(errc::parse_error, "each face must be an array of labels");
        Face f;
        for (const auto& jl : jface) {
            if (!jl.is_string()) raise(errc::parse_error, "face entries must be label strings");
            int idx = fan.label_index(jl.get<std::string>());
            if (idx < 0)
                raise(errc::malformed_complex, "face references unknown label '" + jl.get<std::string>() + "'");
            f.push_back(idx);
        }
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            raise(errc::malformed_complex, "face repeats a label");
        maximal.push_back(f);
    }
    fan.faces = face_closure(maximal);

    if (!doc["rays"].is_object()) raise(errc::parse_error, "'rays' must map labels to coordinate arrays");
    fan.rays.assign(fan.size(), Vec{});
    for (size_t s = 0; s < fan.size(); ++s) {
        if (!doc["rays"].contains(fan.labels[s]))
            raise(errc::malformed_complex, "missing ray for label '" + fan.labels[s] + "'");
        const auto& jray = doc["rays"][fan.labels[s]];
        if (!jray.is_array() || jray.size() != fan.ambient_dim)
            raise(errc::dimension_mismatch, "ray '" + fan.labels[s] + "' must list ambient_dim coordinates");
        Vec r;
        for (const auto& jx : jray) {
            if (!jx.is_string()) raise(errc::parse_error, "ray coordinates must be scalar strings");
            r.push_back(Scalar::parse(jx.get<std::string>(), fan.field));
        }
        fan.rays[s] = r;
    }
    fan.provenance.push_back("loaded");
    return fan;
}

inline Fan fan_from_json_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) raise(errc::parse_error, "invalid JSON");
    return fan_from_json(doc);
}

/// Canonical emission: maximal faces only, sorted; scalar strings canonical.
/// load(emit(fan)) reproduces the fan exactly.
inline json fan_to_json(const Fan& fan) {
    json doc;
    doc["field_d"] = fan.field.d;
    doc["labels"] = json::array();
    for (const auto& l : fan.labels) doc["labels"].push_back(l);
    doc["ambient_dim"] = fan.ambient_dim;
    doc["faces"] = json::array();
    for (const Face& f : fan.maximal_faces()) {
        json jf = json::array();
        for (int s : f) jf.push_back(fan.labels[s]);
        doc["faces"].push_back(jf);
    }
    doc["rays"] = json::object();
    for (size_t s = 0; s < fan.size(); ++s) {
        json jr = json::array();
        for (const Scalar& x : fan.rays[s]) jr.push_back(x.to_string());
        doc["rays"][fan.labels[s]] = jr;
    }
    return doc;
}

} // namespace coxcomb
