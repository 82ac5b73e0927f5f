#pragma once

#include <json.hpp>

#include "constructions.hpp"
#include "engine.hpp"
#include "spectrum.hpp"
#include "verifier.hpp"

namespace sumset {

/// Integers that fit 64 bits are JSON numbers; larger ones are decimal strings.
inline nlohmann::json to_json_value(Int v) {
    if (fits_int64(v)) return static_cast<std::int64_t>(v);
    return to_string(v);
}

inline nlohmann::json to_json_value(const Point& p) {
    auto arr = nlohmann::json::array();
    for (Int c : p.coords()) arr.push_back(to_json_value(c));
    return arr;
}

template <GroupElement T>
nlohmann::json to_json_value(std::span<const T> elements) {
    auto arr = nlohmann::json::array();
    for (const T& e : elements) arr.push_back(to_json_value(e));
    return arr;
}

template <GroupElement T>
nlohmann::json to_json_value(const std::vector<T>& elements) {
    return to_json_value(std::span<const T>(elements));
}

template <GroupElement T>
nlohmann::json to_json_value(const FiniteSet<T>& set) {
    return to_json_value(set.elements());
}

/// {h, k, base, size, elements, trivial, nontrivial}
template <GroupElement T>
nlohmann::json to_json(const SumsetResult<T>& r) {
    return {{"h", r.h},
            {"k", r.k()},
            {"base", to_json_value(r.base)},
            {"size", r.size()},
            {"elements", to_json_value(r.elements)},
            {"trivial", to_json_value(r.trivial)},
            {"nontrivial", to_json_value(r.nontrivial)}};
}

inline nlohmann::json to_json(const GapVerdict& v) {
    return {{"status", to_string(v.status)},
            {"interval", {v.interval_low, v.interval_high}},
            {"offending", v.offending}};
}

inline nlohmann::json to_json(const DichotomyVerdict& v) {
    nlohmann::json j{{"status", to_string(v.status)}, {"detail", v.detail}};
    j["counterexample"] = v.counterexample ? to_json_value(*v.counterexample) : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json to_json(const SpectrumReport& r) {
    auto witnesses = nlohmann::json::array();
    for (const auto& [size, set] : r.witnesses)
        witnesses.push_back({{"size", size}, {"witness", to_json_value(set)}, {"is_ap", is_arithmetic_progression(set)}});
    return {{"h", r.h},
            {"k", r.k},
            {"bound", to_json_value(r.bound)},
            {"achieved", r.achieved()},
            {"witnesses", witnesses},
            {"sets_scanned", r.sets_scanned},
            {"duration_seconds", r.duration.count()},
            {"gap_check", to_json(gap_check(r))},
            {"dichotomy", to_json(min_dichotomy_check(r))},
            {"note", "achieved sizes are a lower bound on R(h,k); sizes absent here are only excluded where the "
                     "gap theorem applies"}};
}

inline nlohmann::json to_json(const Prediction& p) {
    nlohmann::json j = nlohmann::json::object();
    auto opt = [&](const char* key, const std::optional<std::size_t>& v) {
        j[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    opt("exact_size", p.exact_size);
    opt("min_size", p.min_size);
    opt("min_nontrivial", p.min_nontrivial);
    opt("exact_nontrivial", p.exact_nontrivial);
    j["exact_elements"] = p.exact_elements ? to_json_value(*p.exact_elements) : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json to_json(const Witness& w) {
    auto params = nlohmann::json::array();
    for (Int v : w.spec.params) params.push_back(to_json_value(v));
    return {{"kind", to_string(w.spec.kind)},
            {"h", w.spec.h},
            {"k", w.spec.k},
            {"params", params},
            {"set", to_json_value(w.set)},
            {"predicted", to_json(w.predicted)}};
}

inline nlohmann::json to_json(const WitnessCheck& c) {
    return {{"pass", c.pass},
            {"size", c.size},
            {"nontrivial", c.nontrivial ? nlohmann::json(*c.nontrivial) : nlohmann::json(nullptr)},
            {"failures", c.failures}};
}

inline nlohmann::json to_json(const CheckOutcome& o) {
    auto failures = nlohmann::json::array();
    for (const auto& f : o.failures) failures.push_back({{"input", f.input}, {"detail", f.detail}});
    return {{"check", o.name},
            {"grid", o.grid},
            {"cases", o.cases},
            {"pass", o.pass()},
            {"failures", failures},
            {"elapsed_seconds", o.elapsed_seconds},
            {"replay", o.replay}};
}

} // namespace sumset
