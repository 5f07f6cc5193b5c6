#ifndef RINGLAD_OUTPUT_FORMAT_HPP
#define RINGLAD_OUTPUT_FORMAT_HPP

// Rendering of C-API results as text / JSON / CSV. Kept in a header shared
// with the format round-trip test.

#include <string>
#include <vector>

#include <json.hpp>

#include "ringlad.h"

namespace rglfmt {

using nlohmann::json;

inline std::string info_or(const rgl_result* r, const char* key, const std::string& fallback = "") {
    const char* v = rgl_result_info(r, key);
    return v ? v : fallback;
}

inline std::string field_or(const rgl_result* r, long i, const char* key, const std::string& fallback = "") {
    const char* v = rgl_result_field(r, i, key);
    return v ? v : fallback;
}

// Collects the per-exponent records of one part ("coeffs"/"genus"/"crosscap")
// into a dense ascending coefficient array of decimal strings.
inline std::vector<std::string> coeff_strings(const rgl_result* r, const std::string& part) {
    std::vector<std::string> out;
    for (long i = 0; i < rgl_result_count(r); ++i) {
        if (field_or(r, i, "part") != part) continue;
        size_t exponent = std::stoul(field_or(r, i, "exponent", "0"));
        if (out.size() <= exponent) out.resize(exponent + 1, "0");
        out[exponent] = field_or(r, i, "count", "0");
    }
    return out;
}

// JSON record for a distribution result. Coefficients stay decimal strings
// end to end; nothing is ever parsed into a float.
inline json dist_json(const rgl_result* r) {
    json j;
    j["family"] = info_or(r, "family");
    j["n"] = std::stol(info_or(r, "n", "0"));
    j["method"] = info_or(r, "method");
    if (info_or(r, "family") == "total") {
        j["genus"] = coeff_strings(r, "genus");
        j["crosscap"] = coeff_strings(r, "crosscap");
    } else {
        j["coeffs"] = coeff_strings(r, "coeffs");
    }
    j["elapsed_ms"] = std::stol(info_or(r, "elapsed_ms", "0"));
    return j;
}

inline std::string dist_csv(const rgl_result* r) {
    std::string out;
    if (info_or(r, "family") == "total") {
        out += "part,exponent,count\n";
        for (const std::string& part : {std::string("genus"), std::string("crosscap")}) {
            auto coeffs = coeff_strings(r, part);
            for (size_t e = 0; e < coeffs.size(); ++e)
                out += part + "," + std::to_string(e) + "," + coeffs[e] + "\n";
        }
    } else {
        out += "rank,count\n";
        auto coeffs = coeff_strings(r, "coeffs");
        for (size_t e = 0; e < coeffs.size(); ++e) out += std::to_string(e) + "," + coeffs[e] + "\n";
    }
    return out;
}

inline json verify_json(const rgl_result* r) {
    json j;
    j["ok"] = info_or(r, "ok") == "true";
    j["checks"] = std::stol(info_or(r, "checks", "0"));
    j["failures"] = std::stol(info_or(r, "failures", "0"));
    j["elapsed_ms"] = std::stol(info_or(r, "elapsed_ms", "0"));
    if (!info_or(r, "first_failure").empty()) j["first_failure"] = info_or(r, "first_failure");
    j["results"] = json::array();
    for (long i = 0; i < rgl_result_count(r); ++i) {
        json c;
        c["check"] = field_or(r, i, "check");
        c["family"] = field_or(r, i, "family");
        c["n"] = std::stol(field_or(r, i, "n", "-1"));
        if (rgl_result_field(r, i, "m")) c["m"] = std::stol(field_or(r, i, "m"));
        c["pass"] = field_or(r, i, "pass") == "true";
        if (rgl_result_field(r, i, "expected")) c["expected"] = field_or(r, i, "expected");
        if (rgl_result_field(r, i, "got")) c["got"] = field_or(r, i, "got");
        j["results"].push_back(std::move(c));
    }
    return j;
}

inline json errata_json(const rgl_result* r) {
    json j = json::array();
    for (long i = 0; i < rgl_result_count(r); ++i) {
        json e;
        for (const char* key : {"id", "kind", "published", "corrected", "detail", "witness", "published_value",
                                "corrected_value"})
            if (rgl_result_field(r, i, key)) e[key] = field_or(r, i, key);
        e["witness_found"] = field_or(r, i, "witness_found") == "true";
        if (rgl_result_field(r, i, "witness_n")) e["witness_n"] = std::stol(field_or(r, i, "witness_n"));
        if (rgl_result_field(r, i, "witness_m")) e["witness_m"] = std::stol(field_or(r, i, "witness_m"));
        e["search_limit"] = std::stol(field_or(r, i, "search_limit", "0"));
        j.push_back(std::move(e));
    }
    return j;
}

}  // namespace rglfmt

#endif
