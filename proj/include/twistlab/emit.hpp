#pragma once

// Emission of multiplication tables, the structure-constant table, and the
// nonassociativity witness record. The structure-constant table is cached on
// disk keyed by the engine fingerprint; a stale or unreadable cache entry is
// recomputed and overwritten.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "twistlab/group_algebra.hpp"
#include "twistlab/podles.hpp"
#include "twistlab/report.hpp"
#include "twistlab/riemann.hpp"

namespace twistlab {

inline int table_components(const std::string& algebra) {
    if (algebra == "octonion") return 3;
    if (algebra == "quaternion") return 2;
    if (algebra == "complex") return 1;
    throw std::invalid_argument("unknown algebra: " + algebra);
}

inline std::string mult_table_json(const std::string& algebra) {
    TwistContext ctx(table_components(algebra));
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned a = 0; a < ctx.order(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (unsigned b = 0; b < ctx.order(); ++b)
            row.push_back((ctx.f(a, b) < 0 ? "-" : "+") + basis_name(a ^ b));
        rows.push_back(row);
    }
    nlohmann::json j;
    j["algebra"] = algebra;
    j["fingerprint"] = engine_fingerprint();
    j["table"] = rows;
    return j.dump(2) + "\n";
}

inline std::string mult_table(const std::string& algebra, const std::string& format) {
    if (format == "json") return mult_table_json(algebra);
    if (format == "text") return mult_table_text(TwistContext(table_components(algebra)));
    throw std::invalid_argument("unknown format: " + format);
}

inline nlohmann::json structure_constants_json() {
    Calculus C(3);
    StructureTable T = structure_table(C);
    nlohmann::json entries = nlohmann::json::array();
    for (unsigned i = 1; i <= C.nc(); ++i)
        for (unsigned j = 1; j <= C.nc(); ++j)
            for (unsigned k = 1; k <= C.nc(); ++k) {
                nlohmann::json e;
                e["i"] = i;
                e["j"] = j;
                e["k"] = k;
                e["value"] = poly_string(C.A, T.at(i, j, k));
                entries.push_back(e);
            }
    nlohmann::json j;
    j["fingerprint"] = engine_fingerprint();
    j["count"] = entries.size();
    j["entries"] = entries;
    return j;
}

inline std::filesystem::path cache_directory() {
    if (const char* env = std::getenv("TWISTLAB_CACHE")) return std::filesystem::path(env);
    return std::filesystem::temp_directory_path() / "twistlab-cache";
}

// Returns the serialized table, reading the cache when it validates and
// rewriting it otherwise. The emitted bytes are identical either way.
inline std::string structure_constants_document(bool* cache_hit = nullptr) {
    std::filesystem::path dir = cache_directory();
    std::filesystem::path file = dir / "structure-constants.json";
    if (cache_hit) *cache_hit = false;
    std::error_code ec;
    if (std::filesystem::exists(file, ec)) {
        try {
            std::ifstream in(file);
            std::stringstream buf;
            buf << in.rdbuf();
            std::string content = buf.str();
            nlohmann::json j = nlohmann::json::parse(content);
            if (j.at("fingerprint").get<std::string>() == engine_fingerprint() &&
                j.at("count").get<std::size_t>() == 343 &&
                j.at("entries").size() == 343) {
                if (cache_hit) *cache_hit = true;
                return content;
            }
        } catch (const std::exception&) {
        }
    }
    std::string content = structure_constants_json().dump(2) + "\n";
    std::filesystem::create_directories(dir, ec);
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    out << content;
    return content;
}

inline nlohmann::json witness_json(const PodlesAlgebra& A, const AssocWitness& w) {
    nlohmann::json triple = nlohmann::json::array();
    for (const auto& m : w.triple) triple.push_back(mono_string(A, m));
    nlohmann::json j;
    j["triple"] = triple;
    j["residual"] = poly_string(A, w.residual);
    j["parameters_involved"] = w.parameters;
    return j;
}

}  // namespace twistlab
