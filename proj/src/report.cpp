#include "json.hpp"
#include "treeuniv/harness.hpp"

namespace treeuniv {

std::string to_string(EmbedMethod m) {
    switch (m) {
        case EmbedMethod::constructive: return "constructive";
        case EmbedMethod::bruteforce: return "bruteforce";
        case EmbedMethod::hybrid: return "hybrid";
    }
    return "?";
}

EmbedMethod method_from_string(const std::string& s) {
    if (s == "constructive") return EmbedMethod::constructive;
    if (s == "bruteforce") return EmbedMethod::bruteforce;
    if (s == "hybrid") return EmbedMethod::hybrid;
    throw std::invalid_argument("unknown method '" + s + "'");
}

std::string ExperimentReport::to_json(bool include_timing) const {
    nlohmann::json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["params"] = params;
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r;
        r["instance"] = row.instance;
        if (row.chi) r["chi"] = *row.chi;
        r["tree"] = row.tree;
        r["method"] = row.method;
        r["success"] = row.success;
        if (!row.witness_hash.empty()) r["witness"] = row.witness_hash;
        if (include_timing) r["wall_ms"] = row.wall_ms;
        if (row.conjecture_relevant) r["conjecture_relevant"] = true;
        if (!row.detail.empty()) r["detail"] = row.detail;
        rows_json.push_back(std::move(r));
    }
    j["rows"] = std::move(rows_json);
    j["aggregate"] = {{"total", total},
                      {"successes", successes},
                      {"failures", failures},
                      {"violations", violations},
                      {"skipped_chi_cap", skipped_chi_cap}};
    return j.dump(2) + "\n";
}

}  // namespace treeuniv
