#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treeuniv/bounds.hpp"
#include "treeuniv/embed.hpp"

namespace treeuniv {

enum class FamilyKind {
    random_gnp_digraph,
    random_tournament,
    regular_tournament,
    circulant_tournament,
    layered_dag,
    transitive_tournament,
};

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& s);

/// Instance generator description; generation is a pure function of the
/// fields, so equal descriptions give byte-identical digraphs.
struct InstanceFamily {
    FamilyKind kind = FamilyKind::random_gnp_digraph;
    int n = 0;
    double p = 0.5;            // arc probability where applicable
    uint64_t seed = 0;
    std::vector<int> offsets;  // circulant tournaments

    std::string describe() const;
};

Digraph generate(const InstanceFamily& family);

struct ReportRow {
    std::string instance;
    std::optional<int> chi;
    std::string tree;
    std::string method;
    bool success = false;
    std::string witness_hash;
    double wall_ms = 0;
    bool conjecture_relevant = false;
    std::string detail;
};

struct ExperimentReport {
    std::string suite;
    std::string params;
    std::vector<ReportRow> rows;
    long long total = 0;
    long long successes = 0;
    long long failures = 0;
    long long violations = 0;
    long long skipped_chi_cap = 0;

    bool all_passed() const { return failures == 0 && violations == 0; }
    /// Schema 1. Timing fields are the only non-deterministic content;
    /// drop them to compare runs byte for byte.
    std::string to_json(bool include_timing = true) const;
};

struct TightnessReport {
    int k = 0;
    bool absent_in_regular = false;   // S_k^+ not in the regular tournament of order 2k-3
    bool present_in_larger = false;   // and present in tournaments of order 2k-2

    bool passed() const { return absent_in_regular && present_in_larger; }
};

TightnessReport tightness_check(int k);

struct PartitionSuiteParams {
    int n_max = 24;
    int samples = 200;
    int ell_max = 4;    // directed partitions with ell = 0..ell_max
    int q_len_max = 3;  // all rooted oriented path shapes up to this length
    uint64_t seed = 1;
};

/// Runs both partition constructions over seeded hosts and validates every
/// recorded invariant, chi(D[Z]) included, with the exact solver.
ExperimentReport verify_partitions(const PartitionSuiteParams& params);

enum class EmbedMethod { constructive, bruteforce, hybrid };

std::string to_string(EmbedMethod m);
EmbedMethod method_from_string(const std::string& s);

struct UniversalitySuiteParams {
    int k = 3;
    BoundSpec bound;
    std::vector<InstanceFamily> families;
    EmbedMethod method = EmbedMethod::bruteforce;
    ColouringOptions chi;
    BruteForceOptions brute;
    GlueOptions glue;
};

/// For every host whose exact chromatic number clears the bound, tries to
/// embed every oriented tree of order k. Hosts above the solver cap are
/// skipped and counted; brute-force misses above a conjectured bound are
/// flagged as conjecture-relevant.
ExperimentReport verify_universality(const UniversalitySuiteParams& params);

uint64_t fnv1a_hash(const std::vector<int>& values);

int run_cli(int argc, char** argv);

}  // namespace treeuniv
