#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "treeuniv/harness.hpp"

namespace treeuniv {

namespace {

// Thin wrapper so arc decisions do not depend on library distribution
// internals; mt19937_64 output is stable everywhere.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
};

}  // namespace

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::random_gnp_digraph: return "random_gnp_digraph";
        case FamilyKind::random_tournament: return "random_tournament";
        case FamilyKind::regular_tournament: return "regular_tournament";
        case FamilyKind::circulant_tournament: return "circulant_tournament";
        case FamilyKind::layered_dag: return "layered_dag";
        case FamilyKind::transitive_tournament: return "transitive_tournament";
    }
    return "?";
}

FamilyKind family_kind_from_string(const std::string& s) {
    for (FamilyKind k : {FamilyKind::random_gnp_digraph, FamilyKind::random_tournament,
                         FamilyKind::regular_tournament, FamilyKind::circulant_tournament,
                         FamilyKind::layered_dag, FamilyKind::transitive_tournament})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown instance family '" + s + "'");
}

std::string InstanceFamily::describe() const {
    std::ostringstream out;
    out << to_string(kind) << "(n=" << n;
    switch (kind) {
        case FamilyKind::random_gnp_digraph:
        case FamilyKind::layered_dag:
            out << ",p=" << p << ",seed=" << seed;
            break;
        case FamilyKind::random_tournament:
            out << ",seed=" << seed;
            break;
        case FamilyKind::circulant_tournament:
            out << ",offsets=";
            for (size_t i = 0; i < offsets.size(); ++i) out << (i ? "+" : "") << offsets[i];
            break;
        default: break;
    }
    out << ")";
    return out.str();
}

Digraph generate(const InstanceFamily& family) {
    const int n = family.n;
    if (n < 0) throw std::invalid_argument("generate: negative order");
    if ((family.kind == FamilyKind::random_gnp_digraph || family.kind == FamilyKind::layered_dag) &&
        (family.p < 0.0 || family.p > 1.0))
        throw std::invalid_argument("generate: arc probability outside [0,1]");

    Digraph d(n);
    switch (family.kind) {
        case FamilyKind::random_gnp_digraph: {
            Rng rng(family.seed);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v) continue;
                    if (rng.unit() < family.p) d.add_arc(u, v);
                }
            break;
        }
        case FamilyKind::random_tournament: {
            Rng rng(family.seed);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (rng.unit() < 0.5)
                        d.add_arc(u, v);
                    else
                        d.add_arc(v, u);
                }
            break;
        }
        case FamilyKind::regular_tournament: {
            if (n % 2 == 0) throw std::invalid_argument("regular tournament needs odd order");
            for (int i = 0; i < n; ++i)
                for (int j = 1; j <= (n - 1) / 2; ++j) d.add_arc(i, (i + j) % n);
            break;
        }
        case FamilyKind::circulant_tournament: {
            if (n % 2 == 0) throw std::invalid_argument("circulant tournament needs odd order");
            std::set<int> offs(family.offsets.begin(), family.offsets.end());
            if (offs.size() != static_cast<size_t>((n - 1) / 2))
                throw std::invalid_argument("circulant tournament needs (n-1)/2 offsets");
            for (int j : offs) {
                if (j < 1 || j > n - 1) throw std::invalid_argument("circulant offset out of range");
                if (offs.count(n - j)) throw std::invalid_argument("circulant offsets contain a pair j, n-j");
            }
            for (int i = 0; i < n; ++i)
                for (int j : offs) d.add_arc(i, (i + j) % n);
            break;
        }
        case FamilyKind::layered_dag: {
            // A random topological position per vertex; arcs only point to
            // strictly later layers, so the result is acyclic by construction.
            Rng rng(family.seed);
            std::vector<int> layer(n);
            for (int v = 0; v < n; ++v)
                layer[v] = static_cast<int>(rng.unit() * n);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (layer[u] >= layer[v]) continue;
                    if (rng.unit() < family.p) d.add_arc(u, v);
                }
            break;
        }
        case FamilyKind::transitive_tournament: {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) d.add_arc(u, v);
            break;
        }
    }
    return d;
}

uint64_t fnv1a_hash(const std::vector<int>& values) {
    uint64_t h = 1469598103934665603ull;
    for (int v : values)
        for (int byte = 0; byte < 4; ++byte) {
            h ^= static_cast<uint64_t>((static_cast<uint32_t>(v) >> (8 * byte)) & 0xff);
            h *= 1099511628211ull;
        }
    return h;
}

}  // namespace treeuniv
