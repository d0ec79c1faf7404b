#pragma once

#include "treeuniv/digraph.hpp"

namespace treeuniv {

/// Proper colouring of the underlying undirected graph. Digons and single
/// arcs both make their endpoints adjacent.
struct Colouring {
    std::vector<int> colour;  // vertex -> colour in [0, num_colours)
    int num_colours = 0;

    bool proper(const Digraph& d) const;
};

struct ColouringOptions {
    // Instances above the cap are rejected ("too large for exact solve").
    // The solver's bitset core supports at most 64 vertices.
    int max_vertices = 64;
};

/// Exact chromatic number with a witness, by branch and bound on
/// k-colourability: greedy clique lower bound, DSATUR upper bound,
/// then saturation-guided search with new-colour symmetry breaking.
Colouring optimal_colouring(const Digraph& d, const ColouringOptions& opt = {});

int chromatic_number(const Digraph& d, const ColouringOptions& opt = {});

}  // namespace treeuniv
