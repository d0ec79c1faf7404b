#pragma once

#include <iosfwd>
#include <string>

#include "treeuniv/digraph.hpp"
#include "treeuniv/tree.hpp"

namespace treeuniv {

/// Parse/format error carrying the 1-based line number of the offence.
struct ParseError : std::runtime_error {
    ParseError(const std::string& source, int line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

// Digraph text format:
//   n <count>
//   a <u> <v>        (0-indexed)
//   # comment
// LF line endings; arcs written in ascending order.
Digraph read_digraph(std::istream& in, const std::string& source = "<stream>");
Digraph read_digraph_file(const std::string& path);
std::string format_digraph(const Digraph& d);
void write_digraph_file(const std::string& path, const Digraph& d);

// Tree format: digraph format plus an optional `r <vertex>` root line.
OrientedTree read_tree(std::istream& in, const std::string& source = "<stream>");
OrientedTree read_tree_file(const std::string& path);
std::string format_tree(const OrientedTree& t);
void write_tree_file(const std::string& path, const OrientedTree& t);

// Rooted path format: digraph format plus `root <end>` naming an extremity.
RootedOrientedPath read_rooted_path(std::istream& in, const std::string& source = "<stream>");
RootedOrientedPath read_rooted_path_file(const std::string& path);
std::string format_rooted_path(const RootedOrientedPath& p);

}  // namespace treeuniv
