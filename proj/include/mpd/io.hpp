#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpd/graph.hpp"

namespace mpd {

/// `p <n> <m>` followed by exactly m lines `e <u> <v>`; `#` starts a comment
/// line.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

/// Vertex ids separated by whitespace and/or commas. Empty text is the empty
/// set.
RestrictedSet parse_restricted(std::string_view text, Vertex universe);
std::string format_restricted(const RestrictedSet& r);

/// `beta <b>`, `kfs <k> <s> <f>`, then `pair <u> <v> <full|semi|free>` per
/// pair sorted by smaller endpoint.
std::string format_solution(const MPDSolution& sol);

/// Contents of a solution file as written, before any checking against a
/// graph. The beta line may carry a trailing `fmin <f>`.
struct SolutionFile {
  int beta = 0;
  int k = 0, s = 0, f = 0;
  std::optional<int> fmin;
  std::vector<PairedEdge> pairs;  // classes as stated in the file

  std::vector<Edge> edge_list() const;
};

SolutionFile parse_solution(std::string_view text);

/// Whole file as a string; InputError if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace mpd
