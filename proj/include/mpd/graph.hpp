#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpd {

using Vertex = std::int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised for malformed user input: bad ids, loops, duplicate edges, syntax.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1, stored as sorted CSR adjacency.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, rejecting out-of-range endpoints, self-loops and
  /// duplicate edges (in either orientation).
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex vertex_count() const { return n_; }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(adj_.size()) / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  Vertex n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

inline Graph build_graph(Vertex n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

/// Membership flags over the vertex universe of one graph.
class RestrictedSet {
 public:
  RestrictedSet() = default;
  explicit RestrictedSet(Vertex universe) : flags_(universe, 0) {}
  RestrictedSet(Vertex universe, std::span<const Vertex> members);

  static RestrictedSet all(Vertex universe);

  Vertex universe() const { return static_cast<Vertex>(flags_.size()); }
  Vertex size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe() && flags_[v] != 0;
  }

  void insert(Vertex v);
  std::vector<Vertex> members() const;

  bool operator==(const RestrictedSet&) const = default;

 private:
  std::vector<std::uint8_t> flags_;
  Vertex count_ = 0;
};

enum class EdgeClass : std::uint8_t { Full, Semi, Free };

const char* to_string(EdgeClass c);

inline EdgeClass classify_edge(Vertex u, Vertex v, const RestrictedSet& restricted) {
  const int inside = int(restricted.contains(u)) + int(restricted.contains(v));
  return inside == 2 ? EdgeClass::Full : inside == 1 ? EdgeClass::Semi : EdgeClass::Free;
}

/// One pair of a matched-paired-dominating set. Endpoints are kept with u < v.
struct PairedEdge {
  Vertex u = 0;
  Vertex v = 0;
  EdgeClass cls = EdgeClass::Free;

  friend bool operator==(const PairedEdge&, const PairedEdge&) = default;
};

/// A matching whose vertex set dominates the graph, with its (k,s,f)
/// classification against a restricted set.
struct MPDSolution {
  std::vector<PairedEdge> pairs;
  int k = 0;
  int s = 0;
  int f = 0;
  int matched_number = 0;

  /// Classifies and counts `edges`; endpoints are normalised to u < v and the
  /// original order is kept.
  static MPDSolution from_edges(std::span<const Edge> edges, const RestrictedSet& restricted);

  std::vector<Edge> edge_list() const;
  /// Sorted copy of V(M).
  std::vector<Vertex> covered_vertices() const;
};

}  // namespace mpd
