#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mpd/graph.hpp"

namespace mpd {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

/// Binary decomposition tree of a cograph. Leaves carry vertex ids; internal
/// nodes are a disjoint union or a join (union plus all cross edges) of their
/// two children. Nodes live in an arena addressed by NodeId.
class Cotree {
 public:
  enum class Kind : std::uint8_t { Leaf, Union, Join };

  struct Node {
    Kind kind = Kind::Leaf;
    Vertex vertex = -1;  // leaves only
    NodeId left = kNoNode;
    NodeId right = kNoNode;
  };

  Cotree() = default;

  static Cotree single(Vertex v);

  NodeId add_leaf(Vertex v);
  NodeId add_internal(Kind op, NodeId left, NodeId right);
  void set_children(NodeId id, NodeId left, NodeId right);
  void set_kind(NodeId id, Kind op);
  void set_root(NodeId id) { root_ = id; }

  NodeId root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  std::size_t node_count() const { return nodes_.size(); }
  Vertex leaf_count() const { return leaf_count_; }
  bool empty() const { return root_ == kNoNode; }

  /// Node ids in postorder (left subtree, right subtree, node).
  std::vector<NodeId> postorder() const;

  /// Throws InputError unless the arena forms one strictly binary tree rooted
  /// at root() whose leaves carry each of 0..leaf_count()-1 exactly once.
  void validate() const;

  bool operator==(const Cotree&) const;

 private:
  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
  Vertex leaf_count_ = 0;
};

/// Parses `T ::= <int> | "(" ("+"|"*") T T+ ")"`; `+` is union, `*` is join.
/// Wider nodes are folded left into binary chains of the same operation.
Cotree parse_cotree(std::string_view text);

/// Inverse of parse_cotree for binary trees.
std::string serialize_cotree(const Cotree& tree);

inline constexpr std::int64_t kDefaultEdgeCap = 50'000'000;

/// Explicit graph of the cotree; throws InputError when the edge count would
/// exceed `edge_cap`.
Graph materialize(const Cotree& tree, std::int64_t edge_cap = kDefaultEdgeCap);

/// Edge count of the materialized graph without building it.
std::int64_t materialized_edge_count(const Cotree& tree);

/// Four vertices a-b-c-d inducing a path: ab, bc, cd are edges and ac, ad, bd
/// are not.
struct P4Witness {
  std::array<Vertex, 4> path{};

  friend bool operator==(const P4Witness&, const P4Witness&) = default;
};

bool is_induced_p4(const Graph& g, const P4Witness& w);

using Recognition = std::variant<Cotree, P4Witness>;

/// Decomposes `g` by alternating connected and co-connected components.
/// Returns a cotree materializing to `g` or an induced P4.
Recognition recognize(const Graph& g);

/// Random recursive-split tree on `leaf_count` leaves; each internal node is a
/// join with probability `join_bias`; leaves get a seeded permutation of ids.
Cotree random_cotree(Vertex leaf_count, double join_bias, std::uint64_t seed);

/// Each vertex restricted independently with probability `density`.
RestrictedSet random_restricted(Vertex n, double density, std::uint64_t seed);

}  // namespace mpd
