#include "mpd/cotree.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <string>
#include <utility>

#include "mpd/detail/rng.hpp"

namespace mpd {

Cotree Cotree::single(Vertex v) {
  Cotree t;
  t.set_root(t.add_leaf(v));
  return t;
}

NodeId Cotree::add_leaf(Vertex v) {
  nodes_.push_back({Kind::Leaf, v, kNoNode, kNoNode});
  ++leaf_count_;
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId Cotree::add_internal(Kind op, NodeId left, NodeId right) {
  nodes_.push_back({op, -1, left, right});
  return static_cast<NodeId>(nodes_.size() - 1);
}

void Cotree::set_children(NodeId id, NodeId left, NodeId right) {
  nodes_[id].left = left;
  nodes_[id].right = right;
}

void Cotree::set_kind(NodeId id, Kind op) { nodes_[id].kind = op; }

std::vector<NodeId> Cotree::postorder() const {
  std::vector<NodeId> order;
  if (root_ == kNoNode) return order;
  order.reserve(nodes_.size());
  // (node, expanded) frames
  std::vector<std::pair<NodeId, bool>> stack{{root_, false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const Node& nd = nodes_[id];
    if (nd.kind == Kind::Leaf || expanded) {
      order.push_back(id);
      continue;
    }
    stack.push_back({id, true});
    stack.push_back({nd.right, false});
    stack.push_back({nd.left, false});
  }
  return order;
}

void Cotree::validate() const {
  if (root_ == kNoNode) throw InputError("empty cotree");
  const auto count = static_cast<NodeId>(nodes_.size());
  std::vector<std::uint8_t> seen_node(count, 0);
  std::vector<std::uint8_t> seen_leaf(leaf_count_, 0);
  std::vector<NodeId> stack{root_};
  std::size_t reached = 0;
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (id < 0 || id >= count) throw InputError("cotree child reference out of range");
    if (seen_node[id]) throw InputError("cotree node with more than one parent");
    seen_node[id] = 1;
    ++reached;
    const Node& nd = nodes_[id];
    if (nd.kind == Kind::Leaf) {
      if (nd.vertex < 0 || nd.vertex >= leaf_count_)
        throw InputError("leaf id " + std::to_string(nd.vertex) + " out of range");
      if (seen_leaf[nd.vertex])
        throw InputError("duplicate leaf id " + std::to_string(nd.vertex));
      seen_leaf[nd.vertex] = 1;
    } else {
      stack.push_back(nd.left);
      stack.push_back(nd.right);
    }
  }
  if (reached != nodes_.size()) throw InputError("cotree arena holds unreachable nodes");
}

bool Cotree::operator==(const Cotree& other) const {
  if (leaf_count_ != other.leaf_count_) return false;
  if ((root_ == kNoNode) != (other.root_ == kNoNode)) return false;
  if (root_ == kNoNode) return true;
  std::vector<std::pair<NodeId, NodeId>> stack{{root_, other.root_}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const Node& x = nodes_[a];
    const Node& y = other.nodes_[b];
    if (x.kind != y.kind) return false;
    if (x.kind == Kind::Leaf) {
      if (x.vertex != y.vertex) return false;
      continue;
    }
    stack.push_back({x.left, y.left});
    stack.push_back({x.right, y.right});
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class CotreeParseError : public InputError {
 public:
  CotreeParseError(std::size_t pos, const std::string& what)
      : InputError("cotree syntax error at offset " + std::to_string(pos) + ": " + what) {}
};

}  // namespace

Cotree parse_cotree(std::string_view text) {
  struct Frame {
    Cotree::Kind op;
    NodeId acc = kNoNode;
    int children = 0;
    std::size_t open_pos = 0;
  };
  Cotree tree;
  std::vector<Frame> stack;
  NodeId root = kNoNode;
  std::size_t pos = 0;

  auto deliver = [&](NodeId id, std::size_t at) {
    if (stack.empty()) {
      if (root != kNoNode) throw CotreeParseError(at, "trailing input after complete tree");
      root = id;
      return;
    }
    Frame& fr = stack.back();
    fr.acc = fr.acc == kNoNode ? id : tree.add_internal(fr.op, fr.acc, id);
    ++fr.children;
  };

  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '(') {
      if (stack.empty() && root != kNoNode)
        throw CotreeParseError(pos, "trailing input after complete tree");
      const std::size_t open = pos++;
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size() || (text[pos] != '+' && text[pos] != '*'))
        throw CotreeParseError(pos, "expected '+' or '*' after '('");
      stack.push_back({text[pos] == '+' ? Cotree::Kind::Union : Cotree::Kind::Join,
                       kNoNode, 0, open});
      ++pos;
    } else if (c == ')') {
      if (stack.empty()) throw CotreeParseError(pos, "unbalanced ')'");
      if (stack.back().children < 2)
        throw CotreeParseError(pos, "operator node needs at least two children");
      const NodeId done = stack.back().acc;
      stack.pop_back();
      deliver(done, pos);
      ++pos;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Vertex v = 0;
      const auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc()) throw CotreeParseError(pos, "bad leaf id");
      const std::size_t start = pos;
      pos = static_cast<std::size_t>(end - text.data());
      deliver(tree.add_leaf(v), start);
    } else {
      throw CotreeParseError(pos, std::string("unexpected character '") + c + "'");
    }
  }
  if (!stack.empty()) throw CotreeParseError(stack.back().open_pos, "unclosed '('");
  if (root == kNoNode) throw CotreeParseError(pos, "empty input");
  tree.set_root(root);

  // Leaf ids must be exactly 0..n-1.
  const Vertex n = tree.leaf_count();
  std::vector<std::uint8_t> seen(n, 0);
  for (std::size_t i = 0; i < tree.node_count(); ++i) {
    const auto& nd = tree.node(static_cast<NodeId>(i));
    if (nd.kind != Cotree::Kind::Leaf) continue;
    if (nd.vertex >= n) continue;  // reported below as a missing id
    if (seen[nd.vertex]) throw InputError("duplicate leaf id " + std::to_string(nd.vertex));
    seen[nd.vertex] = 1;
  }
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) throw InputError("missing leaf id " + std::to_string(v));
  return tree;
}

std::string serialize_cotree(const Cotree& tree) {
  std::string out;
  if (tree.empty()) return out;
  // Frames: node id, or -1 as a marker meaning "emit ')'".
  std::vector<NodeId> stack{tree.root()};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (id == kNoNode) {
      out += ')';
      continue;
    }
    if (!out.empty() && out.back() != '(') out += ' ';
    const auto& nd = tree.node(id);
    if (nd.kind == Cotree::Kind::Leaf) {
      out += std::to_string(nd.vertex);
      continue;
    }
    out += nd.kind == Cotree::Kind::Union ? "(+" : "(*";
    stack.push_back(kNoNode);
    stack.push_back(nd.right);
    stack.push_back(nd.left);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Materialization

namespace {

// Leaves of every subtree form a contiguous range of `order`.
struct LeafRanges {
  std::vector<Vertex> order;
  std::vector<std::pair<std::size_t, std::size_t>> range;  // per node [begin, end)
};

LeafRanges leaf_ranges(const Cotree& tree) {
  LeafRanges lr;
  lr.order.reserve(tree.leaf_count());
  lr.range.resize(tree.node_count());
  for (NodeId id : tree.postorder()) {
    const auto& nd = tree.node(id);
    if (nd.kind == Cotree::Kind::Leaf) {
      lr.range[id] = {lr.order.size(), lr.order.size() + 1};
      lr.order.push_back(nd.vertex);
    } else {
      lr.range[id] = {lr.range[nd.left].first, lr.range[nd.right].second};
    }
  }
  return lr;
}

}  // namespace

std::int64_t materialized_edge_count(const Cotree& tree) {
  std::vector<std::int64_t> size(tree.node_count(), 0);
  std::int64_t edges = 0;
  for (NodeId id : tree.postorder()) {
    const auto& nd = tree.node(id);
    if (nd.kind == Cotree::Kind::Leaf) {
      size[id] = 1;
      continue;
    }
    size[id] = size[nd.left] + size[nd.right];
    if (nd.kind == Cotree::Kind::Join) edges += size[nd.left] * size[nd.right];
  }
  return edges;
}

Graph materialize(const Cotree& tree, std::int64_t edge_cap) {
  tree.validate();
  const std::int64_t m = materialized_edge_count(tree);
  if (m > edge_cap) {
    throw InputError("materialization would create " + std::to_string(m) +
                     " edges, above the cap of " + std::to_string(edge_cap));
  }
  const LeafRanges lr = leaf_ranges(tree);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < tree.node_count(); ++i) {
    const auto& nd = tree.node(static_cast<NodeId>(i));
    if (nd.kind != Cotree::Kind::Join) continue;
    const auto [lb, le] = lr.range[nd.left];
    const auto [rb, re] = lr.range[nd.right];
    for (std::size_t a = lb; a < le; ++a)
      for (std::size_t b = rb; b < re; ++b) edges.push_back({lr.order[a], lr.order[b]});
  }
  return Graph::from_edges(tree.leaf_count(), edges);
}

// ---------------------------------------------------------------------------
// Generators

Cotree random_cotree(Vertex leaf_count, double join_bias, std::uint64_t seed) {
  if (leaf_count <= 0) throw InputError("random_cotree needs at least one leaf");
  if (!(join_bias >= 0.0 && join_bias <= 1.0)) throw InputError("join_bias must lie in [0,1]");

  detail::Rng rng(seed, /*stream=*/1);
  std::vector<Vertex> labels(leaf_count);
  std::iota(labels.begin(), labels.end(), 0);
  for (Vertex i = leaf_count - 1; i > 0; --i)
    std::swap(labels[i], labels[rng.below(static_cast<std::uint64_t>(i) + 1)]);

  Cotree tree;
  struct Task {
    Vertex begin, end;  // label range
    NodeId parent;
    bool is_left;
  };
  std::vector<Task> stack{{0, leaf_count, kNoNode, false}};
  while (!stack.empty()) {
    const Task t = stack.back();
    stack.pop_back();
    NodeId id;
    if (t.end - t.begin == 1) {
      id = tree.add_leaf(labels[t.begin]);
    } else {
      const auto op = rng.bernoulli(join_bias) ? Cotree::Kind::Join : Cotree::Kind::Union;
      id = tree.add_internal(op, kNoNode, kNoNode);
      const Vertex split =
          t.begin + 1 + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(t.end - t.begin - 1)));
      stack.push_back({split, t.end, id, false});
      stack.push_back({t.begin, split, id, true});
    }
    if (t.parent == kNoNode) {
      tree.set_root(id);
    } else {
      const auto& p = tree.node(t.parent);
      if (t.is_left)
        tree.set_children(t.parent, id, p.right);
      else
        tree.set_children(t.parent, p.left, id);
    }
  }
  return tree;
}

RestrictedSet random_restricted(Vertex n, double density, std::uint64_t seed) {
  if (!(density >= 0.0 && density <= 1.0)) throw InputError("density must lie in [0,1]");
  detail::Rng rng(seed, /*stream=*/2);
  RestrictedSet r(n);
  for (Vertex v = 0; v < n; ++v)
    if (rng.bernoulli(density)) r.insert(v);
  return r;
}

}  // namespace mpd
