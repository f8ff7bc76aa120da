#include <algorithm>
#include <stdexcept>
#include <utility>

#include "mpd/cotree.hpp"

namespace mpd {

bool is_induced_p4(const Graph& g, const P4Witness& w) {
  const auto& p = w.path;
  for (Vertex v : p)
    if (!g.contains(v)) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] == p[j]) return false;
  return g.adjacent(p[0], p[1]) && g.adjacent(p[1], p[2]) && g.adjacent(p[2], p[3]) &&
         !g.adjacent(p[0], p[2]) && !g.adjacent(p[0], p[3]) && !g.adjacent(p[1], p[3]);
}

namespace {

using Parts = std::vector<std::vector<Vertex>>;

// Connectivity of induced subgraphs and their complements over one graph.
// Stamps avoid clearing per-vertex scratch between calls.
class Decomposer {
 public:
  explicit Decomposer(const Graph& g)
      : g_(g), member_(g.vertex_count(), 0), mark_(g.vertex_count(), 0) {}

  Parts components(const std::vector<Vertex>& verts) {
    const std::uint32_t set = enter(verts);
    const std::uint32_t seen = ++stamp_;
    Parts parts;
    std::vector<Vertex> queue;
    for (Vertex s : verts) {
      if (mark_[s] == seen) continue;
      mark_[s] = seen;
      queue.assign(1, s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : g_.neighbors(queue[head])) {
          if (member_[w] != set || mark_[w] == seen) continue;
          mark_[w] = seen;
          queue.push_back(w);
        }
      }
      parts.push_back(queue);
    }
    return parts;
  }

  // Components of the complement of the induced subgraph, found by BFS over
  // the set of still-unvisited vertices without building the complement.
  Parts cocomponents(const std::vector<Vertex>& verts) {
    const std::uint32_t set = enter(verts);
    std::vector<Vertex> unvisited = verts;
    Parts parts;
    while (!unvisited.empty()) {
      std::vector<Vertex> queue{unvisited.back()};
      unvisited.pop_back();
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t adj = ++stamp_;
        for (Vertex w : g_.neighbors(queue[head]))
          if (member_[w] == set) mark_[w] = adj;
        std::size_t keep = 0;
        for (Vertex u : unvisited) {
          if (mark_[u] == adj)
            unvisited[keep++] = u;
          else
            queue.push_back(u);
        }
        unvisited.resize(keep);
      }
      parts.push_back(std::move(queue));
    }
    return parts;
  }

  // `verts` induces a connected and co-connected subgraph on >= 2 vertices,
  // which always contains an induced P4. Peel vertices until removing one
  // breaks connectivity of the graph or of its complement, then read the
  // path off the pieces.
  P4Witness find_p4(std::vector<Vertex> cur) {
    while (true) {
      if (cur.size() < 4) throw std::logic_error("find_p4: ran out of vertices");
      const Vertex v = cur.back();
      cur.pop_back();
      auto adj_v = [&](Vertex x) { return g_.adjacent(v, x); };

      Parts comps = components(cur);
      if (comps.size() >= 2) {
        // Some component holds a non-neighbour of v; it also holds a
        // neighbour, so an edge y-z inside it crosses N(v).
        for (std::size_t c = 0; c < comps.size(); ++c) {
          const auto& comp = comps[c];
          const std::uint32_t in_comp = enter(comp);
          for (Vertex z : comp) {
            if (adj_v(z)) continue;
            for (Vertex y : g_.neighbors(z)) {
              if (member_[y] != in_comp || !adj_v(y)) continue;
              for (std::size_t o = 0; o < comps.size(); ++o) {
                if (o == c) continue;
                for (Vertex w : comps[o])
                  if (adj_v(w)) return oriented({w, v, y, z});
              }
            }
          }
        }
      }

      Parts cocomps = cocomponents(cur);
      if (cocomps.size() >= 2) {
        // Mirror image in the complement: a non-edge y-z inside one
        // co-component with y outside N(v) and z inside it.
        for (std::size_t c = 0; c < cocomps.size(); ++c) {
          const auto& comp = cocomps[c];
          std::vector<Vertex> outside;
          for (Vertex x : comp)
            if (!adj_v(x)) outside.push_back(x);
          if (outside.empty() || outside.size() == comp.size()) continue;
          const std::uint32_t in_outside = enter(outside);
          for (Vertex z : comp) {
            if (!adj_v(z)) continue;
            std::size_t hits = 0;
            for (Vertex x : g_.neighbors(z))
              if (member_[x] == in_outside) ++hits;
            if (hits == outside.size()) continue;
            for (Vertex y : outside) {
              if (g_.adjacent(z, y)) continue;
              for (std::size_t o = 0; o < cocomps.size(); ++o) {
                if (o == c) continue;
                for (Vertex w : cocomps[o])
                  if (!adj_v(w)) return oriented({v, z, w, y});
              }
            }
          }
        }
      }
      // Still connected and co-connected without v: keep peeling.
    }
  }

 private:
  std::uint32_t enter(const std::vector<Vertex>& verts) {
    const std::uint32_t token = ++stamp_;
    for (Vertex v : verts) member_[v] = token;
    return token;
  }

  static P4Witness oriented(std::array<Vertex, 4> p) {
    if (p[0] > p[3]) std::reverse(p.begin(), p.end());
    return P4Witness{p};
  }

  const Graph& g_;
  std::vector<std::uint32_t> member_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
};

Vertex min_vertex(const std::vector<Vertex>& part) {
  return *std::min_element(part.begin(), part.end());
}

}  // namespace

Recognition recognize(const Graph& g) {
  const Vertex n = g.vertex_count();
  if (n == 0) throw InputError("cannot recognize the empty graph");

  Decomposer dec(g);
  Cotree tree;
  struct Slot {
    NodeId parent;
    bool is_left;
  };
  struct Task {
    std::vector<Vertex> verts;
    Slot slot;
  };
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  std::vector<Task> stack;
  stack.push_back({std::move(all), {kNoNode, false}});

  auto attach = [&](NodeId id, Slot slot) {
    if (slot.parent == kNoNode) {
      tree.set_root(id);
      return;
    }
    const auto& p = tree.node(slot.parent);
    if (slot.is_left)
      tree.set_children(slot.parent, id, p.right);
    else
      tree.set_children(slot.parent, p.left, id);
  };

  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    if (task.verts.size() == 1) {
      attach(tree.add_leaf(task.verts.front()), task.slot);
      continue;
    }

    Cotree::Kind op = Cotree::Kind::Union;
    Parts parts = dec.components(task.verts);
    if (parts.size() < 2) {
      op = Cotree::Kind::Join;
      parts = dec.cocomponents(task.verts);
      if (parts.size() < 2) return dec.find_p4(std::move(task.verts));
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return min_vertex(a) < min_vertex(b); });

    // Left fold: ((P1 op P2) op P3) ... op Pk.
    const std::size_t k = parts.size();
    std::vector<NodeId> chain(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) chain[i] = tree.add_internal(op, kNoNode, kNoNode);
    for (std::size_t i = 1; i + 1 < k; ++i) tree.set_children(chain[i], chain[i - 1], kNoNode);
    attach(chain[k - 2], task.slot);
    stack.push_back({std::move(parts[0]), {chain[0], true}});
    for (std::size_t i = 1; i < k; ++i) stack.push_back({std::move(parts[i]), {chain[i - 1], false}});
  }
  return tree;
}

}  // namespace mpd
