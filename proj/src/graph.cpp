#include "mpd/graph.hpp"

#include <algorithm>
#include <string>

namespace mpd {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InputError("endpoint out of range in edge " + pair_text(e.u, e.v));
    if (e.u == e.v) throw InputError("self-loop " + pair_text(e.u, e.v));
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.adj_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.adj_[fill[e.u]++] = e.v;
    g.adj_[fill[e.v]++] = e.u;
  }
  for (Vertex v = 0; v < n; ++v) {
    auto first = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    auto dup = std::adjacent_find(first, last);
    if (dup != last) {
      throw InputError("duplicate edge " +
                       pair_text(std::min(v, *dup), std::max(v, *dup)));
    }
  }
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(adj_.size() / 2);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

RestrictedSet::RestrictedSet(Vertex universe, std::span<const Vertex> members)
    : flags_(universe, 0) {
  for (Vertex v : members) insert(v);
}

RestrictedSet RestrictedSet::all(Vertex universe) {
  RestrictedSet r(universe);
  std::fill(r.flags_.begin(), r.flags_.end(), 1);
  r.count_ = universe;
  return r;
}

void RestrictedSet::insert(Vertex v) {
  if (v < 0 || v >= universe())
    throw InputError("restricted vertex " + std::to_string(v) + " out of range");
  if (!flags_[v]) {
    flags_[v] = 1;
    ++count_;
  }
}

std::vector<Vertex> RestrictedSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (Vertex v = 0; v < universe(); ++v)
    if (flags_[v]) out.push_back(v);
  return out;
}

const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Full: return "full";
    case EdgeClass::Semi: return "semi";
    case EdgeClass::Free: return "free";
  }
  return "?";
}

MPDSolution MPDSolution::from_edges(std::span<const Edge> edges,
                                    const RestrictedSet& restricted) {
  MPDSolution sol;
  sol.pairs.reserve(edges.size());
  for (const Edge& e : edges) {
    const EdgeClass cls = classify_edge(e.u, e.v, restricted);
    sol.pairs.push_back({std::min(e.u, e.v), std::max(e.u, e.v), cls});
    switch (cls) {
      case EdgeClass::Full: ++sol.k; break;
      case EdgeClass::Semi: ++sol.s; break;
      case EdgeClass::Free: ++sol.f; break;
    }
  }
  sol.matched_number = 2 * sol.k + sol.s;
  return sol;
}

std::vector<Edge> MPDSolution::edge_list() const {
  std::vector<Edge> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back({p.u, p.v});
  return out;
}

std::vector<Vertex> MPDSolution::covered_vertices() const {
  std::vector<Vertex> out;
  out.reserve(2 * pairs.size());
  for (const auto& p : pairs) {
    out.push_back(p.u);
    out.push_back(p.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mpd
