#include "mpd/verify.hpp"

#include <string>

namespace mpd {

namespace {

std::string join2(const char* tag, Vertex a, Vertex b) {
  return std::string(tag) + " " + std::to_string(a) + " " + std::to_string(b);
}

}  // namespace

Check is_matching(const Graph& g, std::span<const Edge> pairs) {
  std::vector<std::uint8_t> used(g.vertex_count(), 0);
  for (const Edge& e : pairs) {
    if (!g.contains(e.u) || !g.contains(e.v)) return {false, join2("out-of-range", e.u, e.v)};
    if (!g.adjacent(e.u, e.v)) return {false, join2("not-an-edge", e.u, e.v)};
    for (Vertex x : {e.u, e.v}) {
      if (used[x]) return {false, "shared-vertex " + std::to_string(x)};
      used[x] = 1;
    }
  }
  return {};
}

bool is_dominating(const Graph& g, std::span<const Vertex> set) {
  const Vertex n = g.vertex_count();
  std::vector<std::uint8_t> in_set(n, 0);
  for (Vertex v : set) {
    if (!g.contains(v)) return false;
    in_set[v] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (in_set[v]) continue;
    bool hit = false;
    for (Vertex w : g.neighbors(v)) {
      if (in_set[w]) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::None: return "none";
    case Certificate::AllRestrictedMatched: return "all-restricted-matched";
    case Certificate::OddAllRestricted: return "odd-all-restricted";
  }
  return "?";
}

VerificationReport verify_solution(const Graph& g, const RestrictedSet& restricted,
                                   std::span<const Edge> pairs) {
  VerificationReport rep;
  const Check matching = is_matching(g, pairs);
  rep.is_matching = matching.ok;
  if (!matching.ok) {
    rep.reasons.push_back(matching.reason);
    return rep;
  }

  std::vector<Vertex> covered;
  covered.reserve(2 * pairs.size());
  for (const Edge& e : pairs) {
    covered.push_back(e.u);
    covered.push_back(e.v);
  }
  rep.is_dominating = is_dominating(g, covered);
  if (!rep.is_dominating) {
    std::vector<std::uint8_t> in_set(g.vertex_count(), 0);
    for (Vertex v : covered) in_set[v] = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (in_set[v]) continue;
      bool hit = false;
      for (Vertex w : g.neighbors(v)) hit = hit || in_set[w];
      if (!hit) {
        rep.reasons.push_back("undominated " + std::to_string(v));
        break;
      }
    }
  }
  rep.valid = rep.is_matching && rep.is_dominating;

  const MPDSolution counted = MPDSolution::from_edges(pairs, restricted);
  rep.k = counted.k;
  rep.s = counted.s;
  rep.f = counted.f;
  rep.matched_number = counted.matched_number;

  if (rep.valid) {
    const int r = restricted.size();
    const int size = static_cast<int>(pairs.size());
    if (rep.matched_number == r && size == (r + 1) / 2) {
      rep.certificate = Certificate::AllRestrictedMatched;
    } else if (g.vertex_count() == r && r % 2 == 1 && rep.matched_number == r - 1 &&
               size == r / 2) {
      rep.certificate = Certificate::OddAllRestricted;
    }
  }
  return rep;
}

std::string describe(const PropertyViolation& v) {
  std::string text;
  switch (v.kind) {
    case PropertyViolation::Kind::AdjacentToFreePair:
      text = "adjacent-to-free-pair";
      break;
    case PropertyViolation::Kind::NeighbourOutsideSet:
      text = "neighbour-outside-set";
      break;
    case PropertyViolation::Kind::PartnerHasOutsideNeighbour:
      text = "partner-has-outside-neighbour";
      break;
    case PropertyViolation::Kind::AdjacentToSemiRestricted:
      text = "adjacent-to-semi-restricted";
      break;
  }
  text += " unmatched=" + std::to_string(v.unmatched) + " at=" + std::to_string(v.witness);
  if (v.other >= 0) text += " other=" + std::to_string(v.other);
  return text;
}

std::vector<PropertyViolation> check_maximum_properties(const Graph& g,
                                                        const RestrictedSet& restricted,
                                                        const MPDSolution& solution) {
  const auto edges = solution.edge_list();
  const VerificationReport rep = verify_solution(g, restricted, edges);
  if (!rep.valid) {
    throw InputError("check_maximum_properties: invalid solution (" +
                     (rep.reasons.empty() ? std::string("?") : rep.reasons.front()) + ")");
  }

  const Vertex n = g.vertex_count();
  std::vector<Vertex> partner(n, -1);
  for (const Edge& e : edges) {
    partner[e.u] = e.v;
    partner[e.v] = e.u;
  }
  // outside[x] = number of neighbours of x not covered by the solution.
  std::vector<std::int64_t> outside(n, 0);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex w : g.neighbors(x))
      if (partner[w] < 0) ++outside[x];

  std::vector<PropertyViolation> out;
  using Kind = PropertyViolation::Kind;
  for (Vertex u = 0; u < n; ++u) {
    if (!restricted.contains(u) || partner[u] >= 0) continue;
    for (Vertex w : g.neighbors(u)) {
      if (partner[w] < 0) {
        out.push_back({Kind::NeighbourOutsideSet, u, w, -1});
        continue;
      }
      const Vertex mate = partner[w];
      const EdgeClass cls = classify_edge(w, mate, restricted);
      if (cls == EdgeClass::Free) {
        out.push_back({Kind::AdjacentToFreePair, u, w, mate});
        continue;
      }
      if (cls == EdgeClass::Semi && restricted.contains(w))
        out.push_back({Kind::AdjacentToSemiRestricted, u, w, mate});
      // u itself is outside the set; discount it if it neighbours the mate.
      const std::int64_t reach = outside[mate] - (g.adjacent(mate, u) ? 1 : 0);
      if (reach > 0) out.push_back({Kind::PartnerHasOutsideNeighbour, u, w, mate});
    }
  }
  return out;
}

}  // namespace mpd
