#include <doctest.h>

#include <algorithm>
#include <set>

#include "mpd/cotree.hpp"
#include "mpd/detail/rng.hpp"
#include "mpd/oracle.hpp"
#include "mpd/verify.hpp"

using namespace mpd;

namespace {

Graph make(Vertex n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

Graph cube() {
  std::vector<Edge> e;
  for (Vertex v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (Vertex w = v ^ (1 << b); v < w) e.push_back({v, w});
  return make(8, e);
}

std::vector<std::vector<Edge>> all_dominating(const Graph& g, const RestrictedSet& r) {
  std::vector<std::vector<Edge>> out;
  enumerate_dominating_matchings(g, r, [&](const DominatingMatching& m) {
    out.emplace_back(m.pairs.begin(), m.pairs.end());
  });
  std::sort(out.begin(), out.end());
  return out;
}

Graph random_graph(detail::Rng& rng, Vertex n, double p) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.push_back({u, v});
  return Graph::from_edges(n, e);
}

bool has_isolated(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("enumeration examples") {
  CHECK(all_dominating(make(2, {{0, 1}}), RestrictedSet(2)) ==
        std::vector<std::vector<Edge>>{{{0, 1}}});
  CHECK(all_dominating(make(3, {{0, 1}, {1, 2}}), RestrictedSet(3)) ==
        std::vector<std::vector<Edge>>{{{0, 1}}, {{1, 2}}});
  CHECK(all_dominating(make(2, {}), RestrictedSet(2)).empty());
}

TEST_CASE("enumeration visits every matching once") {
  // K4 has 1 + 6 + 3 matchings.
  Graph k4 = materialize(parse_cotree("(* (* 0 1) (* 2 3))"));
  std::uint64_t dominating = 0;
  const auto visited = enumerate_dominating_matchings(k4, RestrictedSet(4), [&](const DominatingMatching&) { ++dominating; });
  CHECK(visited == 10);
  CHECK(dominating == 9);
}

TEST_CASE("canonical examples") {
  auto k2 = oracle_canonical(make(2, {{0, 1}}), RestrictedSet::all(2));
  CHECK(k2.beta == 2);
  CHECK(k2.f_min == 0);

  const std::vector<Vertex> members{1, 2};
  auto path5 = oracle_canonical(make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}}), RestrictedSet(5, members));
  CHECK(path5.beta == 2);
  CHECK(path5.f_min == 0);

  auto k3 = oracle_canonical(make(3, {{0, 1}, {0, 2}, {1, 2}}), RestrictedSet::all(3));
  CHECK(k3.beta == 2);
  CHECK(k3.f_min == 0);

  auto free_k2 = oracle_canonical(make(2, {{0, 1}}), RestrictedSet(2));
  CHECK(free_k2.beta == 0);
  CHECK(free_k2.f_min == 1);

  CHECK_THROWS_AS(oracle_canonical(make(3, {{0, 1}}), RestrictedSet(3)), NoSolutionError);
}

TEST_CASE("paired-domination number examples") {
  CHECK(oracle_paired_domination_number(cube()) == 4);
  CHECK(oracle_paired_domination_number(make(4, {{0, 1}, {1, 2}, {2, 3}})) == 2);
  CHECK(oracle_paired_domination_number(make(2, {{0, 1}})) == 2);
  CHECK_THROWS_AS(oracle_paired_domination_number(make(1, {})), NoSolutionError);
}

TEST_CASE("cap") {
  Graph big = Graph::from_edges(17, std::vector<Edge>{});
  CHECK_THROWS_AS(oracle_canonical(big, RestrictedSet(17)), CapExceeded);
  CHECK_THROWS_AS(oracle_paired_domination_number(big), CapExceeded);
  CHECK_THROWS_AS(enumerate_dominating_matchings(big, RestrictedSet(17), [](const DominatingMatching&) {}), CapExceeded);
  Graph k2 = make(2, {{0, 1}});
  CHECK_THROWS_AS(oracle_canonical(k2, RestrictedSet(2), {1, false}), CapExceeded);
}

TEST_CASE("pruned and reference searches agree; witness verifies; invariants") {
  detail::Rng rng(7);
  int checked = 0;
  while (checked < 400) {
    const Vertex n = 2 + static_cast<Vertex>(rng.below(9));
    Graph g = random_graph(rng, n, 0.2 + 0.6 * rng.unit());
    if (has_isolated(g)) continue;
    RestrictedSet r(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng.bernoulli(0.5)) r.insert(v);
    ++checked;

    auto fast = oracle_canonical(g, r);
    auto ref = oracle_canonical(g, r, {kDefaultOracleCap, true});
    CHECK(fast.beta == ref.beta);
    CHECK(fast.f_min == ref.f_min);
    CHECK(fast.count_explored <= ref.count_explored);
    CHECK(oracle_paired_domination_number(g) == oracle_paired_domination_number(g, {kDefaultOracleCap, true}));

    auto rep = verify_solution(g, r, fast.witness.edge_list());
    CHECK(rep.valid);
    CHECK(rep.matched_number == fast.beta);
    CHECK(rep.f == fast.f_min);
    CHECK(fast.beta <= r.size());

    const Vertex gp = oracle_paired_domination_number(g);
    CHECK(gp % 2 == 0);
    auto none = oracle_canonical(g, RestrictedSet(n));
    CHECK(none.beta == 0);
    CHECK(2 * none.f_min == gp);
  }
}

TEST_CASE("results are invariant under relabeling") {
  detail::Rng rng(11);
  int checked = 0;
  while (checked < 200) {
    const Vertex n = 2 + static_cast<Vertex>(rng.below(8));
    Graph g = random_graph(rng, n, 0.5);
    if (has_isolated(g)) continue;
    ++checked;
    RestrictedSet r(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng.bernoulli(0.4)) r.insert(v);

    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    for (Vertex i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    std::vector<Edge> moved;
    for (const Edge& e : g.edges()) moved.push_back({perm[e.u], perm[e.v]});
    RestrictedSet r2(n);
    for (Vertex v : r.members()) r2.insert(perm[v]);
    Graph g2 = Graph::from_edges(n, moved);

    auto a = oracle_canonical(g, r);
    auto b = oracle_canonical(g2, r2);
    CHECK(a.beta == b.beta);
    CHECK(a.f_min == b.f_min);
    CHECK(oracle_paired_domination_number(g) == oracle_paired_domination_number(g2));
  }
}

}
