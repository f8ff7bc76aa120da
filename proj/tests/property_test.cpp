#include <doctest.h>

#include <algorithm>
#include <variant>

#include "mpd/batch.hpp"
#include "mpd/cotree.hpp"
#include "mpd/oracle.hpp"
#include "mpd/solver.hpp"
#include "mpd/verify.hpp"

using namespace mpd;

namespace {

Cotree connected_tree(Vertex n, double bias, std::uint64_t seed) {
  Cotree t = random_cotree(n, bias, seed);
  if (n >= 2) t.set_kind(t.root(), Cotree::Kind::Join);
  return t;
}

// Leaves under `id`, iteratively.
std::vector<Vertex> leaves_under(const Cotree& t, NodeId id) {
  std::vector<Vertex> out;
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    const auto& nd = t.node(stack.back());
    stack.pop_back();
    if (nd.kind == Cotree::Kind::Leaf) {
      out.push_back(nd.vertex);
    } else {
      stack.push_back(nd.left);
      stack.push_back(nd.right);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("property") {

TEST_CASE("solve output is valid with matching statistics") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 120);
    const Cotree t = random_cotree(n, 0.3 + 0.5 * static_cast<double>(seed % 7) / 6, seed);
    const RestrictedSet r = random_restricted(n, 0.1 * static_cast<double>(seed % 11), seed);
    const Graph g = materialize(t);
    bool isolated = false;
    for (Vertex v = 0; v < n; ++v) isolated |= g.degree(v) == 0;
    if (isolated) {
      CHECK_THROWS_AS(solve(t, r), NoSolutionError);
      continue;
    }
    const MPDSolution sol = solve(t, r);
    const auto rep = verify_solution(g, r, sol.edge_list());
    REQUIRE(rep.valid);
    CHECK(rep.k == sol.k);
    CHECK(rep.s == sol.s);
    CHECK(rep.f == sol.f);
    CHECK(rep.matched_number == sol.matched_number);
  }
}

TEST_CASE("connected instances satisfy the maximality conditions and carry at most one free pair") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 200);
    const Cotree t = connected_tree(n, 0.5, seed);
    const RestrictedSet r = random_restricted(n, 0.5, seed + 17);
    const MPDSolution sol = solve(t, r);
    const auto violations = check_maximum_properties(materialize(t), r, sol);
    for (const auto& v : violations) INFO(describe(v));
    CHECK(violations.empty());
    if (!r.empty()) CHECK(sol.f <= 1);
  }
}

TEST_CASE("balanced restricted counts at a join root give V(M) = R and no free pair") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Vertex n = 4 + static_cast<Vertex>(seed % 60);
    const Cotree t = connected_tree(n, 0.5, seed);
    auto left = leaves_under(t, t.node(t.root()).left);
    auto right = leaves_under(t, t.node(t.root()).right);
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    const auto c = static_cast<std::size_t>(1 + seed % std::min(left.size(), right.size()));
    RestrictedSet r(n);
    for (std::size_t i = 0; i < c; ++i) {
      r.insert(left[i]);
      r.insert(right[right.size() - 1 - i]);
    }
    const MPDSolution sol = solve(t, r);
    CHECK(sol.covered_vertices() == r.members());
    CHECK(sol.f == 0);
  }
}

TEST_CASE("disconnected cographs without isolated vertices") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Vertex a = 2 + static_cast<Vertex>(seed % 4);
    const Vertex b = 2 + static_cast<Vertex>((seed / 4) % 4);
    Cotree t;
    const Cotree ta = random_cotree(a, 0.5, seed);
    const Cotree tb = random_cotree(b, 0.5, seed * 31);
    // Copy both trees into one arena, shifting the second tree's labels.
    auto copy = [&](const Cotree& src, Vertex shift) {
      std::vector<NodeId> map(src.node_count(), kNoNode);
      for (NodeId id : src.postorder()) {
        const auto& nd = src.node(id);
        map[id] = nd.kind == Cotree::Kind::Leaf ? t.add_leaf(nd.vertex + shift)
                                                 : t.add_internal(nd.kind, map[nd.left], map[nd.right]);
      }
      t.set_kind(map[src.root()], Cotree::Kind::Join);
      return map[src.root()];
    };
    const NodeId ra = copy(ta, 0);
    const NodeId rb = copy(tb, a);
    t.set_root(t.add_internal(Cotree::Kind::Union, ra, rb));
    REQUIRE_NOTHROW(t.validate());
    const RestrictedSet r = random_restricted(a + b, 0.5, seed);
    const MPDSolution sol = solve(t, r);
    const auto oracle = oracle_canonical(materialize(t), r);
    CHECK(sol.matched_number == oracle.beta);
    CHECK(sol.f == oracle.f_min);
  }
}

TEST_CASE("recognized trees give the same statistics as the generating tree") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 50);
    const Cotree t = connected_tree(n, 0.5, seed);
    const RestrictedSet r = random_restricted(n, 0.4, seed);
    auto rec = recognize(materialize(t));
    REQUIRE(std::holds_alternative<Cotree>(rec));
    const MPDSolution a = solve(t, r);
    const MPDSolution b = solve(std::get<Cotree>(rec), r);
    CHECK(a.matched_number == b.matched_number);
    CHECK(a.f == b.f);
  }
}

TEST_CASE("empty restricted set reduces to paired domination") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const Vertex n = 2 + static_cast<Vertex>(seed % 9);
    const Cotree t = connected_tree(n, 0.4, seed);
    const MPDSolution sol = solve(t, RestrictedSet(n));
    CHECK(2 * static_cast<Vertex>(sol.pairs.size()) == oracle_paired_domination_number(materialize(t)));
  }
}

TEST_CASE("parallel batch matches the serial reference") {
  std::vector<InstanceSpec> specs;
  for (std::uint64_t seed = 1; seed <= 300; ++seed)
    specs.push_back({static_cast<Vertex>(2 + seed % 300), 0.5, 0.5, seed, seed % 3 != 0});
  const auto serial_insts = make_instances(specs, Execution::Serial);
  const auto insts = make_instances(specs, Execution::Parallel);
  for (std::size_t i = 0; i < insts.size(); ++i) {
    CHECK(insts[i].tree == serial_insts[i].tree);
    CHECK(insts[i].restricted == serial_insts[i].restricted);
  }
  const auto ref = solve_batch(insts, Execution::Serial);
  const auto par = solve_batch(insts, Execution::Parallel);
  REQUIRE(ref.size() == par.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    CHECK(ref[i].error.empty());
    CHECK(ref[i].error == par[i].error);
    CHECK(ref[i].isolated == par[i].isolated);
    REQUIRE(ref[i].solution.has_value() == par[i].solution.has_value());
    if (ref[i].solution) CHECK(ref[i].solution->pairs == par[i].solution->pairs);
    if (specs[i].connected) CHECK(ref[i].solution.has_value());
  }
}

}
