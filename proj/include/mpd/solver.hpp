#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mpd/cotree.hpp"
#include "mpd/graph.hpp"

namespace mpd {

/// Handle to a doubly linked list threaded through per-vertex link arrays
/// owned by a Workspace. A vertex sits in at most one chain at a time, so
/// concatenation, pop and erase are all O(1) and no allocation happens
/// during a solve.
struct Chain {
  Vertex head = -1;
  Vertex tail = -1;
  Vertex size = 0;

  bool empty() const { return size == 0; }
};

/// Which construction a join step used. Names describe the construction;
/// see README for the dispatch table.
enum class JointCase : std::uint8_t {
  NoRestricted,               // no restricted vertex on either side: one free cross pair
  BalancedCross,              // equal restricted counts: pair restricted sets across
  SurplusCoversRight,         // left surplus matches every right vertex
  SurplusCoversRestricted,    // left surplus covers right restricted plus some right free
  ReuseSemiEndpoints,         // right surplus absorbed by restricted ends of left semi pairs
  SplitFullPairsEven,         // ...plus split left full pairs, even remainder
  OddSemiLeftFree,            // odd remainder, one semi pair with a left free vertex
  OddSemiRightWitness,        // odd remainder, semi pair along a restricted-free edge of the right side
  OddSemiSplitFullPair,       // odd remainder, left full pair split onto an isolated right free vertex
  OddSemiSplitFullPairNoEdge, // same construction when the right side has a non-isolated free vertex but no restricted-free edge
  OddLeaveOneUnmatched,       // every vertex restricted, odd total: one stays unmatched
  ExactCover,                 // left surplus equals right restricted count (> 0)
  ShiftSemiEndpoint,          // nothing to absorb; move one semi restricted end across
  KeepFullPairs,              // left full pairs already dominate
  SplitFullPairTwoFree,       // split one left full pair over two right free vertices
  SplitFullPairWitness,       // split one left full pair via a left restricted-free edge
  AppendFreePair,             // unavoidable single free pair
};

const char* to_string(JointCase c);

/// Per-cotree-node solver state for the subgraph G_v below node v.
///
/// The pairs in full/semi/free form a canonical solution of G_v minus its
/// isolated vertices. Unmatched vertices are split into isolated ones (no
/// neighbour inside G_v) and the rest; the logical "unmatched restricted"
/// pool is isolated_restricted followed by unmatched_restricted, likewise
/// for free vertices.
struct NodeSummary {
  Chain full;  // pair chains are linked through one endpoint;
  Chain semi;  // for semi pairs that endpoint is the restricted one
  Chain free;
  Chain isolated_restricted;
  Chain unmatched_restricted;
  Chain isolated_free;
  Chain unmatched_free;

  Vertex n = 0;  // vertices in G_v
  Vertex r = 0;  // restricted vertices in G_v

  std::optional<Edge> rf_witness;  // (restricted, free) edge inside G_v
  Vertex exemplar_restricted = -1; // smallest restricted vertex of G_v
  Vertex exemplar_free = -1;       // smallest free vertex of G_v

  Vertex k() const { return full.size; }
  Vertex s() const { return semi.size; }
  Vertex f() const { return free.size; }
  Vertex unmatched_restricted_count() const {
    return isolated_restricted.size + unmatched_restricted.size;
  }
  Vertex unmatched_free_count() const { return isolated_free.size + unmatched_free.size; }
  Vertex isolated_count() const { return isolated_restricted.size + isolated_free.size; }
};

/// Quantities driving one join step, with the sizes of the working sets the
/// chosen construction used. "Left" is the side with at least as many
/// restricted vertices.
struct JointContext {
  JointCase chosen = JointCase::NoRestricted;
  bool swapped = false;

  Vertex left_unmatched_restricted = 0;  // restricted left vertices outside the left solution
  Vertex right_restricted = 0;
  Vertex right_free = 0;
  Vertex right_surplus = 0;              // right_restricted - left_unmatched_restricted
  Vertex left_k = 0, left_s = 0, left_f = 0;

  struct Sizes {
    Vertex left_cover = 0;         // left unmatched restricted paired across
    Vertex right_free_used = 0;    // right free vertices paired with the left surplus
    Vertex right_to_unmatched = 0; // right restricted paired with left unmatched restricted
    Vertex right_beyond = 0;       // right restricted left over after that
    Vertex right_to_semi = 0;      // right restricted paired with left semi endpoints
    Vertex right_to_full = 0;      // right restricted paired with split left full pairs
    Vertex cross_full = 0;         // new full pairs on unmatched left vertices
    Vertex semi_repaired = 0;      // full pairs made from left semi endpoints
    Vertex split_full = 0;         // full pairs made from split left full pairs
    Vertex full_split_source = 0;  // left full pairs that were split
    Vertex full_kept = 0;          // left full pairs kept intact
    Vertex repair_full = 0;        // full pair rebuilt after lending a vertex to the semi pair
    Vertex odd_semi = 0;           // the single semi pair of an odd construction
  } sizes;
};

class NoSolutionError : public std::runtime_error {
 public:
  explicit NoSolutionError(std::vector<Vertex> isolated);
  const std::vector<Vertex>& isolated() const { return isolated_; }

 private:
  std::vector<Vertex> isolated_;
};

/// Owns the link arrays shared by every NodeSummary of one solve.
class Workspace {
 public:
  explicit Workspace(const RestrictedSet& restricted);

  bool is_restricted(Vertex v) const { return slot_[v].restricted != 0; }
  Vertex partner(Vertex v) const { return slot_[v].partner; }

  NodeSummary leaf(Vertex v);
  NodeSummary combine_union(NodeSummary left, NodeSummary right);
  NodeSummary combine_joint(NodeSummary left, NodeSummary right, JointContext* context = nullptr);

  /// Flattens the root's pairs. Throws NoSolutionError if isolated vertices
  /// remain.
  MPDSolution extract(const NodeSummary& root) const;

  std::vector<Vertex> vertices(const Chain& c) const;
  /// (linked endpoint, partner) for each pair of a pair chain.
  std::vector<Edge> pairs(const Chain& c) const;

  /// Full O(size) audit of a summary: chain membership, pair classes, pools
  /// and counting identities. Throws std::logic_error on the first problem.
  void audit(const NodeSummary& s) const;

 private:
  struct Pools {
    Chain restricted;
    Chain free;
  };

  void push_back(Chain& c, Vertex v);
  Vertex pop_front(Chain& c);
  void erase(Chain& c, Vertex v);
  void append(Chain& dst, Chain& src);
  void make_pair(Chain& c, Vertex linked, Vertex other);
  /// Pops one pair from `c`, clears it and returns (linked, partner).
  Edge take_pair(Chain& c);
  /// Breaks every pair of `pairs` into the two vertex pools.
  void release_pairs(Chain& pairs, Pools& into);
  Pools dissolve(NodeSummary& s);

  void joint_unbalanced(NodeSummary& left, NodeSummary& right, NodeSummary& out,
                        JointContext& ctx);

  // One record per vertex keeps chain walks to a single cache line each.
  struct Slot {
    Vertex next = -1;
    Vertex prev = -1;
    Vertex partner = -1;
    std::uint8_t restricted = 0;
    std::uint8_t linked = 0;
  };
  std::vector<Slot> slot_;
};

struct SolveResult {
  MPDSolution solution;
  std::vector<JointCase> trace;  // one entry per join node, in postorder
};

/// Canonical matched-paired-dominating set of the cograph given by `tree`:
/// maximum matched number, then fewest free pairs. Throws NoSolutionError
/// when the graph has isolated vertices.
SolveResult solve_traced(const Cotree& tree, const RestrictedSet& restricted);

inline MPDSolution solve(const Cotree& tree, const RestrictedSet& restricted) {
  return solve_traced(tree, restricted).solution;
}

}  // namespace mpd
