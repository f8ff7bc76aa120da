#include "mpd/solver.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace mpd {

namespace {

Vertex min_defined(Vertex a, Vertex b) {
  if (a < 0) return b;
  if (b < 0) return a;
  return std::min(a, b);
}

[[noreturn]] void broken(const std::string& what) {
  throw std::logic_error("solver invariant violated: " + what);
}

std::string isolated_message(const std::vector<Vertex>& isolated) {
  std::string msg = "graph has isolated vertices:";
  for (Vertex v : isolated) msg += " " + std::to_string(v);
  return msg;
}

}  // namespace

const char* to_string(JointCase c) {
  switch (c) {
    case JointCase::NoRestricted: return "no-restricted";
    case JointCase::BalancedCross: return "balanced-cross";
    case JointCase::SurplusCoversRight: return "surplus-covers-right";
    case JointCase::SurplusCoversRestricted: return "surplus-covers-restricted";
    case JointCase::ReuseSemiEndpoints: return "reuse-semi-endpoints";
    case JointCase::SplitFullPairsEven: return "split-full-pairs-even";
    case JointCase::OddSemiLeftFree: return "odd-semi-left-free";
    case JointCase::OddSemiRightWitness: return "odd-semi-right-witness";
    case JointCase::OddSemiSplitFullPair: return "odd-semi-split-full-pair";
    case JointCase::OddSemiSplitFullPairNoEdge: return "odd-semi-split-full-pair-no-edge";
    case JointCase::OddLeaveOneUnmatched: return "odd-leave-one-unmatched";
    case JointCase::ExactCover: return "exact-cover";
    case JointCase::ShiftSemiEndpoint: return "shift-semi-endpoint";
    case JointCase::KeepFullPairs: return "keep-full-pairs";
    case JointCase::SplitFullPairTwoFree: return "split-full-pair-two-free";
    case JointCase::SplitFullPairWitness: return "split-full-pair-witness";
    case JointCase::AppendFreePair: return "append-free-pair";
  }
  return "?";
}

NoSolutionError::NoSolutionError(std::vector<Vertex> isolated)
    : std::runtime_error(isolated_message(isolated)), isolated_(std::move(isolated)) {}

// ---------------------------------------------------------------------------
// Chain primitives

Workspace::Workspace(const RestrictedSet& restricted)
    : slot_(restricted.universe()) {
  for (Vertex v = 0; v < restricted.universe(); ++v) slot_[v].restricted = restricted.contains(v);
}

void Workspace::push_back(Chain& c, Vertex v) {
  slot_[v].next = -1;
  slot_[v].prev = c.tail;
  if (c.tail >= 0)
    slot_[c.tail].next = v;
  else
    c.head = v;
  c.tail = v;
  ++c.size;
  slot_[v].linked = 1;
}

Vertex Workspace::pop_front(Chain& c) {
  if (c.empty()) broken("pop from empty chain");
  const Vertex v = c.head;
  c.head = slot_[v].next;
  if (c.head >= 0)
    slot_[c.head].prev = -1;
  else
    c.tail = -1;
  --c.size;
  slot_[v].linked = 0;
  return v;
}

void Workspace::erase(Chain& c, Vertex v) {
  if (!slot_[v].linked) broken("erase of unlinked vertex " + std::to_string(v));
  if (slot_[v].prev >= 0)
    slot_[slot_[v].prev].next = slot_[v].next;
  else
    c.head = slot_[v].next;
  if (slot_[v].next >= 0)
    slot_[slot_[v].next].prev = slot_[v].prev;
  else
    c.tail = slot_[v].prev;
  --c.size;
  slot_[v].linked = 0;
}

void Workspace::append(Chain& dst, Chain& src) {
  if (src.empty()) return;
  if (dst.empty()) {
    dst = src;
  } else {
    slot_[dst.tail].next = src.head;
    slot_[src.head].prev = dst.tail;
    dst.tail = src.tail;
    dst.size += src.size;
  }
  src = Chain{};
}

void Workspace::make_pair(Chain& c, Vertex linked, Vertex other) {
  slot_[linked].partner = other;
  slot_[other].partner = linked;
  push_back(c, linked);
}

Edge Workspace::take_pair(Chain& c) {
  const Vertex a = pop_front(c);
  const Vertex b = slot_[a].partner;
  slot_[a].partner = slot_[b].partner = -1;
  return {a, b};
}

void Workspace::release_pairs(Chain& pairs, Pools& into) {
  while (!pairs.empty()) {
    const Edge e = take_pair(pairs);
    for (Vertex x : {e.u, e.v}) push_back(is_restricted(x) ? into.restricted : into.free, x);
  }
}

Workspace::Pools Workspace::dissolve(NodeSummary& s) {
  Pools p;
  append(p.restricted, s.isolated_restricted);
  append(p.restricted, s.unmatched_restricted);
  append(p.free, s.isolated_free);
  append(p.free, s.unmatched_free);
  release_pairs(s.full, p);
  release_pairs(s.semi, p);
  release_pairs(s.free, p);
  return p;
}

std::vector<Vertex> Workspace::vertices(const Chain& c) const {
  std::vector<Vertex> out;
  out.reserve(c.size);
  for (Vertex v = c.head; v >= 0; v = slot_[v].next) out.push_back(v);
  return out;
}

std::vector<Edge> Workspace::pairs(const Chain& c) const {
  std::vector<Edge> out;
  out.reserve(c.size);
  for (Vertex v = c.head; v >= 0; v = slot_[v].next) out.push_back({v, slot_[v].partner});
  return out;
}

// ---------------------------------------------------------------------------
// Combines

NodeSummary Workspace::leaf(Vertex v) {
  NodeSummary s;
  s.n = 1;
  if (is_restricted(v)) {
    s.r = 1;
    s.exemplar_restricted = v;
    push_back(s.isolated_restricted, v);
  } else {
    s.exemplar_free = v;
    push_back(s.isolated_free, v);
  }
  return s;
}

NodeSummary Workspace::combine_union(NodeSummary left, NodeSummary right) {
  NodeSummary out;
  out.full = left.full;
  append(out.full, right.full);
  out.semi = left.semi;
  append(out.semi, right.semi);
  out.free = left.free;
  append(out.free, right.free);
  out.isolated_restricted = left.isolated_restricted;
  append(out.isolated_restricted, right.isolated_restricted);
  out.unmatched_restricted = left.unmatched_restricted;
  append(out.unmatched_restricted, right.unmatched_restricted);
  out.isolated_free = left.isolated_free;
  append(out.isolated_free, right.isolated_free);
  out.unmatched_free = left.unmatched_free;
  append(out.unmatched_free, right.unmatched_free);
  out.n = left.n + right.n;
  out.r = left.r + right.r;
  out.rf_witness = left.rf_witness ? left.rf_witness : right.rf_witness;
  out.exemplar_restricted = min_defined(left.exemplar_restricted, right.exemplar_restricted);
  out.exemplar_free = min_defined(left.exemplar_free, right.exemplar_free);
  return out;
}

NodeSummary Workspace::combine_joint(NodeSummary left, NodeSummary right, JointContext* context) {
  JointContext ctx;
  if (right.r > left.r) {
    std::swap(left, right);
    ctx.swapped = true;
  }
  ctx.left_unmatched_restricted = left.unmatched_restricted_count();
  ctx.right_restricted = right.r;
  ctx.right_free = right.n - right.r;
  ctx.right_surplus = ctx.right_restricted - ctx.left_unmatched_restricted;
  ctx.left_k = left.k();
  ctx.left_s = left.s();
  ctx.left_f = left.f();

  NodeSummary out;
  out.n = left.n + right.n;
  out.r = left.r + right.r;
  out.exemplar_restricted = min_defined(left.exemplar_restricted, right.exemplar_restricted);
  out.exemplar_free = min_defined(left.exemplar_free, right.exemplar_free);
  // Every cross pair is an edge of the join.
  if (left.exemplar_restricted >= 0 && right.exemplar_free >= 0)
    out.rf_witness = Edge{left.exemplar_restricted, right.exemplar_free};
  else if (right.exemplar_restricted >= 0 && left.exemplar_free >= 0)
    out.rf_witness = Edge{right.exemplar_restricted, left.exemplar_free};
  else
    out.rf_witness = left.rf_witness ? left.rf_witness : right.rf_witness;

  if (out.r == 0) {
    ctx.chosen = JointCase::NoRestricted;
    const Vertex a = left.exemplar_free;
    const Vertex b = right.exemplar_free;
    Pools lp = dissolve(left);
    Pools rp = dissolve(right);
    erase(lp.free, a);
    erase(rp.free, b);
    make_pair(out.free, a, b);
    append(out.unmatched_free, lp.free);
    append(out.unmatched_free, rp.free);
  } else if (left.r == right.r) {
    ctx.chosen = JointCase::BalancedCross;
    Pools lp = dissolve(left);
    Pools rp = dissolve(right);
    ctx.sizes.cross_full = lp.restricted.size;
    while (!lp.restricted.empty()) make_pair(out.full, pop_front(lp.restricted), pop_front(rp.restricted));
    append(out.unmatched_free, lp.free);
    append(out.unmatched_free, rp.free);
  } else {
    joint_unbalanced(left, right, out, ctx);
  }

  // Counting identities and the single-free-pair guarantee.
  if (out.r != 2 * out.k() + out.s() + out.unmatched_restricted_count())
    broken(std::string("restricted count after ") + to_string(ctx.chosen));
  if (out.n != 2 * (out.k() + out.s() + out.f()) + out.unmatched_restricted_count() +
                   out.unmatched_free_count())
    broken(std::string("vertex count after ") + to_string(ctx.chosen));
  if (out.isolated_count() != 0) broken("join left isolated vertices");
  if (out.r > 0 && out.f() > 1) broken("more than one free pair after a join");

  if (context) *context = ctx;
  return out;
}

// |R_left| > |R_right|. The right side's own solution is discarded; only its
// vertex pools are used.
void Workspace::joint_unbalanced(NodeSummary& left, NodeSummary& right, NodeSummary& out,
                                 JointContext& ctx) {
  const Vertex iota = ctx.left_unmatched_restricted;
  const Vertex eta = ctx.right_restricted;
  const Vertex right_free = ctx.right_free;
  const Vertex left_free_total = left.n - left.r;
  const Vertex right_isolated_free = right.isolated_free.size;
  const std::optional<Edge> right_witness = right.rf_witness;
  const std::optional<Edge> left_witness = left.rf_witness;
  const bool left_has_isolated = left.isolated_count() > 0;

  if (2 * ctx.left_k + ctx.left_s + iota <= eta) broken("left side does not dominate restricted count");

  Pools rp = dissolve(right);
  Chain left_unmatched_r = left.isolated_restricted;
  append(left_unmatched_r, left.unmatched_restricted);
  Chain left_unmatched_f = left.isolated_free;
  append(left_unmatched_f, left.unmatched_free);
  Chain& full_l = left.full;
  Chain& semi_l = left.semi;

  // Breaks the remaining free pairs of the left solution into free vertices.
  auto drop_left_free_pairs = [&](Chain& free_pool) {
    Pools p;
    release_pairs(left.free, p);
    append(free_pool, p.free);
  };

  // Full pairs made by popping from `a` and `b` in lockstep until `b` is empty.
  auto cross = [&](Chain& a, Chain& b, Chain& into) {
    Vertex made = 0;
    while (!b.empty()) {
      make_pair(into, pop_front(a), pop_front(b));
      ++made;
    }
    return made;
  };

  if (iota >= eta + right_free) {
    ctx.chosen = JointCase::SurplusCoversRight;
    Chain new_full, new_semi;
    ctx.sizes.left_cover = eta + right_free;
    ctx.sizes.cross_full = cross(left_unmatched_r, rp.restricted, new_full);
    ctx.sizes.right_free_used = cross(left_unmatched_r, rp.free, new_semi);
    out.full = full_l;
    append(out.full, new_full);
    out.semi = semi_l;
    append(out.semi, new_semi);
    out.unmatched_restricted = left_unmatched_r;
    out.unmatched_free = left_unmatched_f;
    drop_left_free_pairs(out.unmatched_free);
    return;
  }

  if (iota > eta) {
    ctx.chosen = JointCase::SurplusCoversRestricted;
    Chain new_full, new_semi;
    ctx.sizes.left_cover = iota;
    ctx.sizes.cross_full = cross(left_unmatched_r, rp.restricted, new_full);
    while (!left_unmatched_r.empty()) {
      make_pair(new_semi, pop_front(left_unmatched_r), pop_front(rp.free));
      ++ctx.sizes.right_free_used;
    }
    out.full = full_l;
    append(out.full, new_full);
    out.semi = semi_l;
    append(out.semi, new_semi);
    out.unmatched_free = left_unmatched_f;
    drop_left_free_pairs(out.unmatched_free);
    append(out.unmatched_free, rp.free);
    return;
  }

  if (iota < eta) {
    const Vertex surplus = ctx.right_surplus;
    const Vertex s_left = ctx.left_s;
    if (surplus <= s_left) {
      ctx.chosen = JointCase::ReuseSemiEndpoints;
    } else if ((surplus - s_left) % 2 == 0) {
      ctx.chosen = JointCase::SplitFullPairsEven;
    } else if (left_free_total > 0) {
      ctx.chosen = JointCase::OddSemiLeftFree;
    } else if (right_free > 0) {
      if (right_witness)
        ctx.chosen = JointCase::OddSemiRightWitness;
      else if (right_free == right_isolated_free)
        ctx.chosen = JointCase::OddSemiSplitFullPair;
      else
        ctx.chosen = JointCase::OddSemiSplitFullPairNoEdge;
    } else {
      ctx.chosen = JointCase::OddLeaveOneUnmatched;
    }

    // The witness endpoints are set aside before any right restricted vertex
    // is consumed, so the restricted one lands in the last partition.
    if (ctx.chosen == JointCase::OddSemiRightWitness) {
      erase(rp.restricted, right_witness->u);
      erase(rp.free, right_witness->v);
    }

    Chain cross_full, repaired, released;
    ctx.sizes.right_to_unmatched = iota;
    ctx.sizes.left_cover = iota;
    ctx.sizes.cross_full = cross(rp.restricted, left_unmatched_r, cross_full);
    ctx.sizes.right_beyond = surplus;

    const Vertex semi_used = std::min(surplus, s_left);
    for (Vertex i = 0; i < semi_used; ++i) {
      const Edge e = take_pair(semi_l);  // (restricted, free)
      make_pair(repaired, e.u, pop_front(rp.restricted));
      push_back(released, e.v);
    }
    ctx.sizes.right_to_semi = semi_used;
    ctx.sizes.semi_repaired = semi_used;

    if (ctx.chosen == JointCase::ReuseSemiEndpoints) {
      out.full = full_l;
      append(out.full, cross_full);
      append(out.full, repaired);
      out.semi = semi_l;
      out.unmatched_free = left_unmatched_f;
      append(out.unmatched_free, released);
      drop_left_free_pairs(out.unmatched_free);
      append(out.unmatched_free, rp.free);
      return;
    }

    // Every left free vertex is now unmatched.
    Chain left_free = left_unmatched_f;
    append(left_free, released);
    drop_left_free_pairs(left_free);

    Chain odd_semi, repair_full, split_full;
    Chain& rest = rp.restricted;
    switch (ctx.chosen) {
      case JointCase::OddSemiLeftFree:
        make_pair(odd_semi, pop_front(rest), pop_front(left_free));
        break;
      case JointCase::OddSemiRightWitness:
        make_pair(odd_semi, right_witness->u, right_witness->v);
        break;
      case JointCase::OddSemiSplitFullPair:
      case JointCase::OddSemiSplitFullPairNoEdge: {
        const Edge lent = take_pair(full_l);
        make_pair(odd_semi, lent.u, pop_front(rp.free));
        make_pair(repair_full, lent.v, pop_front(rest));
        break;
      }
      default:
        break;
    }
    ctx.sizes.right_to_full = rest.size;
    const Vertex keep_one = ctx.chosen == JointCase::OddLeaveOneUnmatched ? 1 : 0;
    if ((rest.size - keep_one) % 2 != 0) broken("odd remainder before splitting full pairs");
    while (rest.size > keep_one) {
      const Edge e = take_pair(full_l);
      make_pair(split_full, e.u, pop_front(rest));
      make_pair(split_full, e.v, pop_front(rest));
      ++ctx.sizes.full_split_source;
    }
    ctx.sizes.split_full = split_full.size;
    ctx.sizes.full_kept = full_l.size;
    ctx.sizes.repair_full = repair_full.size;
    ctx.sizes.odd_semi = odd_semi.size;

    out.full = cross_full;
    append(out.full, repaired);
    append(out.full, split_full);
    append(out.full, full_l);
    append(out.full, repair_full);
    out.semi = odd_semi;
    out.unmatched_restricted = rest;  // empty, or the one vertex left over
    out.unmatched_free = left_free;
    append(out.unmatched_free, rp.free);
    return;
  }

  // iota == eta
  if (iota != 0) {
    ctx.chosen = JointCase::ExactCover;
    Chain cross_full;
    ctx.sizes.left_cover = iota;
    ctx.sizes.cross_full = cross(left_unmatched_r, rp.restricted, cross_full);
    out.full = full_l;
    append(out.full, cross_full);
    out.semi = semi_l;
    out.unmatched_free = left_unmatched_f;
    drop_left_free_pairs(out.unmatched_free);
    append(out.unmatched_free, rp.free);
    return;
  }

  // Nothing restricted is unmatched on the left and the right has no
  // restricted vertex: every right vertex is free.
  out.full = full_l;
  out.unmatched_free = left_unmatched_f;
  if (ctx.left_s > 0) {
    ctx.chosen = JointCase::ShiftSemiEndpoint;
    const Edge e = take_pair(semi_l);
    Chain moved;
    make_pair(moved, e.u, pop_front(rp.free));
    out.semi = semi_l;
    append(out.semi, moved);
    push_back(out.unmatched_free, e.v);
    ctx.sizes.right_free_used = 1;
  } else if (ctx.left_f == 0 && !left_has_isolated) {
    ctx.chosen = JointCase::KeepFullPairs;
  } else if (right_free >= 2) {
    ctx.chosen = JointCase::SplitFullPairTwoFree;
    const Edge e = take_pair(out.full);
    make_pair(out.semi, e.u, pop_front(rp.free));
    make_pair(out.semi, e.v, pop_front(rp.free));
    ctx.sizes.right_free_used = 2;
    ctx.sizes.full_split_source = 1;
  } else if (left_witness) {
    ctx.chosen = JointCase::SplitFullPairWitness;
    // Every left restricted vertex sits in a full pair here.
    const Vertex wr = left_witness->u;
    const Vertex wf = left_witness->v;
    const Vertex mate = slot_[wr].partner;
    erase(out.full, slot_[wr].linked ? wr : mate);
    slot_[wr].partner = slot_[mate].partner = -1;
    drop_left_free_pairs(out.unmatched_free);
    erase(out.unmatched_free, wf);
    make_pair(out.semi, wr, wf);
    make_pair(out.semi, mate, pop_front(rp.free));
    ctx.sizes.right_free_used = 1;
    ctx.sizes.full_split_source = 1;
  } else {
    ctx.chosen = JointCase::AppendFreePair;
    drop_left_free_pairs(out.unmatched_free);
    const Vertex a = pop_front(out.unmatched_free);
    make_pair(out.free, a, pop_front(rp.free));
    ctx.sizes.right_free_used = 1;
  }
  drop_left_free_pairs(out.unmatched_free);
  append(out.unmatched_free, rp.free);
}

// ---------------------------------------------------------------------------

MPDSolution Workspace::extract(const NodeSummary& root) const {
  if (root.isolated_count() > 0) {
    std::vector<Vertex> iso = vertices(root.isolated_restricted);
    for (Vertex v : vertices(root.isolated_free)) iso.push_back(v);
    std::sort(iso.begin(), iso.end());
    throw NoSolutionError(std::move(iso));
  }
  MPDSolution sol;
  sol.pairs.reserve(static_cast<std::size_t>(root.k() + root.s() + root.f()));
  auto emit = [&](const Chain& c, EdgeClass cls) {
    for (Vertex v = c.head; v >= 0; v = slot_[v].next) {
      const Vertex w = slot_[v].partner;
      sol.pairs.push_back({std::min(v, w), std::max(v, w), cls});
    }
  };
  emit(root.full, EdgeClass::Full);
  emit(root.semi, EdgeClass::Semi);
  emit(root.free, EdgeClass::Free);
  sol.k = root.k();
  sol.s = root.s();
  sol.f = root.f();
  sol.matched_number = 2 * sol.k + sol.s;
  return sol;
}

void Workspace::audit(const NodeSummary& s) const {
  std::vector<std::uint8_t> seen(slot_.size(), 0);
  auto mark = [&](Vertex v) {
    if (v < 0 || v >= static_cast<Vertex>(seen.size())) broken("vertex out of range in summary");
    if (seen[v]) broken("vertex " + std::to_string(v) + " appears twice in a summary");
    seen[v] = 1;
  };
  auto walk = [&](const Chain& c, auto&& check) {
    Vertex count = 0;
    Vertex last = -1;
    for (Vertex v = c.head; v >= 0; v = slot_[v].next) {
      if (slot_[v].prev != last) broken("broken back link");
      if (!slot_[v].linked) broken("chain member not marked linked");
      check(v);
      last = v;
      ++count;
    }
    if (count != c.size || last != c.tail) broken("chain size or tail mismatch");
  };
  auto cls_of = [&](Vertex a, Vertex b) {
    const int inside = int(is_restricted(a)) + int(is_restricted(b));
    return inside == 2 ? EdgeClass::Full : inside == 1 ? EdgeClass::Semi : EdgeClass::Free;
  };
  auto pairs_of = [&](EdgeClass want) {
    return [&, want](Vertex v) {
      const Vertex w = slot_[v].partner;
      if (w < 0 || slot_[w].partner != v) broken("asymmetric pair");
      if (slot_[w].linked) broken("both pair endpoints linked");
      mark(v);
      mark(w);
      if (cls_of(v, w) != want) broken("pair in wrong class chain");
      if (want == EdgeClass::Semi && !is_restricted(v)) broken("semi pair not linked by restricted end");
    };
  };
  auto pool_of = [&](bool want_restricted) {
    return [&, want_restricted](Vertex v) {
      mark(v);
      if (is_restricted(v) != want_restricted) broken("vertex in wrong pool");
      if (slot_[v].partner >= 0) broken("pooled vertex still paired");
    };
  };
  walk(s.full, pairs_of(EdgeClass::Full));
  walk(s.semi, pairs_of(EdgeClass::Semi));
  walk(s.free, pairs_of(EdgeClass::Free));
  walk(s.isolated_restricted, pool_of(true));
  walk(s.unmatched_restricted, pool_of(true));
  walk(s.isolated_free, pool_of(false));
  walk(s.unmatched_free, pool_of(false));
  if (s.r != 2 * s.k() + s.s() + s.unmatched_restricted_count()) broken("restricted count identity");
  if (s.n != 2 * (s.k() + s.s() + s.f()) + s.unmatched_restricted_count() + s.unmatched_free_count())
    broken("vertex count identity");
  if (s.rf_witness) {
    const Edge w = *s.rf_witness;
    if (!seen[w.u] || !seen[w.v] || !is_restricted(w.u) || is_restricted(w.v))
      broken("witness endpoints not a restricted/free pair of this subgraph");
  }
}

// ---------------------------------------------------------------------------

SolveResult solve_traced(const Cotree& tree, const RestrictedSet& restricted) {
  if (tree.empty()) throw InputError("empty cotree");
  if (restricted.universe() != tree.leaf_count()) {
    throw InputError("restricted set universe " + std::to_string(restricted.universe()) +
                     " does not match cotree leaf count " + std::to_string(tree.leaf_count()));
  }
  Workspace ws(restricted);
  SolveResult result;
  std::vector<NodeSummary> stack;
  for (NodeId id : tree.postorder()) {
    const auto& nd = tree.node(id);
    if (nd.kind == Cotree::Kind::Leaf) {
      stack.push_back(ws.leaf(nd.vertex));
      continue;
    }
    NodeSummary right = stack.back();
    stack.pop_back();
    NodeSummary left = stack.back();
    stack.pop_back();
    if (nd.kind == Cotree::Kind::Union) {
      stack.push_back(ws.combine_union(left, right));
    } else {
      JointContext ctx;
      stack.push_back(ws.combine_joint(left, right, &ctx));
      result.trace.push_back(ctx.chosen);
    }
  }
  result.solution = ws.extract(stack.back());
  return result;
}

}  // namespace mpd
