#include "mpd/oracle.hpp"

#include <bit>
#include <string>
#include <vector>

namespace mpd {

CapExceeded::CapExceeded(Vertex n, Vertex cap)
    : InputError("oracle cap exceeded: n=" + std::to_string(n) + " > cap=" + std::to_string(cap)) {}

namespace {

using Mask = std::uint64_t;

void check_cap(const Graph& g, Vertex cap) {
  const Vertex n = g.vertex_count();
  if (cap > 64) throw InputError("oracle cap above 64 is unsupported");
  if (n > cap) throw CapExceeded(n, cap);
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

// Every matching is reached once: the lowest undecided vertex is either left
// unmatched for good or paired with a higher unused neighbour.
class Search {
 public:
  // `keep_going` returning false skips a subtree; `leaf` sees each matching.
  struct Hooks {
    std::function<bool(const Search&, Vertex next)> keep_going;
    std::function<void(const Search&)> leaf;
  };

  Search(const Graph& g, const RestrictedSet& restricted) : g_(g), n_(g.vertex_count()) {
    closed_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v] = bit(v);
      for (Vertex w : g.neighbors(v)) closed_[v] |= bit(w);
      if (restricted.contains(v)) restricted_mask_ |= bit(v);
    }
    full_mask_ = n_ == 64 ? ~Mask{0} : (bit(n_) - 1);
  }

  std::uint64_t run(const Hooks& hooks) {
    hooks_ = &hooks;
    visited_ = 0;
    recurse(0);
    return visited_;
  }

  bool dominating() const { return dominated_ == full_mask_; }
  const std::vector<Edge>& pairs() const { return pairs_; }
  Vertex k() const { return k_; }
  Vertex s() const { return s_; }
  Vertex f() const { return f_; }
  Vertex matched_number() const { return 2 * k_ + s_; }
  Vertex pair_count() const { return static_cast<Vertex>(pairs_.size()); }

  /// Restricted vertices that can still be matched from vertex `next` on.
  Vertex open_restricted(Vertex next) const {
    const Mask tail = next >= 64 ? 0 : (full_mask_ & ~(bit(next) - 1));
    return std::popcount(restricted_mask_ & ~used_ & tail);
  }

 private:
  static Mask bit(Vertex v) { return Mask{1} << v; }

  void recurse(Vertex from) {
    Vertex i = from;
    while (i < n_ && (used_ & bit(i))) ++i;
    if (i == n_) {
      ++visited_;
      hooks_->leaf(*this);
      return;
    }
    if (!hooks_->keep_going(*this, i)) return;

    recurse(i + 1);
    for (Vertex j : g_.neighbors(i)) {
      if (j < i || (used_ & bit(j))) continue;
      const Mask saved = dominated_;
      const int inside = int((restricted_mask_ >> i) & 1) + int((restricted_mask_ >> j) & 1);
      Vertex& counter = inside == 2 ? k_ : inside == 1 ? s_ : f_;
      used_ |= bit(i) | bit(j);
      dominated_ |= closed_[i] | closed_[j];
      pairs_.push_back({i, j});
      ++counter;
      recurse(i + 1);
      --counter;
      pairs_.pop_back();
      dominated_ = saved;
      used_ &= ~(bit(i) | bit(j));
    }
  }

  const Graph& g_;
  Vertex n_;
  std::vector<Mask> closed_;
  Mask restricted_mask_ = 0;
  Mask full_mask_ = 0;
  Mask used_ = 0;
  Mask dominated_ = 0;
  std::vector<Edge> pairs_;
  Vertex k_ = 0, s_ = 0, f_ = 0;
  std::uint64_t visited_ = 0;
  const Hooks* hooks_ = nullptr;
};

}  // namespace

std::uint64_t enumerate_dominating_matchings(
    const Graph& g, const RestrictedSet& restricted,
    const std::function<void(const DominatingMatching&)>& visit, Vertex cap) {
  check_cap(g, cap);
  Search search(g, restricted);
  Search::Hooks hooks{
      [](const Search&, Vertex) { return true; },
      [&](const Search& st) {
        if (!st.dominating()) return;
        visit({st.pairs(), st.k(), st.s(), st.f(), st.matched_number()});
      }};
  return search.run(hooks);
}

OracleResult oracle_canonical(const Graph& g, const RestrictedSet& restricted,
                              const OracleOptions& options) {
  check_cap(g, options.cap);
  if (restricted.universe() != g.vertex_count())
    throw InputError("restricted set universe does not match vertex count");
  if (auto iso = isolated_vertices(g); !iso.empty()) throw NoSolutionError(std::move(iso));

  OracleResult result;
  bool found = false;
  std::vector<Edge> best;
  Search search(g, restricted);
  Search::Hooks hooks{
      [&](const Search& st, Vertex next) {
        if (options.reference || !found) return true;
        const Vertex bound = st.matched_number() + st.open_restricted(next);
        if (bound < result.beta) return false;
        return !(bound == result.beta && st.f() >= result.f_min);
      },
      [&](const Search& st) {
        if (!st.dominating()) return;
        const Vertex m = st.matched_number();
        if (!found || m > result.beta || (m == result.beta && st.f() < result.f_min)) {
          found = true;
          result.beta = m;
          result.f_min = st.f();
          best = st.pairs();
        }
      }};
  result.count_explored = search.run(hooks);
  if (!found) throw NoSolutionError({});
  result.witness = MPDSolution::from_edges(best, restricted);
  return result;
}

Vertex oracle_paired_domination_number(const Graph& g, const OracleOptions& options) {
  check_cap(g, options.cap);
  if (auto iso = isolated_vertices(g); !iso.empty()) throw NoSolutionError(std::move(iso));

  bool found = false;
  Vertex best = 0;
  const RestrictedSet none(g.vertex_count());
  Search search(g, none);
  Search::Hooks hooks{
      [&](const Search& st, Vertex) {
        return options.reference || !found || st.pair_count() < best;
      },
      [&](const Search& st) {
        if (!st.dominating()) return;
        if (!found || st.pair_count() < best) {
          found = true;
          best = st.pair_count();
        }
      }};
  search.run(hooks);
  if (!found) throw NoSolutionError({});
  return 2 * best;
}

}  // namespace mpd
