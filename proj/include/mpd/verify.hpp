#pragma once

#include <span>
#include <string>
#include <vector>

#include "mpd/graph.hpp"

namespace mpd {

/// Outcome of a structural check; `reason` is empty when `ok`.
struct Check {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// True iff every pair is an edge of `g` and no vertex is used twice.
Check is_matching(const Graph& g, std::span<const Edge> pairs);

/// True iff every vertex outside `set` has a neighbour inside it.
bool is_dominating(const Graph& g, std::span<const Vertex> set);

/// Quick optimality proofs that need no search.
///  - AllRestrictedMatched: every restricted vertex is matched using
///    ceil(|R|/2) pairs.
///  - OddAllRestricted: |V| = |R| is odd and floor(|R|/2) full pairs leave
///    exactly one restricted vertex unmatched.
enum class Certificate { None, AllRestrictedMatched, OddAllRestricted };

const char* to_string(Certificate c);

struct VerificationReport {
  bool is_matching = false;
  bool is_dominating = false;
  bool valid = false;
  int k = 0;
  int s = 0;
  int f = 0;
  int matched_number = 0;
  Certificate certificate = Certificate::None;
  std::vector<std::string> reasons;
};

/// Checks that `pairs` is a matched-paired-dominating set of `g` and recounts
/// its statistics. Never throws on invalid input; problems land in `reasons`.
VerificationReport verify_solution(const Graph& g, const RestrictedSet& restricted,
                                   std::span<const Edge> pairs);

/// A failed necessary condition for maximality at an unmatched restricted
/// vertex `unmatched`.
struct PropertyViolation {
  enum class Kind {
    AdjacentToFreePair,        // unmatched vertex touches a free pair
    NeighbourOutsideSet,       // a neighbour of the unmatched vertex is unmatched
    PartnerHasOutsideNeighbour,// partner of a matched neighbour reaches outside
    AdjacentToSemiRestricted,  // unmatched vertex touches the restricted end of a semi pair
  };
  Kind kind;
  Vertex unmatched;
  Vertex witness;  // offending endpoint / neighbour
  Vertex other;    // second vertex involved, or -1
};

std::string describe(const PropertyViolation& v);

/// Necessary conditions every maximum solution of a connected graph satisfies
/// at each restricted vertex it leaves unmatched. Throws InputError if
/// `solution` is not a valid matched-paired-dominating set of `g`.
std::vector<PropertyViolation> check_maximum_properties(const Graph& g,
                                                        const RestrictedSet& restricted,
                                                        const MPDSolution& solution);

}  // namespace mpd
