#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "frusta/polytope.hpp"

namespace frusta {

// Multiset of squared edge lengths, sorted ascending. Invariant under any
// rigid motion, so unequal fingerprints rule congruence out immediately.
using EdgeFingerprint = std::vector<Rational>;

EdgeFingerprint edge_fingerprint(const ConvexPolytope& p);

struct CongruenceWitness {
  RigidMotion motion;
  std::vector<std::pair<int, int>> vertex_bijection;  // from-index -> to-index

  friend bool operator==(const CongruenceWitness&, const CongruenceWitness&) = default;
};

// Searches for a rigid motion mapping p onto q as a point set (improper
// motions admitted only when allow_reflection). Any isometry between two
// rational-vertex polytopes maps vertices to vertices and is pinned down by
// four affinely independent correspondences, so enumerating candidate
// matches of one anchor quadruple is complete: if a motion exists, one is
// found, and it is automatically rational.
std::optional<CongruenceWitness> find_congruence(const ConvexPolytope& p,
                                                 const ConvexPolytope& q,
                                                 bool allow_reflection = true);

// Re-checks a witness without searching: motion valid, bijection total over
// both vertex sets, every pair mapped exactly.
bool verify_witness(const ConvexPolytope& p, const ConvexPolytope& q,
                    const CongruenceWitness& w);

}  // namespace frusta
