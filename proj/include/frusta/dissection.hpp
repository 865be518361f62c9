#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frusta/certificate.hpp"

namespace frusta {

// Parallel runs the pairwise-disjointness and claim loops with OpenMP when
// available; Serial is the reference path. Both produce identical results,
// including which failure is reported.
enum class Exec { Serial, Parallel };

struct TilingFailure {
  std::string reason;
  int piece_a = -1;  // offending piece (and pair partner, for overlaps)
  int piece_b = -1;
};

// Exact tiling test for convex pieces in a convex container:
//   (a) every placed piece lies inside the container,
//   (b) every pair of placed pieces meets with empty interior,
//   (c) the piece volumes add up to the container volume.
// Together these force a tiling up to shared boundaries. Returns nullopt on
// success ("exact"), otherwise the first failure in deterministic order.
std::optional<TilingFailure> verify_tiling(
    const ConvexPolytope& container,
    const std::vector<std::pair<ConvexPolytope, RigidMotion>>& placed,
    Exec exec = Exec::Parallel);

bool volume_equality(const std::vector<ConvexPolytope>& left,
                     const std::vector<ConvexPolytope>& right);

enum class ClaimStatus { Exact, VolumeEquality, Verified, Failed };

const char* claim_status_name(ClaimStatus s);

struct ClaimResult {
  std::string label;
  ClaimStatus status = ClaimStatus::Failed;
  std::string detail;

  bool ok() const { return status != ClaimStatus::Failed; }
};

struct Verdict {
  std::vector<ClaimResult> claims;        // one per certificate claim, in order
  std::vector<ClaimResult> conservation;  // per-source and per-target checks
  std::vector<std::string> notes;         // dependency notes from volume claims
  bool pass = false;

  std::string render() const;
};

// Evaluates every claim at its declared strength and then enforces global
// conservation: each source is exactly tiled by its pieces under the source
// placements, and each target under the target placements. Pieces whose
// placement is vouched for only by a volume claim are exempt from the
// per-target containment/disjointness tests but still count toward volume.
// Structurally malformed certificates throw CertificateError instead of
// failing.
Verdict verify_certificate(const RearrangementCertificate& cert, Exec exec = Exec::Parallel);

}  // namespace frusta
