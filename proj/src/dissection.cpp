#include "frusta/dissection.hpp"

#include <algorithm>
#include <sstream>

#include "frusta/congruence.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frusta {

namespace {

struct WorldPiece {
  ConvexPolytope poly;
  int index;  // position in the placed list
};

// Transform every piece into world coordinates up front; an invalid motion
// surfaces as a failure tied to its piece. The transforms are independent,
// so the parallel path fans them out.
std::optional<TilingFailure> realize(
    const std::vector<std::pair<ConvexPolytope, RigidMotion>>& placed,
    std::vector<WorldPiece>& out, Exec exec) {
  const long long n = static_cast<long long>(placed.size());
  std::vector<std::optional<ConvexPolytope>> world(placed.size());
  long long bad = n;
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) reduction(min : bad)
    for (long long i = 0; i < n; ++i) {
      if (validate_motion(placed[i].second))
        world[i] = transform(placed[i].first, placed[i].second);
      else
        bad = std::min(bad, i);
    }
#else
    exec = Exec::Serial;
#endif
  }
  if (exec == Exec::Serial) {
    for (long long i = 0; i < n && bad == n; ++i) {
      if (validate_motion(placed[i].second))
        world[i] = transform(placed[i].first, placed[i].second);
      else
        bad = i;
    }
  }
  if (bad < n)
    return TilingFailure{"invalid motion (not an isometry)", static_cast<int>(bad), -1};
  out.reserve(placed.size());
  for (long long i = 0; i < n; ++i) out.push_back({std::move(*world[i]), static_cast<int>(i)});
  return std::nullopt;
}

std::optional<TilingFailure> check_tiling(const ConvexPolytope& container,
                                          const std::vector<WorldPiece>& world,
                                          const Rational& extra_volume, Exec exec) {
  // containment
  for (const auto& wp : world) {
    if (!contains_polytope(container, wp.poly))
      return TilingFailure{"piece not contained in container", wp.index, -1};
  }

  // pairwise interior disjointness over the flattened pair list; the cheap
  // bounding-box test discharges every pair that does not even come close
  const int n = static_cast<int>(world.size());
  std::vector<std::array<int, 2>> pairs;
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});

  auto pair_overlaps = [&](const std::array<int, 2>& pr) {
    const auto& a = world[pr[0]].poly;
    const auto& b = world[pr[1]].poly;
    if (!boxes_overlap(a.bounds(), b.bounds())) return false;
    return intersect(a, b).has_value();
  };

  const long long pair_count = static_cast<long long>(pairs.size());
  long long worst = pair_count;  // index of first failing pair, if any
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(min : worst)
    for (long long k = 0; k < pair_count; ++k) {
      if (pair_overlaps(pairs[k])) worst = std::min(worst, k);
    }
#else
    exec = Exec::Serial;
#endif
  }
  if (exec == Exec::Serial) {
    for (long long k = 0; k < pair_count; ++k)
      if (pair_overlaps(pairs[k])) {
        worst = k;
        break;
      }
  }
  if (worst < pair_count) {
    const auto [i, j] = pairs[worst];
    return TilingFailure{"pieces overlap with positive volume", world[i].index, world[j].index};
  }

  Rational total = extra_volume;
  for (const auto& wp : world) total += wp.poly.volume();
  if (total != container.volume()) {
    return TilingFailure{"piece volumes sum to " + total.str() + ", container has " +
                             container.volume().str(),
                         -1, -1};
  }
  return std::nullopt;
}

}  // namespace

std::optional<TilingFailure> verify_tiling(
    const ConvexPolytope& container,
    const std::vector<std::pair<ConvexPolytope, RigidMotion>>& placed,
    Exec exec) {
  std::vector<WorldPiece> world;
  if (auto fail = realize(placed, world, exec)) return fail;
  return check_tiling(container, world, Rational(0), exec);
}

bool volume_equality(const std::vector<ConvexPolytope>& left,
                     const std::vector<ConvexPolytope>& right) {
  Rational l, r;
  for (const auto& p : left) l += p.volume();
  for (const auto& p : right) r += p.volume();
  return l == r;
}

const char* claim_status_name(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Exact: return "Exact";
    case ClaimStatus::VolumeEquality: return "VolumeEquality";
    case ClaimStatus::Verified: return "Verified";
    case ClaimStatus::Failed: return "Failed";
  }
  return "?";
}

namespace {

std::string piece_name(const RearrangementCertificate& cert, int index) {
  if (index < 0) return "-";
  return "\"" + cert.pieces[index].id + "\"";
}

// Every piece is needed in world coordinates several times (its claims plus
// the per-source and per-target conservation checks), so both placements are
// realized once up front. A nullopt marks an invalid motion.
struct RealizedPieces {
  std::vector<std::optional<ConvexPolytope>> source_world, target_world;
};

RealizedPieces realize_certificate(const RearrangementCertificate& cert, Exec exec) {
  const long long n = static_cast<long long>(cert.pieces.size());
  RealizedPieces out;
  out.source_world.resize(cert.pieces.size());
  out.target_world.resize(cert.pieces.size());
  auto realize_one = [&](long long i) {
    const auto& piece = cert.pieces[i];
    if (validate_motion(piece.source_motion))
      out.source_world[i] = transform(piece.poly, piece.source_motion);
    if (validate_motion(piece.target_motion))
      out.target_world[i] = transform(piece.poly, piece.target_motion);
  };
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < n; ++i) realize_one(i);
#else
    exec = Exec::Serial;
#endif
  }
  if (exec == Exec::Serial)
    for (long long i = 0; i < n; ++i) realize_one(i);
  return out;
}

// Gathers the world-frame copies for a claim or conservation check; reports
// the first piece with an invalid placement instead.
std::optional<TilingFailure> gather(const RealizedPieces& realized, bool source_side,
                                    const std::vector<int>& piece_indices,
                                    std::vector<WorldPiece>& out) {
  const auto& world = source_side ? realized.source_world : realized.target_world;
  out.reserve(piece_indices.size());
  for (size_t k = 0; k < piece_indices.size(); ++k) {
    const auto& poly = world[piece_indices[k]];
    if (!poly) return TilingFailure{"invalid motion (not an isometry)", static_cast<int>(k), -1};
    out.push_back({*poly, static_cast<int>(k)});
  }
  return std::nullopt;
}

ClaimResult evaluate_claim(const RearrangementCertificate& cert, const RealizedPieces& realized,
                           const Claim& claim, Exec exec) {
  ClaimResult result;
  result.label = claim.label;
  try {
    if (const auto* tiling = std::get_if<TilingClaim>(&claim.body)) {
      const ConvexPolytope& container = cert.resolve(tiling->container);
      const bool source_side = tiling->container.kind == RefKind::Source;
      std::vector<WorldPiece> world;
      auto fail = gather(realized, source_side, tiling->pieces, world);
      if (!fail) fail = check_tiling(container, world, Rational(0), exec);
      if (fail) {
        result.status = ClaimStatus::Failed;
        result.detail = fail->reason;
        if (fail->piece_a >= 0) {
          result.detail += " [" + piece_name(cert, tiling->pieces[fail->piece_a]);
          if (fail->piece_b >= 0) result.detail += ", " + piece_name(cert, tiling->pieces[fail->piece_b]);
          result.detail += "]";
        }
      } else {
        result.status = ClaimStatus::Exact;
      }
    } else if (const auto* vol = std::get_if<VolumeClaim>(&claim.body)) {
      Rational l, r;
      for (const auto& ref : vol->left) l += cert.resolve(ref).volume();
      for (const auto& ref : vol->right) r += cert.resolve(ref).volume();
      if (l == r) {
        result.status = ClaimStatus::VolumeEquality;
        result.detail = l.str() + " = " + r.str();
      } else {
        result.status = ClaimStatus::Failed;
        result.detail = "volumes differ: " + l.str() + " vs " + r.str();
      }
    } else if (const auto* cong = std::get_if<CongruenceClaim>(&claim.body)) {
      const auto& p = cert.resolve(cong->left);
      const auto& q = cert.resolve(cong->right);
      if (cong->witness) {
        const bool orientation_ok = cong->allow_reflection || cong->witness->motion.orientation > 0;
        if (orientation_ok && verify_witness(p, q, *cong->witness)) {
          result.status = ClaimStatus::Verified;
          result.detail = cong->witness->motion.orientation > 0 ? "witness re-checked (proper)"
                                                                : "witness re-checked (improper)";
        } else {
          result.status = ClaimStatus::Failed;
          result.detail = "stated witness does not verify";
        }
      } else if (auto witness = find_congruence(p, q, cong->allow_reflection);
                 witness && verify_witness(p, q, *witness)) {
        result.status = ClaimStatus::Verified;
        result.detail = witness->motion.orientation > 0 ? "proper motion" : "improper motion";
      } else {
        result.status = ClaimStatus::Failed;
        result.detail = "no congruence found";
      }
    } else if (const auto* sc = std::get_if<ScaleClaim>(&claim.body)) {
      const Rational lhs = cert.resolve(sc->to).volume();
      const Rational rhs = cube(sc->factor) * cert.resolve(sc->from).volume();
      if (lhs == rhs) {
        result.status = ClaimStatus::Verified;
        result.detail = lhs.str() + " = " + sc->factor.str() + "^3 * volume";
      } else {
        result.status = ClaimStatus::Failed;
        result.detail = "scaled volumes differ: " + lhs.str() + " vs " + rhs.str();
      }
    } else if (const auto* arith = std::get_if<ArithmeticClaim>(&claim.body)) {
      auto eval = [&](const LinearExpr& e) {
        Rational v = e.constant;
        for (const auto& [coeff, ref] : e.volume_terms) v += coeff * cert.resolve(ref).volume();
        return v;
      };
      const Rational l = eval(arith->left), r = eval(arith->right);
      if (l == r) {
        result.status = ClaimStatus::Verified;
        result.detail = l.str() + " = " + r.str();
      } else {
        result.status = ClaimStatus::Failed;
        result.detail = "values differ: " + l.str() + " vs " + r.str();
      }
    }
  } catch (const Error& e) {
    result.status = ClaimStatus::Failed;
    result.detail = e.what();
  }
  return result;
}

}  // namespace

Verdict verify_certificate(const RearrangementCertificate& cert, Exec exec) {
  cert.validate_structure();
  const RealizedPieces realized = realize_certificate(cert, exec);

  Verdict verdict;
  verdict.claims.resize(cert.claims.size());

  const int claim_count = static_cast<int>(cert.claims.size());
  if (exec == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < claim_count; ++i)
      verdict.claims[i] = evaluate_claim(cert, realized, cert.claims[i], Exec::Serial);
#else
    for (int i = 0; i < claim_count; ++i)
      verdict.claims[i] = evaluate_claim(cert, realized, cert.claims[i], Exec::Serial);
#endif
  } else {
    for (int i = 0; i < claim_count; ++i)
      verdict.claims[i] = evaluate_claim(cert, realized, cert.claims[i], Exec::Serial);
  }

  // conservation: sources are exactly dissected ...
  for (size_t s = 0; s < cert.sources.size(); ++s) {
    std::vector<int> assigned;
    for (size_t i = 0; i < cert.pieces.size(); ++i)
      if (cert.pieces[i].source == static_cast<int>(s)) assigned.push_back(static_cast<int>(i));
    ClaimResult result;
    result.label = "conservation: source \"" + cert.sources[s].id + "\"";
    if (assigned.empty()) {
      result.status = ClaimStatus::Failed;
      result.detail = "no pieces assigned";
    } else {
      std::vector<WorldPiece> world;
      auto fail = gather(realized, true, assigned, world);
      if (!fail) fail = check_tiling(cert.sources[s].poly, world, Rational(0), exec);
      if (fail) {
        result.status = ClaimStatus::Failed;
        result.detail = fail->reason;
      } else {
        result.status = ClaimStatus::Exact;
      }
    }
    verdict.conservation.push_back(std::move(result));
  }

  // ... and targets are exactly assembled, except for pieces whose placement
  // is covered only by a volume claim; their volume still has to balance.
  for (size_t t = 0; t < cert.targets.size(); ++t) {
    std::vector<int> assigned;
    Rational exempt_volume;
    bool any = false;
    for (size_t i = 0; i < cert.pieces.size(); ++i) {
      const auto& piece = cert.pieces[i];
      if (piece.target != static_cast<int>(t)) continue;
      any = true;
      const bool exempt = !cert.piece_target_certified(static_cast<int>(i)) &&
                          cert.piece_in_volume_claim(static_cast<int>(i));
      if (exempt)
        exempt_volume += piece.poly.volume();
      else
        assigned.push_back(static_cast<int>(i));
    }
    ClaimResult result;
    result.label = "conservation: target \"" + cert.targets[t].id + "\"";
    if (!any) {
      result.status = ClaimStatus::Failed;
      result.detail = "no pieces assigned";
    } else {
      std::vector<WorldPiece> world;
      auto fail = gather(realized, false, assigned, world);
      if (!fail) fail = check_tiling(cert.targets[t].poly, world, exempt_volume, exec);
      if (fail) {
        result.status = ClaimStatus::Failed;
        result.detail = fail->reason;
      } else {
        result.status = exempt_volume.is_zero() ? ClaimStatus::Exact : ClaimStatus::VolumeEquality;
      }
    }
    verdict.conservation.push_back(std::move(result));
  }

  {
    Rational piece_total, source_total, target_total;
    for (const auto& p : cert.pieces) piece_total += p.poly.volume();
    for (const auto& s : cert.sources) source_total += s.poly.volume();
    for (const auto& t : cert.targets) target_total += t.poly.volume();
    ClaimResult result;
    result.label = "conservation: totals";
    if (piece_total == source_total && source_total == target_total) {
      result.status = ClaimStatus::Exact;
      result.detail = "pieces = sources = targets = " + piece_total.str();
    } else {
      result.status = ClaimStatus::Failed;
      result.detail = "pieces " + piece_total.str() + ", sources " + source_total.str() +
                      ", targets " + target_total.str();
    }
    verdict.conservation.push_back(std::move(result));
  }

  for (const auto& claim : cert.claims) {
    if (const auto* vol = std::get_if<VolumeClaim>(&claim.body)) {
      if (!vol->note.empty()) verdict.notes.push_back(claim.label + ": " + vol->note);
    }
  }

  verdict.pass = true;
  for (const auto& r : verdict.claims) verdict.pass &= r.ok();
  for (const auto& r : verdict.conservation) verdict.pass &= r.ok();
  return verdict;
}

std::string Verdict::render() const {
  std::ostringstream os;
  for (const auto& r : claims)
    os << "  [" << claim_status_name(r.status) << "] " << r.label
       << (r.detail.empty() ? "" : " -- " + r.detail) << "\n";
  for (const auto& r : conservation)
    os << "  [" << claim_status_name(r.status) << "] " << r.label
       << (r.detail.empty() ? "" : " -- " + r.detail) << "\n";
  for (const auto& n : notes) os << "  note: " << n << "\n";
  os << (pass ? "overall: PASS" : "overall: FAIL") << "\n";
  return os.str();
}

}  // namespace frusta
