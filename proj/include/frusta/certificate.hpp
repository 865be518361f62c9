#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frusta/congruence.hpp"
#include "frusta/solids.hpp"

namespace frusta {

class CertificateError : public Error {
 public:
  using Error::Error;
};

enum class RefKind { Source, Target, Region, Piece };

const char* ref_kind_name(RefKind kind);

struct EntityRef {
  RefKind kind = RefKind::Piece;
  int index = 0;

  friend bool operator==(const EntityRef&, const EntityRef&) = default;
};

// A solid participating in a certificate, at its world pose. Sources are cut
// apart, targets are assembled, regions are auxiliary bookkeeping sub-volumes
// that claims may reference (a slab inside a target box, say) but that do not
// take part in volume conservation.
struct SolidEntry {
  std::string id;
  ConvexPolytope poly;  // world pose
  std::optional<SolidSpec> spec;  // provenance when built from a catalog kind
  RigidMotion pose = RigidMotion::identity();

  friend bool operator==(const SolidEntry&, const SolidEntry&) = default;
};

// One piece of a rearrangement: a polytope in its own local frame with two
// placements, one into a source and one into a target.
struct PlacedPiece {
  std::string id;
  ConvexPolytope poly;  // local frame
  std::optional<SolidSpec> spec;
  int source = 0;
  RigidMotion source_motion = RigidMotion::identity();
  int target = 0;
  RigidMotion target_motion = RigidMotion::identity();

  friend bool operator==(const PlacedPiece&, const PlacedPiece&) = default;
};

// container is a source, target or region; the listed pieces, placed on the
// matching side, must tile it exactly.
struct TilingClaim {
  EntityRef container;
  std::vector<int> pieces;

  friend bool operator==(const TilingClaim&, const TilingClaim&) = default;
};

// Total volume on the left equals total volume on the right. Weaker than a
// tiling by design; `note` records what the equality presupposes.
struct VolumeClaim {
  std::vector<EntityRef> left, right;
  std::string note;

  friend bool operator==(const VolumeClaim&, const VolumeClaim&) = default;
};

// With a witness embedded the verifier re-checks it directly, no search; a
// stated witness that does not hold fails the claim even if the solids
// happen to be congruent some other way.
struct CongruenceClaim {
  EntityRef left, right;
  bool allow_reflection = true;
  std::optional<CongruenceWitness> witness;

  friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

// volume(to) = factor^3 * volume(from)
struct ScaleClaim {
  EntityRef from;
  Rational factor;
  EntityRef to;

  friend bool operator==(const ScaleClaim&, const ScaleClaim&) = default;
};

// constant + sum of coeff * volume(entity)
struct LinearExpr {
  Rational constant;
  std::vector<std::pair<Rational, EntityRef>> volume_terms;

  friend bool operator==(const LinearExpr&, const LinearExpr&) = default;
};

struct ArithmeticClaim {
  LinearExpr left, right;

  friend bool operator==(const ArithmeticClaim&, const ArithmeticClaim&) = default;
};

using ClaimBody = std::variant<TilingClaim, VolumeClaim, CongruenceClaim, ScaleClaim, ArithmeticClaim>;

struct Claim {
  std::string label;
  ClaimBody body;

  friend bool operator==(const Claim&, const Claim&) = default;
};

const char* claim_type_name(const ClaimBody& body);

// The machine form of a dissection argument: cut every source into pieces,
// place every piece into a target, and state what the arrangement proves.
struct RearrangementCertificate {
  std::string name;
  std::map<std::string, std::string> metadata;
  std::vector<SolidEntry> sources;
  std::vector<SolidEntry> targets;
  std::vector<SolidEntry> regions;
  std::vector<PlacedPiece> pieces;
  std::vector<Claim> claims;

  const ConvexPolytope& resolve(const EntityRef& ref) const;

  // Index/reference well-formedness (throws CertificateError). Geometric
  // validity, including motion validity, is the verifier's concern.
  void validate_structure() const;

  // True when the piece appears in a tiling claim whose container is a
  // target or region; such pieces have verified target placements.
  bool piece_target_certified(int piece_index) const;
  bool piece_in_volume_claim(int piece_index) const;

  friend bool operator==(const RearrangementCertificate&, const RearrangementCertificate&) = default;
};

}  // namespace frusta
