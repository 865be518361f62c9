#include "frusta/certificate.hpp"

#include <set>

namespace frusta {

const char* ref_kind_name(RefKind kind) {
  switch (kind) {
    case RefKind::Source: return "source";
    case RefKind::Target: return "target";
    case RefKind::Region: return "region";
    case RefKind::Piece: return "piece";
  }
  return "?";
}

const char* claim_type_name(const ClaimBody& body) {
  struct Visitor {
    const char* operator()(const TilingClaim&) const { return "tiling"; }
    const char* operator()(const VolumeClaim&) const { return "volume"; }
    const char* operator()(const CongruenceClaim&) const { return "congruence"; }
    const char* operator()(const ScaleClaim&) const { return "scale"; }
    const char* operator()(const ArithmeticClaim&) const { return "arithmetic"; }
  };
  return std::visit(Visitor{}, body);
}

const ConvexPolytope& RearrangementCertificate::resolve(const EntityRef& ref) const {
  auto pick = [&](const std::vector<SolidEntry>& list) -> const ConvexPolytope& {
    if (ref.index < 0 || ref.index >= static_cast<int>(list.size()))
      throw CertificateError("reference out of range: " + std::string(ref_kind_name(ref.kind)) +
                             "[" + std::to_string(ref.index) + "]");
    return list[ref.index].poly;
  };
  switch (ref.kind) {
    case RefKind::Source: return pick(sources);
    case RefKind::Target: return pick(targets);
    case RefKind::Region: return pick(regions);
    case RefKind::Piece:
      if (ref.index < 0 || ref.index >= static_cast<int>(pieces.size()))
        throw CertificateError("reference out of range: piece[" + std::to_string(ref.index) + "]");
      return pieces[ref.index].poly;
  }
  throw CertificateError("bad reference kind");
}

void RearrangementCertificate::validate_structure() const {
  auto check_ref = [&](const EntityRef& ref, const char* where) {
    const int limit = ref.kind == RefKind::Source   ? static_cast<int>(sources.size())
                      : ref.kind == RefKind::Target ? static_cast<int>(targets.size())
                      : ref.kind == RefKind::Region ? static_cast<int>(regions.size())
                                                    : static_cast<int>(pieces.size());
    if (ref.index < 0 || ref.index >= limit)
      throw CertificateError(std::string(where) + ": reference out of range (" +
                             ref_kind_name(ref.kind) + "[" + std::to_string(ref.index) + "])");
  };

  std::set<std::string> ids;
  auto check_id = [&](const std::string& id, const char* what) {
    if (id.empty()) throw CertificateError(std::string(what) + ": empty id");
    if (!ids.insert(id).second) throw CertificateError("duplicate id \"" + id + "\"");
  };
  for (const auto& s : sources) check_id(s.id, "source");
  for (const auto& t : targets) check_id(t.id, "target");
  for (const auto& r : regions) check_id(r.id, "region");
  for (const auto& p : pieces) check_id(p.id, "piece");

  for (const auto& piece : pieces) {
    if (piece.source < 0 || piece.source >= static_cast<int>(sources.size()))
      throw CertificateError("piece \"" + piece.id + "\": source index out of range");
    if (piece.target < 0 || piece.target >= static_cast<int>(targets.size()))
      throw CertificateError("piece \"" + piece.id + "\": target index out of range");
  }

  for (const auto& claim : claims) {
    if (const auto* tiling = std::get_if<TilingClaim>(&claim.body)) {
      if (tiling->container.kind == RefKind::Piece)
        throw CertificateError("claim \"" + claim.label + "\": container cannot be a piece");
      check_ref(tiling->container, claim.label.c_str());
      if (tiling->pieces.empty())
        throw CertificateError("claim \"" + claim.label + "\": empty piece list");
      std::set<int> seen;
      for (int idx : tiling->pieces) {
        check_ref({RefKind::Piece, idx}, claim.label.c_str());
        if (!seen.insert(idx).second)
          throw CertificateError("claim \"" + claim.label + "\": piece listed twice");
      }
    } else if (const auto* vol = std::get_if<VolumeClaim>(&claim.body)) {
      if (vol->left.empty() || vol->right.empty())
        throw CertificateError("claim \"" + claim.label + "\": empty side");
      for (const auto& r : vol->left) check_ref(r, claim.label.c_str());
      for (const auto& r : vol->right) check_ref(r, claim.label.c_str());
    } else if (const auto* cong = std::get_if<CongruenceClaim>(&claim.body)) {
      check_ref(cong->left, claim.label.c_str());
      check_ref(cong->right, claim.label.c_str());
    } else if (const auto* sc = std::get_if<ScaleClaim>(&claim.body)) {
      check_ref(sc->from, claim.label.c_str());
      check_ref(sc->to, claim.label.c_str());
    } else if (const auto* arith = std::get_if<ArithmeticClaim>(&claim.body)) {
      for (const auto& [coeff, ref] : arith->left.volume_terms) check_ref(ref, claim.label.c_str());
      for (const auto& [coeff, ref] : arith->right.volume_terms) check_ref(ref, claim.label.c_str());
    }
  }

}

bool RearrangementCertificate::piece_target_certified(int piece_index) const {
  for (const auto& claim : claims) {
    const auto* tiling = std::get_if<TilingClaim>(&claim.body);
    if (!tiling) continue;
    if (tiling->container.kind == RefKind::Source) continue;
    for (int idx : tiling->pieces)
      if (idx == piece_index) return true;
  }
  return false;
}

bool RearrangementCertificate::piece_in_volume_claim(int piece_index) const {
  for (const auto& claim : claims) {
    const auto* vol = std::get_if<VolumeClaim>(&claim.body);
    if (!vol) continue;
    for (const auto& ref : vol->left)
      if (ref.kind == RefKind::Piece && ref.index == piece_index) return true;
    for (const auto& ref : vol->right)
      if (ref.kind == RefKind::Piece && ref.index == piece_index) return true;
  }
  return false;
}

}  // namespace frusta
