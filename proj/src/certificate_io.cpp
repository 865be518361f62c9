#include "frusta/certificate_io.hpp"

#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

namespace frusta {

namespace {

using Json = nlohmann::ordered_json;

// ---- rendering ----

Json motion_json(const RigidMotion& m) {
  Json matrix = Json::array();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) matrix.push_back(m.linear.m[i][j].str());
  return Json{{"matrix", matrix},
              {"translation", Json::array({m.translation.x.str(), m.translation.y.str(),
                                           m.translation.z.str()})},
              {"orientation", m.orientation}};
}

Json spec_json(const SolidSpec& spec) {
  Json params = Json::array();
  for (const auto& p : spec.params) params.push_back(p.str());
  return Json{{"kind", solid_kind_name(spec.kind)}, {"params", params}};
}

Json polytope_json(const ConvexPolytope& poly) {
  Json vertices = Json::array();
  for (const auto& v : poly.vertices())
    vertices.push_back(Json::array({v.x.str(), v.y.str(), v.z.str()}));
  Json faces = Json::array();
  for (const auto& f : poly.faces()) faces.push_back(f.cycle);
  return Json{{"label", poly.label()}, {"vertices", vertices}, {"faces", faces}};
}

Json solid_json(const SolidEntry& solid) {
  Json j{{"id", solid.id}};
  if (solid.spec) {
    j["spec"] = spec_json(*solid.spec);
    j["pose"] = motion_json(solid.pose);
  } else {
    j["polytope"] = polytope_json(solid.poly);
  }
  return j;
}

Json ref_json(const RearrangementCertificate& cert, const EntityRef& ref) {
  switch (ref.kind) {
    case RefKind::Source: return Json{{"solid", cert.sources[ref.index].id}};
    case RefKind::Target: return Json{{"solid", cert.targets[ref.index].id}};
    case RefKind::Region: return Json{{"solid", cert.regions[ref.index].id}};
    case RefKind::Piece: return Json{{"piece", cert.pieces[ref.index].id}};
  }
  throw Error("bad reference");
}

Json expr_json(const RearrangementCertificate& cert, const LinearExpr& e) {
  Json terms = Json::array();
  for (const auto& [coeff, ref] : e.volume_terms)
    terms.push_back(Json{{"coeff", coeff.str()}, {"ref", ref_json(cert, ref)}});
  return Json{{"constant", e.constant.str()}, {"terms", terms}};
}

Json claim_json(const RearrangementCertificate& cert, const Claim& claim) {
  Json j{{"type", claim_type_name(claim.body)}, {"label", claim.label}};
  if (const auto* tiling = std::get_if<TilingClaim>(&claim.body)) {
    j["container"] = ref_json(cert, tiling->container);
    Json pieces = Json::array();
    for (int idx : tiling->pieces) pieces.push_back(cert.pieces[idx].id);
    j["pieces"] = pieces;
  } else if (const auto* vol = std::get_if<VolumeClaim>(&claim.body)) {
    Json left = Json::array(), right = Json::array();
    for (const auto& r : vol->left) left.push_back(ref_json(cert, r));
    for (const auto& r : vol->right) right.push_back(ref_json(cert, r));
    j["left"] = left;
    j["right"] = right;
    if (!vol->note.empty()) j["note"] = vol->note;
  } else if (const auto* cong = std::get_if<CongruenceClaim>(&claim.body)) {
    j["left"] = ref_json(cert, cong->left);
    j["right"] = ref_json(cert, cong->right);
    j["allow_reflection"] = cong->allow_reflection;
    if (cong->witness) {
      Json bijection = Json::array();
      for (const auto& [from, to] : cong->witness->vertex_bijection)
        bijection.push_back(Json::array({from, to}));
      j["witness"] = Json{{"motion", motion_json(cong->witness->motion)},
                          {"bijection", bijection}};
    }
  } else if (const auto* sc = std::get_if<ScaleClaim>(&claim.body)) {
    j["from"] = ref_json(cert, sc->from);
    j["factor"] = sc->factor.str();
    j["to"] = ref_json(cert, sc->to);
  } else if (const auto* arith = std::get_if<ArithmeticClaim>(&claim.body)) {
    j["left"] = expr_json(cert, arith->left);
    j["right"] = expr_json(cert, arith->right);
  }
  return j;
}

// ---- parsing ----

[[noreturn]] void fail(const std::string& path, const std::string& why) {
  throw Error("certificate " + path + ": " + why);
}

void check_keys(const Json& obj, const std::string& path, const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) fail(path, "unknown field \"" + key + "\"");
}

const Json& get(const Json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string get_string(const Json& obj, const std::string& path, const char* key) {
  const Json& v = get(obj, path, key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

Rational parse_rational(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a rational string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

RigidMotion parse_motion(const Json& j, const std::string& path) {
  check_keys(j, path, {"matrix", "translation", "orientation"});
  const Json& matrix = get(j, path, "matrix");
  if (!matrix.is_array() || matrix.size() != 9) fail(path + ".matrix", "expected 9 rationals");
  RigidMotion m;
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      m.linear.m[i][k] = parse_rational(matrix[i * 3 + k], path + ".matrix");
  const Json& tr = get(j, path, "translation");
  if (!tr.is_array() || tr.size() != 3) fail(path + ".translation", "expected 3 rationals");
  m.translation = {parse_rational(tr[0], path), parse_rational(tr[1], path),
                   parse_rational(tr[2], path)};
  const Json& orient = get(j, path, "orientation");
  if (!orient.is_number_integer()) fail(path + ".orientation", "expected +1 or -1");
  m.orientation = orient.get<int>();
  if (m.orientation != 1 && m.orientation != -1) fail(path + ".orientation", "expected +1 or -1");
  return m;
}

SolidSpec parse_spec(const Json& j, const std::string& path) {
  check_keys(j, path, {"kind", "params"});
  SolidSpec spec;
  try {
    spec.kind = parse_solid_kind(get_string(j, path, "kind"));
  } catch (const Error& e) {
    fail(path + ".kind", e.what());
  }
  const Json& params = get(j, path, "params");
  if (!params.is_array()) fail(path + ".params", "expected an array");
  for (size_t i = 0; i < params.size(); ++i)
    spec.params.push_back(parse_rational(params[i], path + ".params[" + std::to_string(i) + "]"));
  return spec;
}

ConvexPolytope parse_polytope(const Json& j, const std::string& path) {
  check_keys(j, path, {"label", "vertices", "faces"});
  const std::string label = get_string(j, path, "label");
  const Json& vs = get(j, path, "vertices");
  if (!vs.is_array()) fail(path + ".vertices", "expected an array");
  std::vector<Point3> vertices;
  for (size_t i = 0; i < vs.size(); ++i) {
    const std::string vp = path + ".vertices[" + std::to_string(i) + "]";
    if (!vs[i].is_array() || vs[i].size() != 3) fail(vp, "expected a rational triple");
    vertices.push_back({parse_rational(vs[i][0], vp), parse_rational(vs[i][1], vp),
                        parse_rational(vs[i][2], vp)});
  }
  const Json& fs = get(j, path, "faces");
  if (!fs.is_array()) fail(path + ".faces", "expected an array");
  std::vector<std::vector<int>> faces;
  for (size_t i = 0; i < fs.size(); ++i) {
    const std::string fp = path + ".faces[" + std::to_string(i) + "]";
    if (!fs[i].is_array()) fail(fp, "expected an index array");
    std::vector<int> cycle;
    for (const auto& idx : fs[i]) {
      if (!idx.is_number_integer()) fail(fp, "expected integer indices");
      cycle.push_back(idx.get<int>());
    }
    faces.push_back(std::move(cycle));
  }
  try {
    return ConvexPolytope::build(std::move(vertices), std::move(faces), label);
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

struct RawSolid {
  std::string id;
  std::optional<ConvexPolytope> poly;
  std::optional<SolidSpec> spec;
  RigidMotion pose;
};

RawSolid parse_solid(const Json& j, const std::string& path) {
  check_keys(j, path, {"id", "spec", "polytope", "pose"});
  RawSolid solid;
  solid.id = get_string(j, path, "id");
  solid.pose = RigidMotion::identity();
  const bool has_spec = j.contains("spec"), has_poly = j.contains("polytope");
  if (has_spec == has_poly) fail(path, "need exactly one of \"spec\" or \"polytope\"");
  if (j.contains("pose")) solid.pose = parse_motion(j["pose"], path + ".pose");
  try {
    if (has_spec) {
      solid.spec = parse_spec(j["spec"], path + ".spec");
      solid.poly = transform(make_solid(*solid.spec), solid.pose);
    } else {
      solid.poly = transform(parse_polytope(j["polytope"], path + ".polytope"), solid.pose);
    }
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return solid;
}

}  // namespace

std::string render_certificate(const RearrangementCertificate& cert) {
  Json j;
  j["version"] = kCertificateFormatVersion;
  j["name"] = cert.name;
  if (!cert.metadata.empty()) j["metadata"] = cert.metadata;
  Json solids = Json::array();
  for (const auto& s : cert.sources) solids.push_back(solid_json(s));
  for (const auto& t : cert.targets) solids.push_back(solid_json(t));
  for (const auto& r : cert.regions) solids.push_back(solid_json(r));
  j["solids"] = solids;
  Json pieces = Json::array();
  for (const auto& piece : cert.pieces) {
    Json p{{"id", piece.id}};
    if (piece.spec)
      p["spec"] = spec_json(*piece.spec);
    else
      p["polytope"] = polytope_json(piece.poly);
    p["source"] = Json{{"solid", cert.sources[piece.source].id},
                       {"motion", motion_json(piece.source_motion)}};
    p["target"] = Json{{"solid", cert.targets[piece.target].id},
                       {"motion", motion_json(piece.target_motion)}};
    pieces.push_back(p);
  }
  j["pieces"] = pieces;
  Json claims = Json::array();
  for (const auto& claim : cert.claims) claims.push_back(claim_json(cert, claim));
  j["claims"] = claims;
  return j.dump(2) + "\n";
}

RearrangementCertificate parse_certificate(const std::string& text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("certificate: ") + e.what());
  }
  check_keys(root, "$", {"version", "name", "metadata", "solids", "pieces", "claims"});
  const Json& version = get(root, "$", "version");
  if (!version.is_number_integer() || version.get<int>() != kCertificateFormatVersion)
    fail("$.version", "unsupported version");

  RearrangementCertificate cert;
  cert.name = root.contains("name") ? get_string(root, "$", "name") : "";
  if (root.contains("metadata")) {
    if (!root["metadata"].is_object()) fail("$.metadata", "expected an object");
    for (const auto& [key, value] : root["metadata"].items()) {
      if (!value.is_string()) fail("$.metadata." + key, "expected a string");
      cert.metadata[key] = value.get<std::string>();
    }
  }

  const Json& solids = get(root, "$", "solids");
  if (!solids.is_array()) fail("$.solids", "expected an array");
  std::vector<RawSolid> raw;
  std::map<std::string, int> solid_index;
  for (size_t i = 0; i < solids.size(); ++i) {
    RawSolid s = parse_solid(solids[i], "$.solids[" + std::to_string(i) + "]");
    if (!solid_index.emplace(s.id, static_cast<int>(i)).second)
      fail("$.solids[" + std::to_string(i) + "]", "duplicate id \"" + s.id + "\"");
    raw.push_back(std::move(s));
  }

  // roles follow from how pieces use each solid: cut-up solids are sources,
  // assembled solids are targets, untouched solids are auxiliary regions
  const Json& pieces = get(root, "$", "pieces");
  if (!pieces.is_array()) fail("$.pieces", "expected an array");
  std::vector<char> as_source(raw.size(), 0), as_target(raw.size(), 0);
  struct RawPlacement {
    int solid;
    RigidMotion motion;
  };
  auto parse_placement = [&](const Json& j, const std::string& path, std::vector<char>& role) {
    check_keys(j, path, {"solid", "motion"});
    const std::string id = get_string(j, path, "solid");
    auto it = solid_index.find(id);
    if (it == solid_index.end()) fail(path, "unknown solid \"" + id + "\"");
    role[it->second] = 1;
    return RawPlacement{it->second, parse_motion(get(j, path, "motion"), path + ".motion")};
  };

  struct RawPiece {
    std::string id;
    std::optional<ConvexPolytope> poly;
    std::optional<SolidSpec> spec;
    RawPlacement source, target;
  };
  std::vector<RawPiece> raw_pieces;
  std::map<std::string, int> piece_index;
  for (size_t i = 0; i < pieces.size(); ++i) {
    const std::string path = "$.pieces[" + std::to_string(i) + "]";
    const Json& j = pieces[i];
    check_keys(j, path, {"id", "spec", "polytope", "source", "target"});
    RawPiece piece;
    piece.id = get_string(j, path, "id");
    const bool has_spec = j.contains("spec"), has_poly = j.contains("polytope");
    if (has_spec == has_poly) fail(path, "need exactly one of \"spec\" or \"polytope\"");
    try {
      if (has_spec) {
        piece.spec = parse_spec(j["spec"], path + ".spec");
        piece.poly = make_solid(*piece.spec);
      } else {
        piece.poly = parse_polytope(j["polytope"], path + ".polytope");
      }
    } catch (const Error& e) {
      fail(path, e.what());
    }
    piece.source = parse_placement(get(j, path, "source"), path + ".source", as_source);
    piece.target = parse_placement(get(j, path, "target"), path + ".target", as_target);
    if (!piece_index.emplace(piece.id, static_cast<int>(i)).second)
      fail(path, "duplicate id \"" + piece.id + "\"");
    raw_pieces.push_back(std::move(piece));
  }

  std::vector<int> to_role_index(raw.size(), -1);
  std::vector<RefKind> role(raw.size(), RefKind::Region);
  for (size_t i = 0; i < raw.size(); ++i) {
    if (as_source[i] && as_target[i])
      fail("$.solids", "solid \"" + raw[i].id + "\" used as both source and target");
    role[i] = as_source[i] ? RefKind::Source : (as_target[i] ? RefKind::Target : RefKind::Region);
    auto& list = as_source[i] ? cert.sources : (as_target[i] ? cert.targets : cert.regions);
    to_role_index[i] = static_cast<int>(list.size());
    list.push_back(SolidEntry{raw[i].id, std::move(*raw[i].poly), raw[i].spec, raw[i].pose});
  }

  for (auto& piece : raw_pieces) {
    cert.pieces.push_back(PlacedPiece{piece.id, std::move(*piece.poly), piece.spec,
                                      to_role_index[piece.source.solid], piece.source.motion,
                                      to_role_index[piece.target.solid], piece.target.motion});
  }

  auto parse_ref = [&](const Json& j, const std::string& path) -> EntityRef {
    check_keys(j, path, {"solid", "piece"});
    if (j.contains("solid") == j.contains("piece"))
      fail(path, "need exactly one of \"solid\" or \"piece\"");
    if (j.contains("piece")) {
      const std::string id = get_string(j, path, "piece");
      auto it = piece_index.find(id);
      if (it == piece_index.end()) fail(path, "unknown piece \"" + id + "\"");
      return {RefKind::Piece, it->second};
    }
    const std::string id = get_string(j, path, "solid");
    auto it = solid_index.find(id);
    if (it == solid_index.end()) fail(path, "unknown solid \"" + id + "\"");
    return {role[it->second], to_role_index[it->second]};
  };
  auto parse_expr = [&](const Json& j, const std::string& path) -> LinearExpr {
    check_keys(j, path, {"constant", "terms"});
    LinearExpr e;
    e.constant = parse_rational(get(j, path, "constant"), path + ".constant");
    const Json& terms = get(j, path, "terms");
    if (!terms.is_array()) fail(path + ".terms", "expected an array");
    for (size_t i = 0; i < terms.size(); ++i) {
      const std::string tp = path + ".terms[" + std::to_string(i) + "]";
      check_keys(terms[i], tp, {"coeff", "ref"});
      e.volume_terms.emplace_back(parse_rational(get(terms[i], tp, "coeff"), tp + ".coeff"),
                                  parse_ref(get(terms[i], tp, "ref"), tp + ".ref"));
    }
    return e;
  };

  const Json& claims = get(root, "$", "claims");
  if (!claims.is_array()) fail("$.claims", "expected an array");
  for (size_t i = 0; i < claims.size(); ++i) {
    const std::string path = "$.claims[" + std::to_string(i) + "]";
    const Json& j = claims[i];
    if (!j.is_object()) fail(path, "expected an object");
    const std::string type = get_string(j, path, "type");
    Claim claim;
    claim.label = get_string(j, path, "label");
    if (type == "tiling") {
      check_keys(j, path, {"type", "label", "container", "pieces"});
      TilingClaim tiling;
      tiling.container = parse_ref(get(j, path, "container"), path + ".container");
      const Json& ps = get(j, path, "pieces");
      if (!ps.is_array()) fail(path + ".pieces", "expected an array");
      for (const auto& pid : ps) {
        if (!pid.is_string()) fail(path + ".pieces", "expected piece ids");
        auto it = piece_index.find(pid.get<std::string>());
        if (it == piece_index.end())
          fail(path + ".pieces", "unknown piece \"" + pid.get<std::string>() + "\"");
        tiling.pieces.push_back(it->second);
      }
      claim.body = std::move(tiling);
    } else if (type == "volume") {
      check_keys(j, path, {"type", "label", "left", "right", "note"});
      VolumeClaim vol;
      const Json& left = get(j, path, "left");
      const Json& right = get(j, path, "right");
      if (!left.is_array() || !right.is_array()) fail(path, "left/right must be arrays");
      for (size_t k = 0; k < left.size(); ++k)
        vol.left.push_back(parse_ref(left[k], path + ".left[" + std::to_string(k) + "]"));
      for (size_t k = 0; k < right.size(); ++k)
        vol.right.push_back(parse_ref(right[k], path + ".right[" + std::to_string(k) + "]"));
      if (j.contains("note")) vol.note = get_string(j, path, "note");
      claim.body = std::move(vol);
    } else if (type == "congruence") {
      check_keys(j, path, {"type", "label", "left", "right", "allow_reflection", "witness"});
      CongruenceClaim cong;
      cong.left = parse_ref(get(j, path, "left"), path + ".left");
      cong.right = parse_ref(get(j, path, "right"), path + ".right");
      const Json& ar = get(j, path, "allow_reflection");
      if (!ar.is_boolean()) fail(path + ".allow_reflection", "expected a boolean");
      cong.allow_reflection = ar.get<bool>();
      if (j.contains("witness")) {
        const std::string wp = path + ".witness";
        const Json& w = j["witness"];
        check_keys(w, wp, {"motion", "bijection"});
        CongruenceWitness witness;
        witness.motion = parse_motion(get(w, wp, "motion"), wp + ".motion");
        const Json& bijection = get(w, wp, "bijection");
        if (!bijection.is_array()) fail(wp + ".bijection", "expected an array of index pairs");
        for (const auto& pair : bijection) {
          if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
              !pair[1].is_number_integer())
            fail(wp + ".bijection", "expected an array of index pairs");
          witness.vertex_bijection.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
        cong.witness = std::move(witness);
      }
      claim.body = std::move(cong);
    } else if (type == "scale") {
      check_keys(j, path, {"type", "label", "from", "factor", "to"});
      ScaleClaim sc;
      sc.from = parse_ref(get(j, path, "from"), path + ".from");
      sc.factor = parse_rational(get(j, path, "factor"), path + ".factor");
      sc.to = parse_ref(get(j, path, "to"), path + ".to");
      claim.body = sc;
    } else if (type == "arithmetic") {
      check_keys(j, path, {"type", "label", "left", "right"});
      ArithmeticClaim arith;
      arith.left = parse_expr(get(j, path, "left"), path + ".left");
      arith.right = parse_expr(get(j, path, "right"), path + ".right");
      claim.body = std::move(arith);
    } else {
      fail(path + ".type", "unknown claim type \"" + type + "\"");
    }
    cert.claims.push_back(std::move(claim));
  }

  try {
    cert.validate_structure();
  } catch (const CertificateError& e) {
    throw Error(std::string("certificate: ") + e.what());
  }
  return cert;
}

void write_certificate_file(const RearrangementCertificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write \"" + path + "\"");
  out << render_certificate(cert);
  if (!out) throw Error("write failed for \"" + path + "\"");
}

RearrangementCertificate read_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read \"" + path + "\"");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_certificate(text);
}

}  // namespace frusta
