#include "frusta/catalog.hpp"

#include <utility>

namespace frusta {

namespace {

const Rational kZero(0), kOne(1), kTwo(2), kThree(3), kHalf(1, 2);

void require(bool ok, const char* what) {
  if (!ok) throw Error(what);
}

SolidEntry posed_entry(std::string id, SolidSpec spec, RigidMotion pose) {
  ConvexPolytope poly = transform(make_solid(spec), pose);
  return SolidEntry{std::move(id), std::move(poly), std::move(spec), std::move(pose)};
}

SolidEntry literal_entry(std::string id, ConvexPolytope poly) {
  return SolidEntry{std::move(id), std::move(poly), std::nullopt, RigidMotion::identity()};
}

PlacedPiece piece_of(std::string id, SolidSpec spec, int source, RigidMotion sm, int target,
                     RigidMotion tm) {
  ConvexPolytope poly = make_solid(spec);
  return PlacedPiece{std::move(id), std::move(poly), std::move(spec),
                     source,        std::move(sm),   target,
                     std::move(tm)};
}

Claim tiling_claim(std::string label, EntityRef container, std::vector<int> pieces) {
  return Claim{std::move(label), TilingClaim{container, std::move(pieces)}};
}

// Congruence claims ship with their witness so that verification re-checks
// the stated motion instead of searching.
Claim congruence_claim(const RearrangementCertificate& cert, std::string label, EntityRef left,
                       EntityRef right, bool allow_reflection) {
  CongruenceClaim body{left, right, allow_reflection, std::nullopt};
  body.witness = find_congruence(cert.resolve(left), cert.resolve(right), allow_reflection);
  if (!body.witness) throw Error("no congruence witness for \"" + label + "\"");
  return Claim{std::move(label), std::move(body)};
}

RigidMotion T(Rational x, Rational y, Rational z) {
  return translation_motion({std::move(x), std::move(y), std::move(z)});
}

// The nine standard parts of the centered symmetric frustum, with their
// source placements: central cuboid, prisms east/north/west/south, corner
// pyramids ne/nw/sw/se. All motions are proper.
struct NinePart {
  std::string id;
  SolidSpec spec;
  RigidMotion placement;
};

std::vector<NinePart> nine_parts(const Rational& a, const Rational& b, const Rational& h) {
  const Rational s = (a - b) / kTwo;
  const Rational b2 = b / kTwo;
  std::vector<NinePart> parts;
  parts.push_back({"core", SolidSpec::box(b, b, h), T(-b2, -b2, kZero)});
  const RigidMotion east =
      motion_from(rotation_z_quarters(3).linear, {b2, b2, kZero});  // prism axis along y
  const char* prism_names[] = {"prism-east", "prism-north", "prism-west", "prism-south"};
  const char* corner_names[] = {"corner-ne", "corner-nw", "corner-sw", "corner-se"};
  for (int k = 0; k < 4; ++k)
    parts.push_back({prism_names[k], SolidSpec::qiandu(b, s, h),
                     compose_motion(rotation_z_quarters(k), east)});
  const RigidMotion ne = T(b2, b2, kZero);
  for (int k = 0; k < 4; ++k)
    parts.push_back({corner_names[k], SolidSpec::yangma(s, s, h),
                     compose_motion(rotation_z_quarters(k), ne)});
  return parts;
}

// Point-symmetric pair of prisms filling a slab box. Variant X: the slab has
// x-extent s and y-extent b (prism axis re-oriented along y); variant Y: the
// slab has x-extent b and y-extent s (prism in canonical orientation).
RigidMotion slab_x_first(const Rational& b) {
  return motion_from(rotation_z_quarters(3).linear, {kZero, b, kZero});
}
RigidMotion slab_x_second(const Rational& b, const Rational& s, const Rational& h) {
  return compose_motion(about_point(rotation_half_turn_y(), {s / kTwo, kZero, h / kTwo}),
                        slab_x_first(b));
}
RigidMotion slab_y_first() { return RigidMotion::identity(); }
RigidMotion slab_y_second(const Rational& s, const Rational& h) {
  return about_point(rotation_half_turn_x(), {kZero, s / kTwo, h / kTwo});
}

// Corner pyramid poses inside the cube [0,s]^3: apex in one corner, bases on
// the three far faces, cyclically rotated around the main diagonal.
RigidMotion cube_slot(const Rational& s, int slot) {
  RigidMotion m = motion_from(Matrix3::from_rows({0, 1, 0}, {1, 0, 0}, {0, 0, -1}),
                              {kZero, kZero, s});
  for (int i = 0; i < slot; ++i) m = compose_motion(cycle_axes(), m);
  return m;
}

ConvexPolytope bienao_literal(const Rational& p, const Rational& q, const Rational& r) {
  std::vector<Point3> v = {{p, kZero, kZero}, {p, q, kZero}, {p, kZero, r}, {kZero, kZero, r}};
  std::vector<std::vector<int>> f = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  f = orient_outward(v, std::move(f));
  return ConvexPolytope::build(std::move(v), std::move(f),
                               "bienao(" + p.str() + ", " + q.str() + ", " + r.str() + ")");
}

std::map<std::string, std::string> abh_metadata(const Rational& a, const Rational& b,
                                                const Rational& h) {
  return {{"a", a.str()}, {"b", b.str()}, {"h", h.str()}};
}

}  // namespace

RearrangementCertificate nine_part_frustum(const Rational& a, const Rational& b,
                                           const Rational& h) {
  require(b.sign() > 0, "nine-part: b must be positive");
  require(h.sign() > 0, "nine-part: h must be positive");
  require(a > b, "nine-part: a must exceed b");

  RearrangementCertificate cert;
  cert.name = "nine-part";
  cert.metadata = abh_metadata(a, b, h);
  cert.sources.push_back(posed_entry("frustum", SolidSpec::symmetric_frustum(a, b, h),
                                     RigidMotion::identity()));

  const Rational pitch = a + kOne;
  std::vector<int> all;
  Rational x = kZero;
  for (auto& part : nine_parts(a, b, h)) {
    const int t = static_cast<int>(cert.targets.size());
    const RigidMotion pose = T(x, pitch, kZero);
    cert.targets.push_back(posed_entry("part-" + part.id, part.spec, pose));
    all.push_back(static_cast<int>(cert.pieces.size()));
    cert.pieces.push_back(piece_of(part.id, part.spec, 0, part.placement, t, pose));
    x += pitch;
  }
  cert.claims.push_back(tiling_claim("frustum dissection", {RefKind::Source, 0}, all));
  return cert;
}

RearrangementCertificate liu_hui_three_copies(const Rational& a, const Rational& b,
                                              const Rational& h) {
  require(b.sign() > 0, "liu-hui: b must be positive");
  require(h.sign() > 0, "liu-hui: h must be positive");
  require(a > b, "liu-hui: a must exceed b");
  const Rational s = (a - b) / kTwo;
  const bool corner_exact = h == s;

  RearrangementCertificate cert;
  cert.name = "liu-hui";
  cert.metadata = abh_metadata(a, b, h);
  cert.metadata["s"] = s.str();
  cert.metadata["corner-step"] = corner_exact ? "exact" : "volume";

  const Rational pitch = a + kOne;
  for (int i = 0; i < 3; ++i)
    cert.sources.push_back(posed_entry("frustum-" + std::to_string(i),
                                       SolidSpec::symmetric_frustum(a, b, h),
                                       T(pitch * Rational(i), kZero, kZero)));

  const Vector3 big{kZero, pitch, kZero};
  const Vector3 mid{pitch, pitch, kZero};
  const Vector3 small{pitch * kTwo, pitch, kZero};
  cert.targets.push_back(posed_entry("box-large", SolidSpec::box(a, a, h), translation_motion(big)));
  cert.targets.push_back(posed_entry("box-middle", SolidSpec::box(a, b, h), translation_motion(mid)));
  cert.targets.push_back(posed_entry("box-small", SolidSpec::box(b, b, h), translation_motion(small)));
  const int kBig = 0, kMid = 1, kSmall = 2;

  // auxiliary cells of the big box: the central cross and the four corners
  auto big_cell = [&](const std::string& id, const Rational& dx, const Rational& dy,
                      const Rational& wx, const Rational& wy) {
    const int idx = static_cast<int>(cert.regions.size());
    cert.regions.push_back(posed_entry(id, SolidSpec::box(wx, wy, h),
                                       translation_motion(big + Vector3{dx, dy, kZero})));
    return idx;
  };
  const int rCentral = big_cell("cross-central", s, s, b, b);
  const int rWest = big_cell("cross-slab-west", kZero, s, s, b);
  const int rEast = big_cell("cross-slab-east", s + b, s, s, b);
  const int rSouth = big_cell("cross-slab-south", s, kZero, b, s);
  const int rNorth = big_cell("cross-slab-north", s, s + b, b, s);
  const int rCornerNE = big_cell("corner-ne", s + b, s + b, s, s);
  const int rCornerNW = big_cell("corner-nw", kZero, s + b, s, s);
  const int rCornerSW = big_cell("corner-sw", kZero, kZero, s, s);
  const int rCornerSE = big_cell("corner-se", s + b, kZero, s, s);
  const int corner_regions[4] = {rCornerNE, rCornerNW, rCornerSW, rCornerSE};

  // target placements, copy by copy
  const RigidMotion xa = slab_x_first(b), xb = slab_x_second(b, s, h);
  const RigidMotion ya = slab_y_first(), yb = slab_y_second(s, h);
  auto at = [&](const Vector3& origin, const RigidMotion& local) {
    return compose_motion(translation_motion(origin), local);
  };

  std::vector<std::vector<int>> copy_pieces(3);
  std::vector<int> yangma_pieces;
  for (int copy = 0; copy < 3; ++copy) {
    auto parts = nine_parts(a, b, h);
    const RigidMotion shift = T(pitch * Rational(copy), kZero, kZero);
    // core routing: copy 0 -> middle box slot, copy 1 -> cross central, copy 2 -> small box
    std::vector<std::pair<int, RigidMotion>> targets(9);
    targets[0] = copy == 0   ? std::make_pair(kMid, at(mid + Vector3{s, kZero, kZero}, RigidMotion::identity()))
                 : copy == 1 ? std::make_pair(kBig, at(big + Vector3{s, s, kZero}, RigidMotion::identity()))
                             : std::make_pair(kSmall, at(small, RigidMotion::identity()));
    // prism routing: copy 0 fills the two slabs of the middle box, copies 1-2
    // fill the four cross slabs of the big box
    const Vector3 slab_origins[3][2] = {
        {mid, mid + Vector3{s + b, kZero, kZero}},
        {big + Vector3{kZero, s, kZero}, big + Vector3{s + b, s, kZero}},
        {big + Vector3{s, kZero, kZero}, big + Vector3{s, s + b, kZero}},
    };
    const bool x_style = copy < 2;  // slabs with x-extent s for copies 0-1, y-style for copy 2
    const int prism_target = copy == 0 ? kMid : kBig;
    for (int k = 0; k < 4; ++k) {
      const Vector3& origin = slab_origins[copy][k / 2];
      const RigidMotion& local = x_style ? (k % 2 == 0 ? xa : xb) : (k % 2 == 0 ? ya : yb);
      targets[1 + k] = {prism_target, at(origin, local)};
    }
    // corner pyramids: three per corner cell, one from each copy
    for (int k = 0; k < 4; ++k) {
      const Vector3& origin = cert.regions[corner_regions[k]].pose.translation;
      const RigidMotion local = corner_exact ? cube_slot(s, copy) : RigidMotion::identity();
      targets[5 + k] = {kBig, at(origin, local)};
    }

    for (int k = 0; k < 9; ++k) {
      auto& part = parts[k];
      const int idx = static_cast<int>(cert.pieces.size());
      copy_pieces[copy].push_back(idx);
      if (k >= 5) yangma_pieces.push_back(idx);
      cert.pieces.push_back(piece_of("copy" + std::to_string(copy) + "-" + part.id, part.spec,
                                     copy, compose_motion(shift, part.placement),
                                     targets[k].first, targets[k].second));
    }
  }

  for (int copy = 0; copy < 3; ++copy)
    cert.claims.push_back(tiling_claim("copy-" + std::to_string(copy) + " dissection",
                                       {RefKind::Source, copy}, copy_pieces[copy]));

  auto pc = [&](int copy, int part) { return copy_pieces[copy][part]; };
  cert.claims.push_back(tiling_claim(
      "middle box", {RefKind::Target, kMid}, {pc(0, 0), pc(0, 1), pc(0, 2), pc(0, 3), pc(0, 4)}));
  cert.claims.push_back(tiling_claim("cross central", {RefKind::Region, rCentral}, {pc(1, 0)}));
  cert.claims.push_back(tiling_claim("cross slab west", {RefKind::Region, rWest}, {pc(1, 1), pc(1, 2)}));
  cert.claims.push_back(tiling_claim("cross slab east", {RefKind::Region, rEast}, {pc(1, 3), pc(1, 4)}));
  cert.claims.push_back(tiling_claim("cross slab south", {RefKind::Region, rSouth}, {pc(2, 1), pc(2, 2)}));
  cert.claims.push_back(tiling_claim("cross slab north", {RefKind::Region, rNorth}, {pc(2, 3), pc(2, 4)}));
  cert.claims.push_back(tiling_claim("small box", {RefKind::Target, kSmall}, {pc(2, 0)}));

  if (corner_exact) {
    const char* names[4] = {"corner box ne", "corner box nw", "corner box sw", "corner box se"};
    for (int k = 0; k < 4; ++k)
      cert.claims.push_back(tiling_claim(names[k], {RefKind::Region, corner_regions[k]},
                                         {pc(0, 5 + k), pc(1, 5 + k), pc(2, 5 + k)}));
  } else {
    VolumeClaim vol;
    for (int idx : yangma_pieces) vol.left.push_back({RefKind::Piece, idx});
    for (int k = 0; k < 4; ++k) vol.right.push_back({RefKind::Region, corner_regions[k]});
    vol.note = "corner cells are filled by volume only; the equality presupposes the "
               "pyramid one-third rule";
    cert.claims.push_back(Claim{"corner volume", std::move(vol)});
  }
  return cert;
}

RearrangementCertificate four_yangma_pyramid(const Rational& s, const Rational& h) {
  require(s.sign() > 0, "four-yangma: s must be positive");
  require(h.sign() > 0, "four-yangma: h must be positive");

  RearrangementCertificate cert;
  cert.name = "four-yangma";
  cert.metadata = {{"s", s.str()}, {"h", h.str()}};

  const Rational pitch = kTwo * s + kOne;
  const RigidMotion target_pose = T(kZero, pitch, kZero);
  cert.targets.push_back(posed_entry("pyramid", SolidSpec::symmetric_pyramid(kTwo * s, h),
                                     target_pose));
  std::vector<int> all;
  for (int i = 0; i < 4; ++i) {
    const RigidMotion pose = T(pitch * Rational(i), kZero, kZero);
    cert.sources.push_back(posed_entry("yangma-" + std::to_string(i), SolidSpec::yangma(s, s, h),
                                       pose));
    all.push_back(i);
    cert.pieces.push_back(piece_of("piece-" + std::to_string(i), SolidSpec::yangma(s, s, h), i,
                                   pose, 0, compose_motion(target_pose, rotation_z_quarters(i))));
  }
  cert.claims.push_back(tiling_claim("pyramid assembly", {RefKind::Target, 0}, all));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      cert.claims.push_back(congruence_claim(
          cert, "pieces " + std::to_string(i) + " and " + std::to_string(j) + " congruent",
          {RefKind::Piece, i}, {RefKind::Piece, j}, false));
  return cert;
}

RearrangementCertificate right_frustum_parts(const Rational& a, const Rational& b,
                                             const Rational& h) {
  require(b.sign() > 0, "right-frustum: b must be positive");
  require(h.sign() > 0, "right-frustum: h must be positive");
  require(a > b, "right-frustum: a must exceed b");
  const Rational d = a - b;

  RearrangementCertificate cert;
  cert.name = "right-frustum";
  cert.metadata = abh_metadata(a, b, h);
  cert.sources.push_back(posed_entry("frustum", SolidSpec::right_frustum(a, b, h),
                                     RigidMotion::identity()));

  const Vector3 boxO{a + kOne, kZero, kZero};
  const Vector3 pyrO{a + kOne + b + kOne, kZero, kZero};
  cert.targets.push_back(posed_entry("box-hab", SolidSpec::box(b, a, h), translation_motion(boxO)));
  cert.targets.push_back(posed_entry("corner-pyramid", SolidSpec::yangma(d, d, h),
                                     translation_motion(pyrO)));
  cert.regions.push_back(posed_entry("prism-stack", SolidSpec::box(b, d, h),
                                     translation_motion(boxO + Vector3{kZero, b, kZero})));

  auto at = [&](const Vector3& origin, const RigidMotion& local) {
    return compose_motion(translation_motion(origin), local);
  };
  // source placements: core at the right-angle corner, prisms along the two
  // vertical faces, pyramid in the far corner
  cert.pieces.push_back(piece_of("core", SolidSpec::box(b, b, h), 0, RigidMotion::identity(), 0,
                                 translation_motion(boxO)));
  cert.pieces.push_back(piece_of("prism-x", SolidSpec::qiandu(b, d, h), 0,
                                 motion_from(rotation_z_quarters(3).linear, {b, b, kZero}), 0,
                                 at(boxO + Vector3{kZero, b, kZero}, slab_y_first())));
  cert.pieces.push_back(piece_of("prism-y", SolidSpec::qiandu(b, d, h), 0, T(kZero, b, kZero), 0,
                                 at(boxO + Vector3{kZero, b, kZero}, slab_y_second(d, h))));
  cert.pieces.push_back(piece_of("corner", SolidSpec::yangma(d, d, h), 0, T(b, b, kZero), 1,
                                 translation_motion(pyrO)));

  cert.claims.push_back(tiling_claim("frustum dissection", {RefKind::Source, 0}, {0, 1, 2, 3}));
  cert.claims.push_back(tiling_claim("box assembly", {RefKind::Target, 0}, {0, 1, 2}));
  cert.claims.push_back(tiling_claim("prism pair box", {RefKind::Region, 0}, {1, 2}));
  return cert;
}

RearrangementCertificate four_right_frustums(const Rational& a, const Rational& b,
                                             const Rational& h) {
  require(b.sign() > 0, "four-right-frustums: b must be positive");
  require(h.sign() > 0, "four-right-frustums: h must be positive");
  require(a > b, "four-right-frustums: a must exceed b");

  RearrangementCertificate cert;
  cert.name = "four-right-frustums";
  cert.metadata = abh_metadata(a, b, h);

  const Rational pitch = a + kOne;
  const RigidMotion target_pose = T(kZero, kTwo * a + kOne, kZero);
  cert.targets.push_back(posed_entry("frustum-double",
                                     SolidSpec::symmetric_frustum(kTwo * a, kTwo * b, h),
                                     target_pose));
  std::vector<int> all;
  for (int i = 0; i < 4; ++i) {
    const RigidMotion pose = T(pitch * Rational(i), kZero, kZero);
    cert.sources.push_back(posed_entry("quadrant-" + std::to_string(i),
                                       SolidSpec::right_frustum(a, b, h), pose));
    all.push_back(i);
    cert.pieces.push_back(piece_of("piece-" + std::to_string(i),
                                   SolidSpec::right_frustum(a, b, h), i, pose, 0,
                                   compose_motion(target_pose, rotation_z_quarters(i))));
  }
  cert.claims.push_back(tiling_claim("quadrant assembly", {RefKind::Target, 0}, all));
  return cert;
}

RearrangementCertificate box_corner_pyramids(const Rational& p, const Rational& q,
                                             const Rational& r) {
  require(p.sign() > 0 && q.sign() > 0 && r.sign() > 0, "box pyramids: sides must be positive");

  RearrangementCertificate cert;
  cert.name = "box-three-pyramids";
  cert.metadata = {{"p", p.str()}, {"q", q.str()}, {"r", r.str()}};
  cert.sources.push_back(posed_entry("box", SolidSpec::box(p, q, r), RigidMotion::identity()));

  struct Part {
    const char* id;
    SolidSpec spec;
    RigidMotion placement;
  };
  const Part parts[3] = {
      {"pyramid-z", SolidSpec::yangma(q, p, r),
       motion_from(Matrix3::from_rows({0, 1, 0}, {1, 0, 0}, {0, 0, -1}), {kZero, kZero, r})},
      {"pyramid-x", SolidSpec::yangma(r, q, p),
       motion_from(Matrix3::from_rows({0, 0, -1}, {0, 1, 0}, {1, 0, 0}), {p, kZero, kZero})},
      {"pyramid-y", SolidSpec::yangma(p, r, q),
       motion_from(Matrix3::from_rows({1, 0, 0}, {0, 0, -1}, {0, 1, 0}), {kZero, q, kZero})},
  };
  const Rational pitch = p + q + r + kOne;
  Rational x = kZero;
  std::vector<int> all;
  for (int k = 0; k < 3; ++k) {
    const RigidMotion pose = T(x, q + kOne, kZero);
    cert.targets.push_back(posed_entry(std::string("part-") + parts[k].id, parts[k].spec, pose));
    all.push_back(k);
    cert.pieces.push_back(piece_of(parts[k].id, parts[k].spec, 0, parts[k].placement, k, pose));
    x += pitch;
  }
  cert.claims.push_back(tiling_claim("box dissection", {RefKind::Source, 0}, all));
  return cert;
}

RearrangementCertificate cube_dissections(const Rational& a, CubeDissection kind) {
  require(a.sign() > 0, "cube dissection: a must be positive");

  if (kind == CubeDissection::ThreeYangma) {
    RearrangementCertificate cert = box_corner_pyramids(a, a, a);
    cert.name = "cube-three-yangma";
    cert.metadata = {{"a", a.str()}};
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        cert.claims.push_back(congruence_claim(
            cert, "pieces " + std::to_string(i) + " and " + std::to_string(j) + " congruent",
            {RefKind::Piece, i}, {RefKind::Piece, j}, false));
    return cert;
  }

  RearrangementCertificate cert;
  cert.metadata = {{"a", a.str()}};
  cert.sources.push_back(posed_entry("cube", SolidSpec::box(a, a, a), RigidMotion::identity()));
  const Rational a2 = a / kTwo;
  const Rational pitch = a + kOne;

  if (kind == CubeDissection::SixJuel) {
    cert.name = "cube-six-juel";
    // one pyramid per face, apexes meeting in the cube center
    const RigidMotion placements[6] = {
        T(a2, a2, kZero),                                                                  // bottom
        motion_from(Matrix3::from_rows({1, 0, 0}, {0, -1, 0}, {0, 0, -1}), {a2, a2, a}),   // top
        motion_from(Matrix3::from_rows({0, 0, 1}, {0, 1, 0}, {-1, 0, 0}), {kZero, a2, a2}),  // x = 0
        motion_from(Matrix3::from_rows({0, 0, -1}, {0, 1, 0}, {1, 0, 0}), {a, a2, a2}),    // x = a
        motion_from(Matrix3::from_rows({1, 0, 0}, {0, 0, 1}, {0, -1, 0}), {a2, kZero, a2}),  // y = 0
        motion_from(Matrix3::from_rows({1, 0, 0}, {0, 0, -1}, {0, 1, 0}), {a2, a, a2}),    // y = a
    };
    std::vector<int> all;
    for (int k = 0; k < 6; ++k) {
      const RigidMotion pose = T(pitch * Rational(k), pitch, kZero);
      cert.targets.push_back(posed_entry("part-" + std::to_string(k), SolidSpec::juel(a), pose));
      all.push_back(k);
      cert.pieces.push_back(piece_of("juel-" + std::to_string(k), SolidSpec::juel(a), 0,
                                     placements[k], k, pose));
    }
    cert.claims.push_back(tiling_claim("cube dissection", {RefKind::Source, 0}, all));
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        cert.claims.push_back(congruence_claim(
            cert, "pieces " + std::to_string(i) + " and " + std::to_string(j) + " congruent",
            {RefKind::Piece, i}, {RefKind::Piece, j}, false));
    return cert;
  }

  cert.name = "cube-two-qiandu";
  const RigidMotion placements[2] = {
      RigidMotion::identity(),
      about_point(rotation_half_turn_x(), {kZero, a2, a2}),
  };
  std::vector<int> all;
  for (int k = 0; k < 2; ++k) {
    const RigidMotion pose = T(pitch * Rational(k), pitch, kZero);
    cert.targets.push_back(posed_entry("part-" + std::to_string(k), SolidSpec::qiandu(a, a, a),
                                       pose));
    all.push_back(k);
    cert.pieces.push_back(piece_of("qiandu-" + std::to_string(k), SolidSpec::qiandu(a, a, a), 0,
                                   placements[k], k, pose));
  }
  cert.claims.push_back(tiling_claim("cube dissection", {RefKind::Source, 0}, all));
  cert.claims.push_back(congruence_claim(cert, "halves congruent", {RefKind::Piece, 0},
                                         {RefKind::Piece, 1}, false));
  return cert;
}

RearrangementCertificate qiandu_split(const Rational& p, const Rational& q, const Rational& r) {
  require(p.sign() > 0 && q.sign() > 0 && r.sign() > 0, "qiandu split: sides must be positive");

  RearrangementCertificate cert;
  cert.name = "qiandu-split";
  cert.metadata = {{"p", p.str()}, {"q", q.str()}, {"r", r.str()}};
  cert.sources.push_back(posed_entry("qiandu", SolidSpec::qiandu(p, q, r),
                                     RigidMotion::identity()));

  const ConvexPolytope bienao = bienao_literal(p, q, r);
  const RigidMotion yangma_pose = T(kZero, q + kOne, kZero);
  const RigidMotion bienao_pose = T(p + kOne, q + kOne, kZero);
  cert.targets.push_back(posed_entry("yangma-copy", SolidSpec::yangma(p, q, r), yangma_pose));
  cert.targets.push_back(literal_entry("bienao-copy", transform(bienao, bienao_pose)));

  cert.pieces.push_back(piece_of("yangma", SolidSpec::yangma(p, q, r), 0, RigidMotion::identity(),
                                 0, yangma_pose));
  cert.pieces.push_back(PlacedPiece{"bienao", bienao, std::nullopt, 0, RigidMotion::identity(), 1,
                                    bienao_pose});
  cert.claims.push_back(tiling_claim("prism split", {RefKind::Source, 0}, {0, 1}));
  return cert;
}

RearrangementCertificate shutler_certificate(const Rational& b, const Rational& h) {
  require(b.sign() > 0, "shutler: b must be positive");
  require(h.sign() > 0, "shutler: h must be positive");
  const Rational a = kTwo * b;  // the papyrus configuration: base twice the top
  const Rational s = b / kTwo;

  RearrangementCertificate cert;
  cert.name = "shutler";
  cert.metadata = {{"b", b.str()}, {"h", h.str()}, {"a", a.str()}};
  cert.sources.push_back(posed_entry("frustum", SolidSpec::symmetric_frustum(a, b, h),
                                     RigidMotion::identity()));

  const Vector3 boxO{a + kOne, kZero, kZero};
  const RigidMotion top_pose = T(kZero, a + kOne, kZero);
  cert.targets.push_back(posed_entry("box-hab", SolidSpec::box(b, a, h), translation_motion(boxO)));
  cert.targets.push_back(posed_entry("assembled-top", SolidSpec::symmetric_pyramid(b, h),
                                     top_pose));
  cert.regions.push_back(posed_entry("removed-top", SolidSpec::symmetric_pyramid(b, h),
                                     T(kZero, kZero, h)));
  cert.regions.push_back(posed_entry("full-pyramid",
                                     SolidSpec::symmetric_pyramid(kTwo * b, kTwo * h),
                                     RigidMotion::identity()));

  auto at = [&](const Vector3& origin, const RigidMotion& local) {
    return compose_motion(translation_motion(origin), local);
  };
  auto parts = nine_parts(a, b, h);
  // core and prisms into the box b x 2b x h; corner pyramids assemble the top
  std::vector<std::pair<int, RigidMotion>> targets(9);
  targets[0] = {0, at(boxO + Vector3{kZero, s, kZero}, RigidMotion::identity())};
  const Vector3 south = boxO, north = boxO + Vector3{kZero, s + b, kZero};
  targets[1] = {0, at(south, slab_y_first())};
  targets[2] = {0, at(south, slab_y_second(s, h))};
  targets[3] = {0, at(north, slab_y_first())};
  targets[4] = {0, at(north, slab_y_second(s, h))};
  for (int k = 0; k < 4; ++k)
    targets[5 + k] = {1, compose_motion(top_pose, rotation_z_quarters(k))};

  std::vector<int> all, box_pieces, top_pieces;
  for (int k = 0; k < 9; ++k) {
    all.push_back(k);
    (k < 5 ? box_pieces : top_pieces).push_back(k);
    cert.pieces.push_back(piece_of(parts[k].id, parts[k].spec, 0, parts[k].placement,
                                   targets[k].first, targets[k].second));
  }

  cert.claims.push_back(tiling_claim("frustum dissection", {RefKind::Source, 0}, all));
  cert.claims.push_back(tiling_claim("box assembly", {RefKind::Target, 0}, box_pieces));
  cert.claims.push_back(tiling_claim("top assembly", {RefKind::Target, 1}, top_pieces));
  cert.claims.push_back(congruence_claim(cert, "assembled top congruent to removed top",
                                         {RefKind::Target, 1}, {RefKind::Region, 0}, false));
  cert.claims.push_back(Claim{"similarity one to eight",
                              ScaleClaim{{RefKind::Target, 1}, kTwo, {RefKind::Region, 1}}});
  ArithmeticClaim identity;
  identity.left.volume_terms.emplace_back(Rational(6), EntityRef{RefKind::Target, 1});
  identity.right.constant = kTwo * h * square(b);
  cert.claims.push_back(Claim{"six tops fill the box", std::move(identity)});
  return cert;
}

CheckReport truncated_juel_check(const Rational& a, const Rational& b) {
  require(b.sign() > 0, "truncated juel: b must be positive");
  require(a > b, "truncated juel: a must exceed b");
  CheckReport report;
  report.title = "truncated juel volume";
  const Rational geometric = make_solid(SolidSpec::truncated_juel(a, b)).volume();
  const Rational sixth_difference = (cube(a) - cube(b)) / Rational(6);
  const Rational classic = evaluate_formula(FormulaId::FrustumClassic, a, b, (a - b) / kTwo);
  report.rows.push_back({"geometric volume = (a^3 - b^3)/6", geometric, sixth_difference,
                         geometric == sixth_difference});
  report.rows.push_back({"(a^3 - b^3)/6 = classic rule at h = (a-b)/2", sixth_difference, classic,
                         sixth_difference == classic});
  return report;
}

}  // namespace frusta
