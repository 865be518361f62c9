#pragma once

#include <string>
#include <vector>

#include "frusta/polytope.hpp"

namespace frusta {

// Canonical solid kinds. Dimensions refer to the canonical pose:
//   box(p,q,r)                [0,p] x [0,q] x [0,r]
//   symmetric_frustum(a,b,h)  base corners (+-a/2, +-a/2, 0), top (+-b/2, +-b/2, h); a > b > 0
//   right_frustum(a,b,h)      base [0,a]^2, top [0,b]^2 at z=h, vertical faces on x=0 and y=0
//   symmetric_pyramid(a,h)    base (+-a/2, +-a/2, 0), apex (0,0,h)
//   yangma(p,q,r)             base [0,p] x [0,q], apex (0,0,r); vertical edge over the origin corner
//   qiandu(p,q,r)             prism (0,0,0),(p,0,0),(0,q,0),(p,q,0),(0,0,r),(p,0,r)
//   juel(a)                   square pyramid of height a/2 over base a^2 (45-degree faces)
//   truncated_juel(a,b)       juel(a) cut at height (a-b)/2; a > b > 0
//   regular_tetrahedron       (0,0,0),(1,1,0),(1,0,1),(0,1,1)
enum class SolidKind {
  Box,
  SymmetricFrustum,
  RightFrustum,
  SymmetricPyramid,
  Yangma,
  Qiandu,
  Juel,
  TruncatedJuel,
  RegularTetrahedron,
};

const char* solid_kind_name(SolidKind kind);
SolidKind parse_solid_kind(const std::string& name);  // throws Error on unknown name

struct SolidSpec {
  SolidKind kind = SolidKind::Box;
  std::vector<Rational> params;

  static SolidSpec box(Rational p, Rational q, Rational r);
  static SolidSpec symmetric_frustum(Rational a, Rational b, Rational h);
  static SolidSpec right_frustum(Rational a, Rational b, Rational h);
  static SolidSpec symmetric_pyramid(Rational a, Rational h);
  static SolidSpec yangma(Rational p, Rational q, Rational r);
  static SolidSpec qiandu(Rational p, Rational q, Rational r);
  static SolidSpec juel(Rational a);
  static SolidSpec truncated_juel(Rational a, Rational b);
  static SolidSpec regular_tetrahedron();

  std::string str() const;  // e.g. "yangma(1, 1, 2)"
  friend bool operator==(const SolidSpec&, const SolidSpec&) = default;
};

// Validated polytope in canonical pose; throws Error naming the violated
// parameter constraint.
ConvexPolytope make_solid(const SolidSpec& spec);

// Closed-form volume of a canonical solid, evaluated exactly.
Rational closed_form_volume(const SolidSpec& spec);

}  // namespace frusta
