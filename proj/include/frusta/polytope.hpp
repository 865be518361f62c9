#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "frusta/geometry.hpp"

namespace frusta {

struct Face {
  std::vector<int> cycle;  // vertex indices, outward-oriented
  HalfSpace plane;         // supporting half-space; every vertex satisfies it

  friend bool operator==(const Face&, const Face&) = default;
};

struct BoundingBox {
  Point3 lo, hi;
};

// True when the boxes overlap with positive volume on every axis; face or
// edge contact does not count.
bool boxes_overlap(const BoundingBox& a, const BoundingBox& b);

// Bounded convex solid given by vertices and outward-oriented face cycles.
// Construction validates everything the rest of the library relies on:
// faces planar and convexly oriented, two faces per edge, Euler relation,
// genuine 3D extent. Instances are immutable.
class ConvexPolytope {
 public:
  static ConvexPolytope build(std::vector<Point3> vertices,
                              std::vector<std::vector<int>> face_cycles,
                              std::string label);

  const std::vector<Point3>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::string& label() const { return label_; }
  const Rational& volume() const { return volume_; }
  const BoundingBox& bounds() const { return bounds_; }

  // unique undirected edges as sorted index pairs, with their two faces
  const std::vector<std::array<int, 2>>& edges() const { return edges_; }
  const std::vector<std::array<int, 2>>& edge_faces() const { return edge_faces_; }

  bool contains_point(const Point3& p) const;

  friend bool operator==(const ConvexPolytope& a, const ConvexPolytope& b) {
    return a.vertices_ == b.vertices_ && a.faces_ == b.faces_ && a.label_ == b.label_;
  }

 private:
  ConvexPolytope() = default;

  std::vector<Point3> vertices_;
  std::vector<Face> faces_;
  std::string label_;
  Rational volume_;
  BoundingBox bounds_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<std::array<int, 2>> edge_faces_;
};

// Exact intersection with a half-space; nullopt when the result has no
// interior (the polytope lies outside or only touches the plane).
std::optional<ConvexPolytope> clip(const ConvexPolytope& p, const HalfSpace& hs);

// Exact intersection of two polytopes; nullopt when the common part has
// affine rank < 3, so solids touching on a face or edge count as disjoint.
std::optional<ConvexPolytope> intersect(const ConvexPolytope& p, const ConvexPolytope& q);

bool contains_polytope(const ConvexPolytope& outer, const ConvexPolytope& inner);

ConvexPolytope transform(const ConvexPolytope& p, const RigidMotion& m);

// Scaling about the origin by k > 0; volume multiplies by k^3 exactly.
ConvexPolytope scale(const ConvexPolytope& p, const Rational& k);

// Flips any face cycle whose derived plane leaves some vertex strictly
// outside. Convenience for constructors that list cycles without worrying
// about winding; the result still goes through full validation.
std::vector<std::vector<int>> orient_outward(const std::vector<Point3>& vertices,
                                             std::vector<std::vector<int>> face_cycles);

}  // namespace frusta
