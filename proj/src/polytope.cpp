#include "frusta/polytope.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace frusta {

namespace {

// Plane through the first non-collinear vertex triple of the cycle, oriented
// by the cycle winding.
std::optional<HalfSpace> face_plane(const std::vector<Point3>& pts, const std::vector<int>& cycle) {
  const Point3& a = pts[cycle[0]];
  for (size_t i = 1; i + 1 < cycle.size(); ++i) {
    for (size_t j = i + 1; j < cycle.size(); ++j) {
      const Vector3 n = cross(pts[cycle[i]] - a, pts[cycle[j]] - a);
      if (!n.is_zero()) return HalfSpace{n, dot(n, Vector3{a.x, a.y, a.z})};
    }
  }
  return std::nullopt;
}

int affine_rank(const std::vector<Point3>& pts) {
  if (pts.empty()) return -1;
  std::vector<Vector3> basis;
  for (size_t i = 1; i < pts.size() && basis.size() < 3; ++i) {
    Vector3 v = pts[i] - pts[0];
    // reduce v against the basis collected so far (exact Gram-Schmidt-free
    // elimination: subtract projections expressed with cross products)
    if (basis.empty()) {
      if (!v.is_zero()) basis.push_back(v);
    } else if (basis.size() == 1) {
      if (!cross(basis[0], v).is_zero()) basis.push_back(v);
    } else {
      if (!dot(cross(basis[0], basis[1]), v).is_zero()) basis.push_back(v);
    }
  }
  return static_cast<int>(basis.size());
}

}  // namespace

bool boxes_overlap(const BoundingBox& a, const BoundingBox& b) {
  auto open = [](const Rational& lo1, const Rational& hi1, const Rational& lo2, const Rational& hi2) {
    const Rational lo = std::max(lo1, lo2);
    const Rational hi = std::min(hi1, hi2);
    return lo < hi;
  };
  return open(a.lo.x, a.hi.x, b.lo.x, b.hi.x) && open(a.lo.y, a.hi.y, b.lo.y, b.hi.y) &&
         open(a.lo.z, a.hi.z, b.lo.z, b.hi.z);
}

ConvexPolytope ConvexPolytope::build(std::vector<Point3> vertices,
                                     std::vector<std::vector<int>> face_cycles,
                                     std::string label) {
  auto fail = [&](const std::string& why) { throw Error("polytope \"" + label + "\": " + why); };

  const int n = static_cast<int>(vertices.size());
  if (n < 4 || affine_rank(vertices) < 3) fail("degenerate (rank < 3)");
  if (face_cycles.size() < 4) fail("bad topology (fewer than 4 faces)");
  {
    std::map<Point3, int> seen;
    for (int v = 0; v < n; ++v)
      if (!seen.emplace(vertices[v], v).second) fail("bad topology (duplicate vertex point)");
  }

  ConvexPolytope p;
  p.vertices_ = std::move(vertices);
  p.label_ = std::move(label);

  std::vector<char> used(n, 0);
  for (const auto& cycle : face_cycles) {
    if (cycle.size() < 3) fail("bad topology (face with fewer than 3 vertices)");
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0 || sorted.back() >= n) fail("bad topology (vertex index out of range)");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail("bad topology (repeated vertex in face)");
    for (int v : cycle) used[v] = 1;

    auto plane = face_plane(p.vertices_, cycle);
    if (!plane) fail("non-planar face (collinear cycle)");
    for (int v : cycle)
      if (!plane->eval(p.vertices_[v]).is_zero()) fail("non-planar face");
    for (int v = 0; v < n; ++v)
      if (plane->eval(p.vertices_[v]).sign() > 0) fail("non-convex / vertex outside face plane");
    p.faces_.push_back(Face{cycle, *plane});
  }
  for (int v = 0; v < n; ++v)
    if (!used[v]) fail("bad topology (unused vertex)");

  // Each directed edge must appear exactly once; its reverse binds the
  // neighboring face. This pins down both manifoldness and consistent winding.
  std::map<std::pair<int, int>, int> directed;  // (u,v) -> face index
  for (size_t f = 0; f < p.faces_.size(); ++f) {
    const auto& cycle = p.faces_[f].cycle;
    for (size_t k = 0; k < cycle.size(); ++k) {
      const int u = cycle[k], v = cycle[(k + 1) % cycle.size()];
      if (!directed.emplace(std::make_pair(u, v), static_cast<int>(f)).second)
        fail("bad topology (directed edge shared by two faces)");
    }
  }
  for (const auto& [edge, f] : directed) {
    auto rev = directed.find({edge.second, edge.first});
    if (rev == directed.end()) fail("bad topology (edge without partner face)");
    if (edge.first < edge.second) {
      p.edges_.push_back({edge.first, edge.second});
      p.edge_faces_.push_back({f, rev->second});
    }
  }
  const long long V = n, E = static_cast<long long>(p.edges_.size()), F = static_cast<long long>(p.faces_.size());
  if (V - E + F != 2) fail("bad topology (Euler relation violated)");

  // volume by the divergence form: fan every face from its first vertex
  Rational six_vol;
  for (const auto& face : p.faces_) {
    const Point3& a = p.vertices_[face.cycle[0]];
    const Vector3 va{a.x, a.y, a.z};
    for (size_t i = 1; i + 1 < face.cycle.size(); ++i) {
      const Point3& b = p.vertices_[face.cycle[i]];
      const Point3& c = p.vertices_[face.cycle[i + 1]];
      six_vol += dot(va, cross(Vector3{b.x, b.y, b.z}, Vector3{c.x, c.y, c.z}));
    }
  }
  p.volume_ = six_vol / Rational(6);
  if (p.volume_.sign() <= 0) fail("non-positive volume (inconsistent orientation)");

  p.bounds_.lo = p.bounds_.hi = p.vertices_[0];
  for (const auto& v : p.vertices_) {
    p.bounds_.lo.x = std::min(p.bounds_.lo.x, v.x);
    p.bounds_.lo.y = std::min(p.bounds_.lo.y, v.y);
    p.bounds_.lo.z = std::min(p.bounds_.lo.z, v.z);
    p.bounds_.hi.x = std::max(p.bounds_.hi.x, v.x);
    p.bounds_.hi.y = std::max(p.bounds_.hi.y, v.y);
    p.bounds_.hi.z = std::max(p.bounds_.hi.z, v.z);
  }
  return p;
}

bool ConvexPolytope::contains_point(const Point3& p) const {
  for (const auto& face : faces_)
    if (face.plane.eval(p).sign() > 0) return false;
  return true;
}

std::optional<ConvexPolytope> clip(const ConvexPolytope& p, const HalfSpace& hs) {
  const auto& pts = p.vertices();
  std::vector<Rational> s(pts.size());
  bool any_neg = false, any_pos = false;
  for (size_t i = 0; i < pts.size(); ++i) {
    s[i] = hs.eval(pts[i]);
    any_neg |= s[i].sign() < 0;
    any_pos |= s[i].sign() > 0;
  }
  if (!any_pos) return p;            // already inside (touching is fine)
  if (!any_neg) return std::nullopt; // outside or boundary contact only

  struct ClipPoint {
    Point3 pt;
    bool on_plane;
  };
  std::vector<std::vector<ClipPoint>> kept;

  for (const auto& face : p.faces()) {
    const auto& cyc = face.cycle;
    std::vector<ClipPoint> out;
    for (size_t k = 0; k < cyc.size(); ++k) {
      const int u = cyc[k], v = cyc[(k + 1) % cyc.size()];
      const int su = s[u].sign(), sv = s[v].sign();
      if (su <= 0) out.push_back({pts[u], su == 0});
      if ((su < 0 && sv > 0) || (su > 0 && sv < 0)) {
        const Rational t = s[u] / (s[u] - s[v]);
        out.push_back({pts[u] + t * (pts[v] - pts[u]), true});
      }
    }
    if (out.size() < 3) continue;
    // drop faces squeezed to a segment on the cut plane
    bool flat = true;
    for (size_t i = 1; flat && i + 1 < out.size(); ++i)
      for (size_t j = i + 1; flat && j < out.size(); ++j)
        if (!cross(out[i].pt - out[0].pt, out[j].pt - out[0].pt).is_zero()) flat = false;
    if (flat) continue;
    kept.push_back(std::move(out));
  }

  // The cut cross-section: every kept face hands over its on-plane edges;
  // reversing them winds the cap outward. For a genuine cut these chain into
  // exactly one cycle (each such edge belongs to exactly one kept face).
  std::map<Point3, Point3> next;
  for (const auto& cyc : kept) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      const auto& a = cyc[k];
      const auto& b = cyc[(k + 1) % cyc.size()];
      if (a.on_plane && b.on_plane) {
        if (!next.emplace(b.pt, a.pt).second) throw Error("clip: inconsistent section chain");
      }
    }
  }
  if (next.size() < 3) throw Error("clip: degenerate section");
  std::vector<Point3> cap;
  cap.push_back(next.begin()->first);
  while (true) {
    auto it = next.find(cap.back());
    if (it == next.end()) throw Error("clip: open section chain");
    if (it->second == cap.front()) break;
    cap.push_back(it->second);
    if (cap.size() > next.size()) throw Error("clip: section chain does not close");
  }
  if (cap.size() != next.size()) throw Error("clip: section chain split");

  std::map<Point3, int> index;
  std::vector<Point3> vertices;
  auto vertex_id = [&](const Point3& pt) {
    auto [it, inserted] = index.emplace(pt, static_cast<int>(vertices.size()));
    if (inserted) vertices.push_back(pt);
    return it->second;
  };
  std::vector<std::vector<int>> cycles;
  for (const auto& cyc : kept) {
    std::vector<int> c;
    c.reserve(cyc.size());
    for (const auto& cp : cyc) c.push_back(vertex_id(cp.pt));
    cycles.push_back(std::move(c));
  }
  std::vector<int> cap_cycle;
  cap_cycle.reserve(cap.size());
  for (const auto& pt : cap) cap_cycle.push_back(vertex_id(pt));
  cycles.push_back(std::move(cap_cycle));

  return ConvexPolytope::build(std::move(vertices), std::move(cycles), p.label());
}

std::optional<ConvexPolytope> intersect(const ConvexPolytope& p, const ConvexPolytope& q) {
  if (!boxes_overlap(p.bounds(), q.bounds())) return std::nullopt;
  std::optional<ConvexPolytope> cur = p;
  for (const auto& face : q.faces()) {
    cur = clip(*cur, face.plane);
    if (!cur) return std::nullopt;
  }
  return cur;
}

bool contains_polytope(const ConvexPolytope& outer, const ConvexPolytope& inner) {
  for (const auto& v : inner.vertices())
    if (!outer.contains_point(v)) return false;
  return true;
}

ConvexPolytope transform(const ConvexPolytope& p, const RigidMotion& m) {
  if (!validate_motion(m)) throw Error("not an isometry");
  std::vector<Point3> vertices;
  vertices.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) vertices.push_back(m(v));
  std::vector<std::vector<int>> cycles;
  cycles.reserve(p.faces().size());
  for (const auto& face : p.faces()) {
    std::vector<int> c = face.cycle;
    if (m.orientation < 0) std::reverse(c.begin(), c.end());
    cycles.push_back(std::move(c));
  }
  return ConvexPolytope::build(std::move(vertices), std::move(cycles), p.label());
}

ConvexPolytope scale(const ConvexPolytope& p, const Rational& k) {
  if (k.sign() <= 0) throw Error("scale factor must be positive");
  std::vector<Point3> vertices;
  vertices.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) vertices.push_back({k * v.x, k * v.y, k * v.z});
  std::vector<std::vector<int>> cycles;
  for (const auto& face : p.faces()) cycles.push_back(face.cycle);
  return ConvexPolytope::build(std::move(vertices), std::move(cycles), p.label());
}

std::vector<std::vector<int>> orient_outward(const std::vector<Point3>& vertices,
                                             std::vector<std::vector<int>> face_cycles) {
  for (auto& cycle : face_cycles) {
    auto plane = face_plane(vertices, cycle);
    if (!plane) continue;  // leave it to build() to reject
    bool outside = false;
    for (const auto& v : vertices)
      if (plane->eval(v).sign() > 0) {
        outside = true;
        break;
      }
    if (outside) std::reverse(cycle.begin(), cycle.end());
  }
  return face_cycles;
}

}  // namespace frusta
