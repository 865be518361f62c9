#include "frusta/congruence.hpp"

#include <algorithm>
#include <map>

namespace frusta {

namespace {

// Unique affine map sending the anchor tetrahedron src to dst, or nullopt if
// the linear part is not an exact rational orthogonal matrix with det +-1.
std::optional<RigidMotion> solve_motion(const std::array<Point3, 4>& src,
                                        const std::array<Point3, 4>& dst) {
  const Matrix3 S = Matrix3::from_rows(src[1] - src[0], src[2] - src[0], src[3] - src[0]).transposed();
  const Matrix3 D = Matrix3::from_rows(dst[1] - dst[0], dst[2] - dst[0], dst[3] - dst[0]).transposed();
  const Rational det = S.det();
  if (det.is_zero()) return std::nullopt;
  // inverse via the adjugate: columns of S^-1 are cross products of S's rows
  const Vector3 r0 = S.row(0), r1 = S.row(1), r2 = S.row(2);
  Matrix3 adj = Matrix3::from_rows(cross(r1, r2), cross(r2, r0), cross(r0, r1)).transposed();
  Matrix3 inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv.m[i][j] = adj.m[i][j] / det;
  RigidMotion m;
  m.linear = D * inv;
  const Rational d = m.linear.det();
  if (d != Rational(1) && d != Rational(-1)) return std::nullopt;
  m.orientation = d == Rational(1) ? 1 : -1;
  const Vector3 o{src[0].x, src[0].y, src[0].z};
  const Vector3 img = m.linear * o;
  m.translation = Vector3{dst[0].x - img.x, dst[0].y - img.y, dst[0].z - img.z};
  if (!validate_motion(m)) return std::nullopt;
  return m;
}

// Lexicographically first affinely independent index quadruple.
std::optional<std::array<int, 4>> anchor_quad(const std::vector<Point3>& pts) {
  const int n = static_cast<int>(pts.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (pts[b] - pts[a] == Vector3{}) continue;
      for (int c = b + 1; c < n; ++c) {
        if (cross(pts[b] - pts[a], pts[c] - pts[a]).is_zero()) continue;
        for (int d = c + 1; d < n; ++d) {
          if (!dot(cross(pts[b] - pts[a], pts[c] - pts[a]), pts[d] - pts[a]).is_zero())
            return std::array<int, 4>{a, b, c, d};
        }
      }
    }
  return std::nullopt;
}

}  // namespace

EdgeFingerprint edge_fingerprint(const ConvexPolytope& p) {
  EdgeFingerprint f;
  f.reserve(p.edges().size());
  for (const auto& e : p.edges()) f.push_back(distance2(p.vertices()[e[0]], p.vertices()[e[1]]));
  std::sort(f.begin(), f.end());
  return f;
}

std::optional<CongruenceWitness> find_congruence(const ConvexPolytope& p,
                                                 const ConvexPolytope& q,
                                                 bool allow_reflection) {
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  if (pv.size() != qv.size()) return std::nullopt;
  if (p.volume() != q.volume()) return std::nullopt;
  if (edge_fingerprint(p) != edge_fingerprint(q)) return std::nullopt;

  const auto anchor = anchor_quad(pv);
  if (!anchor) return std::nullopt;  // cannot happen for a valid polytope
  std::array<Point3, 4> src;
  Rational d2[4][4];
  for (int i = 0; i < 4; ++i) src[i] = pv[(*anchor)[i]];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d2[i][j] = distance2(src[i], src[j]);

  std::map<Point3, int> q_index;
  for (size_t i = 0; i < qv.size(); ++i) q_index.emplace(qv[i], static_cast<int>(i));

  const int n = static_cast<int>(qv.size());
  std::array<int, 4> cand{};
  auto try_candidate = [&]() -> std::optional<CongruenceWitness> {
    const std::array<Point3, 4> dst{qv[cand[0]], qv[cand[1]], qv[cand[2]], qv[cand[3]]};
    auto motion = solve_motion(src, dst);
    if (!motion) return std::nullopt;
    if (!allow_reflection && motion->orientation < 0) return std::nullopt;
    CongruenceWitness w;
    w.motion = *motion;
    std::vector<char> hit(n, 0);
    for (size_t i = 0; i < pv.size(); ++i) {
      auto it = q_index.find((*motion)(pv[i]));
      if (it == q_index.end() || hit[it->second]) return std::nullopt;
      hit[it->second] = 1;
      w.vertex_bijection.emplace_back(static_cast<int>(i), it->second);
    }
    return w;
  };

  // enumerate anchor images, pruned by pairwise squared distances
  for (cand[0] = 0; cand[0] < n; ++cand[0])
    for (cand[1] = 0; cand[1] < n; ++cand[1]) {
      if (cand[1] == cand[0] || distance2(qv[cand[0]], qv[cand[1]]) != d2[0][1]) continue;
      for (cand[2] = 0; cand[2] < n; ++cand[2]) {
        if (cand[2] == cand[0] || cand[2] == cand[1]) continue;
        if (distance2(qv[cand[0]], qv[cand[2]]) != d2[0][2]) continue;
        if (distance2(qv[cand[1]], qv[cand[2]]) != d2[1][2]) continue;
        for (cand[3] = 0; cand[3] < n; ++cand[3]) {
          if (cand[3] == cand[0] || cand[3] == cand[1] || cand[3] == cand[2]) continue;
          if (distance2(qv[cand[0]], qv[cand[3]]) != d2[0][3]) continue;
          if (distance2(qv[cand[1]], qv[cand[3]]) != d2[1][3]) continue;
          if (distance2(qv[cand[2]], qv[cand[3]]) != d2[2][3]) continue;
          if (auto w = try_candidate()) return w;
        }
      }
    }
  return std::nullopt;
}

bool verify_witness(const ConvexPolytope& p, const ConvexPolytope& q,
                    const CongruenceWitness& w) {
  if (!validate_motion(w.motion)) return false;
  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  if (pv.size() != qv.size() || w.vertex_bijection.size() != pv.size()) return false;
  std::vector<char> from(pv.size(), 0), to(qv.size(), 0);
  for (const auto& [i, j] : w.vertex_bijection) {
    if (i < 0 || j < 0 || i >= static_cast<int>(pv.size()) || j >= static_cast<int>(qv.size())) return false;
    if (from[i] || to[j]) return false;
    from[i] = to[j] = 1;
    if (w.motion(pv[i]) != qv[j]) return false;
  }
  return true;
}

}  // namespace frusta
