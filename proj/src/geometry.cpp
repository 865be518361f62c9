#include "frusta/geometry.hpp"

#include <ostream>

namespace frusta {

Matrix3 Matrix3::identity() {
  Matrix3 r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
  return r;
}

Matrix3 Matrix3::from_rows(const Vector3& r0, const Vector3& r1, const Vector3& r2) {
  Matrix3 r;
  r.m[0] = {r0.x, r0.y, r0.z};
  r.m[1] = {r1.x, r1.y, r1.z};
  r.m[2] = {r2.x, r2.y, r2.z};
  return r;
}

Vector3 Matrix3::operator*(const Vector3& v) const {
  return {dot(row(0), v), dot(row(1), v), dot(row(2), v)};
}

Matrix3 Matrix3::operator*(const Matrix3& o) const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
  return r;
}

Matrix3 Matrix3::transposed() const {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

Rational Matrix3::det() const {
  return dot(row(0), cross(row(1), row(2)));
}

RigidMotion RigidMotion::identity() { return {Matrix3::identity(), Vector3{}, 1}; }

Point3 RigidMotion::operator()(const Point3& p) const {
  const Vector3 v{p.x, p.y, p.z};
  const Vector3 r = linear * v;
  return {r.x + translation.x, r.y + translation.y, r.z + translation.z};
}

bool validate_motion(const RigidMotion& m) {
  if (m.linear.transposed() * m.linear != Matrix3::identity()) return false;
  const Rational d = m.linear.det();
  if (d != Rational(1) && d != Rational(-1)) return false;
  return d == Rational(m.orientation);
}

Point3 apply_motion(const RigidMotion& m, const Point3& p) {
  if (!validate_motion(m)) throw Error("not an isometry");
  return m(p);
}

RigidMotion compose_motion(const RigidMotion& m1, const RigidMotion& m2) {
  RigidMotion r;
  r.linear = m1.linear * m2.linear;
  r.translation = m1.linear * m2.translation + m1.translation;
  r.orientation = m1.orientation * m2.orientation;
  return r;
}

RigidMotion inverse_motion(const RigidMotion& m) {
  RigidMotion r;
  r.linear = m.linear.transposed();  // orthogonal inverse
  r.translation = -(r.linear * m.translation);
  r.orientation = m.orientation;
  return r;
}

RigidMotion translation_motion(const Vector3& t) { return {Matrix3::identity(), t, 1}; }

RigidMotion rotation_z_quarters(int quarters) {
  static const Rational kTable[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // (cos, sin)
  const int q = ((quarters % 4) + 4) % 4;
  const Rational c = kTable[q][0], s = kTable[q][1];
  return {Matrix3::from_rows({c, -s, 0}, {s, c, 0}, {0, 0, 1}), Vector3{}, 1};
}

RigidMotion rotation_half_turn_x() {
  return {Matrix3::from_rows({1, 0, 0}, {0, -1, 0}, {0, 0, -1}), Vector3{}, 1};
}

RigidMotion rotation_half_turn_y() {
  return {Matrix3::from_rows({-1, 0, 0}, {0, 1, 0}, {0, 0, -1}), Vector3{}, 1};
}

RigidMotion mirror_x() {
  return {Matrix3::from_rows({-1, 0, 0}, {0, 1, 0}, {0, 0, 1}), Vector3{}, -1};
}

RigidMotion mirror_swap_xy() {
  return {Matrix3::from_rows({0, 1, 0}, {1, 0, 0}, {0, 0, 1}), Vector3{}, -1};
}

RigidMotion cycle_axes() {
  return {Matrix3::from_rows({0, 1, 0}, {0, 0, 1}, {1, 0, 0}), Vector3{}, 1};
}

RigidMotion about_point(const RigidMotion& m, const Point3& fixed) {
  const Vector3 f{fixed.x, fixed.y, fixed.z};
  RigidMotion r = m;
  r.translation = f - m.linear * f + m.translation;
  return r;
}

RigidMotion motion_from(const Matrix3& linear, const Vector3& translation) {
  RigidMotion m{linear, translation, 1};
  const Rational d = linear.det();
  m.orientation = d.sign();
  if (!validate_motion(m)) throw Error("not an isometry");
  return m;
}

std::ostream& operator<<(std::ostream& os, const Point3& p) {
  return os << '(' << p.x << ", " << p.y << ", " << p.z << ')';
}

std::ostream& operator<<(std::ostream& os, const Vector3& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

}  // namespace frusta
