#pragma once

#include <array>
#include <iosfwd>

#include "frusta/rational.hpp"

namespace frusta {

struct Vector3 {
  Rational x, y, z;

  Vector3() = default;
  Vector3(Rational x_, Rational y_, Rational z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  Vector3 operator-() const { return {-x, -y, -z}; }
  friend Vector3 operator+(const Vector3& a, const Vector3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vector3 operator-(const Vector3& a, const Vector3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vector3 operator*(const Rational& k, const Vector3& v) { return {k * v.x, k * v.y, k * v.z}; }
  friend bool operator==(const Vector3&, const Vector3&) = default;

  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
};

struct Point3 {
  Rational x, y, z;

  Point3() = default;
  Point3(Rational x_, Rational y_, Rational z_)
      : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  friend Vector3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Point3 operator+(const Point3& p, const Vector3& v) { return {p.x + v.x, p.y + v.y, p.z + v.z}; }
  friend bool operator==(const Point3&, const Point3&) = default;

  // lexicographic; used for exact point de-duplication
  friend bool operator<(const Point3& a, const Point3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  }
};

inline Rational dot(const Vector3& a, const Vector3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vector3 cross(const Vector3& a, const Vector3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Rational norm2(const Vector3& v) { return dot(v, v); }
inline Rational distance2(const Point3& a, const Point3& b) { return norm2(a - b); }

struct Matrix3 {
  // row-major
  std::array<std::array<Rational, 3>, 3> m{};

  static Matrix3 identity();
  static Matrix3 from_rows(const Vector3& r0, const Vector3& r1, const Vector3& r2);

  Vector3 row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }
  Vector3 col(int j) const { return {m[0][j], m[1][j], m[2][j]}; }

  Vector3 operator*(const Vector3& v) const;
  Matrix3 operator*(const Matrix3& o) const;
  Matrix3 transposed() const;
  Rational det() const;

  friend bool operator==(const Matrix3&, const Matrix3&) = default;
};

// Membership rule: normal . x <= offset. The normal is not normalized.
struct HalfSpace {
  Vector3 normal;
  Rational offset;

  // signed evaluation: negative inside, zero on the boundary plane
  Rational eval(const Point3& p) const { return normal.x * p.x + normal.y * p.y + normal.z * p.z - offset; }
  HalfSpace complement() const { return {-normal, -offset}; }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

// Rational orthogonal linear part plus a translation. `orientation` is the
// stored handedness and must equal det(linear): +1 proper, -1 improper.
struct RigidMotion {
  Matrix3 linear;
  Vector3 translation;
  int orientation = 1;

  static RigidMotion identity();

  // unchecked application; use apply_motion() for the validating form
  Point3 operator()(const Point3& p) const;
  Vector3 apply_vector(const Vector3& v) const { return linear * v; }

  friend bool operator==(const RigidMotion&, const RigidMotion&) = default;
};

bool validate_motion(const RigidMotion& m);
// Throws Error("not an isometry") when the motion fails validation.
Point3 apply_motion(const RigidMotion& m, const Point3& p);
// Result applies m2 first, then m1.
RigidMotion compose_motion(const RigidMotion& m1, const RigidMotion& m2);
RigidMotion inverse_motion(const RigidMotion& m);

// Common building blocks for placements.
RigidMotion translation_motion(const Vector3& t);
RigidMotion rotation_z_quarters(int quarters);  // rotation about the z axis by quarters * 90 degrees
RigidMotion rotation_half_turn_x();
RigidMotion rotation_half_turn_y();
RigidMotion mirror_x();
RigidMotion mirror_swap_xy();
// cyclic coordinate rotation (x,y,z) -> (y,z,x); proper, the 3-fold axis of a cube
RigidMotion cycle_axes();
// conjugate: act like `m` but with `fixed` held in place
RigidMotion about_point(const RigidMotion& m, const Point3& fixed);
// builds a motion from an orthogonal matrix, deriving the orientation sign;
// throws Error when the matrix is not an exact rational isometry
RigidMotion motion_from(const Matrix3& linear, const Vector3& translation);

std::ostream& operator<<(std::ostream& os, const Point3& p);
std::ostream& operator<<(std::ostream& os, const Vector3& v);

}  // namespace frusta
