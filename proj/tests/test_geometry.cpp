#include <doctest.h>

#include "test_support.hpp"

using namespace frusta;

TEST_CASE("motion validation") {
  CHECK(validate_motion(RigidMotion::identity()));

  // cyclic axis permutation is a proper rotation
  RigidMotion cyc = cycle_axes();
  CHECK(validate_motion(cyc));
  CHECK(cyc.orientation == 1);

  RigidMotion bad = RigidMotion::identity();
  bad.linear.m[0][1] = 1;  // row (1,1,0) is not orthonormal
  CHECK_FALSE(validate_motion(bad));

  RigidMotion wrong_sign = mirror_x();
  wrong_sign.orientation = 1;
  CHECK_FALSE(validate_motion(wrong_sign));
}

TEST_CASE("apply_motion") {
  const Point3 p{1, 2, 3};
  CHECK(apply_motion(RigidMotion::identity(), p) == p);
  CHECK(apply_motion(mirror_swap_xy(), Point3{1, 0, 0}) == Point3{0, 1, 0});
  CHECK(apply_motion(rotation_z_quarters(1), Point3{1, 0, 0}) == Point3{0, 1, 0});

  RigidMotion zeroed;
  zeroed.orientation = 1;
  CHECK_THROWS_WITH_AS(apply_motion(zeroed, p), "not an isometry", Error);
}

TEST_CASE("composition and inverse") {
  testing::Rng rng(11);
  const RigidMotion m = testing::random_motion(rng);
  CHECK(compose_motion(RigidMotion::identity(), m) == m);
  CHECK(compose_motion(mirror_swap_xy(), mirror_swap_xy()) == RigidMotion::identity());
  CHECK(compose_motion(cycle_axes(), cycle_axes()).linear * cycle_axes().linear ==
        Matrix3::identity());

  for (int i = 0; i < 50; ++i) {
    const RigidMotion a = testing::random_motion(rng);
    const RigidMotion b = testing::random_motion(rng);
    const RigidMotion c = testing::random_motion(rng);
    CHECK(validate_motion(a));
    const RigidMotion ab = compose_motion(a, b);
    CHECK(validate_motion(ab));
    const Point3 p{testing::random_rational(rng), testing::random_rational(rng),
                   testing::random_rational(rng)};
    CHECK(ab(p) == a(b(p)));  // compose applies the second argument first
    CHECK(compose_motion(ab, c) == compose_motion(a, compose_motion(b, c)));
    CHECK(compose_motion(inverse_motion(a), a) == RigidMotion::identity());
    CHECK(validate_motion(inverse_motion(a)));
  }
}

TEST_CASE("motions preserve squared distances exactly") {
  testing::Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const RigidMotion m = testing::random_motion(rng);
    const Point3 p{testing::random_rational(rng), testing::random_rational(rng),
                   testing::random_rational(rng)};
    const Point3 q{testing::random_rational(rng), testing::random_rational(rng),
                   testing::random_rational(rng)};
    CHECK(distance2(m(p), m(q)) == distance2(p, q));
  }
}

TEST_CASE("about_point keeps the fixed point fixed") {
  const Point3 f{Rational(1, 2), Rational(3), Rational(5, 7)};
  const RigidMotion m = about_point(rotation_z_quarters(1), f);
  CHECK(m(f) == f);
  CHECK(validate_motion(m));
}

TEST_CASE("motion_from rejects non-orthogonal matrices") {
  CHECK_THROWS_AS(motion_from(Matrix3::from_rows({1, 1, 0}, {0, 1, 0}, {0, 0, 1}), {}), Error);
  const RigidMotion m = motion_from(mirror_swap_xy().linear, {1, 2, 3});
  CHECK(m.orientation == -1);
}
