#include <doctest.h>

#include "frusta/dehn.hpp"
#include "test_support.hpp"

using namespace frusta;

TEST_CASE("square-free canonicalization") {
  CHECK(sqrt_canonical(Rational(2)) == std::pair{Rational(1), 2LL});
  CHECK(sqrt_canonical(Rational(8)) == std::pair{Rational(2), 2LL});
  CHECK(sqrt_canonical(Rational(4)) == std::pair{Rational(2), 1LL});
  CHECK(sqrt_canonical(Rational(1, 2)) == std::pair{Rational(1, 2), 2LL});
  CHECK(sqrt_canonical(Rational(9, 4)) == std::pair{Rational(3, 2), 1LL});
  CHECK(sqrt_canonical(Rational(0)) == std::pair{Rational(0), 1LL});
  CHECK_THROWS_WITH_AS(sqrt_canonical(Rational(BigInt("10000000000000"), BigInt(1))),
                       "length too large to canonicalize", Error);
}

TEST_CASE("angle classification: rational multiples of pi") {
  CHECK(is_rational_pi({0, Rational(0)}));        // pi/2
  CHECK(is_rational_pi({1, Rational(1, 2)}));     // pi/4
  CHECK(is_rational_pi({-1, Rational(3, 4)}));    // 5pi/6
  CHECK_FALSE(is_rational_pi({1, Rational(1, 9)}));
  CHECK_FALSE(is_rational_pi({-1, Rational(1, 3)}));
}

TEST_CASE("dihedral angles of the basic solids") {
  const auto cube_edges = dihedral_edges(make_solid(SolidSpec::box(1, 1, 1)));
  CHECK(cube_edges.size() == 12);
  for (const auto& [len2, cls] : cube_edges) {
    CHECK(len2 == Rational(1));
    CHECK(cls.cos_sign == 0);
    CHECK(cls.cos_squared == Rational(0));
  }

  const auto tetra_edges = dihedral_edges(make_solid(SolidSpec::regular_tetrahedron()));
  CHECK(tetra_edges.size() == 6);
  for (const auto& [len2, cls] : tetra_edges) {
    CHECK(len2 == Rational(2));
    CHECK(cls.cos_sign == 1);
    CHECK(cls.cos_squared == Rational(1, 9));
  }

  // the prism has right dihedrals plus the 45/135 pair
  for (const auto& [len2, cls] : dihedral_edges(make_solid(SolidSpec::qiandu(1, 1, 1)))) {
    CHECK((cls.cos_squared == Rational(0) || cls.cos_squared == Rational(1, 2)));
    CHECK(is_rational_pi(cls));
  }
}

TEST_CASE("invariants of boxes vanish; the regular tetrahedron is obstructed") {
  CHECK(dehn_invariant(make_solid(SolidSpec::box(1, 1, 1))).is_zero());
  CHECK(dehn_invariant(make_solid(SolidSpec::box(1, 2, 3))).is_zero());

  const DehnInvariant tetra = dehn_invariant(make_solid(SolidSpec::regular_tetrahedron()));
  REQUIRE(tetra.class_count() == 1);
  const auto& [cls, sum] = *tetra.classes().begin();
  CHECK(cls.cos_sign == 1);
  CHECK(cls.cos_squared == Rational(1, 9));
  REQUIRE(sum.terms().size() == 1);
  CHECK(sum.terms().begin()->first == 2);             // sqrt(2)
  CHECK(sum.terms().begin()->second == Rational(6));  // six unit-sqrt(2) edges
  CHECK(tetra.str() == "(+, cos^2 = 1/9) : (6)sqrt(2)");
}

TEST_CASE("comparator verdicts") {
  const ConvexPolytope cube = make_solid(SolidSpec::box(1, 1, 1));
  const ConvexPolytope box = make_solid(SolidSpec::box(1, 2, 3));
  const ConvexPolytope tetra = make_solid(SolidSpec::regular_tetrahedron());
  CHECK(compare_invariants(cube, box) == InvariantComparison::EqualInvariant);
  CHECK(compare_invariants(cube, tetra) == InvariantComparison::SoundlyDifferent);
  CHECK(compare_invariants(tetra, cube) == InvariantComparison::SoundlyDifferent);

  // triple corner pyramid vs its box: several irrational classes survive, so
  // the comparator must stay agnostic
  DehnInvariant triple = dehn_invariant(make_solid(SolidSpec::yangma(1, 1, 2)));
  triple *= Rational(3);
  DehnInvariant difference = triple;
  difference -= dehn_invariant(make_solid(SolidSpec::box(1, 1, 2)));
  CHECK(classify_difference(difference) == InvariantComparison::PossiblyDifferent);
}

TEST_CASE("invariant is motion-invariant and scales linearly") {
  testing::Rng rng(53);
  for (int i = 0; i < 40; ++i) {
    const ConvexPolytope p = make_solid(testing::random_solid_spec(rng, 8));
    const RigidMotion m = testing::random_motion(rng);
    CHECK(dehn_invariant(transform(p, m)) == dehn_invariant(p));
    CHECK(compare_invariants(p, transform(p, m)) == InvariantComparison::EqualInvariant);

    const Rational k = testing::random_rational(rng, 9);
    DehnInvariant scaled_classes = dehn_invariant(p);
    scaled_classes *= k;
    CHECK(dehn_invariant(scale(p, k)) == scaled_classes);
  }
}
