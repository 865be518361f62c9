#include <doctest.h>

#include "frusta/dissection.hpp"
#include "frusta/congruence.hpp"
#include "test_support.hpp"

using namespace frusta;

namespace {

bool all_claims_exact(const Verdict& v) {
  for (const auto& r : v.claims)
    if (r.status != ClaimStatus::Exact) return false;
  return true;
}

const ClaimResult& claim_labeled(const Verdict& v, const std::string& label) {
  for (const auto& r : v.claims)
    if (r.label == label) return r;
  throw std::runtime_error("no claim labeled " + label);
}

}  // namespace

TEST_CASE("make_solid matches the closed forms") {
  testing::Rng rng(59);
  for (int i = 0; i < 80; ++i) {
    const SolidSpec spec = testing::random_solid_spec(rng);
    const ConvexPolytope poly = make_solid(spec);
    CHECK(poly.volume() == closed_form_volume(spec));
    CHECK(poly.volume() == testing::volume_oracle(poly));
  }
  CHECK(make_solid(SolidSpec::symmetric_frustum(4, 2, 6)).volume() == Rational(56));
  CHECK(make_solid(SolidSpec::juel(2)).volume() == Rational(4, 3));
  CHECK(make_solid(SolidSpec::yangma(1, 1, 1)).volume() == Rational(1, 3));
  CHECK(make_solid(SolidSpec::truncated_juel(2, 1)).volume() == Rational(7, 6));
  CHECK(make_solid(SolidSpec::regular_tetrahedron()).volume() == Rational(1, 3));
}

TEST_CASE("make_solid rejects bad parameters") {
  CHECK_THROWS_WITH_AS(make_solid(SolidSpec::symmetric_frustum(2, 2, 6)),
                       doctest::Contains("a must exceed b"), Error);
  CHECK_THROWS_WITH_AS(make_solid(SolidSpec::symmetric_frustum(2, 3, 6)),
                       doctest::Contains("a must exceed b"), Error);
  CHECK_THROWS_AS(make_solid(SolidSpec::box(1, 0, 1)), Error);
  CHECK_THROWS_AS(make_solid(SolidSpec::juel(-1)), Error);
  CHECK_THROWS_AS(make_solid(SolidSpec::truncated_juel(1, 1)), Error);
  CHECK_THROWS_AS(make_solid(SolidSpec{SolidKind::Box, {Rational(1)}}), Error);
}

TEST_CASE("nine-part dissection") {
  const auto cert = nine_part_frustum(4, 2, 6);
  REQUIRE(cert.pieces.size() == 9);
  Rational total;
  for (const auto& piece : cert.pieces) total += piece.poly.volume();
  CHECK(total == Rational(56));  // 24 + 4*6 + 4*2
  CHECK(cert.pieces[0].poly.volume() == Rational(24));
  CHECK(verify_certificate(cert).pass);

  Rational paradigm;
  for (const auto& piece : nine_part_frustum(3, 1, 1).pieces) paradigm += piece.poly.volume();
  CHECK(paradigm == Rational(13, 3));

  Rational small;
  for (const auto& piece : nine_part_frustum(2, 1, 1).pieces) small += piece.poly.volume();
  CHECK(small == Rational(7, 3));

  CHECK_THROWS_WITH_AS(nine_part_frustum(2, 2, 6), doctest::Contains("a must exceed b"), Error);
}

TEST_CASE("three copies, paradigm dimensions") {
  const auto cert = liu_hui_three_copies(3, 1, 1);
  CHECK(cert.targets[0].poly.volume() == Rational(9));
  CHECK(cert.targets[1].poly.volume() == Rational(3));
  CHECK(cert.targets[2].poly.volume() == Rational(1));
  const auto verdict = verify_certificate(cert);
  CHECK(verdict.pass);
  CHECK(all_claims_exact(verdict));
}

TEST_CASE("three copies, general dimensions") {
  const auto cert = liu_hui_three_copies(4, 2, 6);
  const auto verdict = verify_certificate(cert);
  CHECK(verdict.pass);
  CHECK(claim_labeled(verdict, "middle box").status == ClaimStatus::Exact);
  CHECK(claim_labeled(verdict, "cross central").status == ClaimStatus::Exact);
  CHECK(claim_labeled(verdict, "small box").status == ClaimStatus::Exact);
  const auto& corner = claim_labeled(verdict, "corner volume");
  CHECK(corner.status == ClaimStatus::VolumeEquality);
  CHECK(corner.detail == "24 = 24");  // 12 pyramids of 2 vs 4 cells of 6
  CHECK_FALSE(verdict.notes.empty());
}

TEST_CASE("three copies: the corner step is exact exactly when h = (a-b)/2") {
  const auto exact = liu_hui_three_copies(4, 2, 1);  // s = 1 = h
  bool found_corner_tiling = false;
  for (const auto& claim : exact.claims)
    found_corner_tiling |= claim.label.rfind("corner box", 0) == 0;
  CHECK(found_corner_tiling);
  CHECK(all_claims_exact(verify_certificate(exact)));

  // the same three-pyramid mechanism must fail when the cell is not a cube
  const Rational s(1), h(6);
  const ConvexPolytope cell = make_solid(SolidSpec::box(s, s, h));
  std::vector<std::pair<ConvexPolytope, RigidMotion>> placed;
  const ConvexPolytope ym = make_solid(SolidSpec::yangma(s, s, h));
  for (int slot = 0; slot < 3; ++slot) {
    RigidMotion m = motion_from(Matrix3::from_rows({0, 1, 0}, {1, 0, 0}, {0, 0, -1}),
                                {Rational(0), Rational(0), s});
    for (int i = 0; i < slot; ++i) m = compose_motion(cycle_axes(), m);
    placed.emplace_back(ym, m);
  }
  CHECK(verify_tiling(cell, placed).has_value());
}

TEST_CASE("four corner pyramids assemble a pyramid") {
  const auto half = four_yangma_pyramid(Rational(1, 2), 1);
  CHECK(half.targets[0].poly.volume() == Rational(1, 3));
  CHECK(verify_certificate(half).pass);

  CHECK(four_yangma_pyramid(1, 6).targets[0].poly.volume() == Rational(8));
  CHECK(four_yangma_pyramid(1, 1).targets[0].poly.volume() == Rational(4, 3));
}

TEST_CASE("right frustum parts") {
  const auto cert = right_frustum_parts(4, 2, 6);
  REQUIRE(cert.pieces.size() == 4);
  CHECK(cert.pieces[0].poly.volume() == Rational(24));
  CHECK(cert.pieces[1].poly.volume() == Rational(12));
  CHECK(cert.pieces[2].poly.volume() == Rational(12));
  CHECK(cert.pieces[3].poly.volume() == Rational(8));
  CHECK(cert.regions[0].poly.volume() == Rational(24));  // the prism-pair box
  const auto verdict = verify_certificate(cert);
  CHECK(verdict.pass);
  CHECK(all_claims_exact(verdict));

  const auto small = right_frustum_parts(2, 1, 1);
  Rational total;
  for (const auto& piece : small.pieces) total += piece.poly.volume();
  CHECK(total == Rational(7, 3));
}

TEST_CASE("four right frusta tile the doubled frustum") {
  const auto cert = four_right_frustums(2, 1, 1);
  CHECK(cert.targets[0].poly.volume() == Rational(28, 3));
  CHECK(verify_certificate(cert).pass);

  CHECK(four_right_frustums(4, 2, 6).targets[0].poly.volume() == Rational(224));
  const auto mixed = four_right_frustums(3, 1, 2);
  CHECK(mixed.targets[0].poly.volume() ==
        Rational(4) * evaluate_formula(FormulaId::FrustumAlternative, 3, 1, 2));
  CHECK(verify_certificate(mixed).pass);
}

TEST_CASE("cube dissections") {
  const auto three = cube_dissections(1, CubeDissection::ThreeYangma);
  for (const auto& piece : three.pieces) CHECK(piece.poly.volume() == Rational(1, 3));
  CHECK(verify_certificate(three).pass);

  const auto six = cube_dissections(2, CubeDissection::SixJuel);
  for (const auto& piece : six.pieces) CHECK(piece.poly.volume() == Rational(4, 3));
  CHECK(verify_certificate(six).pass);

  const auto two = cube_dissections(1, CubeDissection::TwoQiandu);
  for (const auto& piece : two.pieces) CHECK(piece.poly.volume() == Rational(1, 2));
  CHECK(verify_certificate(two).pass);
}

TEST_CASE("a non-cube box still tiles but without congruent pieces") {
  const auto cert = box_corner_pyramids(1, 1, 2);
  CHECK(verify_certificate(cert).pass);
  CHECK_FALSE(
      find_congruence(cert.pieces[0].poly, cert.pieces[1].poly, true).has_value());
}

TEST_CASE("prism splits into corner pyramid and tetrahedron") {
  const auto unit = qiandu_split(1, 1, 1);
  CHECK(unit.pieces[0].poly.volume() == Rational(1, 3));
  CHECK(unit.pieces[1].poly.volume() == Rational(1, 6));
  CHECK(verify_certificate(unit).pass);

  const auto big = qiandu_split(2, 3, 5);
  CHECK(big.pieces[0].poly.volume() == Rational(10));
  CHECK(big.pieces[1].poly.volume() == Rational(5));
  CHECK(verify_certificate(big).pass);

  const auto tall = qiandu_split(1, 1, 2);
  CHECK(tall.pieces[0].poly.volume() == Rational(2, 3));
  CHECK(tall.pieces[1].poly.volume() == Rational(1, 3));
}

TEST_CASE("the doubled-base bundle") {
  const auto cert = shutler_certificate(1, 1);
  CHECK(cert.sources[0].poly.volume() == Rational(7, 3));
  CHECK(cert.targets[1].poly.volume() == Rational(1, 3));   // assembled top
  CHECK(cert.regions[1].poly.volume() == Rational(8, 3));   // full pyramid
  const auto verdict = verify_certificate(cert);
  CHECK(verdict.pass);

  CHECK(Rational(6) * shutler_certificate(2, 3).targets[1].poly.volume() == Rational(24));
  const auto scaled = shutler_certificate(1, 5);
  CHECK(scaled.regions[1].poly.volume() == Rational(40, 3));
  CHECK(scaled.regions[1].poly.volume() == Rational(8) * scaled.targets[1].poly.volume());
  CHECK(verify_certificate(scaled).pass);
}

TEST_CASE("truncated juel pyramid volume identities") {
  const auto two_one = truncated_juel_check(2, 1);
  CHECK(two_one.all_ok());
  CHECK(two_one.rows[0].left == Rational(7, 6));

  const auto three_one = truncated_juel_check(3, 1);
  CHECK(three_one.all_ok());
  CHECK(three_one.rows[0].left == Rational(13, 3));

  CHECK_THROWS_WITH_AS(truncated_juel_check(1, 1), doctest::Contains("a must exceed b"), Error);
}

TEST_CASE("random catalog certificates verify at their declared levels") {
  testing::Rng rng(61);
  for (int i = 0; i < 12; ++i) {
    const auto t = testing::random_frustum_triple(rng, 20);
    CHECK(verify_certificate(nine_part_frustum(t.a, t.b, t.h)).pass);
    CHECK(verify_certificate(liu_hui_three_copies(t.a, t.b, t.h)).pass);
    CHECK(verify_certificate(right_frustum_parts(t.a, t.b, t.h)).pass);
    CHECK(verify_certificate(four_right_frustums(t.a, t.b, t.h)).pass);
    CHECK(verify_certificate(shutler_certificate(t.b, t.h)).pass);
    CHECK(verify_certificate(four_yangma_pyramid(t.a, t.h)).pass);
    CHECK(verify_certificate(qiandu_split(t.a, t.b, t.h)).pass);
    CHECK(truncated_juel_check(t.a, t.b).all_ok());
  }
}
