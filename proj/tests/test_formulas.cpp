#include <doctest.h>

#include "test_support.hpp"

using namespace frusta;

TEST_CASE("the four formulas at the worked numbers") {
  const Rational a(4), b(2), h(6);
  CHECK(evaluate_formula(FormulaId::FrustumClassic, a, b, h) == Rational(56));
  CHECK(evaluate_formula(FormulaId::FrustumAlternative, a, b, h) == Rational(56));
  CHECK(evaluate_formula(FormulaId::FrustumFactored, a, b, h) == Rational(56));
  CHECK(evaluate_formula(FormulaId::PyramidThird, a, b, h) == Rational(32));
  CHECK(evaluate_formula(FormulaId::FrustumClassic, Rational(50), Rational(40), Rational(50)) ==
        Rational(305000, 3));
}

TEST_CASE("formula preconditions") {
  CHECK_THROWS_AS(evaluate_formula(FormulaId::FrustumClassic, Rational(2), Rational(2), Rational(1)),
                  Error);
  CHECK_THROWS_AS(evaluate_formula(FormulaId::FrustumClassic, Rational(2), Rational(1), Rational(0)),
                  Error);
  CHECK_THROWS_AS(evaluate_formula(FormulaId::PyramidThird, Rational(0), Rational(0), Rational(1)),
                  Error);
  // b = 0 is fine for the frustum rules even though the solid would be degenerate
  CHECK(evaluate_formula(FormulaId::FrustumClassic, Rational(3), Rational(0), Rational(2)) ==
        Rational(6));
}

TEST_CASE("classic rule at b = 0 specializes to the pyramid rule") {
  testing::Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    const Rational a = testing::random_rational(rng);
    const Rational h = testing::random_rational(rng);
    CHECK(evaluate_formula(FormulaId::FrustumClassic, a, Rational(0), h) ==
          evaluate_formula(FormulaId::PyramidThird, a, Rational(0), h));
  }
}

TEST_CASE("all frustum rules agree with the geometric volume") {
  testing::Rng rng(41);
  for (int i = 0; i < 150; ++i) {
    const auto t = testing::random_frustum_triple(rng);
    const Rational classic = evaluate_formula(FormulaId::FrustumClassic, t.a, t.b, t.h);
    CHECK(classic == evaluate_formula(FormulaId::FrustumAlternative, t.a, t.b, t.h));
    CHECK(classic == evaluate_formula(FormulaId::FrustumFactored, t.a, t.b, t.h));
    CHECK(classic == make_solid(SolidSpec::symmetric_frustum(t.a, t.b, t.h)).volume());
  }
}

TEST_CASE("step trace in the original order") {
  const auto trace = moscow_trace(Rational(4), Rational(2), Rational(6));
  REQUIRE(trace.steps.size() == 6);
  const long long expected[6] = {16, 8, 4, 28, 2, 56};
  for (int i = 0; i < 6; ++i) CHECK(trace.steps[i].value == Rational(expected[i]));
  CHECK(trace.final_value() == Rational(56));

  const auto small = moscow_trace(Rational(2), Rational(1), Rational(3));
  const long long small_expected[6] = {4, 2, 1, 7, 1, 7};
  for (int i = 0; i < 6; ++i) CHECK(small.steps[i].value == Rational(small_expected[i]));

  CHECK(moscow_trace(Rational(50), Rational(40), Rational(50)).final_value() ==
        Rational(305000, 3));
  CHECK_THROWS_AS(moscow_trace(Rational(2), Rational(2), Rational(1)), Error);
}

TEST_CASE("step trace with the division applied last") {
  const auto trace = nine_chapters_trace(Rational(50), Rational(40), Rational(50), "chi");
  REQUIRE(trace.steps.size() == 6);
  const Rational expected[6] = {Rational(2500), Rational(2000),   Rational(1600),
                                Rational(6100), Rational(305000), Rational(305000, 3)};
  for (int i = 0; i < 6; ++i) CHECK(trace.steps[i].value == expected[i]);

  CHECK(nine_chapters_trace(Rational(3), Rational(1), Rational(1)).final_value() ==
        Rational(13, 3));
  CHECK(nine_chapters_trace(Rational(4), Rational(2), Rational(6)).final_value() == Rational(56));
}

TEST_CASE("operation counts") {
  const auto moscow = moscow_trace(Rational(4), Rational(2), Rational(6));
  CHECK(op_count(moscow) == OpCounts{2, 4, 1});

  // same events in a different order
  const auto nine = nine_chapters_trace(Rational(4), Rational(2), Rational(6));
  CHECK(op_count(nine) == op_count(moscow));

  CHECK(op_count(AlgorithmTrace{}) == OpCounts{0, 0, 0});
}

TEST_CASE("trace final values match the classic rule") {
  testing::Rng rng(43);
  for (int i = 0; i < 50; ++i) {
    const auto t = testing::random_frustum_triple(rng);
    const Rational expected = evaluate_formula(FormulaId::FrustumClassic, t.a, t.b, t.h);
    CHECK(moscow_trace(t.a, t.b, t.h).final_value() == expected);
    CHECK(nine_chapters_trace(t.a, t.b, t.h).final_value() == expected);
  }
}

TEST_CASE("identity checks") {
  for (auto [a, b] : {std::pair<long long, long long>{2, 1}, {5, 2}, {7, 7}}) {
    const auto report = identity_checks(Rational(a), Rational(b));
    REQUIRE(report.rows.size() == 2);
    CHECK(report.all_ok());
  }
  testing::Rng rng(47);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = testing::random_rational(rng) - testing::random_rational(rng);
    const Rational b = testing::random_rational(rng) - testing::random_rational(rng);
    CHECK(identity_checks(a, b).all_ok());
  }
}

TEST_CASE("trace rendering marks non-integer values") {
  const auto text = render_trace(nine_chapters_trace(Rational(50), Rational(40), Rational(50), "chi"));
  CHECK(text.find("lengths in chi") != std::string::npos);
  CHECK(text.find("305000/3") != std::string::npos);
  CHECK(text.find("≈ 101666.666667") != std::string::npos);
  CHECK(text.find("2 additions, 4 multiplications, 1 divisions") != std::string::npos);
}
