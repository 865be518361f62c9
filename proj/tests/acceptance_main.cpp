// Acceptance suite: one line per criterion, zero-tolerance exact checks.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "frusta/certificate_io.hpp"
#include "frusta/congruence.hpp"
#include "frusta/dehn.hpp"
#include "frusta/dissection.hpp"
#include "test_support.hpp"

using namespace frusta;
using frusta::testing::FrustumTriple;
using frusta::testing::random_frustum_triple;
using frusta::testing::random_motion;
using frusta::testing::random_rational;
using frusta::testing::random_solid_spec;
using Rng = frusta::testing::Rng;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<void()> run;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

template <typename T>
void expect_eq(const T& actual, const T& wanted, const std::string& what) {
  if (!(actual == wanted)) {
    std::ostringstream os;
    os << what << " (got " << actual << ", wanted " << wanted << ")";
    throw Error(os.str());
  }
}

const ClaimResult& claim_labeled(const Verdict& v, const std::string& label) {
  for (const auto& r : v.claims)
    if (r.label == label) return r;
  throw Error("missing claim \"" + label + "\"");
}

bool all_exact(const Verdict& v) {
  for (const auto& r : v.claims)
    if (r.status != ClaimStatus::Exact) return false;
  return v.pass;
}

// 1. Moscow Papyrus reproduction
void criterion_moscow() {
  const auto trace = moscow_trace(4, 2, 6, "cubit");
  const long long steps[6] = {16, 8, 4, 28, 2, 56};
  expect(trace.steps.size() == 6, "six steps");
  for (int i = 0; i < 6; ++i)
    expect_eq(trace.steps[i].value, Rational(steps[i]), "step value");
  expect_eq(make_solid(SolidSpec::symmetric_frustum(4, 2, 6)).volume(), Rational(56),
            "geometric volume");
}

// 2. Nine Chapters reproduction
void criterion_nine_chapters() {
  expect_eq(nine_chapters_trace(50, 40, 50, "chi").final_value(), Rational(305000, 3),
            "final value");
}

// 3. The paradigm dimensions: everything exact
void criterion_liu_hui_paradigm() {
  const auto cert = liu_hui_three_copies(3, 1, 1);
  const Verdict verdict = verify_certificate(cert);
  expect(all_exact(verdict), "all claims exact");
  expect_eq(cert.targets[0].poly.volume(), Rational(9), "big box");
  expect_eq(cert.targets[1].poly.volume(), Rational(3), "middle box");
  expect_eq(cert.targets[2].poly.volume(), Rational(1), "small box");
  Rational total;
  for (const auto& t : cert.targets) total += t.poly.volume();
  expect_eq(total, Rational(3) * Rational(13, 3), "three frusta of 13/3");
}

// 4. General parameters: central claims exact, corner step volume-only;
//    constructed h = (a-b)/2 cases fully exact
void criterion_liu_hui_general() {
  Rng rng(101);
  const std::string central[] = {"middle box",      "cross central",    "cross slab west",
                                 "cross slab east", "cross slab south", "cross slab north",
                                 "small box"};
  for (int i = 0; i < 100; ++i) {
    FrustumTriple t = random_frustum_triple(rng);
    while (t.h == (t.a - t.b) / Rational(2)) t = random_frustum_triple(rng);
    const Verdict verdict = verify_certificate(liu_hui_three_copies(t.a, t.b, t.h));
    expect(verdict.pass, "verdict passes");
    for (const auto& label : central)
      expect(claim_labeled(verdict, label).status == ClaimStatus::Exact, label + " exact");
    expect(claim_labeled(verdict, "corner volume").status == ClaimStatus::VolumeEquality,
           "corner step is a volume equality");
  }
  for (int i = 0; i < 50; ++i) {
    const Rational b = random_rational(rng);
    const Rational delta = random_rational(rng);
    const Rational a = b + delta;
    const Verdict verdict = verify_certificate(liu_hui_three_copies(a, b, delta / Rational(2)));
    expect(all_exact(verdict), "constructed h = (a-b)/2 case fully exact");
  }
}

// 5. Formula equivalence, 1000 random triples
void criterion_formula_equivalence() {
  Rng rng(102);
  for (int i = 0; i < 1000; ++i) {
    const auto t = random_frustum_triple(rng);
    const Rational classic = evaluate_formula(FormulaId::FrustumClassic, t.a, t.b, t.h);
    expect_eq(evaluate_formula(FormulaId::FrustumAlternative, t.a, t.b, t.h), classic,
              "alternative form");
    expect_eq(evaluate_formula(FormulaId::FrustumFactored, t.a, t.b, t.h), classic,
              "factored form");
    expect_eq(make_solid(SolidSpec::symmetric_frustum(t.a, t.b, t.h)).volume(), classic,
              "geometric volume");
  }
}

// 6. Nine-part dissection, 100 random triples
void criterion_nine_part() {
  Rng rng(103);
  for (int i = 0; i < 100; ++i) {
    const auto t = random_frustum_triple(rng);
    const auto cert = nine_part_frustum(t.a, t.b, t.h);
    std::vector<std::pair<ConvexPolytope, RigidMotion>> placed;
    for (const auto& piece : cert.pieces) placed.emplace_back(piece.poly, piece.source_motion);
    const auto failure = verify_tiling(cert.sources[0].poly, placed);
    expect(!failure.has_value(), failure ? failure->reason : "");
  }
}

// 7. The doubled-base bundle, 50 random (b, h)
void criterion_shutler() {
  Rng rng(104);
  for (int i = 0; i < 50; ++i) {
    const Rational b = random_rational(rng);
    const Rational h = random_rational(rng);
    const auto cert = shutler_certificate(b, h);

    const ConvexPolytope& assembled = cert.targets[1].poly;
    const ConvexPolytope& removed = cert.regions[0].poly;
    const auto witness = find_congruence(assembled, removed, false);
    expect(witness.has_value(), "assembled top congruent to removed top");
    expect(verify_witness(assembled, removed, *witness), "witness verifies");

    expect_eq(cert.regions[1].poly.volume(), Rational(8) * assembled.volume(),
              "full pyramid is eight tops");
    expect_eq(Rational(6) * assembled.volume(), Rational(2) * h * square(b),
              "six tops fill the box");
    expect(verify_certificate(cert).pass, "bundle verifies");
  }
}

// 8. Cube dissections and the non-cube refutation
void criterion_cube_dissections() {
  Rng rng(105);
  for (int i = 0; i < 5; ++i) {
    const Rational a = random_rational(rng, 12);
    const Verdict three = verify_certificate(cube_dissections(a, CubeDissection::ThreeYangma));
    expect(three.pass, "three corner pyramids");
    const Verdict six = verify_certificate(cube_dissections(a, CubeDissection::SixJuel));
    expect(six.pass, "six juel pyramids");
  }
  const auto cert = box_corner_pyramids(1, 1, 2);
  expect(verify_certificate(cert).pass, "box(1,1,2) tiling exact");
  const bool pair01 =
      find_congruence(cert.pieces[0].poly, cert.pieces[1].poly, true).has_value();
  const bool pair02 =
      find_congruence(cert.pieces[0].poly, cert.pieces[2].poly, true).has_value();
  const bool pair12 =
      find_congruence(cert.pieces[1].poly, cert.pieces[2].poly, true).has_value();
  expect(!(pair01 && pair02 && pair12), "non-cube pieces are not mutually congruent");
}

// 9. Truncated juel pyramid, 50 random (a, b)
void criterion_truncated_juel() {
  Rng rng(106);
  for (int done = 0; done < 50;) {
    Rational a = random_rational(rng), b = random_rational(rng);
    if (a == b) continue;
    if (a < b) std::swap(a, b);
    ++done;
    const Rational geometric = make_solid(SolidSpec::truncated_juel(a, b)).volume();
    expect_eq(geometric, (cube(a) - cube(b)) / Rational(6), "sixth of the cube difference");
    expect_eq(geometric, evaluate_formula(FormulaId::FrustumClassic, a, b, (a - b) / Rational(2)),
              "classic rule at h = (a-b)/2");
    expect(truncated_juel_check(a, b).all_ok(), "report rows");
  }
}

// 10. Four right frusta and the right-frustum parts, 50 random triples
void criterion_right_frusta() {
  Rng rng(107);
  for (int i = 0; i < 50; ++i) {
    const auto t = random_frustum_triple(rng);
    const auto quad = four_right_frustums(t.a, t.b, t.h);
    expect(all_exact(verify_certificate(quad)), "four quadrants tile");
    expect_eq(quad.targets[0].poly.volume(),
              evaluate_formula(FormulaId::FrustumClassic, Rational(2) * t.a, Rational(2) * t.b,
                               t.h),
              "doubled-base volume");

    const Verdict parts = verify_certificate(right_frustum_parts(t.a, t.b, t.h));
    expect(all_exact(parts), "right frustum parts tile");
    expect(claim_labeled(parts, "prism pair box").status == ClaimStatus::Exact,
           "prism pair stacks into a box");
  }
}

// 11. Dehn invariant values, comparator, motion invariance, linearity
void criterion_dehn() {
  expect(dehn_invariant(make_solid(SolidSpec::box(1, 1, 1))).is_zero(), "cube invariant empty");
  const DehnInvariant tetra = dehn_invariant(make_solid(SolidSpec::regular_tetrahedron()));
  expect(tetra.class_count() == 1, "single class");
  const auto& [cls, sum] = *tetra.classes().begin();
  expect(cls.cos_sign == 1 && cls.cos_squared == Rational(1, 9), "class (+, 1/9)");
  expect(sum.terms().size() == 1 && sum.terms().begin()->first == 2 &&
             sum.terms().begin()->second == Rational(6),
         "coefficient 6 sqrt(2)");
  expect(compare_invariants(make_solid(SolidSpec::box(1, 1, 1)),
                            make_solid(SolidSpec::regular_tetrahedron())) ==
             InvariantComparison::SoundlyDifferent,
         "cube vs tetrahedron soundly different");

  Rng rng(108);
  for (int i = 0; i < 50; ++i) {
    const ConvexPolytope p = make_solid(random_solid_spec(rng, 8));
    const RigidMotion m = random_motion(rng);
    expect(dehn_invariant(transform(p, m)) == dehn_invariant(p), "motion invariance");
    const Rational k = random_rational(rng, 9);
    DehnInvariant scaled = dehn_invariant(p);
    scaled *= k;
    expect(dehn_invariant(scale(p, k)) == scaled, "linear scaling");
  }
}

// 12. Cross-cutting property suite, 100 cases each
void criterion_properties() {
  Rng rng(109);
  for (int i = 0; i < 100; ++i) {
    const ConvexPolytope p = make_solid(random_solid_spec(rng));
    const RigidMotion m = random_motion(rng);
    expect_eq(transform(p, m).volume(), p.volume(), "volume motion-invariance");

    const Rational k = random_rational(rng, 9);
    expect_eq(scale(p, k).volume(), cube(k) * p.volume(), "cubic scaling law");

    const HalfSpace hs{{random_rational(rng) - random_rational(rng),
                        random_rational(rng) - random_rational(rng),
                        random_rational(rng) - random_rational(rng)},
                       random_rational(rng)};
    if (!hs.normal.is_zero()) {
      const auto inside = clip(p, hs);
      const auto outside = clip(p, hs.complement());
      Rational total;
      if (inside) total += inside->volume();
      if (outside) total += outside->volume();
      expect_eq(total, p.volume(), "clip complement additivity");
    }

    const auto witness = find_congruence(p, transform(p, m), m.orientation < 0);
    expect(witness.has_value(), "congruence round-trip");
    expect(verify_witness(p, transform(p, m), *witness), "witness verifies");
  }
  Rng cert_rng(110);
  for (int i = 0; i < 100; ++i) {
    const auto t = random_frustum_triple(cert_rng, 20);
    RearrangementCertificate cert;
    switch (i % 4) {
      case 0: cert = nine_part_frustum(t.a, t.b, t.h); break;
      case 1: cert = right_frustum_parts(t.a, t.b, t.h); break;
      case 2: cert = four_yangma_pyramid(t.b, t.h); break;
      default: cert = qiandu_split(t.a, t.b, t.h); break;
    }
    expect(parse_certificate(render_certificate(cert)) == cert, "certificate file round-trip");
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Moscow Papyrus reproduction: steps 16 8 4 28 2 56, volume 56", criterion_moscow},
      {2, "Nine Chapters reproduction: 305000/3 cubic chi", criterion_nine_chapters},
      {3, "three-copy paradigm (3,1,1): all claims exact, boxes 9+3+1", criterion_liu_hui_paradigm},
      {4, "three-copy general: central cells exact, corner step by volume", criterion_liu_hui_general},
      {5, "formula equivalence across 1000 random frusta", criterion_formula_equivalence},
      {6, "nine-part dissection exact for 100 random frusta", criterion_nine_part},
      {7, "doubled-base bundle: congruent top, 1:8 similarity, 6V = 2hb^2", criterion_shutler},
      {8, "cube dissections congruent; box(1,1,2) pieces are not", criterion_cube_dissections},
      {9, "truncated juel pyramid: sixth of the cube difference", criterion_truncated_juel},
      {10, "four right frusta and the prism-pair box", criterion_right_frusta},
      {11, "Dehn invariant: values, soundness, invariance, linearity", criterion_dehn},
      {12, "property suite: invariances, clipping, congruence, round-trip", criterion_properties},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      criterion.run();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (failure.empty()) {
      std::cout << "[PASS] " << criterion.number << ". " << criterion.title << " (" << ms
                << " ms)\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << criterion.number << ". " << criterion.title << ": " << failure
                << "\n";
    }
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all 12 acceptance criteria passed\n";
  return 0;
}
