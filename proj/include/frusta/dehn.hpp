#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frusta/polytope.hpp"

namespace frusta {

// Exact encoding of a dihedral angle theta in (0, pi) as the pair
// (sign of cos theta, cos^2 theta). For rational-vertex polytopes cos^2 is
// always rational, so equality of classes is decidable and complete.
struct AngleClass {
  int cos_sign = 0;  // -1, 0, +1
  Rational cos_squared;

  friend bool operator==(const AngleClass&, const AngleClass&) = default;
  friend bool operator<(const AngleClass& a, const AngleClass& b) {
    if (a.cos_sign != b.cos_sign) return a.cos_sign < b.cos_sign;
    return a.cos_squared < b.cos_squared;
  }
};

// theta is a rational multiple of pi exactly when cos^2 theta lies in
// {0, 1/4, 1/2, 3/4, 1}: cos 2theta = 2cos^2 - 1 is rational, and a rational
// angle with rational cosine forces cos 2theta into {0, +-1/2, +-1}.
bool is_rational_pi(const AngleClass& c);

// Finite sum of terms r * sqrt(d) with d square-free, keyed by d.
class SqrtSum {
 public:
  void add(const Rational& coeff, long long square_free);
  SqrtSum& operator+=(const SqrtSum& o);
  SqrtSum& operator-=(const SqrtSum& o);
  SqrtSum& operator*=(const Rational& k);
  bool is_zero() const { return terms_.empty(); }
  const std::map<long long, Rational>& terms() const { return terms_; }
  std::string str() const;
  friend bool operator==(const SqrtSum&, const SqrtSum&) = default;

 private:
  std::map<long long, Rational> terms_;  // zero coefficients pruned
};

// Writes sqrt(r) for rational r >= 0 as coeff * sqrt(d) with d a square-free
// positive integer. Throws once the integer to factor exceeds 10^12.
std::pair<Rational, long long> sqrt_canonical(const Rational& r);

// Per-class Dehn data: classes with theta in pi*Q never appear. This form
// supports whole-solid comparison only; it deliberately does not model how
// angles merge when pieces are glued.
class DehnInvariant {
 public:
  void add_edge(const Rational& length_squared, const AngleClass& c);
  DehnInvariant& operator-=(const DehnInvariant& o);
  DehnInvariant& operator*=(const Rational& k);  // lengths scale linearly
  bool is_zero() const { return classes_.empty(); }
  size_t class_count() const { return classes_.size(); }
  const std::map<AngleClass, SqrtSum>& classes() const { return classes_; }
  std::string str() const;
  friend bool operator==(const DehnInvariant&, const DehnInvariant&) = default;

 private:
  void prune();
  std::map<AngleClass, SqrtSum> classes_;
};

// For each edge: squared length and the interior dihedral angle class, from
// cos theta = -(n1 . n2) / (|n1| |n2|) over the two outward face normals.
std::vector<std::pair<Rational, AngleClass>> dihedral_edges(const ConvexPolytope& p);

DehnInvariant dehn_invariant(const ConvexPolytope& p);

// Three-valued, sound comparator. A difference concentrated on a single
// irrational class with a nonzero length is provably nonzero (sqrt(d) terms
// are independent over Q), so the solids cannot be scissors congruent. Any
// wider support stays at PossiblyDifferent: rational relations between
// distinct angles are not ruled out here.
enum class InvariantComparison { EqualInvariant, SoundlyDifferent, PossiblyDifferent };

const char* comparison_name(InvariantComparison c);

InvariantComparison classify_difference(const DehnInvariant& difference);
InvariantComparison compare_invariants(const ConvexPolytope& p, const ConvexPolytope& q);

}  // namespace frusta
