#include "frusta/dehn.hpp"

#include <sstream>

namespace frusta {

bool is_rational_pi(const AngleClass& c) {
  static const Rational k0(0), k14(1, 4), k12(1, 2), k34(3, 4), k1(1);
  const Rational& v = c.cos_squared;
  return v == k0 || v == k14 || v == k12 || v == k34 || v == k1;
}

void SqrtSum::add(const Rational& coeff, long long square_free) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(square_free, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SqrtSum& SqrtSum::operator+=(const SqrtSum& o) {
  for (const auto& [d, c] : o.terms_) add(c, d);
  return *this;
}

SqrtSum& SqrtSum::operator-=(const SqrtSum& o) {
  for (const auto& [d, c] : o.terms_) add(-c, d);
  return *this;
}

SqrtSum& SqrtSum::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, c] : terms_) c *= k;
  return *this;
}

std::string SqrtSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (d == 1) {
      os << c.str();
    } else {
      os << "(" << c.str() << ")sqrt(" << d << ")";
    }
  }
  return os.str();
}

std::pair<Rational, long long> sqrt_canonical(const Rational& r) {
  if (r.sign() < 0) throw Error("sqrt of negative rational");
  if (r.is_zero()) return {Rational(0), 1};
  // sqrt(p/q) = sqrt(p*q) / q
  const BigInt n = r.numerator() * r.denominator();
  static const BigInt kBound = BigInt("1000000000000");
  if (n > kBound) throw Error("length too large to canonicalize");
  long long rest = n.convert_to<long long>();
  long long square = 1, free_part = 1;
  for (long long f = 2; f * f <= rest; ++f) {
    while (rest % (f * f) == 0) {
      rest /= f * f;
      square *= f;
    }
    if (rest % f == 0) {
      rest /= f;
      free_part *= f;
    }
  }
  free_part *= rest;
  return {Rational(BigInt(square), r.denominator()), free_part};
}

void DehnInvariant::add_edge(const Rational& length_squared, const AngleClass& c) {
  if (is_rational_pi(c)) return;
  auto [coeff, d] = sqrt_canonical(length_squared);
  classes_[c].add(coeff, d);
  if (classes_[c].is_zero()) classes_.erase(c);
}

DehnInvariant& DehnInvariant::operator-=(const DehnInvariant& o) {
  for (const auto& [cls, sum] : o.classes_) classes_[cls] -= sum;
  prune();
  return *this;
}

DehnInvariant& DehnInvariant::operator*=(const Rational& k) {
  for (auto& [cls, sum] : classes_) sum *= k;
  prune();
  return *this;
}

void DehnInvariant::prune() {
  for (auto it = classes_.begin(); it != classes_.end();) {
    if (it->second.is_zero())
      it = classes_.erase(it);
    else
      ++it;
  }
}

std::string DehnInvariant::str() const {
  if (classes_.empty()) return "(zero invariant)";
  std::ostringstream os;
  bool first = true;
  for (const auto& [cls, sum] : classes_) {
    if (!first) os << "\n";
    first = false;
    const char sign = cls.cos_sign < 0 ? '-' : (cls.cos_sign > 0 ? '+' : '0');
    os << "(" << sign << ", cos^2 = " << cls.cos_squared.str() << ") : " << sum.str();
  }
  return os.str();
}

std::vector<std::pair<Rational, AngleClass>> dihedral_edges(const ConvexPolytope& p) {
  std::vector<std::pair<Rational, AngleClass>> out;
  out.reserve(p.edges().size());
  for (size_t e = 0; e < p.edges().size(); ++e) {
    const auto [u, v] = p.edges()[e];
    const auto [f1, f2] = p.edge_faces()[e];
    const Vector3& n1 = p.faces()[f1].plane.normal;
    const Vector3& n2 = p.faces()[f2].plane.normal;
    const Rational d = dot(n1, n2);
    AngleClass c;
    c.cos_sign = -d.sign();  // interior angle: cos theta = -(n1.n2)/(|n1||n2|)
    c.cos_squared = square(d) / (norm2(n1) * norm2(n2));
    out.emplace_back(distance2(p.vertices()[u], p.vertices()[v]), c);
  }
  return out;
}

DehnInvariant dehn_invariant(const ConvexPolytope& p) {
  DehnInvariant inv;
  for (const auto& [len2, cls] : dihedral_edges(p)) inv.add_edge(len2, cls);
  return inv;
}

const char* comparison_name(InvariantComparison c) {
  switch (c) {
    case InvariantComparison::EqualInvariant: return "EqualInvariant";
    case InvariantComparison::SoundlyDifferent: return "SoundlyDifferent";
    case InvariantComparison::PossiblyDifferent: return "PossiblyDifferent";
  }
  return "?";
}

InvariantComparison classify_difference(const DehnInvariant& difference) {
  if (difference.is_zero()) return InvariantComparison::EqualInvariant;
  if (difference.class_count() == 1) return InvariantComparison::SoundlyDifferent;
  return InvariantComparison::PossiblyDifferent;
}

InvariantComparison compare_invariants(const ConvexPolytope& p, const ConvexPolytope& q) {
  DehnInvariant d = dehn_invariant(p);
  d -= dehn_invariant(q);
  return classify_difference(d);
}

}  // namespace frusta
