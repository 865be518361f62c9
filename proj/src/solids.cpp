#include "frusta/solids.hpp"

#include <sstream>

namespace frusta {

namespace {

ConvexPolytope build_oriented(std::vector<Point3> vertices, std::vector<std::vector<int>> cycles,
                              std::string label) {
  cycles = orient_outward(vertices, std::move(cycles));
  return ConvexPolytope::build(std::move(vertices), std::move(cycles), std::move(label));
}

void expect_params(const SolidSpec& spec, size_t count) {
  if (spec.params.size() != count) {
    std::ostringstream os;
    os << solid_kind_name(spec.kind) << ": expected " << count << " parameters, got "
       << spec.params.size();
    throw Error(os.str());
  }
}

void require_positive(const Rational& v, const char* name, const SolidSpec& spec) {
  if (v.sign() <= 0)
    throw Error(std::string(solid_kind_name(spec.kind)) + ": " + name + " must be positive");
}

ConvexPolytope make_box(const Rational& p, const Rational& q, const Rational& r, std::string label) {
  const Rational z(0);
  std::vector<Point3> v = {
      {z, z, z}, {p, z, z}, {p, q, z}, {z, q, z},
      {z, z, r}, {p, z, r}, {p, q, r}, {z, q, r},
  };
  std::vector<std::vector<int>> f = {
      {0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7},
  };
  return build_oriented(std::move(v), std::move(f), std::move(label));
}

ConvexPolytope make_symmetric_frustum(const Rational& a, const Rational& b, const Rational& h,
                                      std::string label) {
  const Rational a2 = a / Rational(2), b2 = b / Rational(2), z(0);
  std::vector<Point3> v = {
      {-a2, -a2, z}, {a2, -a2, z}, {a2, a2, z}, {-a2, a2, z},
      {-b2, -b2, h}, {b2, -b2, h}, {b2, b2, h}, {-b2, b2, h},
  };
  std::vector<std::vector<int>> f = {
      {0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7},
  };
  return build_oriented(std::move(v), std::move(f), std::move(label));
}

ConvexPolytope make_right_frustum(const Rational& a, const Rational& b, const Rational& h,
                                  std::string label) {
  const Rational z(0);
  std::vector<Point3> v = {
      {z, z, z}, {a, z, z}, {a, a, z}, {z, a, z},
      {z, z, h}, {b, z, h}, {b, b, h}, {z, b, h},
  };
  std::vector<std::vector<int>> f = {
      {0, 1, 2, 3}, {4, 5, 6, 7}, {0, 1, 5, 4}, {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7},
  };
  return build_oriented(std::move(v), std::move(f), std::move(label));
}

ConvexPolytope make_symmetric_pyramid(const Rational& a, const Rational& h, std::string label) {
  const Rational a2 = a / Rational(2), z(0);
  std::vector<Point3> v = {
      {-a2, -a2, z}, {a2, -a2, z}, {a2, a2, z}, {-a2, a2, z}, {z, z, h},
  };
  std::vector<std::vector<int>> f = {
      {0, 1, 2, 3}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4},
  };
  return build_oriented(std::move(v), std::move(f), std::move(label));
}

ConvexPolytope make_yangma(const Rational& p, const Rational& q, const Rational& r,
                           std::string label) {
  const Rational z(0);
  std::vector<Point3> v = {
      {z, z, z}, {p, z, z}, {p, q, z}, {z, q, z}, {z, z, r},
  };
  std::vector<std::vector<int>> f = {
      {0, 1, 2, 3}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4},
  };
  return build_oriented(std::move(v), std::move(f), std::move(label));
}

ConvexPolytope make_qiandu(const Rational& p, const Rational& q, const Rational& r,
                           std::string label) {
  const Rational z(0);
  std::vector<Point3> v = {
      {z, z, z}, {p, z, z}, {z, q, z}, {p, q, z}, {z, z, r}, {p, z, r},
  };
  std::vector<std::vector<int>> f = {
      {0, 1, 3, 2}, {0, 1, 5, 4}, {0, 2, 4}, {1, 3, 5}, {2, 3, 5, 4},
  };
  return build_oriented(std::move(v), std::move(f), std::move(label));
}

ConvexPolytope make_regular_tetrahedron(std::string label) {
  const Rational z(0), o(1);
  std::vector<Point3> v = {{z, z, z}, {o, o, z}, {o, z, o}, {z, o, o}};
  std::vector<std::vector<int>> f = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return build_oriented(std::move(v), std::move(f), std::move(label));
}

}  // namespace

const char* solid_kind_name(SolidKind kind) {
  switch (kind) {
    case SolidKind::Box: return "box";
    case SolidKind::SymmetricFrustum: return "symmetric_frustum";
    case SolidKind::RightFrustum: return "right_frustum";
    case SolidKind::SymmetricPyramid: return "symmetric_pyramid";
    case SolidKind::Yangma: return "yangma";
    case SolidKind::Qiandu: return "qiandu";
    case SolidKind::Juel: return "juel";
    case SolidKind::TruncatedJuel: return "truncated_juel";
    case SolidKind::RegularTetrahedron: return "regular_tetrahedron";
  }
  return "?";
}

SolidKind parse_solid_kind(const std::string& name) {
  static const std::pair<const char*, SolidKind> kKinds[] = {
      {"box", SolidKind::Box},
      {"symmetric_frustum", SolidKind::SymmetricFrustum},
      {"right_frustum", SolidKind::RightFrustum},
      {"symmetric_pyramid", SolidKind::SymmetricPyramid},
      {"yangma", SolidKind::Yangma},
      {"qiandu", SolidKind::Qiandu},
      {"juel", SolidKind::Juel},
      {"truncated_juel", SolidKind::TruncatedJuel},
      {"regular_tetrahedron", SolidKind::RegularTetrahedron},
  };
  for (const auto& [n, k] : kKinds)
    if (name == n) return k;
  throw Error("unknown solid kind \"" + name + "\"");
}

SolidSpec SolidSpec::box(Rational p, Rational q, Rational r) {
  return {SolidKind::Box, {std::move(p), std::move(q), std::move(r)}};
}
SolidSpec SolidSpec::symmetric_frustum(Rational a, Rational b, Rational h) {
  return {SolidKind::SymmetricFrustum, {std::move(a), std::move(b), std::move(h)}};
}
SolidSpec SolidSpec::right_frustum(Rational a, Rational b, Rational h) {
  return {SolidKind::RightFrustum, {std::move(a), std::move(b), std::move(h)}};
}
SolidSpec SolidSpec::symmetric_pyramid(Rational a, Rational h) {
  return {SolidKind::SymmetricPyramid, {std::move(a), std::move(h)}};
}
SolidSpec SolidSpec::yangma(Rational p, Rational q, Rational r) {
  return {SolidKind::Yangma, {std::move(p), std::move(q), std::move(r)}};
}
SolidSpec SolidSpec::qiandu(Rational p, Rational q, Rational r) {
  return {SolidKind::Qiandu, {std::move(p), std::move(q), std::move(r)}};
}
SolidSpec SolidSpec::juel(Rational a) { return {SolidKind::Juel, {std::move(a)}}; }
SolidSpec SolidSpec::truncated_juel(Rational a, Rational b) {
  return {SolidKind::TruncatedJuel, {std::move(a), std::move(b)}};
}
SolidSpec SolidSpec::regular_tetrahedron() { return {SolidKind::RegularTetrahedron, {}}; }

std::string SolidSpec::str() const {
  std::ostringstream os;
  os << solid_kind_name(kind) << '(';
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) os << ", ";
    os << params[i].str();
  }
  os << ')';
  return os.str();
}

ConvexPolytope make_solid(const SolidSpec& spec) {
  const std::string label = spec.str();
  switch (spec.kind) {
    case SolidKind::Box: {
      expect_params(spec, 3);
      for (const auto& v : spec.params) require_positive(v, "every side", spec);
      return make_box(spec.params[0], spec.params[1], spec.params[2], label);
    }
    case SolidKind::SymmetricFrustum:
    case SolidKind::RightFrustum: {
      expect_params(spec, 3);
      const auto &a = spec.params[0], &b = spec.params[1], &h = spec.params[2];
      require_positive(b, "b", spec);
      require_positive(h, "h", spec);
      if (a <= b) throw Error(std::string(solid_kind_name(spec.kind)) + ": a must exceed b");
      return spec.kind == SolidKind::SymmetricFrustum
                 ? make_symmetric_frustum(a, b, h, label)
                 : make_right_frustum(a, b, h, label);
    }
    case SolidKind::SymmetricPyramid: {
      expect_params(spec, 2);
      require_positive(spec.params[0], "a", spec);
      require_positive(spec.params[1], "h", spec);
      return make_symmetric_pyramid(spec.params[0], spec.params[1], label);
    }
    case SolidKind::Yangma: {
      expect_params(spec, 3);
      for (const auto& v : spec.params) require_positive(v, "every side", spec);
      return make_yangma(spec.params[0], spec.params[1], spec.params[2], label);
    }
    case SolidKind::Qiandu: {
      expect_params(spec, 3);
      for (const auto& v : spec.params) require_positive(v, "every side", spec);
      return make_qiandu(spec.params[0], spec.params[1], spec.params[2], label);
    }
    case SolidKind::Juel: {
      expect_params(spec, 1);
      require_positive(spec.params[0], "a", spec);
      return make_symmetric_pyramid(spec.params[0], spec.params[0] / Rational(2), label);
    }
    case SolidKind::TruncatedJuel: {
      expect_params(spec, 2);
      const auto &a = spec.params[0], &b = spec.params[1];
      require_positive(b, "b", spec);
      if (a <= b) throw Error("truncated_juel: a must exceed b");
      return make_symmetric_frustum(a, b, (a - b) / Rational(2), label);
    }
    case SolidKind::RegularTetrahedron: {
      expect_params(spec, 0);
      return make_regular_tetrahedron(label);
    }
  }
  throw Error("unknown solid kind");
}

Rational closed_form_volume(const SolidSpec& spec) {
  const Rational third(1, 3), half(1, 2), sixth(1, 6);
  switch (spec.kind) {
    case SolidKind::Box:
      return spec.params[0] * spec.params[1] * spec.params[2];
    case SolidKind::SymmetricFrustum:
    case SolidKind::RightFrustum: {
      const auto &a = spec.params[0], &b = spec.params[1], &h = spec.params[2];
      return h * third * (square(a) + a * b + square(b));
    }
    case SolidKind::SymmetricPyramid:
      return spec.params[1] * third * square(spec.params[0]);
    case SolidKind::Yangma:
      return spec.params[0] * spec.params[1] * spec.params[2] * third;
    case SolidKind::Qiandu:
      return spec.params[0] * spec.params[1] * spec.params[2] * half;
    case SolidKind::Juel:
      return cube(spec.params[0]) * sixth;
    case SolidKind::TruncatedJuel:
      return (cube(spec.params[0]) - cube(spec.params[1])) * sixth;
    case SolidKind::RegularTetrahedron:
      return third;
  }
  throw Error("unknown solid kind");
}

}  // namespace frusta
