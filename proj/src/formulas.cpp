#include "frusta/formulas.hpp"

#include <algorithm>
#include <sstream>

namespace frusta {

namespace {

void require_frustum_args(const Rational& a, const Rational& b, const Rational& h) {
  if (h.sign() <= 0) throw Error("formula: h must be positive");
  if (b.sign() < 0) throw Error("formula: b must be nonnegative");
  if (a <= b) throw Error("formula: a must exceed b");
}

}  // namespace

const char* formula_name(FormulaId id) {
  switch (id) {
    case FormulaId::FrustumClassic: return "frustum-classic";
    case FormulaId::FrustumAlternative: return "frustum-alternative";
    case FormulaId::FrustumFactored: return "frustum-factored";
    case FormulaId::PyramidThird: return "pyramid-third";
  }
  return "?";
}

Rational evaluate_formula(FormulaId id, const Rational& a, const Rational& b, const Rational& h) {
  const Rational third(1, 3);
  switch (id) {
    case FormulaId::FrustumClassic:
      require_frustum_args(a, b, h);
      return h * third * (square(a) + a * b + square(b));
    case FormulaId::FrustumAlternative:
      require_frustum_args(a, b, h);
      return h * a * b + h * third * square(a - b);
    case FormulaId::FrustumFactored:
      require_frustum_args(a, b, h);
      return h * (a * b + third * square(a - b));
    case FormulaId::PyramidThird:
      if (h.sign() <= 0) throw Error("formula: h must be positive");
      if (a.sign() <= 0) throw Error("formula: a must be positive");
      return h * third * square(a);
  }
  throw Error("formula: unknown id");
}

const Rational& AlgorithmTrace::final_value() const {
  if (steps.empty()) throw Error("trace: empty");
  return steps.back().value;
}

AlgorithmTrace moscow_trace(const Rational& a, const Rational& b, const Rational& h,
                            std::string unit_label) {
  if (h.sign() <= 0 || b.sign() <= 0 || a <= b) throw Error("trace: need a > b > 0 and h > 0");
  AlgorithmTrace t;
  t.style = TraceStyle::Moscow;
  t.unit_label = std::move(unit_label);
  const Rational aa = square(a), ab = a * b, bb = square(b);
  const Rational sum = aa + ab + bb;
  const Rational h3 = h / Rational(3);
  t.steps = {
      {"square of the base side", aa, 0, 1, 0},
      {"base side times top side", ab, 0, 1, 0},
      {"square of the top side", bb, 0, 1, 0},
      {"sum of the three products", sum, 2, 0, 0},
      {"one third of the height", h3, 0, 0, 1},
      {"volume: third of height times sum", h3 * sum, 0, 1, 0},
  };
  return t;
}

AlgorithmTrace nine_chapters_trace(const Rational& a, const Rational& b, const Rational& h,
                                   std::string unit_label) {
  if (h.sign() <= 0 || b.sign() <= 0 || a <= b) throw Error("trace: need a > b > 0 and h > 0");
  AlgorithmTrace t;
  t.style = TraceStyle::NineChapters;
  t.unit_label = std::move(unit_label);
  const Rational aa = square(a), ab = a * b, bb = square(b);
  const Rational sum = aa + ab + bb;
  const Rational prod = sum * h;
  t.steps = {
      {"square of the base side", aa, 0, 1, 0},
      {"base side times top side", ab, 0, 1, 0},
      {"square of the top side", bb, 0, 1, 0},
      {"sum of the three products", sum, 2, 0, 0},
      {"sum times the height", prod, 0, 1, 0},
      {"volume: divide by three", prod / Rational(3), 0, 0, 1},
  };
  return t;
}

OpCounts op_count(const AlgorithmTrace& t) {
  OpCounts c;
  for (const auto& s : t.steps) {
    c.additions += s.additions;
    c.multiplications += s.multiplications;
    c.divisions += s.divisions;
  }
  return c;
}

bool CheckReport::all_ok() const {
  for (const auto& r : rows)
    if (!r.ok) return false;
  return true;
}

CheckReport identity_checks(const Rational& a, const Rational& b) {
  CheckReport report;
  report.title = "plane and cube-difference identities";
  {
    const Rational lhs = Rational(3) * a * b + square(a - b);
    const Rational rhs = square(a) + a * b + square(b);
    report.rows.push_back({"3ab + (a-b)^2 = a^2 + ab + b^2", lhs, rhs, lhs == rhs});
  }
  {
    const Rational lhs = (a - b) * (square(a) + a * b + square(b));
    const Rational rhs = cube(a) - cube(b);
    report.rows.push_back({"(a-b)(a^2 + ab + b^2) = a^3 - b^3", lhs, rhs, lhs == rhs});
  }
  return report;
}

std::string render_trace(const AlgorithmTrace& t) {
  std::ostringstream os;
  os << (t.style == TraceStyle::Moscow ? "moscow" : "nine-chapters") << " trace";
  if (!t.unit_label.empty()) os << " (lengths in " << t.unit_label << ")";
  os << "\n";
  size_t width = 0;
  for (const auto& s : t.steps) width = std::max(width, s.label.size());
  for (size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    os << "  " << i + 1 << ". " << s.label << std::string(width - s.label.size(), ' ')
       << "  = " << s.value.str();
    if (!s.value.is_integer()) os << "  ≈ " << s.value.decimal(6);
    os << "\n";
  }
  const OpCounts c = op_count(t);
  os << "  operations: " << c.additions << " additions, " << c.multiplications
     << " multiplications, " << c.divisions << " divisions\n";
  return os.str();
}

}  // namespace frusta
