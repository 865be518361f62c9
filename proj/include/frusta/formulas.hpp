#pragma once

#include <string>
#include <vector>

#include "frusta/rational.hpp"

namespace frusta {

// The four closed forms for frustum/pyramid volume handled exactly:
//   FrustumClassic      (h/3)(a^2 + ab + b^2)   -- the Moscow Papyrus / Nine Chapters rule
//   FrustumAlternative  hab + (h/3)(a-b)^2      -- direct dissection form
//   FrustumFactored     h(ab + (1/3)(a-b)^2)    -- alternative with h taken out
//   PyramidThird        (h/3)a^2                -- full pyramid, b ignored
enum class FormulaId { FrustumClassic, FrustumAlternative, FrustumFactored, PyramidThird };

const char* formula_name(FormulaId id);

// Preconditions: h > 0; the frustum forms need a > b >= 0 (b = 0 is allowed
// here even though the solid constructors reject it, so the pyramid
// specialization is an arithmetic fact); PyramidThird needs a > 0.
Rational evaluate_formula(FormulaId id, const Rational& a, const Rational& b, const Rational& h);

enum class TraceStyle { Moscow, NineChapters };

struct TraceStep {
  std::string label;
  Rational value;
  int additions = 0;
  int multiplications = 0;
  int divisions = 0;
};

struct AlgorithmTrace {
  TraceStyle style = TraceStyle::Moscow;
  std::vector<TraceStep> steps;
  std::string unit_label;  // opaque tag such as "cubit" or "chi"

  const Rational& final_value() const;
};

// Step-by-step execution in the original operation order: the one-third is
// taken from the height before the last product.
AlgorithmTrace moscow_trace(const Rational& a, const Rational& b, const Rational& h,
                            std::string unit_label = "");
// Same arithmetic with the division by three applied at the very end.
AlgorithmTrace nine_chapters_trace(const Rational& a, const Rational& b, const Rational& h,
                                   std::string unit_label = "");

struct OpCounts {
  long long additions = 0;
  long long multiplications = 0;
  long long divisions = 0;
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

OpCounts op_count(const AlgorithmTrace& t);

struct CheckRow {
  std::string label;
  Rational left, right;
  bool ok = false;
};

struct CheckReport {
  std::string title;
  std::vector<CheckRow> rows;
  bool all_ok() const;
};

// Exact checks of the two identities behind the formula equivalences:
//   3ab + (a-b)^2 = a^2 + ab + b^2
//   (a-b)(a^2 + ab + b^2) = a^3 - b^3
CheckReport identity_checks(const Rational& a, const Rational& b);

// Plain-text table: label, exact value, and a 6-place approximation marked
// with '=~' whenever the exact value is not an integer.
std::string render_trace(const AlgorithmTrace& t);

}  // namespace frusta
