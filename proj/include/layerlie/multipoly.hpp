#ifndef LAYERLIE_MULTIPOLY_HPP_
#define LAYERLIE_MULTIPOLY_HPP_

#include <string>
#include <vector>

#include "layerlie/types.hpp"

namespace layerlie {

// Sparse multivariate polynomial over exact rationals. Terms are kept in
// graded-lex order (total degree ascending, then exponents lexicographically
// descending) with no zero coefficients.
struct MultiPoly {
  int nvars = 0;
  std::vector<std::pair<std::vector<int>, Rat>> terms;

  static MultiPoly zero(int nvars) { return MultiPoly{nvars, {}}; }
  static MultiPoly constant(int nvars, const Rat& c);
  static MultiPoly variable(int nvars, int i);  // 0-based

  bool is_zero() const { return terms.empty(); }
  int degree() const;
  Rat coefficient(const std::vector<int>& exponents) const;

  bool operator==(const MultiPoly&) const = default;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_sub(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_scale(const MultiPoly& p, const Rat& c);

// p(x1 + v1, ..., xn + vn), expanded exactly.
MultiPoly poly_shift(const MultiPoly& p, const RatWeight& v);

Rat poly_eval(const MultiPoly& p, const RatWeight& point);

// Text forms. Variables render as l1..ln (text) or \lambda_i (latex).
std::string poly_to_text(const MultiPoly& p);
std::string poly_to_latex(const MultiPoly& p);
std::string poly_to_json(const MultiPoly& p);

// Parses expressions over +,-,*,^,(), rational constants p/q and variables
// l1..ln. Used for embedded reference polynomials and tests.
MultiPoly parse_poly(int nvars, const std::string& text);

}  // namespace layerlie

#endif  // LAYERLIE_MULTIPOLY_HPP_
