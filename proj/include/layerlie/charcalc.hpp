#ifndef LAYERLIE_CHARCALC_HPP_
#define LAYERLIE_CHARCALC_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "layerlie/layercalc.hpp"

namespace layerlie {

// Integer combination of dominant weights (character rows, multiplicity rows,
// layer decompositions); values nonzero.
using DominantExpansion = std::map<Weight, Int>;
using SignedCharCombo = std::map<Weight, Int>;

// Thrown when a computation contradicts one of the conjectural identities.
struct ConjectureViolation : std::runtime_error {
  std::string check;
  Weight lambda;
  std::string detail;
  ConjectureViolation(std::string check_, Weight lambda_, std::string detail_);
};

// Dominant weights ordered by layer-polynomial value; ties broken by
// descending lexicographic comparison of Dynkin labels.
struct OrderedWeightList {
  std::vector<Weight> weights;
  std::vector<mpz_class> r_values;
  std::map<Weight, int> position;

  int index_of(const Weight& w) const;  // -1 when absent
  size_t size() const { return weights.size(); }
};

struct UnitriangularMatrix {
  std::vector<std::vector<Int>> rows;  // square, unit lower-triangular
};

// Static per-algebra data shared by the character computations.
struct AlgebraContext {
  RootSystem rs;
  MultiPoly D;
  MultiPoly R;
  GroupTable group;
  SignedShiftTable ztab;
};
AlgebraContext make_context(LieType t, long long max_order = 3000000);

// P_+(lambda) = { dominant mu : lambda - mu in Q_+ }.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda);

// All dominant mu with R(mu) <= R(lambda), in the R-ordering.
OrderedWeightList ordered_upto(const AlgebraContext& ctx, const Weight& lambda);

// All dominant mu with R(mu) <= bound, in the R-ordering.
OrderedWeightList ordered_by_r_bound(const AlgebraContext& ctx, const mpz_class& bound);

// Row of M^-1: the alternating Weyl sum of auxiliary characters, scaled by
// |O_lambda| / |W|. Throws ConjectureViolation when a coefficient fails to be
// integral.
SignedCharCombo orbit_sum_expansion(const AlgebraContext& ctx, const Weight& lambda);

// Row of C^-1: the signed Z2^k shift sum of auxiliary characters.
SignedCharCombo layer_sum_expansion(const AlgebraContext& ctx, const Weight& lambda);

UnitriangularMatrix invert_unitriangular(const UnitriangularMatrix& m);

// ch_lambda in the orbit-sum basis (the weight multiplicities), via
// unitriangular inversion. Throws ConjectureViolation on a negative entry.
DominantExpansion character_in_orbit_basis(const AlgebraContext& ctx, const Weight& lambda);

// ch_lambda in the layer-sum basis. Throws ConjectureViolation on a negative
// entry or support outside P_+(lambda).
DominantExpansion layer_decomposition(const AlgebraContext& ctx, const Weight& lambda);

UnitriangularMatrix dominance_matrix(const RootSystem& rs, const OrderedWeightList& order);

// Weight multiplicities over P_+(lambda) by the Freudenthal recursion; the
// independent oracle for character_in_orbit_basis.
DominantExpansion freudenthal_multiplicities(const RootSystem& rs, const Weight& lambda);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // set on failure
};
struct Report {
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// Matrices over O_lambda plus per-prefix-row identity checks; built once and
// queried for every weight in the order.
class VerifyWorkspace {
 public:
  VerifyWorkspace(const AlgebraContext& ctx, const Weight& lambda);

  const OrderedWeightList& order() const { return order_; }
  const UnitriangularMatrix& m_inverse() const { return m_inv_; }
  const UnitriangularMatrix& c_inverse() const { return c_inv_; }
  const UnitriangularMatrix& m_matrix() const { return m_; }
  const UnitriangularMatrix& c_matrix() const { return c_; }
  const UnitriangularMatrix& dominance() const { return dom_; }

  // Checks (dominance product, multiplicity partial sums, orbit-weighted
  // dimension, layer-count dimension, Freudenthal row, brute-force count)
  // for one weight of the order.
  Report report_for(const Weight& mu) const;

 private:
  const AlgebraContext& ctx_;
  OrderedWeightList order_;
  UnitriangularMatrix m_inv_, c_inv_, m_, c_, dom_;
  std::vector<long> orbit_sizes_;
};

// All identity checks for one dominant weight.
Report verify_identities(const AlgebraContext& ctx, const Weight& lambda);

}  // namespace layerlie

#endif  // LAYERLIE_CHARCALC_HPP_
