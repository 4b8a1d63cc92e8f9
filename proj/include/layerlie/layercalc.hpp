#ifndef LAYERLIE_LAYERCALC_HPP_
#define LAYERLIE_LAYERCALC_HPP_

#include <map>
#include <string>
#include <vector>

#include "layerlie/multipoly.hpp"
#include "layerlie/weylgroup.hpp"

namespace layerlie {

// Finitely-supported signed integer counts on label-coordinate shifts.
struct SignedShiftTable {
  enum Kind { ZGroup, WeylGroup };
  Kind kind = ZGroup;
  std::map<Weight, Int> entries;  // shift -> nonzero signed count
  Weight total_shift;             // -2 rho' (ZGroup) or -2 rho (WeylGroup)
};

// The Weyl dimension formula expanded as a polynomial of degree |Phi_+| in
// the Dynkin labels.
MultiPoly dim_polynomial(const RootSystem& rs);

// Signed subset sums over the non-simple positive roots, aggregated per
// distinct shift; built by divide-and-conquer convolution of the singleton
// tables {0:+1, -alpha:-1}.
SignedShiftTable zgroup_shift_table(const RootSystem& rs);

// Shifts w(rho)-rho with accumulated signs (-1)^l(w).
SignedShiftTable weyl_shift_table(const RootSystem& rs, const GroupTable& table);

// The layer polynomial R, the signed-shift sum of the dimension polynomial
// over the Z2^k table; degree r.
MultiPoly layer_polynomial(const RootSystem& rs);

// Degree-r / term-count / positivity report for a layer polynomial.
struct LayerPolyReport {
  bool degree_ok = false;
  bool term_count_ok = false;
  bool positive_ok = false;
  int degree = 0;
  long long term_count = 0;
  long long expected_term_count = 0;
  bool all_ok() const { return degree_ok && term_count_ok && positive_ok; }
};
LayerPolyReport check_layer_polynomial(const RootSystem& rs, const MultiPoly& R);

// sum_w (-1)^l(w) D(lambda + w(rho) - rho), exactly.
mpz_class weyl_alternating_dim_sum(const RootSystem& rs, const Weight& lambda,
                                   const GroupTable& table);

// |P(lambda)| by enumerating the dominant weights of L(lambda) and summing
// Weyl orbit lengths.
mpz_class count_weights_bruteforce(const RootSystem& rs, const Weight& lambda);

}  // namespace layerlie

#endif  // LAYERLIE_LAYERCALC_HPP_
