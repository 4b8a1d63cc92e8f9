#ifndef LAYERLIE_ROOTSYSTEM_HPP_
#define LAYERLIE_ROOTSYSTEM_HPP_

#include <vector>

#include "layerlie/types.hpp"

namespace layerlie {

struct Root {
  std::vector<Int> coeffs;  // coefficients over the simple roots
  Weight labels;            // Dynkin labels, labels = A * coeffs
  bool is_simple = false;

  Int height() const {
    Int h = 0;
    for (Int c : coeffs) h += c;
    return h;
  }
};

// All static data of a simple root system. Immutable after construction.
struct RootSystem {
  LieType type;
  int rank = 0;
  std::vector<std::vector<Int>> cartan;      // A_{ij} = <alpha_i^vee, alpha_j>
  std::vector<std::vector<Rat>> cartan_inv;
  std::vector<Root> positive_roots;          // height-increasing order
  std::vector<Root> nonsimple_positive;      // Phi'_+
  std::vector<Int> sym;                      // smallest integer symmetrizers d_i
  Weight rho;                                // all labels 1
  RatWeight rho_prime;                       // label coordinates
  std::vector<Rat> rho_prime_root;           // root-basis coordinates

  int num_nonsimple() const { return static_cast<int>(nonsimple_positive.size()); }
};

RootSystem build_root_system(LieType t);

// Solves A*c = labels(w) exactly.
RatWeight to_root_basis(const RootSystem& rs, const Weight& w);
RatWeight to_root_basis(const RootSystem& rs, const RatWeight& w);

// True iff w lies in the non-negative root lattice.
bool is_in_Q_plus(const RootSystem& rs, const Weight& w);

// Symmetric invariant bilinear form with (alpha_i, omega_j) = d_i delta_{ij};
// both arguments in label coordinates.
Rat inner_product(const RootSystem& rs, const RatWeight& x, const RatWeight& y);

// Weyl dimension formula evaluated as a product of linear forms; agrees with
// the expanded dimension polynomial at every point.
Rat dim_eval(const RootSystem& rs, const RatWeight& lambda);
Rat dim_eval(const RootSystem& rs, const Weight& lambda);

// Classical Weyl group order of the type.
mpz_class classical_weyl_order(LieType t);

}  // namespace layerlie

#endif  // LAYERLIE_ROOTSYSTEM_HPP_
