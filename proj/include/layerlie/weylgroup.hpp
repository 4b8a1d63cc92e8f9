#ifndef LAYERLIE_WEYLGROUP_HPP_
#define LAYERLIE_WEYLGROUP_HPP_

#include <utility>
#include <vector>

#include "layerlie/rootsystem.hpp"

namespace layerlie {

// A group element is represented by its image of rho; the length is the BFS
// depth in simple reflections, so the sign of w is (-1)^length.
struct GroupElem {
  Weight rho_image;
  int length = 0;
};

struct GroupTable {
  std::vector<GroupElem> elems;
  long long order = 0;
};

// s_i(w) = w - w_i * labels(alpha_i); i is 0-based.
Weight simple_reflection(const RootSystem& rs, int i, const Weight& w);

// Closure of {w} under all simple reflections.
std::vector<Weight> orbit(const RootSystem& rs, const Weight& w);
long long orbit_size(const RootSystem& rs, const Weight& w);

// BFS over images of rho. Throws GroupTooLarge if the classical order of the
// type exceeds max_order.
struct GroupTooLarge : std::runtime_error {
  mpz_class order;
  explicit GroupTooLarge(const mpz_class& n)
      : std::runtime_error("Weyl group order " + n.get_str() +
                           " exceeds the enumeration guard"),
        order(n) {}
};
GroupTable enumerate_group(const RootSystem& rs, long long max_order = 3000000);

// Unique dominant orbit representative plus (-1)^(reflections applied).
// The parity is only meaningful on regular orbits.
std::pair<Weight, int> dominantize(const RootSystem& rs, Weight w);

// Resolution of an integral weight into a signed character or zero, via the
// shifted action on the regular orbit of lambda + rho.
struct AuxResolution {
  bool zero = false;
  int sign = 0;        // +1 or -1 when not zero
  Weight dominant;     // valid when not zero
};
AuxResolution shifted_resolve(const RootSystem& rs, const Weight& lambda);

}  // namespace layerlie

#endif  // LAYERLIE_WEYLGROUP_HPP_
