#ifndef LAYERLIE_REFERENCE_TABLES_HPP_
#define LAYERLIE_REFERENCE_TABLES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "layerlie/multipoly.hpp"

namespace layerlie {

// Tabulated reduced Weyl vectors and layer polynomials for the algebras of
// rank <= 4 plus A5, used as golden fixtures by the verifier.
struct ReferenceEntry {
  const char* name;                      // e.g. "B3"
  int rank;
  std::vector<Int> two_rho_prime_root;   // 2*rho' over the simple roots
  const char* layer_poly;                // parse_poly input, variables l1..lr
};

const std::vector<ReferenceEntry>& reference_entries();
std::optional<ReferenceEntry> reference_entry(const std::string& name);

}  // namespace layerlie

#endif  // LAYERLIE_REFERENCE_TABLES_HPP_
