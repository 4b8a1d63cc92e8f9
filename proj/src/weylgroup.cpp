#include "layerlie/weylgroup.hpp"

#include <deque>
#include <set>

namespace layerlie {

Weight simple_reflection(const RootSystem& rs, int i, const Weight& w) {
  Weight out = w;
  Int wi = w[i];
  if (wi == 0) return out;
  for (int j = 0; j < rs.rank; ++j) out[j] -= wi * rs.cartan[j][i];
  return out;
}

std::vector<Weight> orbit(const RootSystem& rs, const Weight& w) {
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      Weight img = simple_reflection(rs, i, cur);
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return {seen.begin(), seen.end()};
}

long long orbit_size(const RootSystem& rs, const Weight& w) {
  return static_cast<long long>(orbit(rs, w).size());
}

GroupTable enumerate_group(const RootSystem& rs, long long max_order) {
  mpz_class classical = classical_weyl_order(rs.type);
  if (classical > static_cast<long>(max_order)) throw GroupTooLarge(classical);
  GroupTable table;
  std::set<Weight> seen{rs.rho};
  std::deque<std::pair<Weight, int>> queue{{rs.rho, 0}};
  while (!queue.empty()) {
    auto [cur, len] = queue.front();
    queue.pop_front();
    table.elems.push_back({cur, len});
    for (int i = 0; i < rs.rank; ++i) {
      Weight img = simple_reflection(rs, i, cur);
      if (seen.insert(img).second) queue.emplace_back(img, len + 1);
    }
  }
  table.order = static_cast<long long>(table.elems.size());
  return table;
}

std::pair<Weight, int> dominantize(const RootSystem& rs, Weight w) {
  int parity = 1;
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i < rs.rank; ++i) {
      if (w[i] < 0) {
        w = simple_reflection(rs, i, w);
        parity = -parity;
        again = true;
        break;
      }
    }
  }
  return {w, parity};
}

AuxResolution shifted_resolve(const RootSystem& rs, const Weight& lambda) {
  Weight w = weight_add(lambda, rs.rho);
  int parity = 1;
  auto on_wall = [](const Weight& x) {
    for (Int v : x)
      if (v == 0) return true;
    return false;
  };
  while (true) {
    if (on_wall(w)) return {true, 0, {}};
    int neg = -1;
    for (int i = 0; i < rs.rank; ++i)
      if (w[i] < 0) { neg = i; break; }
    if (neg < 0) break;
    w = simple_reflection(rs, neg, w);
    parity = -parity;
  }
  return {false, parity, weight_sub(w, rs.rho)};
}

}  // namespace layerlie
