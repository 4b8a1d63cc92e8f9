#ifndef LAYERLIE_TYPES_HPP_
#define LAYERLIE_TYPES_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace layerlie {

using Int = long;  // 64-bit here; GMP's C++ classes convert from long directly
using Rat = mpq_class;

// Weights are stored as Dynkin labels in the fundamental-weight basis.
using Weight = std::vector<Int>;
using RatWeight = std::vector<Rat>;

struct LieType {
  char series;  // 'A'..'G'
  int rank;

  bool operator==(const LieType&) const = default;
  std::string name() const { return std::string(1, series) + std::to_string(rank); }
};

// Admissible pairs: A r>=1, B r>=2, C r>=2, D r>=4, E r in {6,7,8}, F r=4, G r=2.
inline bool is_admissible(LieType t) {
  switch (t.series) {
    case 'A': return t.rank >= 1;
    case 'B': return t.rank >= 2;
    case 'C': return t.rank >= 2;
    case 'D': return t.rank >= 4;
    case 'E': return t.rank >= 6 && t.rank <= 8;
    case 'F': return t.rank == 4;
    case 'G': return t.rank == 2;
    default: return false;
  }
}

// Parses tokens like "G2", "b3", "A12". Throws std::invalid_argument.
inline LieType parse_lie_type(const std::string& token) {
  if (token.size() < 2) throw std::invalid_argument("bad algebra token: " + token);
  char s = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
  int rank = 0;
  for (size_t i = 1; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw std::invalid_argument("bad algebra token: " + token);
    rank = rank * 10 + (token[i] - '0');
  }
  LieType t{s, rank};
  if (!is_admissible(t))
    throw std::invalid_argument("inadmissible algebra: " + token);
  return t;
}

inline bool is_dominant(const Weight& w) {
  for (Int x : w)
    if (x < 0) return false;
  return true;
}

inline Weight weight_add(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Weight weight_sub(const Weight& a, const Weight& b) {
  Weight r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatWeight to_rational(const Weight& w) {
  RatWeight r;
  r.reserve(w.size());
  for (Int x : w) r.emplace_back(x);
  return r;
}

}  // namespace layerlie

#endif  // LAYERLIE_TYPES_HPP_
