#include "layerlie/rootsystem.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace layerlie {

namespace {

// Cartan matrices from the classification tables, with A_{ij} = <alpha_i^vee, alpha_j>.
// Labelling: chains numbered left to right; B_r has the short root at node r,
// C_r the long root at node r; D_r forks at node r-2; E-series attaches node 2
// to node 4 of the chain 1-3-4-5-...; F4 has nodes 1,2 long; G2 has node 1 long.
std::vector<std::vector<Int>> cartan_matrix(LieType t) {
  const int r = t.rank;
  std::vector<std::vector<Int>> A(r, std::vector<Int>(r, 0));
  for (int i = 0; i < r; ++i) A[i][i] = 2;
  auto edge = [&](int i, int j) { A[i][j] = -1; A[j][i] = -1; };
  switch (t.series) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      A[r - 1][r - 2] = -2;  // node r short
      break;
    case 'C':
      for (int i = 0; i + 1 < r; ++i) edge(i, i + 1);
      A[r - 2][r - 1] = -2;  // node r long
      break;
    case 'D':
      for (int i = 0; i + 1 < r - 1; ++i) edge(i, i + 1);
      edge(r - 3, r - 1);
      break;
    case 'E':
      // chain 1-3-4-5-...-r, node 2 attached to node 4 (1-based)
      edge(0, 2);
      for (int i = 2; i + 1 < r; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
    case 'F':
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      A[2][1] = -2;  // nodes 1,2 long
      break;
    case 'G':
      A[0][1] = -1;
      A[1][0] = -3;  // node 1 long
      break;
  }
  return A;
}

// Exact inverse by Gauss-Jordan over the rationals.
std::vector<std::vector<Rat>> invert_matrix(const std::vector<std::vector<Int>>& A) {
  const int n = static_cast<int>(A.size());
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = A[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (m[i][col] != 0) { piv = i; break; }
    std::swap(m[col], m[piv]);
    Rat p = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = 0; j < 2 * n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

// Smallest positive integers d with dA symmetric, by propagating ratios
// along the Dynkin diagram.
std::vector<Int> symmetrizers(const std::vector<std::vector<Int>>& A) {
  const int n = static_cast<int>(A.size());
  std::vector<Rat> d(n, 0);
  d[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (d[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (A[i][j] == 0 || d[j] != 0) continue;
        // d_j A_{ji} = d_i A_{ij}
        d[j] = d[i] * A[i][j] / A[j][i];
        changed = true;
      }
    }
  }
  mpz_class den_lcm = 1;
  for (const Rat& x : d) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    den_lcm = l;
  }
  std::vector<mpz_class> num(n);
  mpz_class g = 0;
  for (int i = 0; i < n; ++i) {
    num[i] = d[i].get_num() * (den_lcm / d[i].get_den());
    mpz_class gg;
    mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), num[i].get_mpz_t());
    g = gg;
  }
  std::vector<Int> out(n);
  for (int i = 0; i < n; ++i) out[i] = mpz_class(num[i] / g).get_si();
  return out;
}

}  // namespace

RootSystem build_root_system(LieType t) {
  if (!is_admissible(t))
    throw std::invalid_argument("inadmissible (series, rank) pair: " + t.name());
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank;
  rs.cartan = cartan_matrix(t);
  rs.cartan_inv = invert_matrix(rs.cartan);
  rs.sym = symmetrizers(rs.cartan);
  const int r = rs.rank;

  // Positive roots by height-increasing closure using root strings:
  // beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0, where p is the
  // largest q with beta - q*alpha_i already generated, and <beta, alpha_i^vee>
  // is the i-th Dynkin label of beta.
  std::set<std::vector<Int>> known;  // coefficient vectors
  std::vector<std::vector<std::vector<Int>>> by_height;
  by_height.emplace_back();
  for (int i = 0; i < r; ++i) {
    std::vector<Int> c(r, 0);
    c[i] = 1;
    known.insert(c);
    by_height[0].push_back(c);
  }
  auto labels_of = [&](const std::vector<Int>& c) {
    Weight lab(r, 0);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) lab[i] += rs.cartan[i][j] * c[j];
    return lab;
  };
  while (!by_height.back().empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& c : by_height.back()) {
      Weight lab = labels_of(c);
      for (int i = 0; i < r; ++i) {
        Int p = 0;
        std::vector<Int> down = c;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        if (p - lab[i] > 0) {
          std::vector<Int> up = c;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    by_height.push_back(std::move(next));
  }
  for (const auto& level : by_height) {
    for (const auto& c : level) {
      Root root;
      root.coeffs = c;
      root.labels = labels_of(c);
      root.is_simple = (root.height() == 1);
      rs.positive_roots.push_back(root);
      if (!root.is_simple) rs.nonsimple_positive.push_back(root);
    }
  }

  rs.rho.assign(r, 1);
  rs.rho_prime_root.assign(r, 0);
  for (const Root& a : rs.nonsimple_positive)
    for (int i = 0; i < r; ++i) rs.rho_prime_root[i] += Rat(a.coeffs[i]) / 2;
  rs.rho_prime.assign(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      rs.rho_prime[i] += Rat(rs.cartan[i][j]) * rs.rho_prime_root[j];
  return rs;
}

RatWeight to_root_basis(const RootSystem& rs, const RatWeight& w) {
  const int r = rs.rank;
  RatWeight c(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) c[i] += rs.cartan_inv[i][j] * w[j];
  return c;
}

RatWeight to_root_basis(const RootSystem& rs, const Weight& w) {
  return to_root_basis(rs, to_rational(w));
}

bool is_in_Q_plus(const RootSystem& rs, const Weight& w) {
  for (const Rat& c : to_root_basis(rs, w))
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

Rat inner_product(const RootSystem& rs, const RatWeight& x, const RatWeight& y) {
  // (x, y) = sum_j d_j c_j(y) x_j, using y = sum_j c_j(y) alpha_j and
  // (x, alpha_j) = d_j <alpha_j^vee, x> = d_j x_j.
  RatWeight cy = to_root_basis(rs, y);
  Rat s = 0;
  for (int j = 0; j < rs.rank; ++j) s += Rat(rs.sym[j]) * cy[j] * x[j];
  return s;
}

Rat dim_eval(const RootSystem& rs, const RatWeight& lambda) {
  Rat result = 1;
  for (const Root& a : rs.positive_roots) {
    Rat num = 0, den = 0;
    for (int i = 0; i < rs.rank; ++i) {
      Rat cd = Rat(a.coeffs[i]) * rs.sym[i];
      num += cd * (lambda[i] + 1);
      den += cd;
    }
    result *= num / den;
  }
  return result;
}

Rat dim_eval(const RootSystem& rs, const Weight& lambda) {
  return dim_eval(rs, to_rational(lambda));
}

mpz_class classical_weyl_order(LieType t) {
  auto fact = [](int n) {
    mpz_class f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  mpz_class pow2 = 1;
  for (int i = 0; i < t.rank; ++i) pow2 *= 2;
  switch (t.series) {
    case 'A': return fact(t.rank + 1);
    case 'B':
    case 'C': return pow2 * fact(t.rank);
    case 'D': return pow2 / 2 * fact(t.rank);
    case 'E':
      if (t.rank == 6) return 51840;
      if (t.rank == 7) return 2903040;
      return mpz_class("696729600");
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

}  // namespace layerlie
