#include <algorithm>
#include <set>

#include "doctest.h"
#include "layerlie/rootsystem.hpp"

using namespace layerlie;

namespace {

const std::vector<LieType> kSmallTypes = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'B', 2}, {'B', 3},
    {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'D', 5}, {'E', 6},
    {'F', 4}, {'G', 2}};

}  // namespace

TEST_CASE("admissible type parsing") {
  CHECK(parse_lie_type("G2") == LieType{'G', 2});
  CHECK(parse_lie_type("b3") == LieType{'B', 3});
  CHECK(parse_lie_type("A12") == LieType{'A', 12});
  for (const char* bad : {"D3", "E5", "F5", "G3", "A0", "H4", "B", "2A"})
    CHECK_THROWS_AS(parse_lie_type(bad), std::invalid_argument);
}

TEST_CASE("G2 static data") {
  RootSystem rs = build_root_system({'G', 2});
  CHECK(rs.cartan == std::vector<std::vector<Int>>{{2, -1}, {-3, 2}});
  REQUIRE(rs.positive_roots.size() == 6);
  std::set<std::vector<Int>> nonsimple;
  for (const Root& a : rs.nonsimple_positive) nonsimple.insert(a.coeffs);
  CHECK(nonsimple == std::set<std::vector<Int>>{
                         {1, 1}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(rs.rho_prime == RatWeight{Rat(1, 2), Rat(3, 2)});
  CHECK(rs.rho_prime_root == std::vector<Rat>{Rat(5, 2), Rat(9, 2)});
  CHECK(rs.sym == std::vector<Int>{3, 1});
}

TEST_CASE("A1 has no non-simple roots") {
  RootSystem rs = build_root_system({'A', 1});
  CHECK(rs.positive_roots.size() == 1);
  CHECK(rs.num_nonsimple() == 0);
  CHECK(rs.rho_prime == RatWeight{Rat(0)});
}

TEST_CASE("B3 reduced Weyl vector in the root basis") {
  RootSystem rs = build_root_system({'B', 3});
  CHECK(rs.rho_prime_root == std::vector<Rat>{Rat(2), Rat(7, 2), Rat(4)});
}

TEST_CASE("root counts and the k invariant") {
  // |Phi_+| per type; k = |Phi'_+| must equal (dim - 3r)/2 with dim = r + 2|Phi_+|.
  auto count = [](LieType t) {
    switch (t.series) {
      case 'A': return t.rank * (t.rank + 1) / 2;
      case 'B':
      case 'C': return t.rank * t.rank;
      case 'D': return t.rank * (t.rank - 1);
      case 'E': return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
      case 'F': return 24;
      default: return 6;  // G2
    }
  };
  for (LieType t : kSmallTypes) {
    RootSystem rs = build_root_system(t);
    CAPTURE(t.name());
    CHECK(static_cast<int>(rs.positive_roots.size()) == count(t));
    int dim = rs.rank + 2 * static_cast<int>(rs.positive_roots.size());
    CHECK(2 * rs.num_nonsimple() == dim - 3 * rs.rank);
  }
}

TEST_CASE("structural invariants across types") {
  for (LieType t : kSmallTypes) {
    RootSystem rs = build_root_system(t);
    CAPTURE(t.name());
    for (int i = 0; i < rs.rank; ++i) {
      CHECK(rs.cartan[i][i] == 2);
      for (int j = 0; j < rs.rank; ++j) {
        if (i != j) CHECK(rs.cartan[i][j] <= 0);
        CHECK(rs.sym[i] * rs.cartan[i][j] == rs.sym[j] * rs.cartan[j][i]);
      }
    }
    // labels = A * coeffs for every positive root.
    for (const Root& a : rs.positive_roots) {
      for (int i = 0; i < rs.rank; ++i) {
        Int s = 0;
        for (int j = 0; j < rs.rank; ++j) s += rs.cartan[i][j] * a.coeffs[j];
        CHECK(s == a.labels[i]);
      }
    }
    // Simple reflections permute the roots (closure).
    std::set<std::vector<Int>> roots;
    for (const Root& a : rs.positive_roots) {
      roots.insert(a.coeffs);
      std::vector<Int> neg = a.coeffs;
      for (Int& x : neg) x = -x;
      roots.insert(neg);
    }
    for (const Root& a : rs.positive_roots)
      for (int i = 0; i < rs.rank; ++i) {
        std::vector<Int> img = a.coeffs;
        img[i] -= a.labels[i];  // s_i in the root basis
        CHECK(roots.count(img) == 1);
      }
    // rho' root-basis form is half the coefficient sum over Phi'_+, and its
    // label form is A times that.
    for (int i = 0; i < rs.rank; ++i) {
      Rat half = 0;
      for (const Root& a : rs.nonsimple_positive) half += Rat(a.coeffs[i]) / 2;
      CHECK(rs.rho_prime_root[i] == half);
      Rat lab = 0;
      for (int j = 0; j < rs.rank; ++j)
        lab += Rat(rs.cartan[i][j]) * rs.rho_prime_root[j];
      CHECK(lab == rs.rho_prime[i]);
    }
  }
}

TEST_CASE("to_root_basis examples") {
  RootSystem g2 = build_root_system({'G', 2});
  CHECK(to_root_basis(g2, Weight{1, 1}) == RatWeight{Rat(3), Rat(5)});
  CHECK(to_root_basis(g2, Weight{0, 0}) == RatWeight{Rat(0), Rat(0)});
  RootSystem a2 = build_root_system({'A', 2});
  CHECK(to_root_basis(a2, Weight{1, 0}) == RatWeight{Rat(2, 3), Rat(1, 3)});
}

TEST_CASE("is_in_Q_plus examples") {
  RootSystem g2 = build_root_system({'G', 2});
  CHECK(is_in_Q_plus(g2, Weight{1, -1}));  // (1,1)-(0,2) = alpha1 + alpha2
  CHECK(is_in_Q_plus(g2, Weight{0, 0}));
  RootSystem a2 = build_root_system({'A', 2});
  CHECK_FALSE(is_in_Q_plus(a2, Weight{1, 0}));
  CHECK_FALSE(is_in_Q_plus(a2, Weight{-2, 1}));  // integral but negative coeff
}

TEST_CASE("inner product examples") {
  RootSystem g2 = build_root_system({'G', 2});
  RatWeight a1{Rat(2), Rat(-3)}, a2{Rat(-1), Rat(2)};  // simple-root labels
  CHECK(inner_product(g2, a1, a1) == 6);
  CHECK(inner_product(g2, a2, a2) == 2);
  CHECK(inner_product(g2, a1, RatWeight{Rat(0), Rat(0)}) == 0);
  RootSystem a2sys = build_root_system({'A', 2});
  RatWeight b1{Rat(2), Rat(-1)}, b2{Rat(-1), Rat(2)};
  CHECK(inner_product(a2sys, b1, b2) == -1);
  CHECK(inner_product(a2sys, b1, b2) == inner_product(a2sys, b2, b1));
}

TEST_CASE("dimension formula evaluation") {
  RootSystem g2 = build_root_system({'G', 2});
  CHECK(dim_eval(g2, Weight{1, 1}) == 64);
  CHECK(dim_eval(g2, Weight{0, 1}) == 7);
  CHECK(dim_eval(g2, Weight{1, 0}) == 14);
  RootSystem a2 = build_root_system({'A', 2});
  CHECK(dim_eval(a2, Weight{1, 1}) == 8);
  CHECK(dim_eval(a2, Weight{0, 0}) == 1);
}

TEST_CASE("classical Weyl group orders") {
  CHECK(classical_weyl_order({'A', 2}) == 6);
  CHECK(classical_weyl_order({'G', 2}) == 12);
  CHECK(classical_weyl_order({'F', 4}) == 1152);
  CHECK(classical_weyl_order({'E', 7}) == 2903040);
  CHECK(classical_weyl_order({'E', 8}) == 696729600);
  CHECK(classical_weyl_order({'D', 4}) == 192);
}
