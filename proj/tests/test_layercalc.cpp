#include <map>

#include "doctest.h"
#include "layerlie/charcalc.hpp"
#include "layerlie/layercalc.hpp"

using namespace layerlie;

namespace {

Weight neg_labels(const RootSystem& rs, const std::vector<Int>& root_coeffs) {
  Weight w(rs.rank, 0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      w[i] -= rs.cartan[i][j] * root_coeffs[j];
  return w;
}

}  // namespace

TEST_CASE("dimension polynomial examples") {
  RootSystem g2 = build_root_system({'G', 2});
  MultiPoly D = dim_polynomial(g2);
  MultiPoly expected = poly_scale(
      poly_mul(
          poly_mul(poly_mul(parse_poly(2, "1 + l1"), parse_poly(2, "1 + l2")),
                   poly_mul(parse_poly(2, "2 + l1 + l2"),
                            parse_poly(2, "3 + 2*l1 + l2"))),
          poly_mul(parse_poly(2, "4 + 3*l1 + l2"),
                   parse_poly(2, "5 + 3*l1 + 2*l2"))),
      Rat(1, 120));
  CHECK(D == expected);
  CHECK(dim_polynomial(build_root_system({'A', 1})) == parse_poly(1, "1 + l1"));
  RootSystem a2 = build_root_system({'A', 2});
  CHECK(poly_eval(dim_polynomial(a2), {Rat(1), Rat(1)}) == 8);
}

TEST_CASE("D vanishes on the walls lambda_i = -1") {
  for (LieType t : {LieType{'A', 3}, LieType{'B', 3}, LieType{'G', 2}}) {
    RootSystem rs = build_root_system(t);
    MultiPoly D = dim_polynomial(rs);
    for (int i = 0; i < rs.rank; ++i) {
      RatWeight pt(rs.rank, Rat(2));
      pt[i] = -1;
      CHECK(poly_eval(D, pt) == 0);
    }
  }
}

TEST_CASE("Z2^k shift tables") {
  RootSystem a2 = build_root_system({'A', 2});
  SignedShiftTable t = zgroup_shift_table(a2);
  std::map<Weight, Int> expected{{{0, 0}, 1}, {neg_labels(a2, {1, 1}), -1}};
  CHECK(t.entries == expected);

  RootSystem a1 = build_root_system({'A', 1});
  CHECK(zgroup_shift_table(a1).entries == std::map<Weight, Int>{{{0}, 1}});

  RootSystem g2 = build_root_system({'G', 2});
  SignedShiftTable tg = zgroup_shift_table(g2);
  CHECK(tg.entries.size() == 12);  // six signed pairs after cancellation

  // Zero-sum and pairing invariants.
  for (LieType ty : {LieType{'A', 2}, LieType{'A', 3}, LieType{'B', 3},
                     LieType{'G', 2}}) {
    RootSystem rs = build_root_system(ty);
    SignedShiftTable tab = zgroup_shift_table(rs);
    Int sum = 0;
    for (const auto& [s, c] : tab.entries) sum += c;
    CHECK(sum == (rs.num_nonsimple() == 0 ? 1 : 0));
    int sign = rs.num_nonsimple() % 2 == 0 ? 1 : -1;
    for (const auto& [s, c] : tab.entries) {
      Weight partner = weight_sub(tab.total_shift, s);
      auto it = tab.entries.find(partner);
      REQUIRE(it != tab.entries.end());
      CHECK(it->second == sign * c);
    }
  }
}

TEST_CASE("Weyl shift tables") {
  RootSystem a1 = build_root_system({'A', 1});
  SignedShiftTable t1 = weyl_shift_table(a1, enumerate_group(a1));
  CHECK(t1.entries == std::map<Weight, Int>{{{0}, 1}, {neg_labels(a1, {1}), -1}});

  RootSystem a2 = build_root_system({'A', 2});
  SignedShiftTable t2 = weyl_shift_table(a2, enumerate_group(a2));
  std::map<Weight, Int> expected{
      {{0, 0}, 1},
      {neg_labels(a2, {1, 0}), -1},   {neg_labels(a2, {0, 1}), -1},
      {neg_labels(a2, {2, 1}), 1},    {neg_labels(a2, {1, 2}), 1},
      {neg_labels(a2, {2, 2}), -1}};
  CHECK(t2.entries == expected);

  RootSystem g2 = build_root_system({'G', 2});
  SignedShiftTable tg = weyl_shift_table(g2, enumerate_group(g2));
  CHECK(tg.entries.size() == 12);

  // Zero-sum and pairing with sign (-1)^{|Phi_+|}.
  for (LieType ty : {LieType{'A', 2}, LieType{'A', 3}, LieType{'B', 3},
                     LieType{'G', 2}}) {
    RootSystem rs = build_root_system(ty);
    SignedShiftTable tab = weyl_shift_table(rs, enumerate_group(rs));
    Int sum = 0;
    for (const auto& [s, c] : tab.entries) sum += c;
    CHECK(sum == 0);
    int sign = rs.positive_roots.size() % 2 == 0 ? 1 : -1;
    for (const auto& [s, c] : tab.entries) {
      auto it = tab.entries.find(weight_sub(tab.total_shift, s));
      REQUIRE(it != tab.entries.end());
      CHECK(it->second == sign * c);
    }
  }
}

TEST_CASE("layer polynomial printed examples") {
  CHECK(layer_polynomial(build_root_system({'A', 2})) ==
        parse_poly(2, "1 + 3/2*(l1+l2) + 1/2*(l1^2+l2^2+4*l1*l2)"));
  CHECK(layer_polynomial(build_root_system({'G', 2})) ==
        parse_poly(2, "1 + 3*(l1+l2) + 3*(3*l1^2+l2^2+4*l1*l2)"));
  CHECK(layer_polynomial(build_root_system({'B', 2})) ==
        parse_poly(2, "1 + 2*(l1+l2) + (2*l1^2+l2^2+4*l1*l2)"));
}

TEST_CASE("layer polynomial agrees with the signed shift-table sum") {
  for (LieType ty : {LieType{'A', 2}, LieType{'B', 2}, LieType{'G', 2},
                     LieType{'A', 3}}) {
    RootSystem rs = build_root_system(ty);
    MultiPoly D = dim_polynomial(rs);
    SignedShiftTable tab = zgroup_shift_table(rs);
    MultiPoly sum = MultiPoly::zero(rs.rank);
    for (const auto& [shift, count] : tab.entries)
      sum = poly_add(sum, poly_scale(poly_shift(D, to_rational(shift)),
                                     Rat(count)));
    CHECK(sum == layer_polynomial(rs));
  }
}

TEST_CASE("layer polynomial shape report") {
  for (LieType ty : {LieType{'A', 1}, LieType{'A', 2}, LieType{'A', 3},
                     LieType{'B', 2}, LieType{'B', 3}, LieType{'C', 3},
                     LieType{'G', 2}}) {
    RootSystem rs = build_root_system(ty);
    LayerPolyReport rep = check_layer_polynomial(rs, layer_polynomial(rs));
    CAPTURE(ty.name());
    CHECK(rep.all_ok());
    CHECK(rep.degree == rs.rank);
  }
}

TEST_CASE("alternating Weyl sum of dimensions is the group order") {
  RootSystem g2 = build_root_system({'G', 2});
  CHECK(weyl_alternating_dim_sum(g2, Weight{7, 3}, enumerate_group(g2)) == 12);
  RootSystem a2 = build_root_system({'A', 2});
  CHECK(weyl_alternating_dim_sum(a2, Weight{0, 0}, enumerate_group(a2)) == 6);
  RootSystem a3 = build_root_system({'A', 3});
  CHECK(weyl_alternating_dim_sum(a3, Weight{2, 5, 1}, enumerate_group(a3)) == 24);
}

TEST_CASE("brute-force weight counts") {
  RootSystem g2 = build_root_system({'G', 2});
  CHECK(count_weights_bruteforce(g2, Weight{1, 1}) == 31);
  CHECK(count_weights_bruteforce(g2, Weight{0, 2}) == 19);
  CHECK(count_weights_bruteforce(g2, Weight{0, 1}) == 7);
  CHECK(count_weights_bruteforce(g2, Weight{0, 0}) == 1);
  RootSystem a2 = build_root_system({'A', 2});
  CHECK(count_weights_bruteforce(a2, Weight{1, 1}) == 7);
  CHECK_THROWS_AS(count_weights_bruteforce(a2, Weight{-1, 0}),
                  std::invalid_argument);
}
