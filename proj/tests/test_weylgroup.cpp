#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "layerlie/layercalc.hpp"
#include "layerlie/weylgroup.hpp"

using namespace layerlie;

TEST_CASE("simple reflection examples") {
  RootSystem a2 = build_root_system({'A', 2});
  CHECK(simple_reflection(a2, 0, Weight{1, 0}) == Weight{-1, 1});
  CHECK(simple_reflection(a2, 0, Weight{0, 5}) == Weight{0, 5});  // fixed
  RootSystem g2 = build_root_system({'G', 2});
  CHECK(simple_reflection(g2, 0, Weight{1, 1}) == Weight{-1, 4});
  // Involution on random weights.
  std::mt19937 rng(5);
  std::uniform_int_distribution<Int> d(-6, 6);
  for (int it = 0; it < 30; ++it) {
    Weight w{d(rng), d(rng)};
    for (int i = 0; i < 2; ++i)
      CHECK(simple_reflection(g2, i, simple_reflection(g2, i, w)) == w);
  }
}

TEST_CASE("orbit examples") {
  RootSystem a2 = build_root_system({'A', 2});
  std::vector<Weight> o = orbit(a2, Weight{1, 0});
  std::set<Weight> os(o.begin(), o.end());
  CHECK(os == std::set<Weight>{{1, 0}, {-1, 1}, {0, -1}});
  RootSystem g2 = build_root_system({'G', 2});
  CHECK(orbit_size(g2, Weight{1, 1}) == 12);
  CHECK(orbit_size(g2, Weight{1, 0}) == 6);
  CHECK(orbit(g2, Weight{0, 0}) == std::vector<Weight>{{0, 0}});
  // Exactly one dominant element per orbit.
  for (const Weight& w : {Weight{2, 1}, Weight{0, 3}, Weight{4, 0}}) {
    int dominant = 0;
    for (const Weight& x : orbit(g2, w)) dominant += is_dominant(x) ? 1 : 0;
    CHECK(dominant == 1);
  }
}

TEST_CASE("group enumeration and orders") {
  CHECK(enumerate_group(build_root_system({'A', 2})).order == 6);
  CHECK(enumerate_group(build_root_system({'G', 2})).order == 12);
  RootSystem f4 = build_root_system({'F', 4});
  GroupTable wf4 = enumerate_group(f4);
  CHECK(wf4.order == 1152);
  CHECK(orbit_size(f4, f4.rho) == 1152);
  // Images of rho are pairwise distinct; exactly one identity.
  std::set<Weight> images;
  int identities = 0;
  for (const GroupElem& w : wf4.elems) {
    images.insert(w.rho_image);
    if (w.length == 0) ++identities;
  }
  CHECK(static_cast<long long>(images.size()) == wf4.order);
  CHECK(identities == 1);
}

TEST_CASE("enumeration guard refuses E8 and reports the order") {
  RootSystem e8 = build_root_system({'E', 8});
  CHECK_THROWS_AS(enumerate_group(e8), GroupTooLarge);
  try {
    enumerate_group(e8);
  } catch (const GroupTooLarge& e) {
    CHECK(e.order == 696729600);
  }
  // E7 fits under the default guard.
  CHECK(enumerate_group(build_root_system({'E', 7})).order == 2903040);
}

TEST_CASE("dominantize") {
  RootSystem a2 = build_root_system({'A', 2});
  // The orbit of (0,-1) is singular, so only the representative is asserted.
  CHECK(dominantize(a2, Weight{0, -1}).first == Weight{1, 0});
  CHECK(dominantize(a2, Weight{2, 3}) == std::pair<Weight, int>{{2, 3}, 1});
  RootSystem g2 = build_root_system({'G', 2});
  auto [dom, parity] = dominantize(g2, Weight{-1, 4});
  CHECK(dom == Weight{1, 1});
  CHECK(parity == -1);  // regular orbit: parity matches (-1)^{l(w)}
}

TEST_CASE("shifted resolution of auxiliary weights") {
  RootSystem g2 = build_root_system({'G', 2});
  AuxResolution r = shifted_resolve(g2, Weight{3, -6});
  CHECK_FALSE(r.zero);
  CHECK(r.sign == 1);
  CHECK(r.dominant == Weight{0, 1});
  r = shifted_resolve(g2, Weight{-4, 4});
  CHECK_FALSE(r.zero);
  CHECK(r.sign == -1);
  CHECK(r.dominant == Weight{0, 0});
  CHECK(shifted_resolve(g2, Weight{-3, 1}).zero);
  // Dominant weights resolve to themselves with sign +1.
  for (const Weight& w : {Weight{0, 0}, Weight{2, 1}, Weight{0, 4}}) {
    AuxResolution s = shifted_resolve(g2, w);
    CHECK_FALSE(s.zero);
    CHECK(s.sign == 1);
    CHECK(s.dominant == w);
  }
}

TEST_CASE("zero resolutions coincide with zeros of D") {
  for (LieType t : {LieType{'A', 2}, LieType{'B', 2}, LieType{'G', 2}}) {
    RootSystem rs = build_root_system(t);
    for (Int a = -6; a <= 4; ++a)
      for (Int b = -6; b <= 4; ++b) {
        Weight w{a, b};
        CAPTURE(t.name());
        CAPTURE(a);
        CAPTURE(b);
        CHECK(shifted_resolve(rs, w).zero == (dim_eval(rs, w) == 0));
      }
  }
}

TEST_CASE("orbit sizes divide the group order") {
  RootSystem b3 = build_root_system({'B', 3});
  long long order = enumerate_group(b3).order;
  std::mt19937 rng(11);
  std::uniform_int_distribution<Int> d(-3, 3);
  for (int it = 0; it < 20; ++it) {
    Weight w{d(rng), d(rng), d(rng)};
    CHECK(order % orbit_size(b3, w) == 0);
  }
}
