#include <doctest.h>

#include <set>

#include "errors.hpp"
#include "weights.hpp"

using namespace hclab;

namespace {

std::vector<Weight> all_tuples(int n, int h) {
  std::vector<Weight> out{{}};
  for (int j = 0; j < n; ++j) {
    std::vector<Weight> next;
    for (const auto& w : out)
      for (int i = 0; i <= top_residue(h); ++i) {
        auto v = w;
        v.push_back(i);
        next.push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

Weight swap_at(Weight w, int k) {
  std::swap(w[k - 1], w[k]);
  return w;
}

}  // namespace

TEST_CASE("admissibility") {
  CHECK_FALSE(is_admissible({0, 1}, 1));
  CHECK(is_admissible({0, 2, 1}, 1));
  CHECK_FALSE(is_admissible({0, 1, 0}, 2));
}

TEST_CASE("affine and finite validity") {
  CHECK(valid_affine({0, 1, 0}, 5));
  // (0,1,2,1): the two 1's enclose 2 = (h-1)/2, which is the odd-h peak pattern.
  CHECK(valid_affine({0, 1, 2, 1}, 5));
  CHECK(valid_affine({0, 1, 0, 1}, 4));
  CHECK_FALSE(valid_affine({0, 0}, 5));
  CHECK(valid_finite({0}, 5));
  CHECK_FALSE(valid_finite({1, 0}, 5));
  CHECK_FALSE(valid_finite({1, 0}, 4));
  CHECK(valid_finite({0, 1, 2, 0, 1}, 6));
}

TEST_CASE("orbits") {
  auto o = orbit_with_words({0, 1, 2}, 5);
  REQUIRE(o.size() == 1);
  CHECK(o[0].perm == identity_perm(3));
  auto o2 = orbit_with_words({0, 1, 0, 2}, 7);
  bool has = false;
  for (const auto& e : o2) has = has || e.seq == Weight{0, 1, 2, 0};
  CHECK(has);
  CHECK(orbit_with_words({0, 1, 2, 0}, 6).size() == 2);
}

TEST_CASE("orbit words are well defined") {
  for (int h : {3, 5, 7, 4, 6, 8})
    for (int n = 1; n <= 6; ++n)
      for (const auto& w : enumerate_finite_weights(n, h))
        for (const auto& e : orbit_with_words(w, h)) CHECK(act(e.perm, w) == e.seq);
}

TEST_CASE("admissible moves preserve validity and neighbours differ") {
  for (int h : {3, 4, 5, 6, 7, 8})
    for (int n = 2; n <= 5; ++n)
      for (const auto& w : all_tuples(n, h)) {
        if (!valid_affine(w, h)) continue;
        for (int k = 1; k < n; ++k) {
          CHECK(w[k - 1] != w[k]);
          if (is_admissible(w, k)) CHECK(valid_affine(swap_at(w, k), h));
        }
      }
}

TEST_CASE("finite weights") {
  CHECK(enumerate_finite_weights(1, 5) == std::vector<Weight>{{0}});
  CHECK(enumerate_finite_weights(2, 5) == std::vector<Weight>{{0, 1}});
  auto w3 = enumerate_finite_weights(3, 5);
  CHECK(std::set<Weight>(w3.begin(), w3.end()) == std::set<Weight>{{0, 1, 2}, {0, 1, 0}});
  for (int h : {3, 4, 5, 6})
    for (int n = 1; n <= 5; ++n) {
      std::set<Weight> brute;
      for (const auto& w : all_tuples(n, h))
        if (valid_finite(w, h)) brute.insert(w);
      auto e = enumerate_finite_weights(n, h);
      CHECK(std::set<Weight>(e.begin(), e.end()) == brute);
    }
  CHECK_THROWS_AS(enumerate_finite_weights(9, 5), Error);
}

TEST_CASE("split classes and canonical forms") {
  CHECK(split_class({0, 1}, 4) == SplitClass::P1);
  CHECK(split_class({0, 1, 0, 1}, 4) == SplitClass::P2);
  CHECK(split_class({0, 1, 2, 0, 1}, 6) == SplitClass::P1);
  CHECK(canonical_p2({0, 1, 0, 1}, 4) == Weight{0, 1, 0, 1});
  for (int h : {4, 6, 8})
    for (int n = 1; n <= 6; ++n)
      for (const auto& w : enumerate_finite_weights(n, h)) {
        if (split_class(w, h) != SplitClass::P2) continue;
        const auto c = canonical_p2(w, h);
        CHECK(canonical_p2(c, h) == c);
        std::set<Weight> orbit;
        for (const auto& e : orbit_with_words(w, h)) orbit.insert(e.seq);
        CHECK(orbit.count(c));
      }
}

TEST_CASE("phi map") {
  CHECK(phi_map({0, 1, 0}, 5) == Partition{2, 1});
  CHECK(phi_map({0, 1, 2, 0, 1}, 6) == Partition{3, 2});
  CHECK(phi_map({0, 1, 0, 1}, 4) == Partition{2, 2});
  for (int h : {3, 5, 7, 4, 6})
    for (int n = 1; n <= 5; ++n)
      for (const auto& xi : classification_index(n, h, Family::CSP)) {
        const auto w = representative_weight(xi, h);
        CHECK(valid_finite(w, h));
        CHECK(phi_map(w, h) == xi);
      }
}
