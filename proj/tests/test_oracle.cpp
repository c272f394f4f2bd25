#include <doctest.h>

#include "oracle.hpp"
#include "seminormal.hpp"

using namespace hclab;

namespace {

template <class F>
SuperModule<typename F::value_type> direct_sum(const F& f, const SuperModule<typename F::value_type>& M) {
  auto S = M;
  S.dim = 2 * M.dim;
  S.grading.insert(S.grading.end(), M.grading.begin(), M.grading.end());
  auto twice = [&](std::vector<la::Mat<F>>& ops) {
    for (auto& m : ops) m = detail::block_diag(f, std::vector<la::Mat<F>>{m, m});
  };
  twice(S.X);
  twice(S.Xinv);
  twice(S.C);
  twice(S.T);
  return S;
}

}  // namespace

TEST_CASE("relation checks report a mutated Clifford generator") {
  auto f = make_exact_field(5);
  auto D = build_D(f, {0, 1, 2});
  REQUIRE(verify_relations(f, D).all_passed());
  auto bad = D;
  bool flipped = false;
  for (size_t r = 0; r < bad.dim && !flipped; ++r)
    for (size_t c = 0; c < bad.dim && !flipped; ++c)
      if (!f.is_zero(bad.C[1](r, c))) {
        bad.C[1](r, c) = -bad.C[1](r, c);
        flipped = true;
      }
  REQUIRE(flipped);
  auto rep = verify_relations(f, bad);
  CHECK_FALSE(rep.all_passed());
  REQUIRE(rep.find("Clifford") != nullptr);
  CHECK_FALSE(rep.find("Clifford")->passed);
  CHECK_FALSE(rep.find("Clifford")->indices.empty());
  auto odd = D;
  odd.X[0](0, 1) = f.one();
  CHECK_FALSE(verify_relations(f, odd).all_passed());
}

TEST_CASE("supercommutant dimensions") {
  auto f = make_exact_field(5);
  CHECK(supercommutant_dim(f, module_L(f, 0)) == 2);
  CHECK(supercommutant_dim(f, module_L(f, 1)) == 1);
  CHECK(supercommutant_dim(f, build_D_finite(f, {2, 1})) == 1);
  CHECK(supercommutant_dim(f, direct_sum(f, build_D_finite(f, {2, 1}))) == 4);
}

TEST_CASE("weight spaces and complete splittability") {
  auto f = make_exact_field(5);
  CHECK(weight_spaces(f, build_V2(f, 0, 2)) == std::map<Weight, size_t>{{{0, 2}, 4}, {{2, 0}, 4}});
  CHECK(weight_spaces(f, build_D(f, {0, 1, 2})) == std::map<Weight, size_t>{{{0, 1, 2}, 8}});
  CHECK_FALSE(completely_splittable(f, build_V2(f, 0, 0)));
  CHECK(completely_splittable(f, build_V2(f, 0, 1)));
  CHECK(epsilon_i(f, build_V2(f, 0, 0), 0) == 2);
  CHECK(epsilon_i(f, build_D(f, {0, 1, 2}), 0) == 0);
}

TEST_CASE("irreducibility certificate") {
  auto f = make_exact_field(5);
  CHECK(irreducible_certificate(f, build_D(f, {0, 1, 0})).passed());
  CHECK(irreducible_certificate(f, build_V2(f, 0, 2)).passed());
  auto twice = direct_sum(f, build_D(f, {0, 1, 0}));
  REQUIRE(verify_relations(f, twice).all_passed());
  auto c = irreducible_certificate(f, twice);
  CHECK_FALSE(c.passed());
  CHECK(c.completely_splittable);
  CHECK_FALSE(c.b);
  CHECK_FALSE(c.b_failure.empty());
}

TEST_CASE("tensor-then-split oracle agrees with the paired construction") {
  for (int k : {5, 7, 8, 12}) {
    auto f = make_exact_field(k);
    for (int n = 1; n <= 3; ++n)
      for (const auto& w : enumerate_finite_weights(n, f.h())) {
        CAPTURE(k);
        auto S = tensor_split(f, w);
        auto L = module_L_tuple(f, w);
        CHECK(verify_relations(f, S).all_passed());
        CHECK(same_x_spectrum(f, S, L));
        CHECK(supercommutant_dim(f, S) == supercommutant_dim(f, L));
      }
  }
  auto f = make_exact_field(5);
  CHECK_THROWS_AS(tensor_split(f, {0, 1, 2, 0}), Error);
}

TEST_CASE("classification tables") {
  auto c5 = classify(5, 3);
  REQUIRE(c5.size() == 2);
  CHECK(c5[0].xi == Partition{3});
  CHECK(c5[0].dim == 8);
  CHECK(c5[0].type_q);
  CHECK(c5[1].xi == Partition{2, 1});
  CHECK(c5[1].dim == 4);
  CHECK_FALSE(c5[1].type_q);
  auto c4 = classify(4, 3);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].dim == 4);
  CHECK(c4[0].type_q);
  CHECK(classify(5, 0).empty());
  CHECK_THROWS_AS(classify(5, 8), Error);
  CHECK(classify(17, 8, true).size() == classification_index(8, 17, Family::CSP).size());
}

TEST_CASE("dimension sums") {
  auto s = dimension_sum_check(5, 3);
  CHECK(s.sum == 48);
  CHECK(s.target == 48);
  CHECK(s.verdict == SumVerdict::Equal);
  auto t = dimension_sum_check(3, 3);
  CHECK(t.sum == 16);
  CHECK(t.verdict == SumVerdict::StrictlyLess);
  CHECK(t.conclusive);
  auto u = dimension_sum_check(4, 2);
  CHECK(u.target == 8);
  CHECK(u.verdict == SumVerdict::StrictlyLess);
  CHECK(u.conclusive);
  auto v = dimension_sum_check(3, 5);
  CHECK_FALSE(v.conclusive);
  CHECK(v.note.find("not conclusive") != std::string::npos);
}

TEST_CASE("classification cross-check") {
  for (int h : {3, 5, 7, 4, 6})
    for (int n = 1; n <= 6; ++n) {
      auto c = cross_check_classification(h, n);
      CAPTURE(h);
      CAPTURE(n);
      CHECK(c.ok());
    }
  auto c = cross_check_classification(5, 3);
  CHECK(c.weights == 2);
  CHECK(c.classes == 2);
  CHECK(cross_check_classification(4, 1).weights == 1);
  bool has22 = false;
  for (const auto& e : classify(4, 4))
    if (e.xi == Partition{2, 2}) has22 = e.representative == Weight{0, 1, 0, 1} && e.family == Family::CSP2;
  CHECK(has22);
}
