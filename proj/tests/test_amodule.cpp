#include <doctest.h>

#include "amodule.hpp"
#include "oracle.hpp"

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

int special_count(const Weight& w, const RootData& r) {
  int c = 0;
  for (int i : w) c += r.special(i);
  return c;
}

}  // namespace

TEST_CASE("module L(i)") {
  auto f5 = make_exact_field(5);
  auto L0 = module_L(f5, 0);
  CHECK(la::equal(f5, L0.X[0], la::identity(f5, 2)));
  CHECK(L0.C[0](0, 1) == f5.one());
  CHECK(L0.C[0](1, 0) == f5.one());
  CHECK(L0.C[0](0, 0) == f5.zero());
  auto L1 = module_L(f5, 1);
  CHECK(L1.X[0](0, 0) == f5.bplus(1));
  CHECK(L1.X[0](1, 1) == f5.bminus(1));
  CHECK(L1.X[0](0, 0) * L1.X[0](1, 1) == f5.one());
  auto f8 = make_exact_field(8);
  CHECK(la::equal(f8, module_L(f8, 1).X[0], -la::identity(f8, 2)));
  CHECK(supercommutant_dim(f5, L0) == 2);
  CHECK(supercommutant_dim(f5, L1) == 1);
}

TEST_CASE("box tensor") {
  auto f = make_exact_field(5);
  auto M = box_tensor(f, module_L(f, 0), module_L(f, 0));
  CHECK(M.dim == 4);
  CHECK(la::equal(f, M.C[0] * M.C[1], -(M.C[1] * M.C[0])));
  CHECK(M.grading[1] == 1);
  CHECK(verify_relations(f, M).all_passed());
  CHECK(box_tensor(f, module_L(f, 1), module_L(f, 2)).dim == 4);
}

TEST_CASE("module L of a tuple") {
  auto f5 = make_exact_field(5);
  auto a = module_L_tuple(f5, {0});
  CHECK(a.dim == 2);
  CHECK(supercommutant_dim(f5, a) == 2);
  auto b = module_L_tuple(f5, {0, 1, 0});
  CHECK(b.dim == 4);
  CHECK(supercommutant_dim(f5, b) == 1);
  auto f8 = make_exact_field(8);
  CHECK(module_L_tuple(f8, {0, 1}).dim == 2);
  CHECK_THROWS_AS(module_L_tuple(f5, {3}), Error);
}

TEST_CASE("A_n relations and eigenvalues on every tuple module") {
  for (int k : {3, 5, 7, 8, 12}) {
    auto f = make_exact_field(k);
    for (int n = 1; n <= 4; ++n)
      for (const auto& w : all_tuples(n, f.h())) {
        auto M = module_L_tuple(f, w);
        CHECK(verify_relations(f, M).all_passed());
        const auto I = la::identity(f, M.dim);
        for (size_t j = 0; j < M.n(); ++j) CHECK(la::equal(f, M.X[j] + M.Xinv[j], f.qval(w[j]) * I));
        const int g = special_count(w, f.roots());
        CHECK(M.dim == (size_t{1} << (n - g / 2)));
      }
  }
}

TEST_CASE("tuple modules are irreducible of the expected type") {
  for (int k : {5, 7, 8, 12}) {
    auto f = make_exact_field(k);
    for (int n = 1; n <= 3; ++n)
      for (const auto& w : all_tuples(n, f.h())) {
        auto M = module_L_tuple(f, w);
        CHECK(supercommutant_dim(f, M) == (special_count(w, f.roots()) % 2 ? 2u : 1u));
        for (size_t b = 0; b < M.dim; ++b) {
          auto e = la::zeros(f, M.dim, 1);
          e(b, 0) = f.one();
          CHECK(generated_dim(f, M, e) == M.dim);
        }
      }
  }
}

TEST_CASE("twist") {
  auto f = make_exact_field(7);
  auto M = module_L_tuple(f, {0, 1, 2});
  auto same = twist(M, identity_perm(3));
  for (size_t j = 0; j < 3; ++j) CHECK(la::equal(f, same.X[j], M.X[j]));
  auto N = module_L_tuple(f, {0, 1});
  auto s1 = twist(N, Perm{1, 0});
  CHECK(la::equal(f, s1.X[0], N.X[1]));
  CHECK(s1.labels["weight"] == std::vector<int>{1, 0});
  const Perm tau{2, 0, 1};
  auto t = twist(M, tau);
  CHECK(t.labels["weight"] == act(tau, {0, 1, 2}));
  CHECK(weight_spaces(f, t).count(act(tau, {0, 1, 2})) == 1);
  CHECK(verify_relations(f, t).all_passed());
}
