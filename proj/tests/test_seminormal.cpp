#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "seminormal.hpp"

using namespace hclab;

namespace {

std::set<Weight> fiber(const Partition& xi, int h) {
  std::set<Weight> out;
  for (const auto& w : enumerate_finite_weights(size(xi), h))
    if (phi_map(w, h) == xi) out.insert(w);
  return out;
}

std::set<Weight> keys(const std::map<Weight, size_t>& m) {
  std::set<Weight> out;
  for (const auto& [w, d] : m) out.insert(w);
  return out;
}

}  // namespace

TEST_CASE("Xi operator") {
  auto f = make_exact_field(5);
  const auto I4 = la::identity(f, 4);
  auto W = module_L_tuple(f, {0, 1});
  auto X = xi_operator(f, W, 0);
  CHECK(la::equal(f, X * X, f.eps() * X + I4));
  auto V = module_L_tuple(f, {0, 2});
  auto Y = xi_operator(f, V, 0);
  const auto om = f.omega(0, 2);
  CHECK(la::equal(f, Y * Y - f.eps() * Y - la::identity(f, V.dim), -(om * om) * la::identity(f, V.dim)));
  auto P = detail::parity_matrix(f, V.grading);
  CHECK(la::equal(f, P * Y, Y * P));
  CHECK_THROWS_AS(xi_operator(f, module_L_tuple(f, {1, 1}), 0), Error);
}

TEST_CASE("build_D examples") {
  auto f5 = make_exact_field(5);
  auto a = build_D(f5, {0, 1, 0});
  CHECK(a.dim == 4);
  CHECK(supercommutant_dim(f5, a) == 1);
  auto b = build_D(f5, {0, 1, 2});
  CHECK(b.dim == 8);
  CHECK(supercommutant_dim(f5, b) == 2);
  CHECK(weight_spaces(f5, b) == std::map<Weight, size_t>{{{0, 1, 2}, 8}});
  auto f12 = make_exact_field(12);
  CHECK(build_D(f12, {0, 1, 2, 0, 1}).dim == 32);
  CHECK_THROWS_AS(build_D(f5, {0, 0}), Error);
}

TEST_CASE("build_D_finite examples") {
  auto f8 = make_exact_field(8);
  auto d21 = build_D_finite(f8, {2, 1});
  CHECK(d21.dim == 4);
  CHECK(supercommutant_dim(f8, d21) == 2);
  auto f12 = make_exact_field(12);
  auto d31 = build_D_finite(f12, {3, 1});
  CHECK(d31.dim == 16);
  CHECK(supercommutant_dim(f12, d31) == 2);
  auto f5 = make_exact_field(5);
  auto d3 = build_D_finite(f5, {3});
  CHECK(d3.dim == 8);
  CHECK(supercommutant_dim(f5, d3) == 2);
}

TEST_CASE("rank-2 modules") {
  auto f = make_exact_field(5);
  auto v01 = build_V2(f, 0, 1);
  CHECK(v01.dim == 4);
  CHECK(la::equal(f, v01.T[0], xi_operator(f, v01, 0)));
  CHECK(verify_relations(f, v01).all_passed());
  CHECK(completely_splittable(f, v01));
  auto v02 = build_V2(f, 0, 2);
  CHECK(v02.dim == 8);
  CHECK(completely_splittable(f, v02));
  CHECK(weight_spaces(f, v02) == std::map<Weight, size_t>{{{0, 2}, 4}, {{2, 0}, 4}});
  CHECK(irreducible_certificate(f, v02).passed());
  auto v00 = build_V2(f, 0, 0);
  CHECK(v00.dim == 4);
  CHECK(verify_relations(f, v00).all_passed());
  CHECK_FALSE(completely_splittable(f, v00));
  CHECK(weight_spaces(f, v00) == std::map<Weight, size_t>{{{0, 0}, 4}});
  CHECK(epsilon_i(f, v00, 0) == 2);
}

TEST_CASE("intertwiners and phi-hat") {
  auto f = make_exact_field(5);
  auto D = build_D(f, {0, 1, 0, 2});
  CHECK(verify_intertwiners(f, D).all_passed());
  CHECK(verify_phi_hat(f, D).all_passed());
  const Weight a{0, 1, 0, 2}, b{0, 1, 2, 0};
  auto ph = phi_hat(f, D, a, 2);
  auto Pa = weight_projector(f, D, a), Pb = weight_projector(f, D, b);
  const size_t da = la::rank(f, Pa);
  CHECK(da == la::rank(f, Pb));
  CHECK(la::rank(f, ph) == da);
  CHECK(la::equal(f, Pb * ph, ph));
  CHECK_THROWS_AS(phi_hat(f, D, a, 0), Error);
}

TEST_CASE("Jucys-Murphy elements") {
  auto f = make_exact_field(5);
  auto D = build_D_finite(f, {2, 1});
  CHECK(verify_jm(f, D).all_passed());
  CHECK(la::equal(f, jm_matrices(f, D)[0], la::identity(f, D.dim)));
  CHECK_THROWS_AS(jm_matrices(f, build_D(f, {1, 0})), Error);
}

TEST_CASE("relation suite and spectra on every D(xi)") {
  for (int k : {3, 5, 7, 8, 12}) {
    auto f = make_exact_field(k);
    const int h = f.h();
    for (int n = 1; n <= 4; ++n)
      for (const auto& xi : classification_index(n, h, Family::CSP)) {
        CAPTURE(k);
        CAPTURE(to_string(xi));
        auto D = build_D_finite(f, xi);
        CHECK(verify_relations(f, D).all_passed());
        CHECK(verify_jm(f, D).all_passed());
        CHECK(completely_splittable(f, D));
        const auto ws = weight_spaces(f, D);
        CHECK(keys(ws) == fiber(xi, h));
        for (const auto& [w, d] : ws) CHECK(d == l_tuple_dim(w, f.roots()));
        for (int i : f.index_set()) CHECK(epsilon_i(f, D, i) <= 1);
      }
  }
}
