#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "field.hpp"
#include "matrix.hpp"
#include "weights.hpp"

namespace hclab {

// A Z/2-graded space with generator matrices. Positions are 0-based:
// X[j], Xinv[j], C[j] for j < n and T[k] acting on positions k, k+1.
template <class S>
struct SuperModule {
  size_t dim = 0;
  std::vector<uint8_t> grading;
  std::vector<Matrix<S>> X, Xinv, C, T;
  std::map<std::string, std::vector<int>> labels;

  size_t n() const { return X.size(); }
  bool has_T() const { return !T.empty() || n() <= 1; }
};

namespace detail {

template <class F>
la::Mat<F> diag2(const F& f, const typename F::value_type& a, const typename F::value_type& b) {
  auto m = la::zeros(f, 2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

template <class F>
la::Mat<F> swap2(const F& f) {
  auto m = la::zeros(f, 2, 2);
  m(0, 1) = f.one();
  m(1, 0) = f.one();
  return m;
}

// diag((-1)^{g}) for a grading vector.
template <class F>
la::Mat<F> parity_matrix(const F& f, const std::vector<uint8_t>& grading) {
  auto m = la::zeros(f, grading.size(), grading.size());
  for (size_t i = 0; i < grading.size(); ++i) m(i, i) = grading[i] ? -f.one() : f.one();
  return m;
}

template <class F>
la::Mat<F> kron_chain(const F& f, const std::vector<la::Mat<F>>& parts) {
  la::Mat<F> r = la::identity(f, 1);
  for (const auto& p : parts) r = la::kron(f, r, p);
  return r;
}

}  // namespace detail

template <class F>
SuperModule<typename F::value_type> module_L(const F& f, int i) {
  SuperModule<typename F::value_type> m;
  m.dim = 2;
  m.grading = {0, 1};
  m.X = {detail::diag2(f, f.bplus(i), f.bminus(i))};
  m.Xinv = {detail::diag2(f, f.bminus(i), f.bplus(i))};
  m.C = {detail::swap2(f)};
  m.labels["weight"] = {i};
  return m;
}

// Super tensor product; odd operators of N carry the parity involution of M.
template <class F>
SuperModule<typename F::value_type> box_tensor(const F& f, const SuperModule<typename F::value_type>& M,
                                               const SuperModule<typename F::value_type>& N) {
  SuperModule<typename F::value_type> r;
  r.dim = M.dim * N.dim;
  for (size_t a = 0; a < M.dim; ++a)
    for (size_t b = 0; b < N.dim; ++b) r.grading.push_back((M.grading[a] + N.grading[b]) % 2);
  const auto IM = la::identity(f, M.dim), IN = la::identity(f, N.dim);
  const auto PM = detail::parity_matrix(f, M.grading);
  for (size_t j = 0; j < M.n(); ++j) {
    r.X.push_back(la::kron(f, M.X[j], IN));
    r.Xinv.push_back(la::kron(f, M.Xinv[j], IN));
    r.C.push_back(la::kron(f, M.C[j], IN));
  }
  for (size_t j = 0; j < N.n(); ++j) {
    r.X.push_back(la::kron(f, IM, N.X[j]));
    r.Xinv.push_back(la::kron(f, IM, N.Xinv[j]));
    r.C.push_back(la::kron(f, PM, N.C[j]));
  }
  return r;
}

// Irreducible A_n-module with the eigenvalue data of L(i_1) * ... * L(i_n):
// positions with q(i) = +-2 are paired in increasing order, each pair sharing
// one 2-dimensional Clifford factor.
template <class F>
SuperModule<typename F::value_type> module_L_tuple(const F& f, const Weight& seq) {
  using M = la::Mat<F>;
  const size_t n = seq.size();
  for (int i : seq)
    if (!f.roots().contains(i)) fail(ErrorKind::InvalidArgument, "weight entry outside the index set");
  struct Slot {
    size_t factor;
    M x, xinv, c;
  };
  std::vector<Slot> slots(n);
  size_t factors = 0;
  std::optional<size_t> open_pair;
  const auto s = f.sqrt_neg1();
  for (size_t j = 0; j < n; ++j) {
    const int i = seq[j];
    if (!f.roots().special(i)) {
      slots[j] = {factors++, detail::diag2(f, f.bplus(i), f.bminus(i)), detail::diag2(f, f.bminus(i), f.bplus(i)),
                  detail::swap2(f)};
      continue;
    }
    const auto b = f.bplus(i);
    if (open_pair) {
      auto c = la::zeros(f, 2, 2);
      c(0, 1) = -s;
      c(1, 0) = s;
      slots[j] = {slots[*open_pair].factor, la::scalar(f, 2, b), la::scalar(f, 2, b), c};
      open_pair.reset();
    } else {
      slots[j] = {factors++, la::scalar(f, 2, b), la::scalar(f, 2, b), detail::swap2(f)};
      open_pair = j;
    }
  }
  const auto I2 = la::identity(f, 2);
  const auto P2 = detail::diag2(f, f.one(), -f.one());
  auto embed = [&](const M& local, size_t factor, bool odd) {
    std::vector<M> parts;
    for (size_t t = 0; t < factors; ++t) parts.push_back(t < factor ? (odd ? P2 : I2) : t == factor ? local : I2);
    return detail::kron_chain(f, parts);
  };
  SuperModule<typename F::value_type> m;
  m.dim = size_t{1} << factors;
  for (size_t b = 0; b < m.dim; ++b) m.grading.push_back(__builtin_popcountll(b) % 2);
  for (size_t j = 0; j < n; ++j) {
    m.X.push_back(embed(slots[j].x, slots[j].factor, false));
    m.Xinv.push_back(embed(slots[j].xinv, slots[j].factor, false));
    m.C.push_back(embed(slots[j].c, slots[j].factor, true));
  }
  m.labels["weight"] = seq;
  return m;
}

// Twisted action: X_j of the result is X_{tau^{-1}(j)} of M.
template <class S>
SuperModule<S> twist(const SuperModule<S>& M, const Perm& tau) {
  if (tau.size() != M.n()) fail(ErrorKind::InvalidArgument, "permutation size does not match the module");
  const Perm inv = inverse(tau);
  SuperModule<S> r;
  r.dim = M.dim;
  r.grading = M.grading;
  for (size_t j = 0; j < M.n(); ++j) {
    r.X.push_back(M.X[inv[j]]);
    r.Xinv.push_back(M.Xinv[inv[j]]);
    r.C.push_back(M.C[inv[j]]);
  }
  if (auto it = M.labels.find("weight"); it != M.labels.end()) r.labels["weight"] = act(tau, it->second);
  return r;
}

}  // namespace hclab
