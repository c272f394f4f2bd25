#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "amodule.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "partitions.hpp"
#include "weights.hpp"

namespace hclab {

// Xi_k = -eps[(X_k Xinv_{k+1} - 1)^{-1} - (X_k X_{k+1} - 1)^{-1} C_k C_{k+1}], k 0-based.
template <class F>
la::Mat<F> xi_operator(const F& f, const SuperModule<typename F::value_type>& W, size_t k) {
  if (k + 1 >= W.n()) fail(ErrorKind::InvalidArgument, "Xi position out of range");
  const auto I = la::identity(f, W.dim);
  auto r1 = la::inverse(f, W.X[k] * W.Xinv[k + 1] - I);
  auto r2 = la::inverse(f, W.X[k] * W.X[k + 1] - I);
  if (!r1 || !r2) {
    std::string pair = "positions " + std::to_string(k + 1) + "," + std::to_string(k + 2);
    fail(ErrorKind::Domain, "singular resolvent at " + pair + " (equal neighbouring residues)");
  }
  return (-f.eps()) * (*r1 - *r2 * W.C[k] * W.C[k + 1]);
}

namespace detail {

template <class F>
la::Mat<F> block_diag(const F& f, const std::vector<la::Mat<F>>& blocks) {
  size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  auto m = la::zeros(f, n, n);
  size_t off = 0;
  for (const auto& b : blocks) {
    m.set_block(off, off, b);
    off += b.rows();
  }
  return m;
}

}  // namespace detail

// D^{seq}: one copy of L(seq) per orbit element, T_k by the Xi/Omega block formula.
template <class F>
SuperModule<typename F::value_type> build_D(const F& f, const Weight& seq) {
  if (!valid_affine(seq, f.h())) fail(ErrorKind::InvalidArgument, "weight sequence is not valid for h = " + std::to_string(f.h()));
  auto orbit = orbit_with_words(seq, f.h());
  std::sort(orbit.begin(), orbit.end(), [](const OrbitEntry& a, const OrbitEntry& b) { return a.seq < b.seq; });
  std::map<Weight, size_t> where;
  for (size_t c = 0; c < orbit.size(); ++c) where[orbit[c].seq] = c;

  const size_t n = seq.size();
  const auto L = module_L_tuple(f, seq);
  const size_t d = L.dim;
  std::vector<SuperModule<typename F::value_type>> comps;
  for (const auto& e : orbit) comps.push_back(twist(L, e.perm));

  SuperModule<typename F::value_type> D;
  D.dim = d * orbit.size();
  for (size_t c = 0; c < orbit.size(); ++c) D.grading.insert(D.grading.end(), L.grading.begin(), L.grading.end());
  for (size_t j = 0; j < n; ++j) {
    std::vector<la::Mat<F>> xs, xis, cs;
    for (const auto& m : comps) {
      xs.push_back(m.X[j]);
      xis.push_back(m.Xinv[j]);
      cs.push_back(m.C[j]);
    }
    D.X.push_back(detail::block_diag(f, xs));
    D.Xinv.push_back(detail::block_diag(f, xis));
    D.C.push_back(detail::block_diag(f, cs));
  }
  const auto Id = la::identity(f, d);
  for (size_t k = 0; k + 1 < n; ++k) {
    auto T = la::zeros(f, D.dim, D.dim);
    for (size_t c = 0; c < orbit.size(); ++c) {
      const Weight& w = orbit[c].seq;
      T.set_block(c * d, c * d, xi_operator(f, comps[c], k));
      if (!is_admissible(w, static_cast<int>(k) + 1)) continue;
      Weight moved = w;
      std::swap(moved[k], moved[k + 1]);
      const size_t target = where.at(moved);
      T.set_block(target * d, c * d, f.omega(w[k], w[k + 1]) * Id);
    }
    D.T.push_back(std::move(T));
  }
  D.labels["weight"] = seq;
  D.labels["orbit_size"] = {static_cast<int>(orbit.size())};
  return D;
}

// D(xi) for xi in CSP_h(n), built on the fixed representative residue sequence.
template <class F>
SuperModule<typename F::value_type> build_D_finite(const F& f, const Partition& xi) {
  const Weight seq = representative_weight(xi, f.h());
  auto D = build_D(f, seq);
  if (!la::equal(f, D.X[0], la::identity(f, D.dim))) fail(ErrorKind::Internal, "X_1 is not the identity on D(xi)");
  D.labels["partition"] = xi;
  return D;
}

// V(i,j): L(i)*L(j) with T = Xi when |i-j| = 1, otherwise the induced module on {1 (x) w, T (x) w}.
template <class F>
SuperModule<typename F::value_type> build_V2(const F& f, int i, int j) {
  auto N = module_L_tuple(f, Weight{i, j});
  N.labels.clear();
  N.labels["pair"] = {i, j};
  if (i == j + 1 || j == i + 1) {
    N.T = {xi_operator(f, N, 0)};
    return N;
  }
  const size_t d = N.dim;
  const auto I = la::identity(f, d);
  const auto e = f.eps();
  const auto CC = N.C[0] * N.C[1];
  auto induced = [&](const la::Mat<F>& b00, const la::Mat<F>& b11, const la::Mat<F>& b01) {
    auto m = la::zeros(f, 2 * d, 2 * d);
    m.set_block(0, 0, b00);
    m.set_block(d, d, b11);
    m.set_block(0, d, b01);
    return m;
  };
  SuperModule<typename F::value_type> V;
  V.dim = 2 * d;
  V.grading = N.grading;
  V.grading.insert(V.grading.end(), N.grading.begin(), N.grading.end());
  const auto Z = la::zeros(f, d, d);
  auto T = induced(Z, e * I, I);
  T.set_block(d, 0, I);
  V.T = {T};
  V.X = {induced(N.X[0], N.X[1], (-e) * (I - CC) * N.X[1]), induced(N.X[1], N.X[0], e * (N.X[1] + CC * N.X[0]))};
  for (const auto& x : V.X) {
    auto inv = la::inverse(f, x);
    ensure(inv.has_value(), "X is singular on the induced module");
    V.Xinv.push_back(*inv);
  }
  V.C = {induced(N.C[0], N.C[1], e * (N.C[0] - N.C[1])), induced(N.C[1], N.C[0], Z)};
  V.labels["pair"] = {i, j};
  return V;
}

// Polynomial form of the intertwiner, k 0-based:
// z^2 T + eps z X^{-1}(XY - 1) - eps z X^{-1}(XY^{-1} - 1) C_k C_{k+1}, with X = X_k, Y = X_{k+1}.
// Multiplying the resolvents into z^2 removes every inverse, so degenerate weight spaces need no special case.
template <class F>
la::Mat<F> intertwiner(const F& f, const SuperModule<typename F::value_type>& M, size_t k) {
  if (k + 1 >= M.n() || k >= M.T.size()) fail(ErrorKind::InvalidArgument, "intertwiner position out of range");
  const auto I = la::identity(f, M.dim);
  const auto &X = M.X[k], &Xi = M.Xinv[k], &Y = M.X[k + 1], &Yi = M.Xinv[k + 1];
  const auto z = X + Xi - Y - Yi;
  const auto e = f.eps();
  return z * z * M.T[k] + e * (z * Xi * (X * Y - I)) - e * (z * Xi * (X * Yi - I) * M.C[k] * M.C[k + 1]);
}

// z_k as a matrix.
template <class F>
la::Mat<F> z_operator(const SuperModule<typename F::value_type>& M, size_t k) {
  return M.X[k] + M.Xinv[k] - M.X[k + 1] - M.Xinv[k + 1];
}

// Projector onto the weight space M_j: product over positions of Lagrange factors in Y_m = X_m + X_m^{-1}.
template <class F>
la::Mat<F> weight_projector(const F& f, const SuperModule<typename F::value_type>& M, const Weight& j) {
  if (j.size() != M.n()) fail(ErrorKind::InvalidArgument, "weight length does not match the module");
  auto P = la::identity(f, M.dim);
  const auto I = la::identity(f, M.dim);
  for (size_t m = 0; m < j.size(); ++m) {
    const auto Y = M.X[m] + M.Xinv[m];
    for (int i : f.index_set()) {
      if (i == j[m]) continue;
      const auto denom = f.inv(f.qval(j[m]) - f.qval(i));
      P = P * (denom * (Y - f.qval(i) * I));
    }
  }
  return P;
}

// (T_k - Xi_k) Omega^{-1} on M_j, as a map on the whole space vanishing off M_j; k 0-based.
template <class F>
la::Mat<F> phi_hat(const F& f, const SuperModule<typename F::value_type>& D, const Weight& j, size_t k) {
  if (k + 1 >= D.n()) fail(ErrorKind::InvalidArgument, "phi_hat position out of range");
  if (!is_admissible(j, static_cast<int>(k) + 1))
    fail(ErrorKind::InvalidArgument, "s_" + std::to_string(k + 1) + " is not admissible for this weight");
  const auto om = f.omega(j[k], j[k + 1]);
  return f.inv(om) * ((D.T[k] - xi_operator(f, D, k)) * weight_projector(f, D, j));
}

// Jucys-Murphy matrices L_1..L_n of a finite module (the images of X_1..X_n).
template <class F>
std::vector<la::Mat<F>> jm_matrices(const F& f, const SuperModule<typename F::value_type>& D) {
  if (D.n() == 0 || !la::equal(f, D.X[0], la::identity(f, D.dim)))
    fail(ErrorKind::InvalidArgument, "module does not factor through the finite algebra (X_1 is not the identity)");
  return D.X;
}

}  // namespace hclab
