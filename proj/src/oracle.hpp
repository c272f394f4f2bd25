#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amodule.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "partitions.hpp"
#include "seminormal.hpp"
#include "weights.hpp"

namespace hclab {

// One named relation family. Indices in witnesses are 1-based generator positions.
struct RelationVerdict {
  std::string name;
  bool passed = true;
  size_t checks = 0;
  std::vector<int> indices;
  size_t row = 0, col = 0;
  std::string detail;
};

struct RelationReport {
  std::vector<RelationVerdict> relations;
  bool all_passed() const {
    return std::all_of(relations.begin(), relations.end(), [](const RelationVerdict& v) { return v.passed; });
  }
  const RelationVerdict* find(const std::string& name) const {
    for (const auto& v : relations)
      if (v.name == name) return &v;
    return nullptr;
  }
};

namespace detail {

// Collects checks under one relation name and keeps the first failure.
template <class F>
class RelationCollector {
 public:
  RelationCollector(const F& f, RelationReport& report, std::string name) : f_(f), report_(report) {
    RelationVerdict v;
    v.name = std::move(name);
    report_.relations.push_back(std::move(v));
    idx_ = report_.relations.size() - 1;
  }
  void check(const la::Mat<F>& lhs, const la::Mat<F>& rhs, std::vector<int> indices, const std::string& what) {
    auto& v = report_.relations[idx_];
    ++v.checks;
    if (!v.passed) return;
    auto diff = lhs.rows() == rhs.rows() && lhs.cols() == rhs.cols() ? la::first_difference(f_, lhs, rhs)
                                                                    : std::make_optional(std::make_pair(size_t{0}, size_t{0}));
    if (!diff) return;
    v.passed = false;
    v.indices = std::move(indices);
    v.row = diff->first;
    v.col = diff->second;
    v.detail = what;
  }
  void flag(bool ok, std::vector<int> indices, size_t row, size_t col, const std::string& what) {
    auto& v = report_.relations[idx_];
    ++v.checks;
    if (ok || !v.passed) return;
    v.passed = false;
    v.indices = std::move(indices);
    v.row = row;
    v.col = col;
    v.detail = what;
  }

 private:
  const F& f_;
  RelationReport& report_;
  size_t idx_;
};

// Entry (r, c) violating the parity of a homogeneous operator, if any.
template <class F>
std::optional<std::pair<size_t, size_t>> parity_violation(const F& f, const la::Mat<F>& a,
                                                          const std::vector<uint8_t>& grading, bool odd) {
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c)
      if (((grading[r] ^ grading[c]) != 0) != odd && !f.is_zero(a(r, c))) return std::make_pair(r, c);
  return std::nullopt;
}

inline int one_based(size_t k) { return static_cast<int>(k) + 1; }

}  // namespace detail

// Exact check of the defining relations; T relations only when T is present.
template <class F>
RelationReport verify_relations(const F& f, const SuperModule<typename F::value_type>& M) {
  using detail::one_based;
  RelationReport rep;
  const size_t n = M.n();
  const auto I = la::identity(f, M.dim);
  const auto e = f.eps();
  {
    detail::RelationCollector<F> c(f, rep, "shape");
    bool ok = M.grading.size() == M.dim && M.Xinv.size() == n && M.C.size() == n &&
              (M.T.empty() || M.T.size() + 1 == n);
    c.flag(ok, {}, 0, 0, "operator counts or grading length mismatch");
    if (!ok) return rep;
    auto sq = [&](const la::Mat<F>& m) { return m.rows() == M.dim && m.cols() == M.dim; };
    for (size_t j = 0; j < n; ++j) c.flag(sq(M.X[j]) && sq(M.Xinv[j]) && sq(M.C[j]), {one_based(j)}, 0, 0, "non-square operator");
    for (size_t k = 0; k < M.T.size(); ++k) c.flag(sq(M.T[k]), {one_based(k)}, 0, 0, "non-square T");
    if (!rep.all_passed()) return rep;
  }
  {
    detail::RelationCollector<F> c(f, rep, "grading");
    auto check = [&](const la::Mat<F>& a, bool odd, int j, const char* what) {
      auto bad = detail::parity_violation(f, a, M.grading, odd);
      c.flag(!bad, {j}, bad ? bad->first : 0, bad ? bad->second : 0, what);
    };
    for (size_t j = 0; j < n; ++j) {
      check(M.X[j], false, one_based(j), "X_j not even");
      check(M.Xinv[j], false, one_based(j), "Xinv_j not even");
      check(M.C[j], true, one_based(j), "C_j not odd");
    }
    for (size_t k = 0; k < M.T.size(); ++k) check(M.T[k], false, one_based(k), "T_k not even");
  }
  {
    detail::RelationCollector<F> c(f, rep, "Poly");
    for (size_t j = 0; j < n; ++j) {
      c.check(M.X[j] * M.Xinv[j], I, {one_based(j)}, "X_j Xinv_j = 1");
      c.check(M.Xinv[j] * M.X[j], I, {one_based(j)}, "Xinv_j X_j = 1");
      for (size_t l = j + 1; l < n; ++l) c.check(M.X[j] * M.X[l], M.X[l] * M.X[j], {one_based(j), one_based(l)}, "X_j X_l = X_l X_j");
    }
  }
  {
    detail::RelationCollector<F> c(f, rep, "Clifford");
    for (size_t j = 0; j < n; ++j) {
      c.check(M.C[j] * M.C[j], I, {one_based(j)}, "C_j^2 = 1");
      for (size_t l = j + 1; l < n; ++l)
        c.check(M.C[j] * M.C[l], -(M.C[l] * M.C[j]), {one_based(j), one_based(l)}, "C_j C_l = -C_l C_j");
    }
  }
  {
    detail::RelationCollector<F> c(f, rep, "XC");
    for (size_t j = 0; j < n; ++j)
      for (size_t l = 0; l < n; ++l) {
        if (j == l)
          c.check(M.X[j] * M.C[j], M.C[j] * M.Xinv[j], {one_based(j)}, "X_j C_j = C_j Xinv_j");
        else
          c.check(M.X[j] * M.C[l], M.C[l] * M.X[j], {one_based(j), one_based(l)}, "X_j C_l = C_l X_j");
      }
  }
  if (M.T.empty()) return rep;
  {
    detail::RelationCollector<F> c(f, rep, "TT");
    for (size_t k = 0; k + 1 < n; ++k) {
      const auto& T = M.T[k];
      c.check(T * T, e * T + I, {one_based(k)}, "T_k^2 = eps T_k + 1");
      for (size_t l = k + 2; l + 1 < n; ++l) c.check(T * M.T[l], M.T[l] * T, {one_based(k), one_based(l)}, "T_k T_l = T_l T_k");
      if (k + 2 < n) {
        const auto& U = M.T[k + 1];
        c.check(T * U * T, U * T * U, {one_based(k), one_based(k + 1)}, "braid");
      }
    }
  }
  {
    detail::RelationCollector<F> c(f, rep, "TX1");
    for (size_t k = 0; k + 1 < n; ++k) {
      const auto CC = M.C[k] * M.C[k + 1];
      c.check(M.T[k] * M.X[k], M.X[k + 1] * M.T[k] - e * (M.X[k + 1] + CC * M.X[k]), {one_based(k)},
              "T_k X_k = X_{k+1} T_k - eps(X_{k+1} + C_k C_{k+1} X_k)");
    }
  }
  {
    detail::RelationCollector<F> c(f, rep, "TX2");
    for (size_t k = 0; k + 1 < n; ++k)
      for (size_t j = 0; j < n; ++j) {
        if (j == k || j == k + 1) continue;
        c.check(M.T[k] * M.X[j], M.X[j] * M.T[k], {one_based(k), one_based(j)}, "T_k X_j = X_j T_k");
        c.check(M.T[k] * M.Xinv[j], M.Xinv[j] * M.T[k], {one_based(k), one_based(j)}, "T_k Xinv_j = Xinv_j T_k");
      }
  }
  {
    detail::RelationCollector<F> c(f, rep, "TX3");
    for (size_t k = 0; k + 1 < n; ++k) {
      const auto CC = M.C[k] * M.C[k + 1];
      const auto& T = M.T[k];
      c.check(T * M.Xinv[k], M.Xinv[k + 1] * T + e * (M.Xinv[k] + M.Xinv[k + 1] * CC), {one_based(k)},
              "T_k Xinv_k = Xinv_{k+1} T_k + eps(Xinv_k + Xinv_{k+1} C_k C_{k+1})");
      c.check(T * M.X[k + 1], M.X[k] * T + e * ((I - CC) * M.X[k + 1]), {one_based(k)},
              "T_k X_{k+1} = X_k T_k + eps(1 - C_k C_{k+1}) X_{k+1}");
      c.check(T * M.Xinv[k + 1], M.Xinv[k] * T - e * (M.Xinv[k] * (I - CC)), {one_based(k)},
              "T_k Xinv_{k+1} = Xinv_k T_k - eps Xinv_k (1 - C_k C_{k+1})");
    }
  }
  {
    detail::RelationCollector<F> c(f, rep, "TC");
    for (size_t k = 0; k + 1 < n; ++k) {
      const auto& T = M.T[k];
      c.check(T * M.C[k], M.C[k + 1] * T, {one_based(k)}, "T_k C_k = C_{k+1} T_k");
      c.check(T * M.C[k + 1], M.C[k] * T - e * (M.C[k] - M.C[k + 1]), {one_based(k)},
              "T_k C_{k+1} = C_k T_k - eps(C_k - C_{k+1})");
      for (size_t j = 0; j < n; ++j)
        if (j != k && j != k + 1) c.check(T * M.C[j], M.C[j] * T, {one_based(k), one_based(j)}, "T_k C_j = C_j T_k");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Linear-algebra helpers over generator actions.

namespace detail {

template <class F>
std::vector<typename F::value_type> matvec(const la::Mat<F>& a, const std::vector<typename F::value_type>& v) {
  std::vector<typename F::value_type> r(a.rows(), a.zero());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

// Row echelon basis grown one vector at a time.
template <class F>
class Echelon {
 public:
  using S = typename F::value_type;
  explicit Echelon(const F& f) : f_(f) {}

  bool add(std::vector<S> v) {
    reduce(v);
    size_t best = v.size();
    double score = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      double s = f_.score(v[i]);
      if (!f_.is_zero(v[i]) && s > score) {
        score = s;
        best = i;
        if constexpr (F::exact) break;
      }
    }
    if (best == v.size()) return false;
    auto inv = f_.inv(v[best]);
    for (auto& x : v) x = inv * x;
    rows_.push_back(std::move(v));
    pivots_.push_back(best);
    return true;
  }
  size_t rank() const { return rows_.size(); }

 private:
  void reduce(std::vector<S>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const S t = v[pivots_[r]];
      if (f_.is_zero(t)) continue;
      for (size_t i = 0; i < v.size(); ++i) v[i] -= t * rows_[r][i];
      v[pivots_[r]] = f_.zero();
    }
  }
  const F& f_;
  std::vector<std::vector<S>> rows_;
  std::vector<size_t> pivots_;
};

struct Generator {
  char kind;  // 'X', 'C' or 'T'
  size_t index;
  bool odd;
};

template <class S>
std::vector<Generator> generators(const SuperModule<S>& M) {
  std::vector<Generator> g;
  for (size_t j = 0; j < M.n(); ++j) g.push_back({'X', j, false});
  for (size_t j = 0; j < M.n(); ++j) g.push_back({'C', j, true});
  for (size_t k = 0; k < M.T.size(); ++k) g.push_back({'T', k, false});
  return g;
}

template <class S>
const Matrix<S>& generator_matrix(const SuperModule<S>& M, const Generator& g) {
  return g.kind == 'X' ? M.X[g.index] : g.kind == 'C' ? M.C[g.index] : M.T[g.index];
}

template <class F>
std::vector<typename F::value_type> column_vector(const la::Mat<F>& a, size_t c) {
  std::vector<typename F::value_type> v(a.rows(), a.zero());
  for (size_t i = 0; i < a.rows(); ++i) v[i] = a(i, c);
  return v;
}

// Spanning words from a start vector: vectors[l] = generator[gen[l]] applied to vectors[parent[l]].
template <class F>
struct CyclicSpan {
  std::vector<std::vector<typename F::value_type>> vectors;
  std::vector<long> parent, gen;
};

template <class F>
CyclicSpan<F> cyclic_span(const F& f, const SuperModule<typename F::value_type>& M,
                          const std::vector<std::vector<typename F::value_type>>& seeds) {
  CyclicSpan<F> out;
  Echelon<F> ech(f);
  const auto gens = generators(M);
  for (const auto& s : seeds)
    if (ech.add(s)) {
      out.vectors.push_back(s);
      out.parent.push_back(-1);
      out.gen.push_back(-1);
    }
  for (size_t cur = 0; cur < out.vectors.size() && ech.rank() < M.dim; ++cur) {
    for (size_t g = 0; g < gens.size() && ech.rank() < M.dim; ++g) {
      auto w = matvec<F>(generator_matrix(M, gens[g]), out.vectors[cur]);
      if (ech.add(w)) {
        out.vectors.push_back(std::move(w));
        out.parent.push_back(static_cast<long>(cur));
        out.gen.push_back(static_cast<long>(g));
      }
    }
  }
  return out;
}

}  // namespace detail

// Dimension of the submodule generated by the given columns.
template <class F>
size_t generated_dim(const F& f, const SuperModule<typename F::value_type>& M, const la::Mat<F>& vectors) {
  std::vector<std::vector<typename F::value_type>> seeds;
  for (size_t c = 0; c < vectors.cols(); ++c) seeds.push_back(detail::column_vector<F>(vectors, c));
  return detail::cyclic_span(f, M, seeds).vectors.size();
}

// ---------------------------------------------------------------------------
// Supercommutant: homogeneous f with f a = (-1)^{|f||a|} a f for every generator a.

template <class F>
struct Supercommutant {
  std::vector<la::Mat<F>> even, odd;
  size_t dim() const { return even.size() + odd.size(); }
};

namespace detail {

inline constexpr size_t kKroneckerLimit = 16;

template <class F>
std::vector<la::Mat<F>> commutant_kronecker(const F& f, const SuperModule<typename F::value_type>& M, bool odd) {
  const size_t d = M.dim;
  std::vector<std::pair<size_t, size_t>> unknowns;
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c)
      if (((M.grading[r] ^ M.grading[c]) != 0) == odd) unknowns.emplace_back(r, c);
  const auto gens = generators(M);
  la::Mat<F> K = la::zeros(f, gens.size() * d * d, unknowns.size());
  for (size_t g = 0; g < gens.size(); ++g) {
    const auto& A = generator_matrix(M, gens[g]);
    const auto sign = (odd && gens[g].odd) ? -f.one() : f.one();
    // (f A - s A f)[r][c] = sum_m f[r][m] A[m][c] - s sum_m A[r][m] f[m][c]
    for (size_t u = 0; u < unknowns.size(); ++u) {
      auto [fr, fc] = unknowns[u];
      for (size_t c = 0; c < d; ++c) K(g * d * d + fr * d + c, u) += A(fc, c);
      for (size_t r = 0; r < d; ++r) K(g * d * d + r * d + fc, u) -= sign * A(r, fr);
    }
  }
  auto N = la::nullspace(f, K);
  std::vector<la::Mat<F>> out;
  for (size_t s = 0; s < N.cols(); ++s) {
    auto m = la::zeros(f, d, d);
    for (size_t u = 0; u < unknowns.size(); ++u) m(unknowns[u].first, unknowns[u].second) = N(u, s);
    out.push_back(std::move(m));
  }
  return out;
}

// f is determined by w = f(v) when v generates M; solve for the admissible w.
template <class F>
std::vector<la::Mat<F>> commutant_cyclic(const F& f, const SuperModule<typename F::value_type>& M, size_t start,
                                         const CyclicSpan<F>& span, const la::Mat<F>& Uinv, bool odd) {
  using S = typename F::value_type;
  const size_t d = M.dim;
  const auto gens = generators(M);
  // Candidates for w: right parity, inside every X-eigenline through e_start.
  const uint8_t want = static_cast<uint8_t>(M.grading[start] ^ (odd ? 1 : 0));
  std::vector<size_t> coords;
  for (size_t i = 0; i < d; ++i)
    if (M.grading[i] == want) coords.push_back(i);
  la::Mat<F> B = la::zeros(f, d, coords.size());
  for (size_t t = 0; t < coords.size(); ++t) B(coords[t], t) = f.one();
  for (size_t j = 0; j < M.n() && B.cols() > 0; ++j) {
    const auto& X = M.X[j];
    bool eigen = true;
    for (size_t i = 0; i < d && eigen; ++i)
      if (i != start && !f.is_zero(X(i, start))) eigen = false;
    if (!eigen) continue;
    const S lambda = X(start, start);
    B = B * la::nullspace(f, (X - lambda * la::identity(f, d)) * B);
  }
  const size_t r = B.cols();
  if (r == 0) return {};
  std::vector<la::Mat<F>> Fs;
  for (size_t t = 0; t < r; ++t) {
    std::vector<std::vector<S>> img(span.vectors.size());
    img[0] = column_vector<F>(B, t);
    for (size_t l = 1; l < span.vectors.size(); ++l) {
      const auto& g = gens[span.gen[l]];
      auto v = matvec<F>(generator_matrix(M, g), img[span.parent[l]]);
      if (odd && g.odd)
        for (auto& x : v) x = -x;
      img[l] = std::move(v);
    }
    la::Mat<F> G = la::zeros(f, d, d);
    for (size_t l = 0; l < d; ++l)
      for (size_t i = 0; i < d; ++i) G(i, l) = img[l][i];
    Fs.push_back(G * Uinv);
  }
  la::Mat<F> K = la::zeros(f, gens.size() * d * d, r);
  for (size_t g = 0; g < gens.size(); ++g) {
    const auto& A = generator_matrix(M, gens[g]);
    const auto sign = (odd && gens[g].odd) ? -f.one() : f.one();
    for (size_t t = 0; t < r; ++t) {
      const auto E = Fs[t] * A - sign * (A * Fs[t]);
      for (size_t i = 0; i < d * d; ++i) K(g * d * d + i, t) = E.data()[i];
    }
  }
  auto N = la::nullspace(f, K);
  std::vector<la::Mat<F>> out;
  for (size_t s = 0; s < N.cols(); ++s) {
    auto m = la::zeros(f, d, d);
    for (size_t t = 0; t < r; ++t) m = m + N(t, s) * Fs[t];
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace detail

template <class F>
Supercommutant<F> supercommutant(const F& f, const SuperModule<typename F::value_type>& M) {
  Supercommutant<F> out;
  if (M.dim == 0) return out;
  for (size_t start = 0; start < M.dim; ++start) {
    std::vector<typename F::value_type> e(M.dim, f.zero());
    e[start] = f.one();
    auto span = detail::cyclic_span(f, M, {e});
    if (span.vectors.size() < M.dim) continue;
    la::Mat<F> U = la::zeros(f, M.dim, M.dim);
    for (size_t l = 0; l < M.dim; ++l)
      for (size_t i = 0; i < M.dim; ++i) U(i, l) = span.vectors[l][i];
    auto Uinv = la::inverse(f, U);
    ensure(Uinv.has_value(), "spanning words are dependent");
    out.even = detail::commutant_cyclic(f, M, start, span, *Uinv, false);
    out.odd = detail::commutant_cyclic(f, M, start, span, *Uinv, true);
    return out;
  }
  if (M.dim > detail::kKroneckerLimit)
    fail(ErrorKind::Guard, "no standard basis vector generates the module and it is too large for the direct solve");
  out.even = detail::commutant_kronecker(f, M, false);
  out.odd = detail::commutant_kronecker(f, M, true);
  return out;
}

template <class F>
size_t supercommutant_dim(const F& f, const SuperModule<typename F::value_type>& M) {
  return supercommutant(f, M).dim();
}

// ---------------------------------------------------------------------------
// Weights.

template <class F>
using WeightBases = std::map<Weight, la::Mat<F>>;

// Simultaneous generalized eigenspaces of Y_k = X_k + Xinv_k, keyed by residue tuples.
template <class F>
WeightBases<F> weight_space_bases(const F& f, const SuperModule<typename F::value_type>& M) {
  const size_t n = M.n(), d = M.dim;
  const auto I = la::identity(f, d);
  std::vector<std::map<int, la::Mat<F>>> gen(n);
  for (size_t k = 0; k < n; ++k) {
    const auto Y = M.X[k] + M.Xinv[k];
    size_t total = 0;
    for (int i : f.index_set()) {
      auto K = la::nullspace(f, la::power(f, Y - f.qval(i) * I, d));
      total += K.cols();
      if (K.cols()) gen[k].emplace(i, std::move(K));
    }
    if (total != d)
      fail(ErrorKind::Domain, "X_" + std::to_string(k + 1) + " + X_" + std::to_string(k + 1) +
                                  "^{-1} has eigenvalues outside {q(i)}: the module is not integral");
  }
  WeightBases<F> out;
  Weight cur;
  auto rec = [&](auto&& self, const la::Mat<F>& space) -> void {
    const size_t k = cur.size();
    if (k == n) {
      out.emplace(cur, space);
      return;
    }
    for (const auto& [i, K] : gen[k]) {
      auto next = la::intersect(f, space, K);
      if (next.cols() == 0) continue;
      cur.push_back(i);
      self(self, next);
      cur.pop_back();
    }
  };
  if (n == 0) return out;
  rec(rec, I);
  return out;
}

template <class F>
std::map<Weight, size_t> weight_spaces(const F& f, const SuperModule<typename F::value_type>& M) {
  std::map<Weight, size_t> out;
  for (const auto& [w, B] : weight_space_bases(f, M)) out[w] = B.cols();
  return out;
}

// Every X_k diagonalizable: eigenspace dimensions over the candidates b(i)^{+-1} sum to dim.
template <class F>
bool completely_splittable(const F& f, const SuperModule<typename F::value_type>& M) {
  std::vector<typename F::value_type> cands;
  for (int i : f.index_set())
    for (int s : {1, -1}) {
      auto b = f.bpm(i, s);
      if (std::none_of(cands.begin(), cands.end(), [&](const auto& c) { return f.close(c, b); })) cands.push_back(b);
    }
  const auto I = la::identity(f, M.dim);
  for (size_t k = 0; k < M.n(); ++k) {
    size_t total = 0;
    for (const auto& b : cands) total += M.dim - la::rank(f, M.X[k] - b * I);
    if (total != M.dim) return false;
  }
  return true;
}

// Largest m such that some weight ends with m copies of i.
template <class F>
int epsilon_i(const F& f, const SuperModule<typename F::value_type>& M, int i) {
  int best = 0;
  for (const auto& [w, mult] : weight_spaces(f, M)) {
    int m = 0;
    for (auto it = w.rbegin(); it != w.rend() && *it == i; ++it) ++m;
    best = std::max(best, m);
  }
  return best;
}

inline size_t l_tuple_dim(const Weight& w, const RootData& roots) {
  size_t g = 0;
  for (int x : w) g += roots.special(x) ? 1 : 0;
  return size_t{1} << (w.size() - g / 2);
}

// ---------------------------------------------------------------------------
// Irreducibility certificate for completely splittable modules.

struct Certificate {
  bool completely_splittable = false;
  size_t commutant_dim = 0;
  bool a = false, b = false, c = false;
  std::string b_failure, c_failure;
  bool passed() const { return completely_splittable && a && b && c; }
  // Any nonzero submodule of a completely splittable module is X-stable, so it contains a common
  // eigenvector and hence a full weight space (weight spaces are irreducible over the Clifford-Laurent
  // subalgebra); (a) and (b) together therefore certify irreducibility, (c) is a cheap extra test.
  static constexpr const char* kArgument =
      "completely splittable: every nonzero submodule contains a full weight space; (a)+(b) suffice";
};

template <class F>
Certificate irreducible_certificate(const F& f, const SuperModule<typename F::value_type>& M) {
  Certificate cert;
  cert.completely_splittable = completely_splittable(f, M);
  cert.commutant_dim = supercommutant_dim(f, M);
  cert.a = cert.commutant_dim == 1 || cert.commutant_dim == 2;
  cert.b = true;
  for (const auto& [w, B] : weight_space_bases(f, M)) {
    const size_t expect = l_tuple_dim(w, f.roots());
    if (B.cols() != expect) {
      cert.b = false;
      cert.b_failure = "weight space of dimension " + std::to_string(B.cols()) + ", expected " + std::to_string(expect);
      break;
    }
    if (generated_dim(f, M, B) != M.dim) {
      cert.b = false;
      cert.b_failure = "a weight space generates a proper submodule";
      break;
    }
  }
  cert.c = true;
  for (size_t i = 0; i < M.dim; ++i) {
    auto e = la::zeros(f, M.dim, 1);
    e(i, 0) = f.one();
    if (generated_dim(f, M, e) != M.dim) {
      cert.c = false;
      cert.c_failure = "basis vector " + std::to_string(i) + " generates a proper submodule";
      break;
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Intertwiner and Jucys-Murphy identities.

// The square of the intertwiner with either sign between the two correction terms:
// z^2 (z^2 - eps^2 (X^{-1}Y^{-1}(XY-1)^2 + sign X^{-1}Y(XY^{-1}-1)^2)), X = X_k, Y = X_{k+1}.
template <class F>
la::Mat<F> intertwiner_square_rhs(const F& f, const SuperModule<typename F::value_type>& M, size_t k, int sign) {
  const auto I = la::identity(f, M.dim);
  const auto &X = M.X[k], &Xi = M.Xinv[k], &Y = M.X[k + 1], &Yi = M.Xinv[k + 1];
  const auto z = z_operator<F>(M, k);
  const auto z2 = z * z;
  const auto a = X * Y - I, b = X * Yi - I;
  auto corr = Xi * Yi * a * a;
  const auto other = Xi * Y * b * b;
  corr = sign > 0 ? corr + other : corr - other;
  return z2 * (z2 - (f.eps() * f.eps()) * corr);
}

template <class F>
RelationReport verify_intertwiners(const F& f, const SuperModule<typename F::value_type>& M) {
  using detail::one_based;
  RelationReport rep;
  const size_t n = M.n();
  std::vector<la::Mat<F>> phi;
  for (size_t k = 0; k + 1 < n; ++k) phi.push_back(intertwiner(f, M, k));
  {
    detail::RelationCollector<F> c(f, rep, "Sqinter");
    for (size_t k = 0; k + 1 < n; ++k)
      c.check(phi[k] * phi[k], intertwiner_square_rhs(f, M, k, +1), {one_based(k)}, "Phi_k^2 = z^4 - eps^2 z^2 (A + B)");
  }
  {
    detail::RelationCollector<F> c(f, rep, "Xinter");
    for (size_t k = 0; k + 1 < n; ++k)
      for (size_t l = 0; l < n; ++l) {
        const size_t to = l == k ? k + 1 : l == k + 1 ? k : l;
        c.check(phi[k] * M.X[l], M.X[to] * phi[k], {one_based(k), one_based(l)}, "Phi_k X_l = X_{s_k(l)} Phi_k");
        c.check(phi[k] * M.Xinv[l], M.Xinv[to] * phi[k], {one_based(k), one_based(l)},
                "Phi_k Xinv_l = Xinv_{s_k(l)} Phi_k");
      }
  }
  {
    detail::RelationCollector<F> c(f, rep, "Cinter");
    for (size_t k = 0; k + 1 < n; ++k)
      for (size_t l = 0; l < n; ++l) {
        const size_t to = l == k ? k + 1 : l == k + 1 ? k : l;
        c.check(phi[k] * M.C[l], M.C[to] * phi[k], {one_based(k), one_based(l)}, "Phi_k C_l = C_{s_k(l)} Phi_k");
      }
  }
  {
    detail::RelationCollector<F> c(f, rep, "Braidinter");
    for (size_t k = 0; k + 1 < n; ++k) {
      for (size_t j = k + 2; j + 1 < n; ++j)
        c.check(phi[j] * phi[k], phi[k] * phi[j], {one_based(j), one_based(k)}, "Phi_j Phi_k = Phi_k Phi_j");
      if (k + 2 < n)
        c.check(phi[k] * phi[k + 1] * phi[k], phi[k + 1] * phi[k] * phi[k + 1], {one_based(k), one_based(k + 1)},
                "Phi braid");
    }
  }
  return rep;
}

// Phi-hat on every weight space and admissible position of a completely splittable module.
template <class F>
RelationReport verify_phi_hat(const F& f, const SuperModule<typename F::value_type>& D) {
  using detail::one_based;
  RelationReport rep;
  detail::RelationCollector<F> sq(f, rep, "PhiHat-square");
  detail::RelationCollector<F> cc(f, rep, "PhiHat-C");
  detail::RelationCollector<F> xx(f, rep, "PhiHat-X");
  for (const auto& [w, B] : weight_space_bases(f, D)) {
    const auto P = weight_projector(f, D, w);
    for (size_t k = 0; k + 1 < D.n(); ++k) {
      if (!is_admissible(w, static_cast<int>(k) + 1)) continue;
      Weight moved = w;
      std::swap(moved[k], moved[k + 1]);
      const auto there = phi_hat(f, D, w, k);
      const auto back = phi_hat(f, D, moved, k);
      sq.check(back * there, P, {one_based(k)}, "Phi-hat_k^2 = 1 on M_j");
      cc.check(there * D.C[k], D.C[k + 1] * there, {one_based(k)}, "Phi-hat_k C_k = C_{k+1} Phi-hat_k");
      cc.check(there * D.C[k + 1], D.C[k] * there, {one_based(k)}, "Phi-hat_k C_{k+1} = C_k Phi-hat_k");
      xx.check(there * D.X[k], D.X[k + 1] * there, {one_based(k)}, "Phi-hat_k X_k = X_{k+1} Phi-hat_k");
    }
  }
  return rep;
}

template <class F>
RelationReport verify_jm(const F& f, const SuperModule<typename F::value_type>& D) {
  using detail::one_based;
  RelationReport rep;
  const auto L = jm_matrices(f, D);
  detail::RelationCollector<F> c(f, rep, "JM");
  c.check(L[0], la::identity(f, D.dim), {1}, "L_1 = 1");
  for (size_t k = 0; k + 1 < D.n(); ++k)
    c.check(L[k + 1], (D.T[k] + f.eps() * (D.C[k] * D.C[k + 1])) * L[k] * D.T[k], {one_based(k)},
            "L_{k+1} = (T_k + eps C_k C_{k+1}) L_k T_k");
  return rep;
}

// ---------------------------------------------------------------------------
// Tensor-then-split oracle: L(i_1) x ... x L(i_n) split by non-scalar even commutant elements.

namespace detail {

template <class F>
SuperModule<typename F::value_type> restrict_to(const F& f, const SuperModule<typename F::value_type>& M,
                                                const la::Mat<F>& B, const std::vector<uint8_t>& grading) {
  SuperModule<typename F::value_type> r;
  r.dim = B.cols();
  r.grading = grading;
  auto image = [&](const la::Mat<F>& A) {
    auto s = la::solve(f, B, A * B);
    ensure(s.has_value(), "subspace is not invariant");
    return *s;
  };
  for (size_t j = 0; j < M.n(); ++j) {
    r.X.push_back(image(M.X[j]));
    r.Xinv.push_back(image(M.Xinv[j]));
    r.C.push_back(image(M.C[j]));
  }
  for (const auto& T : M.T) r.T.push_back(image(T));
  r.labels = M.labels;
  return r;
}

}  // namespace detail

template <class F>
SuperModule<typename F::value_type> tensor_split(const F& f, const Weight& seq) {
  if (seq.empty() || seq.size() > 3) fail(ErrorKind::Guard, "the tensor-split oracle is limited to n <= 3");
  auto M = module_L(f, seq[0]);
  for (size_t j = 1; j < seq.size(); ++j) M = box_tensor(f, M, module_L(f, seq[j]));
  M.labels["weight"] = seq;
  for (;;) {
    auto comm = supercommutant(f, M);
    const auto I = la::identity(f, M.dim);
    const la::Mat<F>* E = nullptr;
    for (const auto& m : comm.even) {
      bool scalar = true;
      for (size_t i = 0; i < M.dim && scalar; ++i)
        for (size_t j = 0; j < M.dim && scalar; ++j)
          if (!f.close(m(i, j), i == j ? m(0, 0) : f.zero(), 1.0)) scalar = false;
      if (!scalar) {
        E = &m;
        break;
      }
    }
    if (!E) return M;
    // Minimal polynomial of degree 2 on the commutant: E^2 = t E - s.
    const auto E2 = (*E) * (*E);
    la::Mat<F> A = la::zeros(f, M.dim * M.dim, 2), rhs = la::zeros(f, M.dim * M.dim, 1);
    for (size_t i = 0; i < M.dim * M.dim; ++i) {
      A(i, 0) = E->data()[i];
      A(i, 1) = -I.data()[i];
      rhs(i, 0) = E2.data()[i];
    }
    auto ts = la::solve(f, A, rhs);
    if (!ts) fail(ErrorKind::Internal, "even commutant element has no quadratic minimal polynomial");
    const auto t = (*ts)(0, 0), s = (*ts)(1, 0);
    const auto half = f.inv(f.from_int(2));
    const auto root = f.sqrt_canonical(t * t - f.from_int(4) * s);
    const auto lambda = half * (t + root);
    auto K = la::nullspace(f, *E - lambda * I);
    la::Mat<F> B = la::zeros(f, M.dim, 0);
    std::vector<uint8_t> grading;
    for (uint8_t par : {uint8_t{0}, uint8_t{1}}) {
      auto P = la::zeros(f, M.dim, M.dim);
      for (size_t i = 0; i < M.dim; ++i)
        if (M.grading[i] == par) P(i, i) = f.one();
      auto part = la::column_space(f, P * K);
      B = la::hconcat(f, B, part);
      grading.insert(grading.end(), part.cols(), par);
    }
    if (B.cols() == 0 || B.cols() == M.dim) fail(ErrorKind::Internal, "commutant eigenspace does not split the module");
    M = detail::restrict_to(f, M, B, grading);
  }
}

// Same dimension and the same eigenvalue multiplicities of every X_k.
template <class F>
bool same_x_spectrum(const F& f, const SuperModule<typename F::value_type>& A, const SuperModule<typename F::value_type>& B) {
  if (A.dim != B.dim || A.n() != B.n()) return false;
  const auto I = la::identity(f, A.dim);
  for (size_t k = 0; k < A.n(); ++k)
    for (int i : f.index_set())
      for (int s : {1, -1}) {
        const auto b = f.bpm(i, s);
        if (la::rank(f, A.X[k] - b * I) != la::rank(f, B.X[k] - b * I)) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// Dimension sums and classification cross-checks (non-template parts in oracle.cpp).

struct ClassEntry {
  Partition xi;
  Family family = Family::CSP;
  int gamma0 = 0;
  uint64_t count = 0;  // #Std^s_h, #Std^s or #Phi_2^{-1}
  uint64_t dim = 0;
  bool type_q = false;
  Weight representative;
};

// Formula dimensions and types for every xi in CSP_h(n).
std::vector<ClassEntry> classify(int h, int n, bool force = false);

enum class SumVerdict { Equal, StrictlyLess, Greater };

struct SumCheck {
  int h = 0, n = 0;
  std::vector<ClassEntry> entries;
  uint64_t sum = 0;     // sum of dim^2, halved for type Q
  uint64_t target = 0;  // 2^n n!
  SumVerdict verdict = SumVerdict::Equal;
  bool conclusive = false;
  std::string note;
};

// Uses the given dimensions (constructed ones, typically) when supplied, formula dimensions otherwise.
SumCheck dimension_sum_check(int h, int n, const std::function<uint64_t(const Partition&)>& dim_of = nullptr);

const char* to_string(SumVerdict v);

struct CrossCheck {
  int h = 0, n = 0;
  size_t weights = 0;
  size_t classes = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

CrossCheck cross_check_classification(int h, int n, bool force = false);

}  // namespace hclab
