#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"

namespace hclab {

enum class Mode { Exact, Float };

// Order data of q: k = ord(q), h = ord(q^2), and the residue set.
struct RootData {
  int k = 0;
  int h = 0;
  bool even = false;
  std::vector<int> index_set;

  int top() const { return index_set.back(); }
  bool contains(int i) const { return i >= 0 && i <= top(); }
  // q(i) = +-2 exactly for these residues.
  bool special(int i) const { return i == 0 || (even && i == h / 2 - 1); }
};

RootData make_root_data(int k);

struct NotSquare : Error {
  NotSquare() : Error(ErrorKind::Domain, "radicand is not a square in the field") {}
};

struct GfBackend {
  using value_type = Gf;
  std::shared_ptr<GfArith> arith;
  Gf generator;

  static constexpr bool exact = true;
  Gf zero() const { return Gf(arith.get()); }
  Gf from_int(int64_t v) const { return Gf(arith.get(), v); }
  Gf inv(const Gf& a) const { return a.inv(); }
  bool is_zero(const Gf& a) const { return a.is_zero(); }
  double score(const Gf& a) const { return a.is_zero() ? 0.0 : 1.0; }
  double magnitude(const Gf& a) const { return a.is_zero() ? 0.0 : 1.0; }
  bool close(const Gf& a, const Gf& b, double) const { return a == b; }
  Gf sqrt_canonical(const Gf& a) const;
  Gf primitive_root(int k) const { return generator.pow((arith->order - 1) / k); }
};

struct ComplexBackend {
  using value_type = std::complex<double>;
  double tol = 1e-9;

  static constexpr bool exact = false;
  value_type zero() const { return 0.0; }
  value_type from_int(int64_t v) const { return static_cast<double>(v); }
  value_type inv(const value_type& a) const;
  bool is_zero(const value_type& a) const { return std::abs(a) <= tol; }
  double score(const value_type& a) const { return std::abs(a); }
  double magnitude(const value_type& a) const { return std::abs(a); }
  bool close(const value_type& a, const value_type& b, double scale) const {
    return std::abs(a - b) <= tol * std::max(1.0, scale);
  }
  value_type sqrt_canonical(const value_type& a) const { return std::sqrt(a); }
  value_type primitive_root(int k) const { return std::polar(1.0, 2.0 * M_PI / k); }
};

// An exact value paired with its complex image; every operation acts on both.
struct Dual {
  Gf x;
  std::complex<double> z;

  Dual& operator+=(const Dual& o) {
    x += o.x;
    z += o.z;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    x -= o.x;
    z -= o.z;
    return *this;
  }
  Dual& operator*=(const Dual& o) {
    x = x * o.x;
    z *= o.z;
    return *this;
  }
  Dual operator-() const { return {-x, -z}; }
  friend Dual operator+(Dual a, const Dual& b) { return a += b; }
  friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
  friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
};

struct DualBackend {
  using value_type = Dual;
  GfBackend exact_part;
  ComplexBackend float_part;

  static constexpr bool exact = true;
  Dual zero() const { return {exact_part.zero(), 0.0}; }
  Dual from_int(int64_t v) const { return {exact_part.from_int(v), static_cast<double>(v)}; }
  Dual inv(const Dual& a) const { return {exact_part.inv(a.x), float_part.inv(a.z)}; }
  bool is_zero(const Dual& a) const { return a.x.is_zero(); }
  double score(const Dual& a) const { return exact_part.score(a.x); }
  double magnitude(const Dual& a) const { return exact_part.magnitude(a.x); }
  bool close(const Dual& a, const Dual& b, double) const { return a.x == b.x; }
  Dual sqrt_canonical(const Dual& a) const {
    return {exact_part.sqrt_canonical(a.x), float_part.sqrt_canonical(a.z)};
  }
  Dual primitive_root(int k) const { return {exact_part.primitive_root(k), float_part.primitive_root(k)}; }
};

// The scalar world of one root of unity q: q, eps = q - q^{-1}, q(i), b(i), Omega scalars,
// and canonical square roots of every radicand the constructions need.
template <class B>
class HeckeField {
 public:
  using Backend = B;
  using value_type = typename B::value_type;

  HeckeField(const RootData& roots, B backend);

  const RootData& roots() const { return roots_; }
  int k() const { return roots_.k; }
  int h() const { return roots_.h; }
  bool h_even() const { return roots_.even; }
  const std::vector<int>& index_set() const { return roots_.index_set; }
  const B& backend() const { return backend_; }
  static constexpr bool exact = B::exact;

  value_type zero() const { return backend_.zero(); }
  value_type one() const { return backend_.from_int(1); }
  value_type from_int(int64_t v) const { return backend_.from_int(v); }
  value_type inv(const value_type& a) const { return backend_.inv(a); }
  bool is_zero(const value_type& a) const { return backend_.is_zero(a); }
  double score(const value_type& a) const { return backend_.score(a); }
  double magnitude(const value_type& a) const { return backend_.magnitude(a); }
  bool close(const value_type& a, const value_type& b, double scale = 1.0) const {
    return backend_.close(a, b, scale);
  }
  value_type pow(value_type a, int64_t e) const;

  value_type q() const { return q_; }
  value_type qinv() const { return qinv_; }
  value_type eps() const { return eps_; }
  value_type qval(int i) const { return qval_.at(check(i)); }
  value_type bplus(int i) const { return bplus_.at(check(i)); }
  value_type bminus(int i) const { return bminus_.at(check(i)); }
  value_type bpm(int i, int sign) const { return sign >= 0 ? bplus(i) : bminus(i); }
  value_type omega_radicand(int i, int j) const;
  value_type omega(int i, int j) const;
  bool adjacent(int i, int j) const { return is_zero(omega_radicand(i, j)); }
  value_type sqrt_neg1() const { return sqrt_neg1_; }

  // Table lookup for registered radicands, direct computation otherwise.
  value_type sqrt_canonical(const value_type& a) const;
  const std::vector<std::pair<value_type, value_type>>& sqrt_table() const { return sqrt_table_; }

 private:
  int check(int i) const {
    if (!roots_.contains(i)) fail(ErrorKind::InvalidArgument, "residue outside the index set");
    return i;
  }
  value_type register_sqrt(const value_type& a);

  RootData roots_;
  B backend_;
  value_type q_, qinv_, eps_, sqrt_neg1_;
  std::vector<value_type> qval_, bplus_, bminus_;
  std::vector<std::vector<value_type>> omega_rad_, omega_;
  std::vector<std::pair<value_type, value_type>> sqrt_table_;
};

using ExactField = HeckeField<GfBackend>;
using FloatField = HeckeField<ComplexBackend>;
using DualField = HeckeField<DualBackend>;

// Smallest odd prime > max(k, 20) not dividing k.
uint32_t default_prime(int k);

// Reads HCLAB_SEED_PRIME, which takes precedence over an explicit hint.
std::optional<uint32_t> effective_prime_hint(std::optional<uint32_t> hint);

ExactField make_exact_field(int k, std::optional<uint32_t> p_hint = std::nullopt);
FloatField make_float_field(int k);
// Pairs each exact scalar with its image under q -> exp(2 pi i/k), principal square roots.
DualField make_dual_field(const ExactField& exact);

// ---------------------------------------------------------------------------

template <class B>
HeckeField<B>::HeckeField(const RootData& roots, B backend) : roots_(roots), backend_(std::move(backend)) {
  const int k = roots_.k;
  q_ = backend_.primitive_root(k);
  if (!is_zero(pow(q_, k) - one())) fail(ErrorKind::Internal, "q^k != 1");
  for (int d = 1; d < k; ++d) {
    if (k % d == 0 && is_zero(pow(q_, d) - one())) fail(ErrorKind::Internal, "q is not a primitive root of unity");
  }
  qinv_ = inv(q_);
  eps_ = q_ - qinv_;
  const value_type qq = q_ + qinv_;
  if (is_zero(qq)) fail(ErrorKind::Domain, "q + q^{-1} vanishes");
  const value_type qq_inv = inv(qq);
  const value_type two = from_int(2), four = from_int(4);
  const value_type half = inv(two), quarter = inv(four);

  const int m = static_cast<int>(roots_.index_set.size());
  qval_.resize(m);
  for (int i = 0; i < m; ++i) {
    qval_[i] = two * (pow(q_, 2 * i + 1) + pow(qinv_, 2 * i + 1)) * qq_inv;
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (is_zero(qval_[i] - qval_[j])) fail(ErrorKind::Domain, "q(i) values are not pairwise distinct");
    }
    const bool pm2 = is_zero(qval_[i] - two) || is_zero(qval_[i] + two);
    if (pm2 != roots_.special(i)) fail(ErrorKind::Domain, "q(i) = +-2 at an unexpected residue");
  }

  // With 4 | k, -1 already has the square root q^{k/4}; using it keeps exact and float choices in step.
  if (k % 4 == 0) {
    sqrt_neg1_ = pow(q_, k / 4);
    sqrt_table_.emplace_back(-one(), sqrt_neg1_);
  } else {
    sqrt_neg1_ = register_sqrt(-one());
  }
  bplus_.resize(m);
  bminus_.resize(m);
  for (int i = 0; i < m; ++i) {
    value_type r = register_sqrt(qval_[i] * qval_[i] * quarter - one());
    bplus_[i] = qval_[i] * half + r;
    bminus_[i] = qval_[i] * half - r;
  }
  omega_rad_.assign(m, std::vector<value_type>(m, zero()));
  omega_.assign(m, std::vector<value_type>(m, zero()));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      value_type d = qval_[i] - qval_[j];
      omega_rad_[i][j] = one() - eps_ * eps_ * (qval_[i] * qval_[j] - four) * inv(d * d);
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      omega_[i][j] = omega_[j][i] = register_sqrt(omega_rad_[i][j]);
    }
  }
}

template <class B>
typename HeckeField<B>::value_type HeckeField<B>::pow(value_type a, int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  value_type r = one();
  while (e) {
    if (e & 1) r = r * a;
    a = a * a;
    e >>= 1;
  }
  return r;
}

template <class B>
typename HeckeField<B>::value_type HeckeField<B>::omega_radicand(int i, int j) const {
  check(i);
  check(j);
  if (i == j) fail(ErrorKind::InvalidArgument, "Omega scalar needs distinct residues");
  return omega_rad_[i][j];
}

template <class B>
typename HeckeField<B>::value_type HeckeField<B>::omega(int i, int j) const {
  check(i);
  check(j);
  if (i == j) fail(ErrorKind::InvalidArgument, "Omega scalar needs distinct residues");
  return omega_[i][j];
}

template <class B>
typename HeckeField<B>::value_type HeckeField<B>::register_sqrt(const value_type& a) {
  // A vanishing radicand gets the root 0 exactly; in float mode sqrt(1e-16) would leave 1e-8 behind.
  value_type r = is_zero(a) ? zero() : backend_.sqrt_canonical(a);
  sqrt_table_.emplace_back(a, r);
  return r;
}

template <class B>
typename HeckeField<B>::value_type HeckeField<B>::sqrt_canonical(const value_type& a) const {
  for (const auto& [rad, root] : sqrt_table_) {
    if (close(rad, a)) return root;
  }
  return backend_.sqrt_canonical(a);
}

}  // namespace hclab
