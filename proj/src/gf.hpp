#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

namespace hclab {

inline constexpr int kMaxDegree = 16;

// Arithmetic data of F_{p^e} = F_p[x]/(x^e + low_{e-1}x^{e-1} + ... + low_0).
struct GfArith {
  uint32_t p = 0;
  int e = 0;
  std::array<uint32_t, kMaxDegree> low{};
  uint64_t order = 0;  // p^e

  std::vector<uint32_t> modulus() const;  // e+1 coefficients, low degree first
};

// Element of F_{p^e}; coefficients are always fully reduced.
class Gf {
 public:
  Gf() = default;
  explicit Gf(const GfArith* a) : a_(a) {}
  Gf(const GfArith* a, int64_t v);

  const GfArith* arith() const { return a_; }
  uint32_t coeff(int j) const { return c_[j]; }
  void set_coeff(int j, uint32_t v) { c_[j] = v % a_->p; }
  std::vector<uint32_t> coeffs() const { return {c_.begin(), c_.begin() + a_->e}; }

  bool is_zero() const;
  bool is_one() const;

  Gf& operator+=(const Gf& o);
  Gf& operator-=(const Gf& o);
  Gf& operator*=(const Gf& o) { return *this = *this * o; }
  Gf operator-() const;
  friend Gf operator+(Gf x, const Gf& y) { return x += y; }
  friend Gf operator-(Gf x, const Gf& y) { return x -= y; }
  friend Gf operator*(const Gf& x, const Gf& y);
  friend bool operator==(const Gf& x, const Gf& y) { return x.c_ == y.c_; }
  friend bool operator!=(const Gf& x, const Gf& y) { return !(x == y); }
  // Lexicographic on (c0, c1, ...), the order used for every canonical choice.
  friend bool operator<(const Gf& x, const Gf& y) { return x.c_ < y.c_; }

  Gf pow(uint64_t e) const;
  Gf inv() const;

  const GfArith* a_ = nullptr;
  std::array<uint32_t, kMaxDegree> c_{};
};

// Builds F_{p^e} with the lexicographically smallest monic irreducible modulus.
std::shared_ptr<GfArith> make_gf(uint32_t p, int e);

// Lexicographically smallest generator of the multiplicative group.
Gf smallest_generator(const GfArith& f);

bool is_square(const Gf& a);

// Some square root (Tonelli-Shanks with the given non-residue), or false.
bool gf_sqrt(const Gf& a, const Gf& nonresidue, Gf& root);

// Polynomial helpers over F_p (coefficients low degree first).
bool is_irreducible_mod_p(const std::vector<uint32_t>& f, uint32_t p);

}  // namespace hclab
