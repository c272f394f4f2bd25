#include "gf.hpp"

#include "errors.hpp"
#include "numtheory.hpp"

namespace hclab {

std::vector<uint32_t> GfArith::modulus() const {
  std::vector<uint32_t> m(low.begin(), low.begin() + e);
  m.push_back(1);
  return m;
}

Gf::Gf(const GfArith* a, int64_t v) : a_(a) {
  int64_t p = a->p;
  c_[0] = static_cast<uint32_t>(((v % p) + p) % p);
}

bool Gf::is_zero() const {
  for (int j = 0; j < a_->e; ++j)
    if (c_[j]) return false;
  return true;
}

bool Gf::is_one() const {
  if (c_[0] != 1) return false;
  for (int j = 1; j < a_->e; ++j)
    if (c_[j]) return false;
  return true;
}

Gf& Gf::operator+=(const Gf& o) {
  const uint32_t p = a_->p;
  for (int j = 0; j < a_->e; ++j) {
    uint32_t s = c_[j] + o.c_[j];
    c_[j] = s >= p ? s - p : s;
  }
  return *this;
}

Gf& Gf::operator-=(const Gf& o) {
  const uint32_t p = a_->p;
  for (int j = 0; j < a_->e; ++j) {
    uint32_t s = c_[j] + p - o.c_[j];
    c_[j] = s >= p ? s - p : s;
  }
  return *this;
}

Gf Gf::operator-() const {
  Gf r(a_);
  const uint32_t p = a_->p;
  for (int j = 0; j < a_->e; ++j) r.c_[j] = c_[j] ? p - c_[j] : 0;
  return r;
}

Gf operator*(const Gf& x, const Gf& y) {
  const GfArith& f = *x.a_;
  const int e = f.e;
  const uint64_t p = f.p;
  Gf r(x.a_);
  if (e == 1) {
    r.c_[0] = static_cast<uint32_t>(static_cast<uint64_t>(x.c_[0]) * y.c_[0] % p);
    return r;
  }
  uint64_t acc[2 * kMaxDegree] = {};
  for (int i = 0; i < e; ++i) {
    if (!x.c_[i]) continue;
    const uint64_t xi = x.c_[i];
    for (int j = 0; j < e; ++j) acc[i + j] += xi * y.c_[j];
  }
  for (int d = 2 * e - 2; d >= e; --d) {
    uint64_t t = acc[d] % p;
    if (!t) continue;
    for (int j = 0; j < e; ++j) acc[d - e + j] += t * (p - f.low[j]);
  }
  for (int j = 0; j < e; ++j) r.c_[j] = static_cast<uint32_t>(acc[j] % p);
  return r;
}

Gf Gf::pow(uint64_t e) const {
  Gf r(a_, 1);
  Gf b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Gf Gf::inv() const {
  if (is_zero()) fail(ErrorKind::Domain, "inverse of zero in finite field");
  return pow(a_->order - 2);
}

namespace {

using Poly = std::vector<uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& f, uint32_t p) {
  trim(a);
  const size_t df = f.size() - 1;
  const uint64_t lead_inv = nt::powmod(f.back(), p - 2, p);
  while (a.size() > df) {
    uint64_t t = a.back() * lead_inv % p;
    size_t shift = a.size() - 1 - df;
    for (size_t j = 0; j <= df; ++j) {
      a[shift + j] = static_cast<uint32_t>((a[shift + j] + (p - t) * f[j] % p) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  return poly_mod(r, f, p);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& f, uint32_t p) {
  Poly r{1};
  base = poly_mod(base, f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t j = 0; j < b.size(); ++j) a[j] = (a[j] + p - b[j]) % p;
  trim(a);
  return a;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<uint32_t>& f, uint32_t p) {
  const int e = static_cast<int>(f.size()) - 1;
  if (e <= 0) return false;
  if (e == 1) return true;
  const Poly x{0, 1};
  std::vector<Poly> frob(e + 1);  // frob[i] = x^(p^i) mod f
  frob[0] = x;
  for (int i = 1; i <= e; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
  if (poly_sub(frob[e], x, p) != Poly{}) return false;
  for (uint64_t r : nt::prime_factors(e)) {
    Poly g = poly_gcd(f, poly_sub(frob[e / r], x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::shared_ptr<GfArith> make_gf(uint32_t p, int e) {
  if (e < 1 || e > kMaxDegree) fail(ErrorKind::Domain, "extension degree out of supported range");
  uint64_t order = nt::checked_pow(p, e);
  if (order == 0) fail(ErrorKind::Domain, "field too large for 64-bit exponent arithmetic");
  auto f = std::make_shared<GfArith>();
  f->p = p;
  f->e = e;
  f->order = order;
  // Candidates in lexicographic order of (c0, ..., c_{e-1}); c0 = 0 is divisible by x.
  const uint64_t block = order / p;
  for (uint64_t idx = (e > 1 ? block : 0); idx < order; ++idx) {
    Poly cand(e + 1, 0);
    uint64_t v = idx;
    for (int j = e - 1; j >= 0; --j) {
      cand[j] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    cand[e] = 1;
    if (is_irreducible_mod_p(cand, p)) {
      for (int j = 0; j < e; ++j) f->low[j] = cand[j];
      return f;
    }
  }
  fail(ErrorKind::Internal, "no irreducible polynomial found");
}

Gf smallest_generator(const GfArith& f) {
  const uint64_t n = f.order - 1;
  const auto primes = nt::prime_factors(n);
  for (uint64_t idx = 1; idx < f.order; ++idx) {
    Gf g(&f);
    uint64_t v = idx;
    for (int j = f.e - 1; j >= 0; --j) {
      g.c_[j] = static_cast<uint32_t>(v % f.p);
      v /= f.p;
    }
    bool gen = true;
    for (uint64_t r : primes) {
      if (g.pow(n / r).is_one()) {
        gen = false;
        break;
      }
    }
    if (gen) return g;
  }
  fail(ErrorKind::Internal, "no multiplicative generator found");
}

bool is_square(const Gf& a) {
  if (a.is_zero()) return true;
  return a.pow((a.arith()->order - 1) / 2).is_one();
}

bool gf_sqrt(const Gf& a, const Gf& nonresidue, Gf& root) {
  if (a.is_zero()) {
    root = a;
    return true;
  }
  if (!is_square(a)) return false;
  const GfArith* f = a.arith();
  uint64_t t = f->order - 1;
  int s = 0;
  while ((t & 1) == 0) {
    t >>= 1;
    ++s;
  }
  Gf z = nonresidue.pow(t);
  Gf x = a.pow((t + 1) / 2);
  Gf b = a.pow(t);
  int m = s;
  while (!b.is_one()) {
    int i = 0;
    Gf bb = b;
    while (!bb.is_one()) {
      bb = bb * bb;
      ++i;
    }
    Gf w = z;
    for (int j = 0; j < m - i - 1; ++j) w = w * w;
    x = x * w;
    z = w * w;
    b = b * z;
    m = i;
  }
  root = x;
  return true;
}

}  // namespace hclab
