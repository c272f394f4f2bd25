#include "field.hpp"

#include <cstdlib>
#include <string>

#include "numtheory.hpp"

namespace hclab {

RootData make_root_data(int k) {
  if (k < 3) fail(ErrorKind::InvalidArgument, "k must be at least 3");
  if (k % 4 == 2)
    fail(ErrorKind::Domain,
         "k = 2 (mod 4) is not supported: replacing q by -q reduces this case to odd k = " +
             std::to_string(k / 2));
  if (k == 4) fail(ErrorKind::Domain, "k = 4 gives q + q^{-1} = 0, so q(i) is undefined");
  RootData r;
  r.k = k;
  r.even = (k % 2 == 0);
  r.h = r.even ? k / 2 : k;
  const int top = r.even ? r.h / 2 - 1 : (r.h - 1) / 2;
  for (int i = 0; i <= top; ++i) r.index_set.push_back(i);
  return r;
}

Gf GfBackend::sqrt_canonical(const Gf& a) const {
  Gf r;
  if (!gf_sqrt(a, generator, r)) throw NotSquare();
  Gf s = -r;
  return s < r ? s : r;
}

ComplexBackend::value_type ComplexBackend::inv(const value_type& a) const {
  if (std::abs(a) == 0.0) fail(ErrorKind::Domain, "inverse of zero");
  return 1.0 / a;
}

uint32_t default_prime(int k) {
  uint32_t p = static_cast<uint32_t>(std::max(k, 20)) + 1;
  while (!(p % 2 == 1 && nt::is_prime(p) && k % p != 0)) ++p;
  return p;
}

std::optional<uint32_t> effective_prime_hint(std::optional<uint32_t> hint) {
  if (const char* env = std::getenv("HCLAB_SEED_PRIME"); env && *env) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0 || v > 0xFFFFFFFFul)
      fail(ErrorKind::InvalidArgument, "HCLAB_SEED_PRIME is not a valid integer");
    return static_cast<uint32_t>(v);
  }
  return hint;
}

ExactField make_exact_field(int k, std::optional<uint32_t> p_hint) {
  RootData roots = make_root_data(k);
  uint32_t p;
  if (p_hint) {
    p = *p_hint;
    if (p == 2) fail(ErrorKind::InvalidArgument, "the characteristic must be odd");
    if (!nt::is_prime(p)) fail(ErrorKind::InvalidArgument, "prime hint " + std::to_string(p) + " is not prime");
    if (k % p == 0) fail(ErrorKind::InvalidArgument, "prime hint divides k");
    if (p >= 65536) fail(ErrorKind::Domain, "prime must be below 65536");
  } else {
    p = default_prime(k);
  }
  int e = nt::multiplicative_order(p, k);
  for (;;) {
    if (e > kMaxDegree) fail(ErrorKind::Domain, "extension degree exceeds the supported maximum");
    auto arith = make_gf(p, e);
    GfBackend b{arith, smallest_generator(*arith)};
    try {
      return ExactField(roots, b);
    } catch (const NotSquare&) {
      e *= 2;
    }
  }
}

FloatField make_float_field(int k) { return FloatField(make_root_data(k), ComplexBackend{}); }

DualField make_dual_field(const ExactField& exact) {
  return DualField(exact.roots(), DualBackend{exact.backend(), ComplexBackend{}});
}

}  // namespace hclab
