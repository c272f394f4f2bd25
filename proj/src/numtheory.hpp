#pragma once

#include <cstdint>
#include <vector>

namespace hclab::nt {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);
bool is_prime(uint64_t n);

// Distinct prime factors, ascending.
std::vector<uint64_t> prime_factors(uint64_t n);

// Smallest e >= 1 with p^e = 1 (mod k); requires gcd(p, k) = 1.
int multiplicative_order(uint64_t p, uint64_t k);

// Returns 0 when p^e does not fit below 2^62.
uint64_t checked_pow(uint64_t p, int e);

bool is_perfect_square(uint64_t n);

// Bounded search for a^2 + c*b^2 = n with a, b >= 0.
bool has_solution_a2_plus_cb2(uint64_t n, uint64_t c);

}  // namespace hclab::nt
