#pragma once

#include <map>
#include <vector>

#include "partitions.hpp"

namespace hclab {

using Weight = std::vector<int>;
// One-line notation, 0-based: perm[j] = tau(j).
using Perm = std::vector<int>;

// h = 0 stands for generic q (no root-of-unity constraints).
inline constexpr int kGenericH = 0;

struct OrbitEntry {
  Weight seq;
  Perm perm;
};

enum class SplitClass { P1, P2 };

int top_residue(int h);
bool entries_in_range(const Weight& seq, int h);

// k is 1-based: compares positions k and k+1.
bool is_admissible(const Weight& seq, int k);
bool valid_affine(const Weight& seq, int h);
bool valid_finite(const Weight& seq, int h);

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);  // (a o b)(j) = a(b(j))
Perm inverse(const Perm& p);
// tau . seq: position m carries seq[tau^{-1}(m)].
Weight act(const Perm& tau, const Weight& seq);

// Breadth-first closure under admissible transpositions, seq first.
std::vector<OrbitEntry> orbit_with_words(const Weight& seq, int h, size_t cap = 1000000);

std::vector<Weight> enumerate_finite_weights(int n, int h, bool force = false);

SplitClass split_class(const Weight& seq, int h);
Weight canonical_p2(const Weight& seq, int h);
// The sequence (tau_h^m, 0..g1-1, 0..g2-1, ...) attached to xi = ((h/2)^m, g).
Weight csp2_sequence(const Partition& xi, int h);
Partition phi_map(const Weight& seq, int h);

// Representative residue sequence of xi used for constructions.
Weight representative_weight(const Partition& xi, int h);

}  // namespace hclab
