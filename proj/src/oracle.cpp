#include "oracle.hpp"

#include <set>

namespace hclab {

namespace {

int special_count(const Weight& w, int h) {
  int g = 0;
  for (int x : w) g += (x == 0 || (h % 2 == 0 && x == h / 2 - 1)) ? 1 : 0;
  return g;
}

// Sizes of the fibers of phi_map over the second even-h family.
std::map<Partition, uint64_t> p2_fiber_sizes(int h, int n, bool force) {
  std::map<Partition, uint64_t> out;
  for (const auto& w : enumerate_finite_weights(n, h, force))
    if (split_class(w, h) == SplitClass::P2) ++out[phi_map(w, h)];
  return out;
}

// All residue sequences attached to xi by the classification.
std::vector<Weight> class_sequences(const Partition& xi, int h) {
  std::vector<Weight> out;
  if (h % 2 == 0 && in_csp2(xi, h)) {
    for (const auto& e : orbit_with_words(csp2_sequence(xi, h), h)) out.push_back(e.seq);
  } else {
    for (const auto& t : std_tableaux(xi, h % 2 ? std::optional<int>(h) : std::nullopt))
      out.push_back(residue_sequence(t, h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ClassEntry> classify(int h, int n, bool force) {
  if (n > 7 && !force) fail(ErrorKind::Guard, "n > 7 needs the force override");
  std::vector<ClassEntry> out;
  if (n <= 0) return out;
  const bool even = h % 2 == 0;
  std::map<Partition, uint64_t> fibers;
  if (even) fibers = p2_fiber_sizes(h, n, force);
  for (const auto& xi : classification_index(n, h, Family::CSP)) {
    ClassEntry e;
    e.xi = xi;
    e.representative = representative_weight(xi, h);
    e.gamma0 = special_count(e.representative, h);
    if (!even) {
      e.family = Family::CSP;
      e.count = std_tableaux(xi, h).size();
    } else if (in_csp2(xi, h)) {
      e.family = Family::CSP2;
      e.count = fibers[xi];
    } else {
      e.family = Family::CSP1;
      e.count = count_std_shifted(xi);
    }
    e.type_q = e.gamma0 % 2 == 1;
    e.dim = (uint64_t{1} << (n - e.gamma0 / 2)) * e.count;
    out.push_back(std::move(e));
  }
  return out;
}

const char* to_string(SumVerdict v) {
  switch (v) {
    case SumVerdict::Equal:
      return "EQUAL";
    case SumVerdict::StrictlyLess:
      return "STRICTLY-LESS";
    case SumVerdict::Greater:
      return "GREATER";
  }
  return "?";
}

SumCheck dimension_sum_check(int h, int n, const std::function<uint64_t(const Partition&)>& dim_of) {
  SumCheck r;
  r.h = h;
  r.n = n;
  r.entries = classify(h, n);
  for (auto& e : r.entries) {
    if (dim_of) e.dim = dim_of(e.xi);
    const uint64_t sq = e.dim * e.dim;
    r.sum += e.type_q ? sq / 2 : sq;
  }
  r.target = (uint64_t{1} << n) * factorial(n);
  r.verdict = r.sum == r.target ? SumVerdict::Equal : r.sum < r.target ? SumVerdict::StrictlyLess : SumVerdict::Greater;
  // At and above these points every irreducible module is completely splittable.
  r.conclusive = h % 2 ? h >= n : h >= 2 * n;
  if (r.verdict == SumVerdict::Greater)
    r.note = "sum exceeds the algebra dimension: the dimensions are inconsistent";
  else if (!r.conclusive)
    r.note = "inequality not conclusive: irreducibles outside the completely splittable family are not counted";
  else if (r.verdict == SumVerdict::Equal)
    r.note = "every irreducible is completely splittable and the squares add up: consistent with semisimplicity";
  else
    r.note = "every irreducible is completely splittable and the squares fall short: not semisimple";
  return r;
}

CrossCheck cross_check_classification(int h, int n, bool force) {
  CrossCheck r;
  r.h = h;
  r.n = n;
  if (n <= 0) return r;
  const auto weights = enumerate_finite_weights(n, h, force);
  r.weights = weights.size();
  std::map<Weight, Partition> owner;
  std::map<Partition, size_t> class_size;
  for (const auto& xi : classification_index(n, h, Family::CSP)) {
    ++r.classes;
    const auto seqs = class_sequences(xi, h);
    class_size[xi] = seqs.size();
    for (const auto& s : seqs) {
      if (!owner.emplace(s, xi).second)
        r.mismatches.push_back("sequence " + to_string(s) + " belongs to both " + to_string(owner[s]) + " and " + to_string(xi));
    }
  }
  std::set<Weight> enumerated(weights.begin(), weights.end());
  for (const auto& w : weights)
    if (!owner.count(w)) r.mismatches.push_back("weight " + to_string(w) + " is not a classification sequence");
  for (const auto& [s, xi] : owner)
    if (!enumerated.count(s)) r.mismatches.push_back("sequence " + to_string(s) + " of " + to_string(xi) + " is not enumerated");
  for (const auto& w : weights) {
    auto it = owner.find(w);
    if (it == owner.end()) continue;
    const Partition xi = phi_map(w, h);
    if (xi != it->second)
      r.mismatches.push_back("phi_map" + to_string(w) + " = " + to_string(xi) + ", expected " + to_string(it->second));
    const size_t orbit = orbit_with_words(w, h).size();
    if (orbit != class_size[it->second])
      r.mismatches.push_back("orbit of " + to_string(w) + " has " + std::to_string(orbit) + " elements, fiber has " +
                             std::to_string(class_size[it->second]));
  }
  return r;
}

}  // namespace hclab
