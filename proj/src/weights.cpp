#include "weights.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "errors.hpp"

namespace hclab {

int top_residue(int h) {
  if (h == kGenericH) return -1;
  return h % 2 ? (h - 1) / 2 : h / 2 - 1;
}

bool entries_in_range(const Weight& seq, int h) {
  for (int x : seq) {
    if (x < 0) return false;
    if (h != kGenericH && x > top_residue(h)) return false;
  }
  return true;
}

bool is_admissible(const Weight& seq, int k) {
  if (k < 1 || k >= static_cast<int>(seq.size())) fail(ErrorKind::InvalidArgument, "admissibility position out of range");
  int a = seq[k - 1], b = seq[k];
  return a != b + 1 && a != b - 1;
}

namespace {

bool occurs_between(const Weight& s, int lo, int hi, int v) {
  for (int p = lo + 1; p < hi; ++p)
    if (s[p] == v) return true;
  return false;
}

// Nested pairs r_j < ... < q < ... < t_j with values u + j up to the peak (h-1)/2.
bool chain_to_peak(const Weight& s, int lo, int hi, int u, int j, int h) {
  const int last = (h - 3) / 2 - u;
  const int v = u + j;
  std::vector<int> pos;
  for (int p = lo; p <= hi; ++p)
    if (s[p] == v) pos.push_back(p);
  for (size_t a = 0; a + 1 < pos.size(); ++a) {
    int r = pos[a], t = pos[a + 1];
    if (j == last) {
      if (occurs_between(s, r, t, (h - 1) / 2)) return true;
    } else if (chain_to_peak(s, r + 1, t - 1, u, j + 1, h)) {
      return true;
    }
  }
  return false;
}

// Staircase of positions k_{a;b}: level 1 holds the occurrences of h/2-1 in [lo, hi];
// level a+1 has exactly one h/2-a-1 between consecutive level-a positions.
bool staircase(const Weight& s, int lo, int hi, int h) {
  const int half = h / 2;
  std::vector<int> level;
  for (int p = lo; p <= hi; ++p)
    if (s[p] == half - 1) level.push_back(p);
  const int m = static_cast<int>(level.size());
  for (int a = 1; a < std::min(m, half); ++a) {
    const int v = half - a - 1;
    std::vector<int> next;
    for (size_t b = 0; b + 1 < level.size(); ++b) {
      int found = -1, count = 0;
      for (int p = level[b]; p <= level[b + 1]; ++p)
        if (s[p] == v) {
          found = p;
          ++count;
        }
      if (count != 1) return false;
      next.push_back(found);
    }
    for (size_t b = 0; b + 1 < next.size(); ++b)
      if (occurs_between(s, next[b], next[b + 1], v)) return false;
    level = std::move(next);
  }
  return true;
}

bool pair_condition(const Weight& s, int k, int l, int h) {
  const int u = s[k];
  if (u == 0) return occurs_between(s, k, l, 1);
  const bool both = occurs_between(s, k, l, u - 1) && occurs_between(s, k, l, u + 1);
  if (h == kGenericH) return both;
  if (h % 2 == 1) return both || chain_to_peak(s, k, l, u, 0, h);
  if (u < h / 2 - 1) return both;
  return occurs_between(s, k, l, u - 1) && staircase(s, k, l, h);
}

bool finite_extension_ok(const Weight& s, size_t k) {
  if (k == 0) return s[0] == 0;
  for (size_t j = 0; j < k; ++j)
    if (s[j] == s[k] - 1 || s[j] == s[k] + 1) return true;
  return false;
}

// Checks only the conditions involving the last position (prefix already valid).
bool extension_valid_affine(const Weight& s, int h) {
  const int l = static_cast<int>(s.size()) - 1;
  if (l >= 1 && s[l] == s[l - 1]) return false;
  if (h != kGenericH && h % 2 == 1 && s[l] == top_residue(h)) {
    for (int p = 0; p < l; ++p)
      if (s[p] == s[l]) return false;
  }
  for (int k = 0; k < l; ++k)
    if (s[k] == s[l] && !pair_condition(s, k, l, h)) return false;
  return true;
}

}  // namespace

bool valid_affine(const Weight& seq, int h) {
  if (seq.empty() || !entries_in_range(seq, h)) return false;
  Weight prefix;
  for (int x : seq) {
    prefix.push_back(x);
    if (!extension_valid_affine(prefix, h)) return false;
  }
  return true;
}

bool valid_finite(const Weight& seq, int h) {
  if (!valid_affine(seq, h)) return false;
  for (size_t k = 0; k < seq.size(); ++k)
    if (!finite_extension_ok(seq, k)) return false;
  return true;
}

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t j = 0; j < b.size(); ++j) r[j] = a[b[j]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t j = 0; j < p.size(); ++j) r[p[j]] = static_cast<int>(j);
  return r;
}

Weight act(const Perm& tau, const Weight& seq) {
  Weight r(seq.size());
  for (size_t j = 0; j < seq.size(); ++j) r[tau[j]] = seq[j];
  return r;
}

std::vector<OrbitEntry> orbit_with_words(const Weight& seq, int h, size_t cap) {
  if (!valid_affine(seq, h)) fail(ErrorKind::InvalidArgument, "orbit of an invalid weight");
  const int n = static_cast<int>(seq.size());
  std::map<Weight, size_t> index;
  std::vector<OrbitEntry> out{{seq, identity_perm(n)}};
  index[seq] = 0;
  for (size_t cur = 0; cur < out.size(); ++cur) {
    for (int k = 1; k < n; ++k) {
      const Weight w = out[cur].seq;
      if (!is_admissible(w, k)) continue;
      Perm sk = identity_perm(n);
      std::swap(sk[k - 1], sk[k]);
      Perm tau = compose(sk, out[cur].perm);
      Weight next = act(sk, w);
      auto it = index.find(next);
      if (it != index.end()) {
        if (out[it->second].perm != tau)
          fail(ErrorKind::Internal, "two transposition words reach one weight with different permutations");
        continue;
      }
      if (out.size() >= cap) fail(ErrorKind::Guard, "orbit exceeds the state cap");
      index[next] = out.size();
      out.push_back({std::move(next), std::move(tau)});
    }
  }
  return out;
}

std::vector<Weight> enumerate_finite_weights(int n, int h, bool force) {
  if (n < 1) return {};
  if (n > 7 && !force) fail(ErrorKind::Guard, "n > 7 needs the force override");
  if (h == kGenericH) fail(ErrorKind::InvalidArgument, "finite weights need a finite h");
  const int top = top_residue(h);
  std::vector<Weight> out;
  Weight cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= top; ++x) {
      cur.push_back(x);
      if (finite_extension_ok(cur, cur.size() - 1) && extension_valid_affine(cur, h)) self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

SplitClass split_class(const Weight& seq, int h) {
  if (h == kGenericH || h % 2 == 1) fail(ErrorKind::InvalidArgument, "the P1/P2 split needs even h");
  if (!valid_affine(seq, h)) fail(ErrorKind::InvalidArgument, "split class of an invalid weight");
  return std::count(seq.begin(), seq.end(), h / 2 - 1) >= 2 ? SplitClass::P2 : SplitClass::P1;
}

Weight canonical_p2(const Weight& seq, int h) {
  if (split_class(seq, h) != SplitClass::P2) fail(ErrorKind::InvalidArgument, "canonical form needs a P2 weight");
  const int half = h / 2;
  const int m = static_cast<int>(std::count(seq.begin(), seq.end(), half - 1));
  const size_t prefix = static_cast<size_t>(m) * half;
  if (seq.size() < prefix) fail(ErrorKind::Internal, "P2 weight shorter than m*h/2");
  std::optional<Weight> best;
  for (const auto& e : orbit_with_words(seq, h)) {
    bool ok = true;
    for (size_t p = 0; p < prefix && ok; ++p) ok = e.seq[p] == static_cast<int>(p % half);
    for (size_t p = prefix; p < e.seq.size() && ok; ++p) ok = e.seq[p] <= half - 2;
    if (ok && (!best || e.seq < *best)) best = e.seq;
  }
  if (!best) fail(ErrorKind::Internal, "no canonical P2 form in the orbit");
  return *best;
}

Weight csp2_sequence(const Partition& xi, int h) {
  if (!in_csp2(xi, h)) fail(ErrorKind::InvalidArgument, "partition is not in the second even-h family");
  const int half = h / 2;
  Weight w;
  for (int part : xi) {
    int len = part == half ? half : part;
    for (int v = 0; v < len; ++v) w.push_back(v);
  }
  return w;
}

namespace {

Partition match_p1(const Weight& seq, int h) {
  const int n = static_cast<int>(seq.size());
  std::set<Weight> orbit;
  for (auto& e : orbit_with_words(seq, h)) orbit.insert(e.seq);
  const bool odd = h % 2 == 1;
  auto candidates = classification_index(n, h, odd ? Family::CSP : Family::CSP1);
  std::vector<Partition> hits;
  for (const auto& xi : candidates) {
    auto tabs = std_tableaux(xi, odd ? std::optional<int>(h) : std::nullopt);
    if (tabs.empty()) continue;
    if (orbit.count(residue_sequence(tabs.front(), h))) hits.push_back(xi);
  }
  if (hits.size() != 1) fail(ErrorKind::Internal, "weight class does not match exactly one partition");
  return hits.front();
}

}  // namespace

Partition phi_map(const Weight& seq, int h) {
  if (!valid_finite(seq, h)) fail(ErrorKind::InvalidArgument, "phi_map needs a finite weight");
  if (h % 2 == 1 || split_class(seq, h) == SplitClass::P1) return match_p1(seq, h);
  const int half = h / 2;
  const int m = static_cast<int>(std::count(seq.begin(), seq.end(), half - 1));
  Weight c = canonical_p2(seq, h);
  Weight tail(c.begin() + static_cast<long>(m) * half, c.end());
  Partition xi(m, half);
  if (!tail.empty()) {
    if (!valid_finite(tail, h)) fail(ErrorKind::Internal, "canonical tail is not a finite weight");
    Partition gamma = match_p1(tail, h);
    if (gamma[0] > half - 1) fail(ErrorKind::Internal, "canonical tail maps outside gamma_1 <= h/2-1");
    xi.insert(xi.end(), gamma.begin(), gamma.end());
  }
  return xi;
}

Weight representative_weight(const Partition& xi, int h) {
  if (!in_csp(xi, h)) fail(ErrorKind::InvalidArgument, "partition " + to_string(xi) + " is not completely splittable");
  if (h % 2 == 0 && in_csp2(xi, h)) return canonical_p2(csp2_sequence(xi, h), h);
  auto tabs = std_tableaux(xi, h % 2 == 1 ? std::optional<int>(h) : std::nullopt);
  return residue_sequence(tabs.front(), h);
}

}  // namespace hclab
