#include "crystal.hpp"

#include <algorithm>

#include "errors.hpp"
#include "numtheory.hpp"
#include "weights.hpp"

namespace hclab {

namespace {

int strictness(int h) { return h % 2 ? h : h / 2; }

// lambda with row r (1-based, possibly one past the end) set to len; nullopt if not a partition.
std::optional<Partition> with_row(const Partition& lambda, int r, int len) {
  Partition p = lambda;
  if (r == static_cast<int>(p.size()) + 1) p.push_back(0);
  if (r < 1 || r > static_cast<int>(p.size()) || len < 0) return std::nullopt;
  p[r - 1] = len;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (!is_partition(p)) return std::nullopt;
  return p;
}

bool family_ok(const std::optional<Partition>& p, int h) { return p && in_crystal_family(*p, h); }

void require_family(const Partition& lambda, int h) {
  if (h < 3) fail(ErrorKind::InvalidArgument, "h must be at least 3");
  if (!in_crystal_family(lambda, h))
    fail(ErrorKind::InvalidArgument, "partition " + to_string(lambda) + " is not " + std::to_string(strictness(h)) + "-strict");
}

}  // namespace

bool in_crystal_family(const Partition& lambda, int h) { return lambda.empty() || is_k_strict(lambda, strictness(h)); }

int crystal_residue(Cell c, int h) { return residue_of_offset(c.col - 1, h); }

std::vector<NodeMark> marked_nodes(const Partition& lambda, int i, int h) {
  require_family(lambda, h);
  if (i < 0 || i > top_residue(h)) fail(ErrorKind::InvalidArgument, "residue outside the index set");
  const int ell = static_cast<int>(lambda.size());
  std::vector<NodeMark> out;
  for (int r = ell + 1; r >= 1; --r) {
    const int len = r <= ell ? lambda[r - 1] : 0;
    auto res = [&](int s) { return crystal_residue({r, s}, h); };
    // Removable: the last node directly, or the node before it together with the last one.
    if (len >= 2 && res(len - 1) == i && res(len) == i && family_ok(with_row(lambda, r, len - 1), h) &&
        family_ok(with_row(lambda, r, len - 2), h))
      out.push_back({{r, len - 1}, i, NodeMark::Kind::Removable, true});
    if (len >= 1 && res(len) == i && family_ok(with_row(lambda, r, len - 1), h))
      out.push_back({{r, len}, i, NodeMark::Kind::Removable, false});
    // Addable: the next node directly, or the one after it together with the next one.
    if (res(len + 1) == i && family_ok(with_row(lambda, r, len + 1), h))
      out.push_back({{r, len + 1}, i, NodeMark::Kind::Addable, false});
    if (res(len + 1) == i && res(len + 2) == i && family_ok(with_row(lambda, r, len + 1), h) &&
        family_ok(with_row(lambda, r, len + 2), h))
      out.push_back({{r, len + 2}, i, NodeMark::Kind::Addable, true});
  }
  return out;
}

std::string signature(const Partition& lambda, int i, int h) {
  std::string s;
  for (const auto& m : marked_nodes(lambda, i, h)) s += m.kind == NodeMark::Kind::Addable ? '+' : '-';
  return s;
}

std::string reduce_signature(const std::string& sig) {
  std::string st;
  for (char ch : sig) {
    if (ch == '-' && !st.empty() && st.back() == '+')
      st.pop_back();
    else
      st.push_back(ch);
  }
  return st;
}

namespace {

// Marks surviving the reduction, in signature order.
std::vector<NodeMark> reduced_marks(const Partition& lambda, int i, int h) {
  const auto marks = marked_nodes(lambda, i, h);
  std::vector<size_t> st;
  for (size_t k = 0; k < marks.size(); ++k) {
    if (marks[k].kind == NodeMark::Kind::Removable && !st.empty() && marks[st.back()].kind == NodeMark::Kind::Addable)
      st.pop_back();
    else
      st.push_back(k);
  }
  std::vector<NodeMark> out;
  for (size_t k : st) out.push_back(marks[k]);
  return out;
}

}  // namespace

std::pair<int, int> eps_phi(const Partition& lambda, int i, int h) {
  int e = 0, p = 0;
  for (const auto& m : reduced_marks(lambda, i, h)) (m.kind == NodeMark::Kind::Addable ? p : e)++;
  return {e, p};
}

std::optional<Cell> good_node(const Partition& lambda, int i, int h) {
  std::optional<Cell> best;
  for (const auto& m : reduced_marks(lambda, i, h))
    if (m.kind == NodeMark::Kind::Removable) best = m.cell;
  return best;
}

std::optional<Cell> cogood_node(const Partition& lambda, int i, int h) {
  for (const auto& m : reduced_marks(lambda, i, h))
    if (m.kind == NodeMark::Kind::Addable) return m.cell;
  return std::nullopt;
}

Partition apply_cogood(const Partition& lambda, int i, int h) {
  auto c = cogood_node(lambda, i, h);
  if (!c) fail(ErrorKind::InvalidArgument, "no " + std::to_string(i) + "-cogood node: phi_i is zero");
  const int len = c->row <= static_cast<int>(lambda.size()) ? lambda[c->row - 1] : 0;
  if (c->col != len + 1) fail(ErrorKind::Internal, "cogood node is not adjacent to its row");
  auto p = with_row(lambda, c->row, len + 1);
  ensure(p.has_value(), "adding the cogood node leaves the partitions");
  return *p;
}

bool is_semisimple(int n, int h) {
  if (h < 3) fail(ErrorKind::InvalidArgument, "h must be at least 3");
  return h % 2 ? h > n : h > 2 * n;
}

namespace {

std::pair<Partition, std::string> witness_shape(int r, int h) {
  Partition lam;
  auto rep = [&](int part, int count) { lam.insert(lam.end(), std::max(count, 0), part); };
  if (h % 2) {
    const int a = r / h, b = r % h;
    if (b != h - 1 && b != h - 2) {
      rep(h, a - 1);
      lam.push_back(h - 1);
      lam.push_back(b + 1);
      return {lam, "odd h, b not in {h-1, h-2}"};
    }
    if (b == h - 1) {
      rep(h, a);
      lam.push_back(h - 1);
      return {lam, "odd h, b = h-1"};
    }
    if (h > 3) {
      rep(h, a - 1);
      lam.insert(lam.end(), {h - 1, h - 2, 1});
      return {lam, "odd h, b = h-2, h > 3"};
    }
    lam.push_back(5);
    rep(3, a - 2);
    lam.push_back(2);
    return {lam, "h = 3, b = 1, a >= 2"};
  }
  const int m = h / 2, a = r / m, b = r % m;
  if (b != m - 1 && b != m - 2) {
    rep(m, a - 1);
    lam.push_back(m - 1);
    lam.push_back(b + 1);
    return {lam, "even h, b not in {h/2-1, h/2-2}"};
  }
  if (b == m - 1) {
    rep(m, a);
    lam.push_back(m - 1);
    return {lam, "even h, b = h/2-1"};
  }
  if (a >= 2) {
    lam.push_back(h - 1);
    rep(m, a - 2);
    lam.push_back(m - 1);
    return {lam, "even h, b = h/2-2, a >= 2"};
  }
  lam.insert(lam.end(), {m - 1, m - 2, 1});
  return {lam, "even h, b = h/2-2, a = 1, h > 6"};
}

}  // namespace

Witness nonsemisimple_witness(int r, int h) {
  if (h < 3) fail(ErrorKind::InvalidArgument, "h must be at least 3");
  if (is_semisimple(r, h)) fail(ErrorKind::Domain, "parameters lie in the semisimple range");
  if (is_exceptional_pair(r, h))
    fail(ErrorKind::Domain, "(r, h) = (" + std::to_string(r) + ", " + std::to_string(h) +
                                ") is exceptional: the next algebra is shown non-semisimple by a dimension count "
                                "whose integer equation has no solution");
  auto [lam, rule] = witness_shape(r, h);
  while (!lam.empty() && lam.back() == 0) lam.pop_back();
  if (size(lam) != r || !in_crystal_family(lam, h))
    fail(ErrorKind::Internal, "witness table produced " + to_string(lam) + " for r = " + std::to_string(r));
  for (int i : {0, top_residue(h)}) {
    const int phi = eps_phi(lam, i, h).second;
    if (phi >= 2) return {lam, i, phi, rule};
  }
  fail(ErrorKind::Internal, "witness " + to_string(lam) + " has phi_i < 2 for both candidate residues");
}

bool is_exceptional_pair(int r, int h) { return (r == 4 && h == 3) || (r == 4 && h == 6) || (r == 2 && h == 4); }

std::vector<Feasibility> exceptional_feasibility(int r, int h) {
  if (r == 2 && h == 4) return {{"a^2 = 80", nt::is_perfect_square(80)}};
  if (r == 4 && h == 3) return {{"a^2 + 2b^2 = 7680", nt::has_solution_a2_plus_cb2(7680, 2)}};
  if (r == 4 && h == 6) return {{"a^2 + 2b^2 = 6656", nt::has_solution_a2_plus_cb2(6656, 2)}};
  fail(ErrorKind::InvalidArgument, "not an exceptional pair");
}

}  // namespace hclab
