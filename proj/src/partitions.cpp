#include "partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "errors.hpp"

namespace hclab {

std::vector<int> ShiftedTableau::reading_word() const {
  std::vector<int> w;
  for (const auto& r : rows) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::vector<Cell> ShiftedTableau::cells_by_value() const {
  int n = size(shape);
  std::vector<Cell> out(n);
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < rows[r].size(); ++c) {
      int v = rows[r][c];
      if (v < 1 || v > n) fail(ErrorKind::InvalidArgument, "tableau entry out of range");
      out[v - 1] = Cell{static_cast<int>(r) + 1, static_cast<int>(r + c) + 1};
    }
  return out;
}

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

bool is_partition(const Partition& p) {
  for (size_t r = 0; r < p.size(); ++r) {
    if (p[r] <= 0) return false;
    if (r + 1 < p.size() && p[r] < p[r + 1]) return false;
  }
  return true;
}

bool is_strict(const Partition& p) {
  if (!is_partition(p)) return false;
  for (size_t r = 0; r + 1 < p.size(); ++r)
    if (p[r] == p[r + 1]) return false;
  return true;
}

bool is_k_strict(const Partition& p, int k) {
  if (!is_partition(p)) return false;
  for (size_t r = 0; r + 1 < p.size(); ++r)
    if (p[r] == p[r + 1] && p[r] % k != 0) return false;
  return true;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

uint64_t factorial(int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
  return f;
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& cur, const std::function<bool(const Partition&)>& keep,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    if (keep(cur)) out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, keep, out);
    cur.pop_back();
  }
}

std::vector<Partition> all_partitions(int n, const std::function<bool(const Partition&)>& keep) {
  std::vector<Partition> out;
  Partition cur;
  if (n < 0) return out;
  partitions_rec(n, n, cur, keep, out);
  return out;
}

}  // namespace

std::vector<Partition> strict_partitions(int n) {
  return all_partitions(n, [](const Partition& p) { return is_strict(p); });
}

std::vector<Partition> k_strict_partitions(int n, int k) {
  return all_partitions(n, [k](const Partition& p) { return is_k_strict(p, k); });
}

bool is_restricted(const Partition& p, int k, int kprime) {
  if (!is_k_strict(p, k)) fail(ErrorKind::InvalidArgument, "partition " + to_string(p) + " is not k-strict");
  for (size_t r = 0; r < p.size(); ++r) {
    int next = r + 1 < p.size() ? p[r + 1] : 0;
    int d = p[r] - next;
    if (p[r] % k == 0 ? d >= kprime : d > kprime) return false;
  }
  return true;
}

bool in_csp(const Partition& xi, int h) {
  if (xi.empty()) return false;
  if (h % 2 == 0) return in_csp1(xi, h) || in_csp2(xi, h);
  if (!is_strict(xi)) return false;
  if (xi[0] <= (h + 1) / 2) return true;
  int second = xi.size() > 1 ? xi[1] : 0;
  for (int u = 1; u <= (h - 3) / 2; ++u)
    if (xi[0] == h - u && second <= u) return true;
  return false;
}

bool in_csp1(const Partition& xi, int h) {
  return h % 2 == 0 && !xi.empty() && is_strict(xi) && xi[0] <= h / 2;
}

bool in_csp2(const Partition& xi, int h) {
  if (h % 2 != 0 || !is_partition(xi)) return false;
  const int half = h / 2;
  size_t m = 0;
  while (m < xi.size() && xi[m] == half) ++m;
  if (m < 2 || xi[0] != half) return false;
  Partition gamma(xi.begin() + m, xi.end());
  return is_strict(gamma) && (gamma.empty() || gamma[0] <= half - 1);
}

std::vector<Partition> classification_index(int n, int h, Family family) {
  if (h < 3) fail(ErrorKind::InvalidArgument, "h must be at least 3");
  if (n <= 0) return {};
  const bool even = h % 2 == 0;
  switch (family) {
    case Family::RP: {
      if (even) fail(ErrorKind::InvalidArgument, "RP requires odd h");
      auto all = k_strict_partitions(n, h);
      std::vector<Partition> out;
      for (auto& p : all)
        if (is_restricted(p, h, h)) out.push_back(p);
      return out;
    }
    case Family::DRP: {
      if (!even) fail(ErrorKind::InvalidArgument, "DRP requires even h");
      auto all = k_strict_partitions(n, h / 2);
      std::vector<Partition> out;
      for (auto& p : all)
        if (is_restricted(p, h / 2, h)) out.push_back(p);
      return out;
    }
    case Family::CSP1:
    case Family::CSP2:
      if (!even) fail(ErrorKind::InvalidArgument, "CSP1/CSP2 require even h");
      [[fallthrough]];
    case Family::CSP: {
      auto all = all_partitions(n, [](const Partition&) { return true; });
      std::vector<Partition> out;
      for (auto& p : all) {
        bool keep = family == Family::CSP ? in_csp(p, h) : family == Family::CSP1 ? in_csp1(p, h) : in_csp2(p, h);
        if (keep) out.push_back(p);
      }
      return out;
    }
  }
  return {};
}

bool in_shifted_diagram(const Partition& p, Cell c) {
  if (c.row < 1 || c.row > static_cast<int>(p.size())) return false;
  return c.col >= c.row && c.col <= c.row + p[c.row - 1] - 1;
}

std::vector<Cell> shifted_cells(const Partition& p) {
  std::vector<Cell> out;
  for (int r = 1; r <= static_cast<int>(p.size()); ++r)
    for (int c = r; c <= r + p[r - 1] - 1; ++c) out.push_back({r, c});
  return out;
}

int shifted_hook(const Partition& p, Cell c) {
  if (!is_strict(p)) fail(ErrorKind::InvalidArgument, "shifted hooks need a strict partition");
  if (!in_shifted_diagram(p, c)) fail(ErrorKind::InvalidArgument, "cell outside the shifted diagram");
  const int ell = static_cast<int>(p.size());
  int arm = c.row + p[c.row - 1] - 1 - c.col;
  int leg = 0;
  for (int r = c.row + 1; r <= ell; ++r)
    if (in_shifted_diagram(p, {r, c.col})) ++leg;
  int hook = arm + leg + 1;
  // (j,j) lies in the hook: add the whole of row j+1.
  if (c.col <= ell && c.col + 1 <= ell) hook += p[c.col];
  return hook;
}

uint64_t count_std_shifted(const Partition& p) {
  unsigned __int128 num = factorial(size(p));
  unsigned __int128 den = 1;
  for (const Cell& c : shifted_cells(p)) den *= static_cast<unsigned>(shifted_hook(p, c));
  if (num % den != 0) fail(ErrorKind::Internal, "hook product does not divide n!");
  return static_cast<uint64_t>(num / den);
}

bool has_std_h_filter(const Partition& xi, int h) {
  if (h % 2 == 0 || xi.size() < 2) return false;
  for (int u = 1; u <= (h - 3) / 2; ++u)
    if (xi[0] == h - u && xi[1] == u) return true;
  return false;
}

namespace {

void fill_rec(const Partition& shape, std::vector<int>& filled, std::vector<std::vector<int>>& rows, int next, int n,
              std::vector<ShiftedTableau>& out) {
  if (next > n) {
    out.push_back({shape, rows});
    return;
  }
  for (size_t r = 0; r < shape.size(); ++r) {
    if (filled[r] >= shape[r]) continue;
    if (r > 0 && filled[r - 1] < filled[r] + 2) continue;
    rows[r].push_back(next);
    ++filled[r];
    fill_rec(shape, filled, rows, next + 1, n, out);
    --filled[r];
    rows[r].pop_back();
  }
}

}  // namespace

std::vector<ShiftedTableau> std_tableaux(const Partition& xi, std::optional<int> h) {
  if (!is_strict(xi) && !xi.empty()) fail(ErrorKind::InvalidArgument, "standard shifted tableaux need a strict shape");
  std::vector<ShiftedTableau> out;
  std::vector<int> filled(xi.size(), 0);
  std::vector<std::vector<int>> rows(xi.size());
  fill_rec(xi, filled, rows, 1, size(xi), out);
  if (h && has_std_h_filter(xi, *h)) {
    std::erase_if(out, [&](const ShiftedTableau& t) {
      return !(t.at({2, xi[1] + 1}) > t.at({1, xi[0]}));
    });
  }
  std::sort(out.begin(), out.end(),
            [](const ShiftedTableau& a, const ShiftedTableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

bool is_standard(const ShiftedTableau& t) {
  if (!is_strict(t.shape) && !t.shape.empty()) return false;
  if (t.rows.size() != t.shape.size()) return false;
  const int n = size(t.shape);
  std::vector<int> seen(n + 1, 0);
  for (size_t r = 0; r < t.rows.size(); ++r) {
    if (static_cast<int>(t.rows[r].size()) != t.shape[r]) return false;
    for (size_t c = 0; c < t.rows[r].size(); ++c) {
      int v = t.rows[r][c];
      if (v < 1 || v > n || seen[v]++) return false;
      if (c > 0 && t.rows[r][c - 1] >= v) return false;
      if (r > 0) {
        // Cell above (r, r+c) in 1-based terms is row r-1 at offset c+1.
        if (t.rows[r - 1].size() <= c + 1 || t.rows[r - 1][c + 1] >= v) return false;
      }
    }
  }
  return true;
}

int residue_of_offset(int c, int h) {
  if (c < 0) fail(ErrorKind::InvalidArgument, "negative column offset");
  int t = c % h;
  return std::min(t, h - 1 - t);
}

int residue(Cell c, int h) { return residue_of_offset(c.col - c.row, h); }

std::vector<int> residue_sequence(const ShiftedTableau& t, int h) {
  if (!is_standard(t)) fail(ErrorKind::InvalidArgument, "residue sequence of a non-standard tableau");
  std::vector<int> out;
  for (const Cell& c : t.cells_by_value()) out.push_back(residue(c, h));
  return out;
}

int gamma0(const Partition& xi, int h) {
  int g = static_cast<int>(xi.size());
  if (h % 2 == 0) g += static_cast<int>(std::count(xi.begin(), xi.end(), h / 2));
  return g;
}

bool bh_parity_odd(const Partition& p, int m) {
  int c = 0;
  for (int x : p)
    if (x % m != 0) ++c;
  return c % 2 == 1;
}

}  // namespace hclab
