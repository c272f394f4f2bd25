#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hclab {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

struct Cell {
  int row = 0;  // 1-based
  int col = 0;  // 1-based
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Standard filling of a shifted diagram: rows[r][c] is the entry of cell (r+1, r+1+c).
struct ShiftedTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  int at(Cell c) const { return rows.at(c.row - 1).at(c.col - c.row); }
  std::vector<int> reading_word() const;
  // Cell holding each value 1..n.
  std::vector<Cell> cells_by_value() const;
};

enum class Family { RP, DRP, CSP, CSP1, CSP2 };

int size(const Partition& p);
bool is_partition(const Partition& p);
bool is_strict(const Partition& p);
bool is_k_strict(const Partition& p, int k);
std::string to_string(const Partition& p);
uint64_t factorial(int n);

// All strict partitions of n, lexicographically descending.
std::vector<Partition> strict_partitions(int n);
// All k-strict partitions of n, lexicographically descending.
std::vector<Partition> k_strict_partitions(int n, int k);

bool is_restricted(const Partition& p, int k, int kprime);
bool in_csp(const Partition& xi, int h);
bool in_csp1(const Partition& xi, int h);
bool in_csp2(const Partition& xi, int h);
std::vector<Partition> classification_index(int n, int h, Family family);

bool in_shifted_diagram(const Partition& p, Cell c);
std::vector<Cell> shifted_cells(const Partition& p);
int shifted_hook(const Partition& p, Cell c);
uint64_t count_std_shifted(const Partition& p);

// True when the h-restricted filter T(2, xi2+1) > T(1, xi1) applies to xi.
bool has_std_h_filter(const Partition& xi, int h);
// h = nullopt: all standard fillings; otherwise the h-restricted set for odd h.
std::vector<ShiftedTableau> std_tableaux(const Partition& xi, std::optional<int> h = std::nullopt);
bool is_standard(const ShiftedTableau& t);

int residue_of_offset(int c, int h);
int residue(Cell c, int h);
std::vector<int> residue_sequence(const ShiftedTableau& t, int h);
int gamma0(const Partition& xi, int h);
// True when #{r : m does not divide lambda_r} is odd.
bool bh_parity_odd(const Partition& p, int m);

}  // namespace hclab
