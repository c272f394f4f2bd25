#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partitions.hpp"

namespace hclab {

// Crystal combinatorics on ordinary (unshifted) Young diagrams: h-strict partitions for odd h,
// h/2-strict partitions for even h. Residues depend on the column only.

struct NodeMark {
  enum class Kind { Addable, Removable };
  Cell cell;
  int residue = 0;
  Kind kind = Kind::Addable;
  // True when the node qualifies only through the two-cell clause.
  bool paired = false;
};

bool in_crystal_family(const Partition& lambda, int h);
int crystal_residue(Cell c, int h);

// i-addable and i-removable nodes in signature order: rows bottom to top, columns left to right.
std::vector<NodeMark> marked_nodes(const Partition& lambda, int i, int h);

std::string signature(const Partition& lambda, int i, int h);
// Erases neighbouring "+-" pairs until none remain.
std::string reduce_signature(const std::string& sig);

// (epsilon_i, phi_i): the numbers of '-' and '+' in the reduced signature.
std::pair<int, int> eps_phi(const Partition& lambda, int i, int h);

std::optional<Cell> good_node(const Partition& lambda, int i, int h);
std::optional<Cell> cogood_node(const Partition& lambda, int i, int h);
Partition apply_cogood(const Partition& lambda, int i, int h);

bool is_semisimple(int n, int h);

struct Witness {
  Partition lambda;
  int i = 0;
  int phi = 0;
  std::string rule;
};

// The partition of r from the case table with phi_i >= 2 for i = 0 or the top residue.
Witness nonsemisimple_witness(int r, int h);

// Pairs (r, h) not covered by the witness table; settled by a dimension count instead.
bool is_exceptional_pair(int r, int h);

struct Feasibility {
  std::string equation;
  bool solvable = false;
};
// The integer equations behind the exceptional pairs; each reports solvable = false.
std::vector<Feasibility> exceptional_feasibility(int r, int h);

}  // namespace hclab
