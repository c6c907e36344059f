#pragma once

// The reduction chain: Hamiltonian s-t path on a grid graph -> 2-D puzzle ->
// 1-D puzzle -> 1-D puzzle with leftmost start -> empty 1-D puzzle ->
// permutation reconstruction from differences. Every stage also knows how to
// carry solutions across.

#include <optional>
#include <string>
#include <vector>

#include "frog/board.hpp"
#include "frog/gadgets.hpp"

namespace frog {

struct PrdInstance;

/// Node-induced subgraph of the integer lattice; unit-distance vertices are
/// adjacent.
struct GridGraph {
  std::vector<Cell> vertices;
  Cell s;
  Cell t;

  bool has_vertex(Cell c) const;
  bool adjacent(Cell a, Cell b) const;
  /// Side of the bounding square once the vertices are shifted to start at
  /// (1,1): max(bbox width, bbox height) + 1.
  int m_side() const;
};

using NodePath = std::vector<Cell>;

bool is_hamiltonian_path(const GridGraph& g, const NodePath& path);

inline constexpr std::size_t kHamOracleCap = 10;

/// Exhaustive DFS over simple paths from s. Refused above kHamOracleCap
/// vertices.
std::optional<NodePath> ham_oracle(const GridGraph& g);

struct ReductionLayout {
  StripParams strip;
  int n = 0;  // vertex count
  int width = 0;
  int height = 0;
  Cell lattice_min;  // bounding-box corner that maps to lattice (1,1)
  Cell start_cell;
  Cell target_cell;  // one step right of t's cell
  Cell hop_cell;     // (3w, target row)
  std::vector<int> gadget_rows;  // l_i = (2i-1) * 7w, i = 1..n-1

  // Jump index boundaries.
  std::vector<std::size_t> edge_begin;   // 5 jumps each
  std::size_t target_jump = 0;
  std::size_t cleanup_begin = 0;         // the hop to (3w, y_t)
  std::vector<std::size_t> strip_begin;  // 2 per gadget: top, bottom
  std::size_t total_jumps = 0;

  GridGraph graph;

  Cell to_board(Cell lattice) const;
  Cell to_lattice(Cell board_cell) const;
  int top_strip_row(std::size_t gadget) const;     // l_i + 2w
  int bottom_strip_row(std::size_t gadget) const;  // l_i + 4w
};

struct HamReduction {
  CfpInstance instance;
  ReductionLayout layout;
};

/// Smallest k >= 2 with 2^k >= 4 * m_side.
int layout_k(int m_side);

HamReduction reduce_ham_to_cfp(const GridGraph& g);

/// Decodes the graph-area cell after each edge phase. Throws
/// ContractViolation unless the signs give a complete traversal.
NodePath extract_ham_path(const HamReduction& r, const SignVector& signs);

/// Builds a complete traversal from a Hamiltonian s-t path. Throws
/// std::invalid_argument when the path is not one.
SignVector witness_from_ham_path(const HamReduction& r, const NodePath& path);

/// Frog at (8,8) of a w x w graph area with its four lattice neighbours open,
/// one edge gadget below, and the five edge-phase jumps.
CfpInstance edge_gadget_fixture(int k);

/// Checks 2l_i + 8w + 4y + 4z against l_j + 2w + 2a and l_j + 4w + 2b for all
/// i != j, y in graph rows, z in {-1,0,1}, 0 <= a,b < w/2.
bool gadget_rows_separated(int k, int n);

// ---- linearisation ----------------------------------------------------------

struct LinearReduction {
  Cfp1dInstance instance;
  int side = 0;  // n of the square board after padding
  bool rejected = false;
  std::vector<Diagnostic> diagnostics;
};

/// Rectangular boards are first padded to a square of side max(width,height).
/// A jump with |dx| or |dy| >= side yields a canonical unsolvable instance.
LinearReduction reduce_2d_to_1d(const CfpInstance& instance);

/// Prepends a cell that becomes the start and a jump of (old start + 1).
Cfp1dInstance normalize_start_leftmost(const Cfp1dInstance& instance);

struct EmptyReduction {
  Cfp1dInstance instance;
  std::size_t prefix_length = 0;  // jumps before the original sequence
  std::size_t back_jump = 0;      // index of the 2n-1 jump (moves left)
  bool rejected = false;
  std::vector<Diagnostic> diagnostics;
};

/// Requires start 0. Produces an empty board of length 2n+1 and 2n jumps.
EmptyReduction reduce_1d_to_empty(const Cfp1dInstance& instance);

/// The canonical unsolvable instance used by the reject branches.
Cfp1dInstance unsolvable_1d();

SignVector lift_signs_to_normalized(const SignVector& s);
SignVector lift_signs_to_empty(const EmptyReduction& r, const SignVector& s);
/// Drops the forced prefix; throws ContractViolation if it is not the forced one.
SignVector drop_empty_prefix(const EmptyReduction& r, const SignVector& s);

struct FullReduction {
  HamReduction ham;
  std::vector<std::string> provenance;  // one "stage key=value ..." line each
};

/// Composes every stage down to a permutation-reconstruction instance.
std::pair<FullReduction, PrdInstance> reduce_full(const GridGraph& g);

}  // namespace frog
