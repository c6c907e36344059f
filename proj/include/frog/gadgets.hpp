#pragma once

// Jump-sequence families used by the grid-graph reduction, their sign
// rules, and small self-contained fixture boards on which each family can be
// checked exhaustively.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "frog/board.hpp"

namespace frog {

/// Line width w = 2^k - 1 and half v = 2^(k-1).
struct StripParams {
  int k = 2;
  int w = 3;
  int v = 2;

  static StripParams from_k(int k);
  friend bool operator==(const StripParams&, const StripParams&) = default;
};

// 1-D magnitude lists. Positive entries; directions are chosen by signs.
std::vector<int> gen_binary(int k);
std::vector<int> gen_binary_rev(int k);
std::vector<int> gen_fill(const StripParams& p);
std::vector<int> gen_hole(const StripParams& p);

/// Signs for gen_binary(k) that end on `target` (an even cell of the w-line)
/// starting from the center cell v-1.
SignVector binary_signs(int k, int target);
/// Signs for gen_binary_rev(k) starting on even cell `from`, ending at v-1.
SignVector binary_rev_signs(int k, int from);
/// Signs for gen_fill on the E^w B^w E^w F E line.
SignVector fill_signs(const StripParams& p);
/// Signs for gen_hole that leave `hole` (even cell of the left block) unvisited.
SignVector hole_signs(const StripParams& p, int hole);

struct SelectorSequence {
  std::vector<Jump> jumps;
  std::vector<std::size_t> slots;  // indices of the replaceable (1,0) jumps
};

/// Vertical selector: v rounds of vertical binary / reverse-binary descents
/// separated by horizontal steps; round r's slot jump sits between them.
SelectorSequence gen_selector(const StripParams& p);

/// Slot columns of a strip cleanup gadget whose selector area starts at
/// column 3w: round r (0-based) works in columns 3w+2r and 3w+2r+1.
std::vector<int> default_slot_columns(const StripParams& p);

/// Selector with slots 0 and 1 replaced by hole sequences and slots 2..v-1
/// by fill sequences. Each embedded sequence's first and last magnitude is
/// extended by (slot column - 3w). Throws ConstructionError when the slot
/// columns are not the ones the strip geometry requires.
std::vector<Jump> gen_strip_cleanup(const StripParams& p, std::span<const int> slot_columns);

/// Number of jumps in gen_strip_cleanup(p, ...).
std::size_t strip_cleanup_length(const StripParams& p);

/// Which strip row each round of a strip traversal selects, and where the
/// hole sits in the rows handled by the hole sequences.
struct StripPlan {
  std::vector<int> rows;                 // per round, even row offset in [0, w)
  std::array<int, 2> hole_columns{};     // for rounds 0 and 1
};

SignVector selector_signs(const StripParams& p, std::span<const int> rows);
SignVector strip_cleanup_signs(const StripParams& p, const StripPlan& plan);

// ---- framing ----------------------------------------------------------------

enum class EntryAxis { Vertical, Horizontal, Diagonal };

struct Region {
  int width = 1;
  int height = 1;
  std::vector<Cell> empty;       // region-local coordinates
  Cell landing;                  // first cell visited inside the region
  std::optional<Cell> final_cell;  // required when an exit jump is requested
};

struct FramedGadget {
  CfpInstance instance;        // start = entry cell
  Cell entry;                  // board coordinates
  std::optional<Cell> exit;    // board coordinates
  Cell region_origin;          // board coordinates of region (0,0)
  int frame_width = 0;
  int frame_height = 0;
  std::size_t interior_begin = 1;  // jump index range of the interior sequence
  std::size_t interior_end = 1;
};

/// Surrounds the region with a border of blocked cells as thick as the largest
/// interior jump component, and wraps the interior jumps with an entry jump
/// (and optionally an exit jump) that is longer than any interior jump along
/// the chosen axis.
FramedGadget frame_region(const Region& region, const std::vector<Jump>& interior,
                          int entry_magnitude, std::optional<int> exit_magnitude,
                          EntryAxis axis = EntryAxis::Vertical);

// ---- fixtures ---------------------------------------------------------------

std::vector<Jump> horizontal(const std::vector<int>& magnitudes);
std::vector<Jump> vertical(const std::vector<int>& magnitudes);

/// E^{v-1} F E^{v-1} with gen_binary(k).
CfpInstance binary_fixture(int k);
/// Empty w-line, frog on `start`, gen_binary_rev(k).
CfpInstance binary_rev_fixture(int k, int start);
/// E^w B^w E^w F E with gen_fill. Frog at 3w.
CfpInstance fill_fixture(const StripParams& p);
/// E^w B^w E^w F E with gen_hole; `previsited` marks a left-block cell as
/// already visited (modelled as blocked).
CfpInstance hole_fixture(const StripParams& p, std::optional<int> previsited = {});
/// 2v x (w+2) area: entrance above the top-left, exits below both bottom
/// corners, gen_selector with plain (1,0) slots.
CfpInstance selector_fixture(const StripParams& p);
/// Cell where selector_fixture traversals must finish.
Cell selector_fixture_exit(const StripParams& p);
/// One inner strip (w rows) with its strip cleanup area. The two holes are
/// (row, column) pairs with even coordinates in [0, w).
CfpInstance strip_cleanup_fixture(const StripParams& p, std::array<Cell, 2> holes_xy);
/// The 5x5 region framing example: an H-shaped region with four traversals.
FramedGadget framing_fixture();

}  // namespace frog
