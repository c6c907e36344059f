#include "frog/gadgets.hpp"

#include <algorithm>
#include <cstdlib>

namespace frog {
namespace {

void require_k(int k) {
  if (k < 2) throw Refused("gadget parameter k must be >= 2, got " + std::to_string(k));
  if (k > 24) throw Refused("gadget parameter k too large: " + std::to_string(k));
}

// U_j = 1 x (2^j - 1), then 2^j + 2^(j-1) - 1.
void append_u(std::vector<int>& out, int j) {
  out.insert(out.end(), (1 << j) - 1, 1);
  out.push_back((1 << j) + (1 << (j - 1)) - 1);
}

void append_u_rev(std::vector<int>& out, int j) {
  out.push_back((1 << j) + (1 << (j - 1)) - 1);
  out.insert(out.end(), (1 << j) - 1, 1);
}

SignVector negate_reversed(const SignVector& s) {
  SignVector out;
  for (std::size_t i = s.size(); i-- > 0;) out.push_back(-s[i]);
  return out;
}

void append_jumps(std::vector<Jump>& out, const std::vector<Jump>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

}  // namespace

StripParams StripParams::from_k(int k) {
  require_k(k);
  return {k, (1 << k) - 1, 1 << (k - 1)};
}

std::vector<int> gen_binary(int k) {
  require_k(k);
  std::vector<int> out;
  for (int j = k - 1; j >= 1; --j) append_u(out, j);
  return out;
}

std::vector<int> gen_binary_rev(int k) {
  require_k(k);
  std::vector<int> out;
  for (int j = 1; j <= k - 1; ++j) append_u_rev(out, j);
  return out;
}

std::vector<int> gen_fill(const StripParams& p) {
  std::vector<int> out;
  out.push_back(3 * p.w);
  out.insert(out.end(), p.w - 1, 1);
  out.push_back(p.w + 1);
  out.insert(out.end(), p.w - 1, 1);
  out.push_back(2);
  return out;
}

std::vector<int> gen_hole(const StripParams& p) {
  require_k(p.k);
  std::vector<int> out;
  out.push_back(2 * p.w + p.v);
  for (int j = p.k - 1; j >= 2; --j) append_u(out, j);
  out.push_back(1);
  out.push_back(2 * p.w);
  for (int j = 1; j <= p.k - 1; ++j) append_u_rev(out, j);
  out.push_back(p.v + 1);
  return out;
}

SignVector binary_signs(int k, int target) {
  require_k(k);
  const int w = (1 << k) - 1;
  if (target < 0 || target >= w || target % 2 != 0)
    throw std::invalid_argument("binary target must be an even cell of the line");
  SignVector out;
  int lo = 0;
  for (int j = k - 1; j >= 1; --j) {
    const int mid = lo + (1 << j) - 1;
    const int ones = (1 << j) - 1;
    // Fill the half away from the target, then hop into the other half.
    const int toward_right = target > mid ? 1 : -1;
    for (int i = 0; i < ones; ++i) out.push_back(-toward_right);
    out.push_back(toward_right);
    if (toward_right > 0) lo = mid + 1;
  }
  return out;
}

SignVector binary_rev_signs(int k, int from) {
  return negate_reversed(binary_signs(k, from));
}

SignVector fill_signs(const StripParams& p) {
  SignVector out;
  out.push_back(-1);
  for (int i = 0; i < 2 * p.w; ++i) out.push_back(1);
  return out;
}

SignVector hole_signs(const StripParams& p, int hole) {
  SignVector descent = binary_signs(p.k, hole);
  SignVector out;
  out.push_back(-1);
  // The descent without its final 2-jump stops two cells from the hole.
  for (std::size_t i = 0; i + 1 < descent.size(); ++i) out.push_back(descent[i]);
  const int stop = descent[descent.size() - 1] > 0 ? hole - 2 : hole + 2;
  out.push_back(1);
  out.append(binary_rev_signs(p.k, stop));
  out.push_back(1);
  return out;
}

SelectorSequence gen_selector(const StripParams& p) {
  SelectorSequence s;
  const auto down = vertical(gen_binary(p.k));
  const auto up = vertical(gen_binary_rev(p.k));
  s.jumps.push_back({0, p.v});
  for (int r = 0; r < p.v; ++r) {
    append_jumps(s.jumps, down);
    s.slots.push_back(s.jumps.size());
    s.jumps.push_back({1, 0});
    append_jumps(s.jumps, up);
    if (r + 1 < p.v) s.jumps.push_back({1, 0});
  }
  s.jumps.push_back({0, p.v});
  s.jumps.push_back({2 * p.v - 1, 0});
  return s;
}

std::vector<int> default_slot_columns(const StripParams& p) {
  std::vector<int> out;
  for (int r = 0; r < p.v; ++r) out.push_back(3 * p.w + 2 * r);
  return out;
}

std::vector<Jump> gen_strip_cleanup(const StripParams& p, std::span<const int> slot_columns) {
  require_k(p.k);
  if (slot_columns.size() != static_cast<std::size_t>(p.v))
    throw ConstructionError("strip cleanup needs " + std::to_string(p.v) +
                            " slot columns, got " + std::to_string(slot_columns.size()));
  for (std::size_t r = 0; r < slot_columns.size(); ++r) {
    if (slot_columns[r] != 3 * p.w + 2 * static_cast<int>(r))
      throw ConstructionError("slot column " + std::to_string(r) + " is " +
                              std::to_string(slot_columns[r]) + ", selector geometry needs " +
                              std::to_string(3 * p.w + 2 * static_cast<int>(r)));
  }
  const SelectorSequence sel = gen_selector(p);
  const auto hole = gen_hole(p);
  const auto fill = gen_fill(p);
  std::vector<Jump> out;
  std::size_t prev = 0;
  for (std::size_t r = 0; r < sel.slots.size(); ++r) {
    out.insert(out.end(), sel.jumps.begin() + static_cast<std::ptrdiff_t>(prev),
               sel.jumps.begin() + static_cast<std::ptrdiff_t>(sel.slots[r]));
    std::vector<int> embedded = r < 2 ? hole : fill;
    const int ext = slot_columns[r] - 3 * p.w;
    embedded.front() += ext;
    embedded.back() += ext;
    append_jumps(out, horizontal(embedded));
    prev = sel.slots[r] + 1;
  }
  out.insert(out.end(), sel.jumps.begin() + static_cast<std::ptrdiff_t>(prev), sel.jumps.end());
  return out;
}

std::size_t strip_cleanup_length(const StripParams& p) {
  const std::size_t w = p.w, v = p.v;
  // entrance hop, v descents + ascents, 2 holes, v-2 fills, v-1 steps, exit pair
  return 1 + v * 2 * (w - 1) + 2 * (2 * w) + (v - 2) * (2 * w + 1) + (v - 1) + 2;
}

SignVector selector_signs(const StripParams& p, std::span<const int> rows) {
  if (rows.size() != static_cast<std::size_t>(p.v))
    throw std::invalid_argument("selector needs one row per round");
  SignVector out;
  out.push_back(1);
  for (int r = 0; r < p.v; ++r) {
    out.append(binary_signs(p.k, rows[r]));
    out.push_back(1);
    out.append(binary_rev_signs(p.k, rows[r]));
    if (r + 1 < p.v) out.push_back(1);
  }
  out.push_back(1);
  out.push_back(-1);
  return out;
}

SignVector strip_cleanup_signs(const StripParams& p, const StripPlan& plan) {
  if (plan.rows.size() != static_cast<std::size_t>(p.v))
    throw std::invalid_argument("strip plan needs one row per round");
  SignVector out;
  out.push_back(1);
  for (int r = 0; r < p.v; ++r) {
    out.append(binary_signs(p.k, plan.rows[r]));
    out.append(r < 2 ? hole_signs(p, plan.hole_columns[r]) : fill_signs(p));
    out.append(binary_rev_signs(p.k, plan.rows[r]));
    if (r + 1 < p.v) out.push_back(1);
  }
  out.push_back(1);
  out.push_back(-1);
  return out;
}

// ---- framing ----------------------------------------------------------------

FramedGadget frame_region(const Region& region, const std::vector<Jump>& interior,
                          int entry_magnitude, std::optional<int> exit_magnitude,
                          EntryAxis axis) {
  int max_dx = 0, max_dy = 0;
  for (const auto& j : interior) {
    max_dx = std::max(max_dx, std::abs(j.dx));
    max_dy = std::max(max_dy, std::abs(j.dy));
  }
  Jump unit{0, 1};
  int needed = max_dy;
  if (axis == EntryAxis::Horizontal) {
    unit = {1, 0};
    needed = max_dx;
  } else if (axis == EntryAxis::Diagonal) {
    unit = {1, 1};
    needed = std::max(max_dx, max_dy);
  }
  if (entry_magnitude <= needed)
    throw ConstructionError("entry jump " + std::to_string(entry_magnitude) +
                            " must exceed the largest interior component " +
                            std::to_string(needed));
  if (exit_magnitude && *exit_magnitude <= needed)
    throw ConstructionError("exit jump " + std::to_string(*exit_magnitude) +
                            " must exceed the largest interior component " +
                            std::to_string(needed));
  if (exit_magnitude && !region.final_cell)
    throw ConstructionError("an exit jump needs the region's final cell");

  // Region-local frame rectangle [fx0, fx1) x [fy0, fy1).
  const int fx0 = -max_dx, fy0 = -max_dy;
  const int fx1 = region.width + max_dx, fy1 = region.height + max_dy;
  auto inside_frame = [&](Cell c) {
    return c.x >= fx0 && c.x < fx1 && c.y >= fy0 && c.y < fy1;
  };
  Cell entry{region.landing.x - entry_magnitude * unit.dx,
             region.landing.y - entry_magnitude * unit.dy};
  if (inside_frame(entry))
    throw ConstructionError("entry cell falls inside the frame; use a longer entry jump");
  std::optional<Cell> exit;
  if (exit_magnitude) {
    exit = Cell{region.final_cell->x + *exit_magnitude * unit.dx,
                region.final_cell->y + *exit_magnitude * unit.dy};
    if (inside_frame(*exit))
      throw ConstructionError("exit cell falls inside the frame; use a longer exit jump");
  }

  int x0 = std::min(fx0, entry.x), y0 = std::min(fy0, entry.y);
  int x1 = std::max(fx1, entry.x + 1), y1 = std::max(fy1, entry.y + 1);
  if (exit) {
    x0 = std::min(x0, exit->x);
    y0 = std::min(y0, exit->y);
    x1 = std::max(x1, exit->x + 1);
    y1 = std::max(y1, exit->y + 1);
  }
  auto shift = [&](Cell c) { return Cell{c.x - x0, c.y - y0}; };

  FramedGadget g;
  g.entry = shift(entry);
  g.region_origin = shift({0, 0});
  g.frame_width = fx1 - fx0;
  g.frame_height = fy1 - fy0;
  Board2D board(x1 - x0, y1 - y0, g.entry);
  board.fill_blocked(true);
  board.set_blocked(g.entry, false);
  for (const auto& c : region.empty) {
    if (c.x < 0 || c.y < 0 || c.x >= region.width || c.y >= region.height)
      throw ConstructionError("region cell outside the region rectangle");
    board.set_blocked(shift(c), false);
  }
  if (exit) {
    g.exit = shift(*exit);
    board.set_blocked(*g.exit, false);
  }
  g.instance.board = std::move(board);
  g.instance.jumps.push_back({entry_magnitude * unit.dx, entry_magnitude * unit.dy});
  g.interior_begin = 1;
  append_jumps(g.instance.jumps, interior);
  g.interior_end = g.instance.jumps.size();
  if (exit_magnitude)
    g.instance.jumps.push_back({*exit_magnitude * unit.dx, *exit_magnitude * unit.dy});
  return g;
}

// ---- fixtures ---------------------------------------------------------------

std::vector<Jump> horizontal(const std::vector<int>& magnitudes) {
  std::vector<Jump> out;
  out.reserve(magnitudes.size());
  for (int m : magnitudes) out.push_back({m, 0});
  return out;
}

std::vector<Jump> vertical(const std::vector<int>& magnitudes) {
  std::vector<Jump> out;
  out.reserve(magnitudes.size());
  for (int m : magnitudes) out.push_back({0, m});
  return out;
}

CfpInstance binary_fixture(int k) {
  auto p = StripParams::from_k(k);
  return {Board2D(p.w, 1, {p.v - 1, 0}), horizontal(gen_binary(k))};
}

CfpInstance binary_rev_fixture(int k, int start) {
  auto p = StripParams::from_k(k);
  if (start < 0 || start >= p.w) throw std::invalid_argument("start outside the line");
  return {Board2D(p.w, 1, {start, 0}), horizontal(gen_binary_rev(k))};
}

namespace {
CfpInstance strip_line(const StripParams& p, std::vector<int> jumps) {
  CfpInstance inst{Board2D(3 * p.w + 2, 1, {3 * p.w, 0}), horizontal(jumps)};
  for (int x = p.w; x < 2 * p.w; ++x) inst.board.set_blocked({x, 0});
  return inst;
}
}  // namespace

CfpInstance fill_fixture(const StripParams& p) { return strip_line(p, gen_fill(p)); }

CfpInstance hole_fixture(const StripParams& p, std::optional<int> previsited) {
  auto inst = strip_line(p, gen_hole(p));
  if (previsited) {
    if (*previsited < 0 || *previsited >= p.w)
      throw std::invalid_argument("previsited cell must lie in the left block");
    inst.board.set_blocked({*previsited, 0});
  }
  return inst;
}

CfpInstance selector_fixture(const StripParams& p) {
  const int width = 2 * p.v, height = p.w + 2;
  CfpInstance inst{Board2D(width, height, {0, 0}), gen_selector(p).jumps};
  for (int x = 1; x < width; ++x) inst.board.set_blocked({x, 0});
  for (int x = 1; x + 1 < width; ++x) inst.board.set_blocked({x, height - 1});
  return inst;
}

Cell selector_fixture_exit(const StripParams& p) { return {0, p.w + 1}; }

CfpInstance strip_cleanup_fixture(const StripParams& p, std::array<Cell, 2> holes_xy) {
  const int width = 3 * p.w + 2 * p.v, height = p.w + 2;
  CfpInstance inst{Board2D(width, height, {3 * p.w, 0}),
                   gen_strip_cleanup(p, default_slot_columns(p))};
  auto& b = inst.board;
  b.fill_blocked(true);
  b.set_blocked({3 * p.w, 0}, false);
  for (int r = 0; r < p.w; ++r) {
    for (int x = 3 * p.w; x < width; ++x) b.set_blocked({x, r + 1}, false);
    if (r % 2 != 0) continue;
    for (int x = 0; x < p.w; ++x) b.set_blocked({x, r + 1}, false);
    for (int x = 2 * p.w; x < 3 * p.w; ++x) b.set_blocked({x, r + 1}, false);
  }
  b.set_blocked({3 * p.w, height - 1}, false);
  b.set_blocked({width - 1, height - 1}, false);
  for (const auto& h : holes_xy) {
    if (h.x < 0 || h.x >= p.w || h.y < 0 || h.y >= p.w || h.x % 2 || h.y % 2)
      throw std::invalid_argument("holes must be even cells of the inner strip");
    b.set_blocked({h.x, h.y + 1}, true);
  }
  return inst;
}

FramedGadget framing_fixture() {
  Region r;
  r.width = 5;
  r.height = 5;
  r.empty = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {3, 1}, {3, 2}, {3, 3}};
  r.landing = {2, 2};
  const std::vector<Jump> interior{{1, 0}, {0, 1}, {2, 0}, {0, 1}, {0, 1}, {2, 0}};
  return frame_region(r, interior, 4, std::nullopt, EntryAxis::Vertical);
}

}  // namespace frog
