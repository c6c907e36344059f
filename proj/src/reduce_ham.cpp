#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "frog/reduce.hpp"

namespace frog {
namespace {

struct Box {
  Cell lo{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  Cell hi{std::numeric_limits<int>::min(), std::numeric_limits<int>::min()};
};

Box bounding_box(const std::vector<Cell>& cells) {
  Box b;
  for (const auto& c : cells) {
    b.lo = {std::min(b.lo.x, c.x), std::min(b.lo.y, c.y)};
    b.hi = {std::max(b.hi.x, c.x), std::max(b.hi.y, c.y)};
  }
  return b;
}

void check_graph(const GridGraph& g) {
  if (g.vertices.size() < 2) throw Refused("grid graph needs at least 2 vertices");
  if (g.s == g.t) throw Refused("s and t must differ");
  std::set<Cell> seen(g.vertices.begin(), g.vertices.end());
  if (seen.size() != g.vertices.size()) throw ContractViolation("duplicate vertex");
  if (!seen.count(g.s) || !seen.count(g.t))
    throw ContractViolation("s and t must be vertices");
}

// Edge-phase signs realizing one lattice step in board units.
std::pair<int, int> step_signs(Cell from, Cell to) {
  const int dx = to.x - from.x, dy = to.y - from.y;
  if (dx == 4 && dy == 0) return {1, 1};
  if (dx == -4 && dy == 0) return {-1, -1};
  if (dx == 0 && dy == 4) return {1, -1};
  if (dx == 0 && dy == -4) return {-1, 1};
  throw std::invalid_argument("consecutive path vertices are not adjacent");
}

StripPlan plan_for(const StripParams& p, Cell hole_a, Cell hole_b) {
  if (hole_a.y > hole_b.y) std::swap(hole_a, hole_b);
  StripPlan plan;
  plan.rows = {hole_a.y, hole_b.y};
  plan.hole_columns = {hole_a.x, hole_b.x};
  for (int r = 0; r < p.w; r += 2)
    if (r != hole_a.y && r != hole_b.y) plan.rows.push_back(r);
  return plan;
}

}  // namespace

bool GridGraph::has_vertex(Cell c) const {
  return std::find(vertices.begin(), vertices.end(), c) != vertices.end();
}

bool GridGraph::adjacent(Cell a, Cell b) const {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1 && has_vertex(a) && has_vertex(b);
}

int GridGraph::m_side() const {
  if (vertices.empty()) return 1;
  Box b = bounding_box(vertices);
  return std::max(b.hi.x - b.lo.x, b.hi.y - b.lo.y) + 1 + 1;
}

bool is_hamiltonian_path(const GridGraph& g, const NodePath& path) {
  if (path.size() != g.vertices.size() || path.empty()) return false;
  if (path.front() != g.s || path.back() != g.t) return false;
  std::set<Cell> seen;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!g.has_vertex(path[i]) || !seen.insert(path[i]).second) return false;
    if (i > 0 && !g.adjacent(path[i - 1], path[i])) return false;
  }
  return true;
}

std::optional<NodePath> ham_oracle(const GridGraph& g) {
  if (g.vertices.size() > kHamOracleCap)
    throw Refused("ham oracle refused: " + std::to_string(g.vertices.size()) +
                  " vertices exceeds cap " + std::to_string(kHamOracleCap));
  if (!g.has_vertex(g.s) || !g.has_vertex(g.t)) return std::nullopt;
  NodePath path{g.s};
  std::set<Cell> used{g.s};
  std::function<bool()> rec = [&]() {
    if (path.size() == g.vertices.size()) return path.back() == g.t;
    const Cell at = path.back();
    for (Cell d : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}}) {
      Cell n{at.x + d.x, at.y + d.y};
      if (!g.has_vertex(n) || used.count(n)) continue;
      path.push_back(n);
      used.insert(n);
      if (rec()) return true;
      used.erase(n);
      path.pop_back();
    }
    return false;
  };
  if (rec()) return path;
  return std::nullopt;
}

int layout_k(int m_side) {
  int k = 2;
  while ((std::int64_t{1} << k) < std::int64_t{4} * m_side) ++k;
  return k;
}

Cell ReductionLayout::to_board(Cell c) const {
  return {4 * (c.x - lattice_min.x + 1), 4 * (c.y - lattice_min.y + 1)};
}

Cell ReductionLayout::to_lattice(Cell c) const {
  return {c.x / 4 - 1 + lattice_min.x, c.y / 4 - 1 + lattice_min.y};
}

int ReductionLayout::top_strip_row(std::size_t i) const { return gadget_rows[i] + 2 * strip.w; }
int ReductionLayout::bottom_strip_row(std::size_t i) const {
  return gadget_rows[i] + 4 * strip.w;
}

HamReduction reduce_ham_to_cfp(const GridGraph& g) {
  check_graph(g);
  ReductionLayout L;
  L.graph = g;
  L.n = static_cast<int>(g.vertices.size());
  L.strip = StripParams::from_k(layout_k(g.m_side()));
  const int w = L.strip.w;
  L.lattice_min = bounding_box(g.vertices).lo;
  L.width = 3 * w + 2 * L.strip.v;
  const std::int64_t height = std::int64_t{7} * (2 * L.n - 1) * w;
  if (height * L.width > std::int64_t{1} << 31)
    throw Refused("reduced board too large");
  L.height = static_cast<int>(height);
  for (int i = 1; i < L.n; ++i) L.gadget_rows.push_back((2 * i - 1) * 7 * w);

  L.start_cell = L.to_board(g.s);
  Cell tcell = L.to_board(g.t);
  L.target_cell = {tcell.x + 1, tcell.y};
  L.hop_cell = {3 * w, tcell.y};

  Board2D board(L.width, L.height, L.start_cell);
  board.fill_blocked(true);
  for (const auto& u : g.vertices) board.set_blocked(L.to_board(u), false);
  board.set_blocked(L.target_cell, false);
  board.set_blocked(L.hop_cell, false);

  auto open_strip = [&](int top) {
    for (int r = 0; r < w; ++r) {
      for (int x = 3 * w; x < L.width; ++x) board.set_blocked({x, top + r}, false);
      if (r % 2) continue;
      for (int x = 0; x < w; ++x) board.set_blocked({x, top + r}, false);
      for (int x = 2 * w; x < 3 * w; ++x) board.set_blocked({x, top + r}, false);
    }
    board.set_blocked({3 * w, top - 1}, false);
    board.set_blocked({3 * w, top + w}, false);
    board.set_blocked({L.width - 1, top + w}, false);
  };
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(L.n); ++i) {
    open_strip(L.top_strip_row(i));
    open_strip(L.bottom_strip_row(i));
  }

  std::vector<Jump> jumps;
  for (int l : L.gadget_rows) {
    L.edge_begin.push_back(jumps.size());
    jumps.insert(jumps.end(), {{0, l + 2 * w}, {2, 2}, {0, 2 * w}, {2, -2}, {0, l + 4 * w}});
  }
  L.target_jump = jumps.size();
  jumps.push_back({1, 0});
  L.cleanup_begin = jumps.size();
  jumps.push_back({3 * w - L.target_cell.x, 0});
  jumps.push_back({0, L.top_strip_row(0) - 1 - L.hop_cell.y});
  const auto cleanup = gen_strip_cleanup(L.strip, default_slot_columns(L.strip));
  for (std::size_t i = 0; i < L.gadget_rows.size(); ++i) {
    L.strip_begin.push_back(jumps.size());
    jumps.insert(jumps.end(), cleanup.begin(), cleanup.end());
    jumps.push_back({0, w - 1});
    L.strip_begin.push_back(jumps.size());
    jumps.insert(jumps.end(), cleanup.begin(), cleanup.end());
    if (i + 1 < L.gadget_rows.size())
      jumps.push_back({0, L.top_strip_row(i + 1) - 1 - (L.bottom_strip_row(i) + w)});
  }
  L.total_jumps = jumps.size();
  return {CfpInstance{std::move(board), std::move(jumps)}, std::move(L)};
}

NodePath extract_ham_path(const HamReduction& r, const SignVector& signs) {
  if (signs.size() != r.instance.jumps.size())
    throw ContractViolation("sign vector length does not match the reduced instance");
  Trace t = verify(r.instance, signs);
  if (!t.complete) throw ContractViolation("signs do not give a complete traversal");
  NodePath path{r.layout.to_lattice(t.visited[0])};
  for (std::size_t b : r.layout.edge_begin) path.push_back(r.layout.to_lattice(t.visited[b + 5]));
  return path;
}

SignVector witness_from_ham_path(const HamReduction& r, const NodePath& path) {
  const auto& L = r.layout;
  if (!is_hamiltonian_path(L.graph, path))
    throw std::invalid_argument("not a Hamiltonian s-t path of the graph");
  SignVector out;
  std::vector<std::array<Cell, 4>> holes;  // top a, top b, bottom a, bottom b
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Cell from = L.to_board(path[i]), to = L.to_board(path[i + 1]);
    auto [s1, s2] = step_signs(from, to);
    for (int s : {1, s1, 1, s2, -1}) out.push_back(s);
    Cell a{from.x, from.y};
    Cell b{from.x + 2 * s1, from.y + 2 * s1};
    Cell c{b.x + 2 * s2, b.y - 2 * s2};
    holes.push_back({a, b, b, c});
  }
  out.push_back(1);  // target
  out.push_back(1);
  out.push_back(1);
  for (std::size_t i = 0; i < holes.size(); ++i) {
    out.append(strip_cleanup_signs(L.strip, plan_for(L.strip, holes[i][0], holes[i][1])));
    out.push_back(1);
    out.append(strip_cleanup_signs(L.strip, plan_for(L.strip, holes[i][2], holes[i][3])));
    if (i + 1 < holes.size()) out.push_back(1);
  }
  return out;
}

CfpInstance edge_gadget_fixture(int k) {
  const StripParams p = StripParams::from_k(k);
  const int w = p.w;
  if (w < 13) throw Refused("edge gadget fixture needs k >= 4");
  const int l = 7 * w;
  const Cell frog{8, 8};
  Board2D b(3 * w, 14 * w, frog);
  b.fill_blocked(true);
  for (Cell d : {Cell{4, 0}, Cell{-4, 0}, Cell{0, 4}, Cell{0, -4}})
    b.set_blocked({frog.x + d.x, frog.y + d.y}, false);
  for (int top : {l + 2 * w, l + 4 * w})
    for (int r = 0; r < w; r += 2)
      for (int x = 0; x < 3 * w; ++x)
        if (x < w || x >= 2 * w) b.set_blocked({x, top + r}, false);
  return {std::move(b), {{0, l + 2 * w}, {2, 2}, {0, 2 * w}, {2, -2}, {0, l + 4 * w}}};
}

bool gadget_rows_separated(int k, int n) {
  const StripParams p = StripParams::from_k(k);
  const std::int64_t w = p.w;
  std::vector<std::int64_t> l;
  for (int i = 1; i < n; ++i) l.push_back((2 * i - 1) * 7 * w);
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (i == j) continue;
      for (std::int64_t y = 0; 4 * y < w; ++y)
        for (int z : {-1, 0, 1}) {
          const std::int64_t lhs = 2 * l[i] + 8 * w + 4 * y + 4 * z;
          for (std::int64_t a = 0; a < p.v; ++a)
            if (lhs == l[j] + 2 * w + 2 * a || lhs == l[j] + 4 * w + 2 * a) return false;
        }
    }
  return true;
}

}  // namespace frog
