#pragma once

// Reference simulators, brute-force enumerators and random instance sources
// shared by the test programs. Nothing here calls the library's simulator or
// solver, so results computed here are independent ground truth.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "frog/board.hpp"
#include "frog/prd.hpp"
#include "frog/reduce.hpp"

namespace ref {

using frog::Cell;

struct Walk {
  bool complete = false;
  std::vector<Cell> cells;
};

inline Walk simulate(const frog::CfpInstance& inst, const std::vector<int>& signs) {
  const auto& b = inst.board;
  std::set<Cell> seen{b.start()};
  Walk w;
  w.cells.push_back(b.start());
  for (std::size_t i = 0; i < inst.jumps.size(); ++i) {
    Cell c{w.cells.back().x + signs[i] * inst.jumps[i].dx,
           w.cells.back().y + signs[i] * inst.jumps[i].dy};
    if (c.x < 0 || c.y < 0 || c.x >= b.width() || c.y >= b.height()) return w;
    if (b.blocked(c) || !seen.insert(c).second) return w;
    w.cells.push_back(c);
  }
  w.complete = true;
  return w;
}

inline std::vector<int> signs_of(std::uint64_t mask, std::size_t m) {
  std::vector<int> s(m);
  for (std::size_t i = 0; i < m; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
  return s;
}

inline frog::SignVector to_sv(const std::vector<int>& s) {
  std::vector<std::int8_t> v(s.begin(), s.end());
  return frog::SignVector(v);
}

/// All complete sign vectors by simulating every mask.
inline std::set<frog::SignVector> brute(const frog::CfpInstance& inst) {
  std::set<frog::SignVector> out;
  const std::size_t m = inst.jumps.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    auto s = signs_of(mask, m);
    if (simulate(inst, s).complete) out.insert(to_sv(s));
  }
  return out;
}

inline bool brute_sat_1d(const frog::Cfp1dInstance& inst) {
  const std::size_t m = inst.jumps.size();
  std::set<std::int64_t> blocked(inst.blocked.begin(), inst.blocked.end());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::set<std::int64_t> seen{inst.start};
    std::int64_t at = inst.start;
    bool ok = !blocked.count(at);
    for (std::size_t i = 0; ok && i < m; ++i) {
      at += ((mask >> i) & 1 ? -1 : 1) * inst.jumps[i];
      ok = at >= 0 && at < inst.length && !blocked.count(at) && seen.insert(at).second;
    }
    if (ok) return true;
  }
  return false;
}

/// Every permutation of [1..n] with the given adjacent differences.
inline std::vector<frog::Permutation> brute_prd(const frog::PrdInstance& p) {
  const std::size_t n = p.n();
  frog::Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<frog::Permutation> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < n; ++i)
      ok = std::llabs(perm[i + 1] - perm[i]) == p.differences[i];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Hamiltonian s-t path by trying every vertex ordering.
inline bool brute_ham(const frog::GridGraph& g) {
  std::vector<Cell> v = g.vertices;
  std::sort(v.begin(), v.end());
  do {
    if (v.front() != g.s || v.back() != g.t) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < v.size(); ++i)
      ok = std::abs(v[i].x - v[i + 1].x) + std::abs(v[i].y - v[i + 1].y) == 1;
    if (ok) return true;
  } while (std::next_permutation(v.begin(), v.end()));
  return false;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Small 2-D instance with exactly `m` jumps. Half of them are planted from a
/// random walk (solvable), the rest have random jumps on a random board.
inline frog::CfpInstance random_instance(std::mt19937_64& rng, std::size_t m) {
  for (;;) {
    const int w = uniform(rng, 1, 5), h = uniform(rng, 1, 5);
    if (static_cast<std::size_t>(w * h) < m + 1) continue;
    frog::Board2D b(w, h, {uniform(rng, 0, w - 1), uniform(rng, 0, h - 1)});
    std::vector<frog::Jump> jumps;
    if (uniform(rng, 0, 1)) {
      // Planted walk.
      b.fill_blocked(true);
      b.set_blocked(b.start(), false);
      Cell at = b.start();
      bool stuck = false;
      for (std::size_t i = 0; i < m && !stuck; ++i) {
        int tries = 0;
        for (;; ++tries) {
          if (tries > 60) {
            stuck = true;
            break;
          }
          Cell d{uniform(rng, -2, 2), uniform(rng, -2, 2)};
          Cell c{at.x + d.x, at.y + d.y};
          if ((d.x == 0 && d.y == 0) || !b.contains(c) || !b.blocked(c)) continue;
          b.set_blocked(c, false);
          jumps.push_back(uniform(rng, 0, 1) ? frog::Jump{d.x, d.y} : frog::Jump{-d.x, -d.y});
          at = c;
          break;
        }
      }
      if (stuck) continue;
    } else {
      std::vector<Cell> cells;
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
          if (Cell{x, y} != b.start()) cells.push_back({x, y});
      std::shuffle(cells.begin(), cells.end(), rng);
      for (std::size_t i = m; i < cells.size(); ++i) b.set_blocked(cells[i]);
      for (std::size_t i = 0; i < m; ++i) {
        frog::Jump j{uniform(rng, -2, 2), uniform(rng, -2, 2)};
        if (j.dx == 0 && j.dy == 0) j.dx = 1;
        jumps.push_back(j);
      }
    }
    return {std::move(b), std::move(jumps)};
  }
}

/// 1-D instance of the given length with a consistent jump count.
inline frog::Cfp1dInstance random_1d(std::mt19937_64& rng, int length, bool leftmost) {
  frog::Cfp1dInstance inst;
  inst.length = length;
  inst.start = leftmost ? 0 : uniform(rng, 0, length - 1);
  for (int c = 0; c < length; ++c)
    if (c != inst.start && uniform(rng, 0, 3) == 0) inst.blocked.push_back(c);
  const std::size_t m = inst.empty_count();
  if (uniform(rng, 0, 1)) {
    // Planted: visit the empty cells in a random order.
    std::vector<int> cells;
    for (int c = 0; c < length; ++c)
      if (c != inst.start && !std::binary_search(inst.blocked.begin(), inst.blocked.end(), c))
        cells.push_back(c);
    std::shuffle(cells.begin(), cells.end(), rng);
    int at = inst.start;
    for (int c : cells) {
      inst.jumps.push_back(uniform(rng, 0, 1) ? c - at : at - c);
      at = c;
    }
  } else {
    for (std::size_t i = 0; i < m; ++i) inst.jumps.push_back(uniform(rng, 1, std::max(1, length / 2)));
  }
  return inst;
}

inline frog::PrdInstance random_prd(std::mt19937_64& rng, int n) {
  frog::PrdInstance p;
  if (uniform(rng, 0, 1)) {
    frog::Permutation perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i + 1 < n; ++i) p.differences.push_back(std::llabs(perm[i + 1] - perm[i]));
  } else {
    for (int i = 0; i + 1 < n; ++i) p.differences.push_back(uniform(rng, 1, std::max(1, n - 1)));
  }
  return p;
}

}  // namespace ref
