#pragma once

#include <cstdint>
#include <set>
#include <variant>

#include "frog/board.hpp"

namespace frog {

struct SearchLimits {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  bool deterministic_order = true;
  // Remember states (step, frog cell, visited set) whose subtree was
  // exhausted without a solution. Exact: it only skips subtrees already
  // proven dead, so results are identical with it off.
  bool remember_failures = true;
  // Capacity of the failed-state cache, as a power of two.
  unsigned failure_cache_log2 = 20;
};

struct Solved {
  SignVector signs;
};
struct Unsolvable {};
struct Inconclusive {
  std::uint64_t nodes = 0;
};

struct SolveResult {
  std::variant<Solved, Unsolvable, Inconclusive> outcome;
  std::uint64_t nodes = 0;

  bool solved() const { return std::holds_alternative<Solved>(outcome); }
  bool unsolvable() const { return std::holds_alternative<Unsolvable>(outcome); }
  bool inconclusive() const { return std::holds_alternative<Inconclusive>(outcome); }
  const SignVector& signs() const { return std::get<Solved>(outcome).signs; }
};

/// Depth-first search over sign vectors, +1 before -1 at every depth. Returns
/// the first complete assignment in that order.
SolveResult solve(const CfpInstance& instance, const SearchLimits& limits = {});
SolveResult solve_1d(const Cfp1dInstance& instance, const SearchLimits& limits = {});

inline constexpr std::size_t kDefaultOracleCap = 20;

/// Brute force: simulates all 2^m sign vectors and keeps the complete ones.
/// Throws Refused when m exceeds max_m.
std::set<SignVector> oracle_enumerate(const CfpInstance& instance,
                                      std::size_t max_m = kDefaultOracleCap);

/// Exhaustive backtracking enumeration of every complete sign vector. Used as
/// ground truth for fixtures whose m is too large for 2^m simulation; it
/// shares no code with solve(). Throws Refused past max_solutions.
std::set<SignVector> enumerate_solutions(const CfpInstance& instance,
                                         std::size_t max_solutions = 1u << 20);

}  // namespace frog
