#pragma once

// Permutation reconstruction from differences: find pi over [1..n] with
// |pi_{i+1} - pi_i| = a_i. Solved through the empty-board 1-D puzzle.

#include <cstdint>
#include <variant>
#include <vector>

#include "frog/board.hpp"
#include "frog/reduce.hpp"
#include "frog/solver.hpp"

namespace frog {

struct PrdInstance {
  std::vector<std::int64_t> differences;

  std::size_t n() const { return differences.size() + 1; }
  friend bool operator==(const PrdInstance&, const PrdInstance&) = default;
};

using Permutation = std::vector<std::int64_t>;

/// Throws ContractViolation when perm.size() != n.
bool verify_prd(const PrdInstance& instance, const Permutation& perm);

/// pi_i -> n - pi_i + 1.
Permutation mirror(const Permutation& perm);

/// Exhaustive n! search. Refused above kPrdOracleCap.
inline constexpr std::size_t kPrdOracleCap = 10;
std::vector<Permutation> prd_oracle(const PrdInstance& instance);

/// How a PRD instance sits inside a fixed-start empty 1-D board.
struct PrdEmbedding {
  enum class Kind { Direct, BinaryLine };
  Kind kind = Kind::Direct;
  std::size_t n = 1;
  Cfp1dInstance instance;  // empty board, start 0; what the solver sees

  // BinaryLine only: the intermediate blocked instance and its lifts.
  Cfp1dInstance line;
  std::int64_t window = 0;  // first window cell on `line`
  EmptyReduction empty;
};

/// If a_1 = n-1 the instance is the empty board of length n-1 with jumps
/// a_2..a_{n-1}. Otherwise a binary jump sequence on a w-line picks the start
/// cell (any even line cell), a 2w jump enters a window of n cells spaced two
/// apart, and the differences are doubled; the result is then normalized to a
/// leftmost start and an empty board.
PrdEmbedding prd_to_cfp1d(const PrdInstance& instance);

/// Decodes a complete solution of embedding.instance. Throws ContractViolation
/// if the signs are not one.
Permutation permutation_from_embedding(const PrdEmbedding& e, const SignVector& signs);

/// Empty board of length n, start 0 -> PRD over [1..n+1] with a = (n, J...).
/// Refused when the board has blocked cells or the start is not leftmost.
PrdInstance cfp1d_to_prd(const Cfp1dInstance& instance);

/// pi_1 = n+1, pi_i = x_{i-1} + 1.
Permutation permutation_from_cfp_solution(const Cfp1dInstance& instance,
                                          const SignVector& signs);
/// Converse direction: mirrors first when pi_1 = 1. Throws ContractViolation
/// when pi is not a solution starting at an end value.
SignVector cfp_solution_from_permutation(const Cfp1dInstance& instance,
                                         const Permutation& perm);

struct PrdSat {
  Permutation perm;
};
struct PrdUnsat {};
struct PrdInconclusive {
  std::uint64_t nodes = 0;
};

struct PrdSolveResult {
  std::variant<PrdSat, PrdUnsat, PrdInconclusive> outcome;
  std::uint64_t nodes = 0;
  bool short_circuit = false;  // a_i >= n

  bool sat() const { return std::holds_alternative<PrdSat>(outcome); }
  bool unsat() const { return std::holds_alternative<PrdUnsat>(outcome); }
  bool inconclusive() const { return std::holds_alternative<PrdInconclusive>(outcome); }
  const Permutation& perm() const { return std::get<PrdSat>(outcome).perm; }
};

PrdSolveResult solve_prd(const PrdInstance& instance, const SearchLimits& limits = {});

}  // namespace frog
