#include "doctest.h"
#include "frog/io.hpp"
#include "frog/reduce.hpp"
#include "frog/solver.hpp"
#include "support.hpp"

using namespace frog;

namespace {

CfpInstance line(const char* board, std::vector<int> jumps) {
  CfpInstance inst{parse_board(board), {}};
  for (int j : jumps) inst.jumps.push_back({j, 0});
  return inst;
}

// First complete vector when +1 is tried before -1: the greatest element
// under the usual ordering of {-1, +1} sequences.
SignVector first_in_search_order(const std::set<SignVector>& all) { return *all.rbegin(); }

}  // namespace

TEST_CASE("solve: F.. with [1,1]") {
  auto r = solve(line("F..", {1, 1}));
  REQUIRE(r.solved());
  CHECK(r.signs().to_string() == "++");
}

TEST_CASE("solve: F.. with [2,2] is unsolvable") {
  auto inst = line("F..", {2, 2});
  CHECK(ref::brute(inst).empty());
  CHECK(solve(inst).unsolvable());
}

TEST_CASE("oracle: F.. with [1,1] has exactly one solution") {
  CHECK(oracle_enumerate(line("F..", {1, 1})) == std::set<SignVector>{SignVector::parse("++")});
}

TEST_CASE("oracle refuses above its cap") {
  CfpInstance inst{Board2D(22, 1, {0, 0}), std::vector<Jump>(21, Jump{1, 0})};
  CHECK_THROWS_AS(oracle_enumerate(inst), Refused);
  CHECK(oracle_enumerate(inst, 21).size() == 1);
}

TEST_CASE("oracle and enumeration match the reference brute force") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 150; ++it) {
    auto inst = ref::random_instance(rng, static_cast<std::size_t>(ref::uniform(rng, 0, 10)));
    auto expect = ref::brute(inst);
    CHECK(oracle_enumerate(inst) == expect);
    CHECK(enumerate_solutions(inst) == expect);
  }
}

TEST_CASE("solver agrees with the oracle and returns the first vector in search order") {
  std::mt19937_64 rng(22);
  int sat = 0, unsat = 0;
  for (int it = 0; it < 250; ++it) {
    auto inst = ref::random_instance(rng, static_cast<std::size_t>(ref::uniform(rng, 1, 14)));
    auto all = ref::brute(inst);
    auto r = solve(inst);
    REQUIRE_FALSE(r.inconclusive());
    CHECK(r.solved() == !all.empty());
    if (r.solved()) {
      ++sat;
      CHECK(verify(inst, r.signs()).complete);
      CHECK(r.signs() == first_in_search_order(all));
    } else {
      ++unsat;
    }
  }
  CHECK(sat > 50);
  CHECK(unsat > 50);
}

TEST_CASE("the failure cache does not change results") {
  std::mt19937_64 rng(23);
  SearchLimits off;
  off.remember_failures = false;
  SearchLimits tiny;
  tiny.failure_cache_log2 = 2;
  for (int it = 0; it < 150; ++it) {
    auto inst = ref::random_instance(rng, static_cast<std::size_t>(ref::uniform(rng, 1, 14)));
    auto a = solve(inst), b = solve(inst, off), c = solve(inst, tiny);
    CHECK(a.solved() == b.solved());
    CHECK(a.solved() == c.solved());
    if (a.solved()) {
      CHECK(a.signs() == b.signs());
      CHECK(a.signs() == c.signs());
    }
  }
}

TEST_CASE("node budget: inconclusive below, identical at or above") {
  std::mt19937_64 rng(24);
  for (int it = 0; it < 60; ++it) {
    auto inst = ref::random_instance(rng, static_cast<std::size_t>(ref::uniform(rng, 4, 12)));
    SearchLimits lim;
    lim.remember_failures = false;
    auto full = solve(inst, lim);
    for (std::uint64_t b : {full.nodes, full.nodes + 1, full.nodes * 3 + 10}) {
      lim.max_nodes = b == 0 ? 1 : b;
      auto r = solve(inst, lim);
      CHECK(r.solved() == full.solved());
      CHECK(r.unsolvable() == full.unsolvable());
      if (r.solved()) CHECK(r.signs() == full.signs());
    }
    if (full.nodes > 1) {
      lim.max_nodes = full.nodes - 1;
      CHECK(solve(inst, lim).inconclusive());
    }
  }
}

TEST_CASE("repeated solves are identical") {
  std::mt19937_64 rng(25);
  for (int it = 0; it < 50; ++it) {
    auto inst = ref::random_instance(rng, 10);
    auto a = solve(inst), b = solve(inst);
    CHECK(a.nodes == b.nodes);
    CHECK(a.solved() == b.solved());
    if (a.solved()) CHECK(a.signs() == b.signs());
  }
}

TEST_CASE("edge gadget fixture at w=15 has four traversals, one per lattice neighbour") {
  auto inst = edge_gadget_fixture(4);
  auto all = oracle_enumerate(inst);
  CHECK(all == ref::brute(inst));
  REQUIRE(all.size() == 4);
  std::set<Cell> ends;
  for (const auto& s : all) ends.insert(verify(inst, s).final_cell());
  CHECK(ends == std::set<Cell>{{12, 8}, {4, 8}, {8, 12}, {8, 4}});
}

TEST_CASE("solver on the reduced 2x2 grid finds a verified traversal") {
  GridGraph g{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {0, 0}, {1, 0}};
  auto r = reduce_ham_to_cfp(g);
  SearchLimits lim;
  lim.max_nodes = 100'000'000;
  auto s = solve(r.instance, lim);
  REQUIRE(s.solved());
  CHECK(verify(r.instance, s.signs()).complete);
}
