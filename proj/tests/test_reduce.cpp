#include "doctest.h"
#include "frog/prd.hpp"
#include "frog/reduce.hpp"
#include "frog/solver.hpp"
#include "support.hpp"

using namespace frog;

namespace {

GridGraph random_graph(std::mt19937_64& rng, int min_n, int max_n) {
  for (;;) {
    std::vector<Cell> cells;
    for (int y = 0; y < 3; ++y)
      for (int x = 0; x < 3; ++x) cells.push_back({x, y});
    std::shuffle(cells.begin(), cells.end(), rng);
    const int n = ref::uniform(rng, min_n, max_n);
    cells.resize(static_cast<std::size_t>(n));
    const Cell s = cells[0];
    const Cell t = cells[static_cast<std::size_t>(ref::uniform(rng, 1, n - 1))];
    std::shuffle(cells.begin(), cells.end(), rng);
    return {cells, s, t};
  }
}

// All complete 1-D sign vectors by simulating every mask.
std::set<SignVector> brute_1d(const Cfp1dInstance& inst) {
  std::set<SignVector> out;
  const std::size_t m = inst.jumps.size();
  std::set<std::int64_t> blocked(inst.blocked.begin(), inst.blocked.end());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    auto s = ref::signs_of(mask, m);
    std::set<std::int64_t> seen{inst.start};
    std::int64_t at = inst.start;
    bool ok = true;
    for (std::size_t i = 0; ok && i < m; ++i) {
      at += s[i] * inst.jumps[i];
      ok = at >= 0 && at < inst.length && !blocked.count(at) && seen.insert(at).second;
    }
    if (ok) out.insert(ref::to_sv(s));
  }
  return out;
}

bool in_graph_area(const ReductionLayout& L, Cell c) {
  return c.x >= 0 && c.y >= 0 && c.x < L.strip.w && c.y < L.strip.w;
}

}  // namespace

TEST_CASE("layout: m_side 3 gives k=4, w=15, v=8") {
  GridGraph g{{{0, 0}, {1, 0}}, {0, 0}, {1, 0}};
  CHECK(g.m_side() == 3);
  CHECK(layout_k(3) == 4);
  auto r = reduce_ham_to_cfp(g);
  CHECK(r.layout.strip == StripParams::from_k(4));
  CHECK(r.layout.strip.w == 15);
  CHECK(r.layout.strip.v == 8);
  CHECK(layout_k(1) == 2);
  CHECK(layout_k(4) == 4);
  CHECK(layout_k(5) == 5);
}

TEST_CASE("layout: node at lattice (2,1) maps to graph-area cell (8,4)") {
  // The bounding box already starts at (1,1), so no translation applies.
  GridGraph g{{{1, 1}, {2, 1}}, {1, 1}, {2, 1}};
  auto r = reduce_ham_to_cfp(g);
  CHECK(r.layout.to_board({2, 1}) == Cell{8, 4});
  CHECK(r.layout.to_lattice({8, 4}) == Cell{2, 1});
  CHECK(r.layout.target_cell == Cell{9, 4});
  CHECK(r.layout.hop_cell == Cell{45, 4});
  // A shifted copy of the graph produces the identical instance.
  GridGraph h{{{-3, 5}, {-2, 5}}, {-3, 5}, {-2, 5}};
  auto q = reduce_ham_to_cfp(h);
  CHECK(q.instance.board == r.instance.board);
  CHECK(q.instance.jumps == r.instance.jumps);
}

TEST_CASE("layout: board is (3w+2v) x 7(2n-1)w with rows l_i = (2i-1)7w") {
  GridGraph g{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {0, 0}, {1, 0}};
  auto r = reduce_ham_to_cfp(g);
  const auto& L = r.layout;
  CHECK(L.width == 61);
  CHECK(L.height == 735);
  CHECK(r.instance.board.width() == 61);
  CHECK(r.instance.board.height() == 735);
  CHECK(L.gadget_rows == std::vector<int>{105, 315, 525});
  CHECK(L.top_strip_row(1) == 315 + 30);
  CHECK(L.bottom_strip_row(1) == 315 + 60);
  CHECK(L.edge_begin == std::vector<std::size_t>{0, 5, 10});
  CHECK(L.target_jump == 15);
  CHECK(L.cleanup_begin == 16);
  CHECK(r.instance.jumps[0] == Jump{0, 105 + 30});
  CHECK(r.instance.jumps[4] == Jump{0, 105 + 60});
  CHECK(r.instance.jumps[15] == Jump{1, 0});
}

TEST_CASE("layout: 1x2 grid jump list") {
  GridGraph g{{{0, 0}, {1, 0}}, {0, 0}, {1, 0}};
  auto r = reduce_ham_to_cfp(g);
  const auto& L = r.layout;
  CHECK(L.width == 61);
  CHECK(L.height == 315);
  CHECK(r.instance.jumps.size() == 969);
  CHECK(L.strip_begin == std::vector<std::size_t>{8, 489});
  CHECK(r.instance.jumps[6] == Jump{45 - 9, 0});
  CHECK(r.instance.jumps[7] == Jump{0, L.top_strip_row(0) - 1 - 4});
  CHECK(L.total_jumps == 969);
}

TEST_CASE("reduction refuses degenerate graphs") {
  CHECK_THROWS_AS(reduce_ham_to_cfp({{{0, 0}}, {0, 0}, {0, 0}}), Refused);
  CHECK_THROWS_AS(reduce_ham_to_cfp({{{0, 0}, {1, 0}}, {0, 0}, {0, 0}}), Refused);
  CHECK_THROWS_AS(reduce_ham_to_cfp({{{0, 0}, {1, 0}}, {0, 0}, {5, 0}}), ContractViolation);
}

TEST_CASE("counting invariant and dimensions on random graphs") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 40; ++it) {
    auto g = random_graph(rng, 2, 5);
    auto r = reduce_ham_to_cfp(g);
    const auto& L = r.layout;
    CHECK(r.instance.jumps.size() == r.instance.board.empty_count());
    CHECK(validate_instance(r.instance).empty());
    CHECK(L.width == 3 * L.strip.w + 2 * L.strip.v);
    CHECK(L.height == 7 * (2 * L.n - 1) * L.strip.w);
    CHECK(static_cast<int>(L.gadget_rows.size()) == L.n - 1);
    CHECK(L.strip_begin.size() == 2 * L.gadget_rows.size());
    CHECK((1 << L.strip.k) >= 4 * g.m_side());
    CHECK((1 << (L.strip.k - 1)) < 4 * g.m_side());
  }
}

TEST_CASE("ham_oracle examples") {
  auto p = ham_oracle({{{0, 0}, {1, 0}}, {0, 0}, {1, 0}});
  REQUIRE(p);
  CHECK(*p == NodePath{{0, 0}, {1, 0}});
  CHECK(ham_oracle({{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {0, 0}, {1, 0}}));
  auto q = ham_oracle({{{0, 0}, {1, 0}, {2, 0}}, {0, 0}, {2, 0}});
  REQUIRE(q);
  CHECK(*q == NodePath{{0, 0}, {1, 0}, {2, 0}});
  std::vector<Cell> many;
  for (int x = 0; x < 11; ++x) many.push_back({x, 0});
  CHECK_THROWS_AS(ham_oracle({many, {0, 0}, {10, 0}}), Refused);
}

TEST_CASE("the 2x2 grid with diagonal s and t has no Hamiltonian path") {
  GridGraph g{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {0, 0}, {1, 1}};
  CHECK_FALSE(ref::brute_ham(g));
  CHECK_FALSE(ham_oracle(g));
  CHECK(solve(reduce_ham_to_cfp(g).instance).unsolvable());
}

TEST_CASE("ham_oracle agrees with brute force and returns valid paths") {
  std::mt19937_64 rng(32);
  int sat = 0;
  for (int it = 0; it < 300; ++it) {
    auto g = random_graph(rng, 2, 7);
    auto p = ham_oracle(g);
    CHECK(p.has_value() == ref::brute_ham(g));
    if (p) {
      ++sat;
      CHECK(is_hamiltonian_path(g, *p));
    }
  }
  CHECK(sat > 20);
}

TEST_CASE("witness from a Hamiltonian path verifies and extracts back") {
  std::mt19937_64 rng(33);
  int checked = 0;
  for (int it = 0; it < 2000 && checked < 40; ++it) {
    auto g = random_graph(rng, 2, 6);
    auto p = ham_oracle(g);
    if (!p) continue;
    ++checked;
    auto r = reduce_ham_to_cfp(g);
    auto s = witness_from_ham_path(r, *p);
    Trace t = verify(r.instance, s);
    REQUIRE(t.complete);
    CHECK(covers_board(r.instance, t));
    CHECK(extract_ham_path(r, s) == *p);
  }
  CHECK(checked == 40);
}

TEST_CASE("witness rejects non-Hamiltonian paths and extraction rejects bad signs") {
  GridGraph g{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {0, 0}, {1, 0}};
  auto r = reduce_ham_to_cfp(g);
  CHECK_THROWS_AS(witness_from_ham_path(r, {{0, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(witness_from_ham_path(r, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}), std::invalid_argument);
  SignVector all_plus(std::vector<std::int8_t>(r.instance.jumps.size(), 1));
  CHECK_THROWS_AS(extract_ham_path(r, all_plus), ContractViolation);
  CHECK_THROWS_AS(extract_ham_path(r, SignVector::parse("+")), ContractViolation);
}

TEST_CASE("solver witnesses respect the phase boundaries") {
  for (const GridGraph& g : {GridGraph{{{0, 0}, {1, 0}}, {0, 0}, {1, 0}},
                             GridGraph{{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {0, 0}, {1, 0}}}) {
    auto r = reduce_ham_to_cfp(g);
    const auto& L = r.layout;
    SearchLimits lim;
    lim.max_nodes = 100'000'000;
    auto s = solve(r.instance, lim);
    REQUIRE(s.solved());
    Trace t = verify(r.instance, s.signs());
    REQUIRE(t.complete);
    for (std::size_t b : L.edge_begin) {
      CHECK(in_graph_area(L, t.visited[b]));
      CHECK(g.has_vertex(L.to_lattice(t.visited[b])));
      CHECK(in_graph_area(L, t.visited[b + 5]));
    }
    CHECK(t.visited[L.target_jump] == L.to_board(g.t));
    CHECK(t.visited[L.cleanup_begin] == L.target_cell);
    CHECK(t.visited[L.cleanup_begin + 1] == L.hop_cell);
    for (std::size_t i = 0; i < L.strip_begin.size(); ++i) {
      const int top = i % 2 == 0 ? L.top_strip_row(i / 2) : L.bottom_strip_row(i / 2);
      CHECK(t.visited[L.strip_begin[i]] == Cell{3 * L.strip.w, top - 1});
    }
    CHECK(t.final_cell() == Cell{3 * L.strip.w, L.bottom_strip_row(L.gadget_rows.size() - 1) + L.strip.w});
    auto path = extract_ham_path(r, s.signs());
    CHECK(is_hamiltonian_path(g, path));
  }
}

TEST_CASE("gadget rows are separated by parity") {
  for (int k : {4, 5})
    for (int n = 2; n <= 6; ++n) CHECK(gadget_rows_separated(k, n));
}

TEST_CASE("2-D to 1-D examples") {
  CfpInstance sq{Board2D(3, 3, {1, 1}), std::vector<Jump>(8, Jump{1, 0})};
  auto r = reduce_2d_to_1d(sq);
  CHECK(r.instance.length == 81);
  CHECK(r.side == 3);
  CHECK_FALSE(r.rejected);
  CHECK(r.diagnostics.empty());
  CfpInstance two{Board2D(3, 3, {0, 0}), std::vector<Jump>(8, Jump{1, 1})};
  two.jumps[1] = {-2, 0};
  auto q = reduce_2d_to_1d(two);
  CHECK(q.instance.jumps[0] == 10);
  CHECK(q.instance.jumps[1] == -2);
  CHECK(q.instance.start == 3 + 9 * 3);
  CHECK(q.instance.empty_count() == 8);
}

TEST_CASE("2-D to 1-D rejects jumps reaching the board side") {
  CfpInstance inst{Board2D(2, 2, {0, 0}), {{1, 0}, {0, 1}, {2, 0}}};
  auto r = reduce_2d_to_1d(inst);
  CHECK(r.rejected);
  CHECK(r.instance == unsolvable_1d());
  CHECK(r.diagnostics.size() == 1);
  CHECK(ref::brute(inst).empty());
  CHECK_FALSE(ref::brute_sat_1d(unsolvable_1d()));
}

TEST_CASE("2-D to 1-D pads rectangles with a warning") {
  CfpInstance inst{Board2D(3, 1, {0, 0}), {{1, 0}, {1, 0}}};
  auto r = reduce_2d_to_1d(inst);
  CHECK(r.side == 3);
  CHECK(r.instance.length == 81);
  REQUIRE(r.diagnostics.size() == 1);
  CHECK(r.diagnostics[0].severity == Severity::Warning);
  CHECK(brute_1d(r.instance) == ref::brute(inst));
}

TEST_CASE("2-D to 1-D transports sign vectors exactly") {
  std::mt19937_64 rng(34);
  int sat = 0, rejected = 0;
  for (int it = 0; it < 100; ++it) {
    auto inst = ref::random_instance(rng, static_cast<std::size_t>(ref::uniform(rng, 1, 12)));
    auto expect = ref::brute(inst);
    auto r = reduce_2d_to_1d(inst);
    CHECK(r.instance.empty_count() == r.instance.jumps.size());
    if (r.rejected) {
      ++rejected;
      CHECK(expect.empty());
      continue;
    }
    CHECK(brute_1d(r.instance) == expect);
    if (!expect.empty()) ++sat;
  }
  CHECK(sat > 10);
  (void)rejected;
}

TEST_CASE("leftmost normalization examples") {
  Cfp1dInstance a{3, {}, 0, {1, 1}};
  auto n0 = normalize_start_leftmost(a);
  CHECK(n0.length == 4);
  CHECK(n0.jumps == std::vector<std::int64_t>{1, 1, 1});
  Cfp1dInstance b{5, {1}, 3, {1, 2, 1}};
  auto n3 = normalize_start_leftmost(b);
  CHECK(n3.jumps.front() == 4);
  CHECK(n3.start == 0);
  CHECK(n3.blocked == std::vector<int>{2});
  CHECK(n3.empty_count() == n3.jumps.size());
}

TEST_CASE("leftmost normalization preserves solvability and lifts signs") {
  std::mt19937_64 rng(35);
  for (int it = 0; it < 50; ++it) {
    auto inst = ref::random_1d(rng, ref::uniform(rng, 1, 10), false);
    auto norm = normalize_start_leftmost(inst);
    auto before = brute_1d(inst);
    auto after = brute_1d(norm);
    CHECK(before.empty() == after.empty());
    for (const auto& s : before) CHECK(after.count(lift_signs_to_normalized(s)) == 1);
    CHECK(after.size() == before.size());
  }
}

TEST_CASE("empty-board examples") {
  Cfp1dInstance a{4, {2}, 0, {1, 2}};
  auto r = reduce_1d_to_empty(a);
  CHECK(r.instance.length == 9);
  CHECK(r.instance.blocked.empty());
  CHECK(r.instance.jumps == std::vector<std::int64_t>{3, 2, 1, 1, 1, 7, 1, 2});
  CHECK(r.prefix_length == 6);
  CHECK(r.back_jump == 5);
  Cfp1dInstance b{3, {}, 0, {1, 1}};
  auto q = reduce_1d_to_empty(b);
  CHECK(q.instance.length == 7);
  CHECK(q.instance.jumps == std::vector<std::int64_t>{4, 1, 1, 5, 1, 1});
  CHECK_FALSE(brute_1d(q.instance).empty());
  CHECK_THROWS_AS(reduce_1d_to_empty({3, {}, 1, {1, 1}}), ContractViolation);
}

TEST_CASE("empty-board rejection for jumps as long as the board") {
  auto r = reduce_1d_to_empty({3, {}, 0, {3, 1}});
  CHECK(r.rejected);
  CHECK(r.instance == unsolvable_1d());
  CHECK_FALSE(ref::brute_sat_1d({3, {}, 0, {3, 1}}));
}

TEST_CASE("empty-board reduction: equisatisfiable with a forced prefix") {
  std::mt19937_64 rng(36);
  int sat = 0;
  for (int it = 0; it < 100; ++it) {
    auto inst = ref::random_1d(rng, ref::uniform(rng, 1, 12), true);
    auto r = reduce_1d_to_empty(inst);
    auto before = brute_1d(inst);
    if (r.rejected) {
      CHECK(before.empty());
      continue;
    }
    CHECK(r.instance.jumps.size() == 2 * static_cast<std::size_t>(inst.length));
    CHECK(r.instance.length == 2 * inst.length + 1);
    auto after = enumerate_solutions(lift_1d(r.instance));
    CHECK(before.empty() == after.empty());
    for (const auto& s : before) CHECK(after.count(lift_signs_to_empty(r, s)) == 1);
    std::set<SignVector> dropped;
    for (const auto& s : after) dropped.insert(drop_empty_prefix(r, s));
    CHECK(dropped == before);
    if (!before.empty()) ++sat;
  }
  CHECK(sat > 10);
}

TEST_CASE("drop_empty_prefix rejects an unforced prefix") {
  auto r = reduce_1d_to_empty({3, {}, 0, {1, 1}});
  CHECK_THROWS_AS(drop_empty_prefix(r, SignVector::parse("++++++")), ContractViolation);
  CHECK(drop_empty_prefix(r, SignVector::parse("+++-+-")) == SignVector::parse("+-"));
  CHECK_THROWS_AS(drop_empty_prefix(r, SignVector::parse("+")), ContractViolation);
}

TEST_CASE("full pipeline: 1x2 grid gives a satisfiable permutation instance") {
  GridGraph g{{{0, 0}, {1, 0}}, {0, 0}, {1, 0}};
  auto [full, prd] = reduce_full(g);
  REQUIRE(full.provenance.size() == 5);
  CHECK(full.provenance[0] == "ham2cfp vertices=2 k=4 w=15 v=8 width=61 height=315 empty=969 jumps=969");
  CHECK(full.provenance[1].rfind("cfp2lin side=315 length=893025 ", 0) == 0);
  CHECK(full.provenance[4] == "empty2prd n=1786054 differences=1786053");

  // Carry the Hamiltonian witness down every stage.
  auto w2 = witness_from_ham_path(full.ham, *ham_oracle(g));
  auto lin = reduce_2d_to_1d(full.ham.instance);
  REQUIRE(verify_1d(lin.instance, w2).complete);
  auto left = normalize_start_leftmost(lin.instance);
  auto wl = lift_signs_to_normalized(w2);
  REQUIRE(verify_1d(left, wl).complete);
  auto empty = reduce_1d_to_empty(left);
  auto we = lift_signs_to_empty(empty, wl);
  REQUIRE(verify_1d(empty.instance, we).complete);
  CHECK(cfp1d_to_prd(empty.instance) == prd);
  CHECK(verify_prd(prd, permutation_from_cfp_solution(empty.instance, we)));

  SearchLimits lim;
  lim.remember_failures = false;
  lim.max_nodes = 100'000'000;
  auto r = solve_prd(prd, lim);
  REQUIRE(r.sat());
  CHECK(verify_prd(prd, r.perm()));
}

TEST_CASE("full pipeline: 4-vertex path with interior s and t is unsatisfiable") {
  GridGraph g{{{0, 0}, {1, 0}, {2, 0}, {3, 0}}, {1, 0}, {2, 0}};
  CHECK_FALSE(ref::brute_ham(g));
  CHECK_FALSE(ham_oracle(g));
  auto [full, prd] = reduce_full(g);
  CHECK(full.provenance[0] ==
        "ham2cfp vertices=4 k=5 w=31 v=16 width=125 height=1519 empty=11927 jumps=11927");
  SearchLimits lim;
  lim.remember_failures = false;
  CHECK(solve(full.ham.instance, lim).unsolvable());
  auto lin = reduce_2d_to_1d(full.ham.instance);
  auto left = normalize_start_leftmost(lin.instance);
  CHECK(solve_1d(left, lim).unsolvable());
  // The forced prefix of the empty board makes plain search quadratic here:
  // the permutation solver can only be checked not to claim a solution.
  lim.max_nodes = 20'000'000;
  auto r = solve_prd(prd, lim);
  CHECK_FALSE(r.sat());
  CHECK(prd.n() == 41532502);
}
