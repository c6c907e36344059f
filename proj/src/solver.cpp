#include "frog/solver.hpp"

#include <memory>
#include <random>

namespace frog {
namespace {

struct Key {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

// Lossy direct-mapped cache of 128-bit state keys. An eviction only loses a
// shortcut; a hit means the identical state was already exhausted.
class FailureCache {
 public:
  explicit FailureCache(unsigned log2) : mask_((std::size_t{1} << log2) - 1) {
    slots_.resize(mask_ + 1);
  }
  bool contains(const Key& k) const {
    const Key& s = slots_[k.a & mask_];
    return s.a == k.a && s.b == k.b && (k.a | k.b) != 0;
  }
  void insert(const Key& k) { slots_[k.a & mask_] = k; }

 private:
  std::size_t mask_;
  std::vector<Key> slots_;
};

struct ZobristTables {
  std::vector<Key> visited;
  std::vector<Key> frog;

  explicit ZobristTables(std::size_t cells) : visited(cells), frog(cells) {
    std::mt19937_64 rng(0x5eedf00dULL);
    for (auto& k : visited) k = {rng(), rng()};
    for (auto& k : frog) k = {rng(), rng()};
  }
};

inline Key mix_step(Key k, std::size_t step) {
  std::uint64_t s = (step + 1) * 0x9E3779B97F4A7C15ULL;
  s ^= s >> 29;
  return {k.a ^ s, k.b ^ (s * 0xBF58476D1CE4E5B9ULL)};
}

}  // namespace

SolveResult solve(const CfpInstance& instance, const SearchLimits& limits) {
  const auto& board = instance.board;
  const auto& jumps = instance.jumps;
  const std::size_t m = jumps.size();
  SolveResult result;

  if (!board.contains(board.start()) || board.blocked(board.start())) {
    result.outcome = Unsolvable{};
    return result;
  }

  // Occupancy: 1 = blocked or visited.
  std::vector<std::uint8_t> occupied = board.blocked_bitmap();
  std::vector<Cell> pos(m + 1);
  std::vector<std::int8_t> tried(m, 0);  // 0 none, 1 tried +1, 2 tried both
  pos[0] = board.start();
  occupied[board.index(pos[0])] = 1;

  const bool memo = limits.remember_failures;
  std::unique_ptr<ZobristTables> zobrist;
  std::unique_ptr<FailureCache> cache;
  std::vector<Key> hash;  // visited-set hash after step i
  if (memo) {
    zobrist = std::make_unique<ZobristTables>(board.cell_count());
    cache = std::make_unique<FailureCache>(limits.failure_cache_log2);
    hash.resize(m + 1);
    hash[0] = zobrist->visited[board.index(pos[0])];
  }
  auto state_key = [&](std::size_t depth) {
    Key k = hash[depth];
    const Key& f = zobrist->frog[board.index(pos[depth])];
    return mix_step({k.a ^ f.a, k.b ^ f.b}, depth);
  };

  std::uint64_t nodes = 0;
  std::size_t depth = 0;
  while (true) {
    if (depth == m) {
      std::vector<std::int8_t> signs(m);
      for (std::size_t i = 0; i < m; ++i) signs[i] = tried[i] == 1 ? 1 : -1;
      result.outcome = Solved{SignVector(std::move(signs))};
      result.nodes = nodes;
      return result;
    }
    bool advanced = false;
    while (tried[depth] < 2) {
      int sign = tried[depth] == 0 ? 1 : -1;
      ++tried[depth];
      const Jump& j = jumps[depth];
      Cell next{pos[depth].x + sign * j.dx, pos[depth].y + sign * j.dy};
      if (!board.contains(next)) continue;
      std::size_t idx = board.index(next);
      if (occupied[idx]) continue;
      if (limits.max_nodes != 0 && nodes >= limits.max_nodes) {
        result.outcome = Inconclusive{nodes};
        result.nodes = nodes;
        return result;
      }
      ++nodes;
      pos[depth + 1] = next;
      if (memo) {
        const Key& z = zobrist->visited[idx];
        hash[depth + 1] = {hash[depth].a ^ z.a, hash[depth].b ^ z.b};
        if (depth + 1 < m && cache->contains(state_key(depth + 1))) continue;
      }
      occupied[idx] = 1;
      ++depth;
      advanced = true;
      break;
    }
    if (advanced) continue;
    // Both directions exhausted at this depth.
    if (memo) cache->insert(state_key(depth));
    tried[depth] = 0;
    if (depth == 0) break;
    --depth;
    occupied[board.index(pos[depth + 1])] = 0;
  }
  result.outcome = Unsolvable{};
  result.nodes = nodes;
  return result;
}

SolveResult solve_1d(const Cfp1dInstance& instance, const SearchLimits& limits) {
  return solve(lift_1d(instance), limits);
}

}  // namespace frog
