#include <cstring>
#include <functional>
#include <string>
#include <unordered_set>

#include "frog/solver.hpp"

namespace frog {

std::set<SignVector> oracle_enumerate(const CfpInstance& instance, std::size_t max_m) {
  const std::size_t m = instance.jumps.size();
  if (m > max_m || m >= 63)
    throw Refused("oracle refused: " + std::to_string(m) + " jumps exceeds cap " +
                  std::to_string(max_m));
  std::set<SignVector> out;
  std::vector<std::int8_t> signs(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t i = 0; i < m; ++i) signs[i] = (mask >> i) & 1 ? -1 : 1;
    SignVector sv(signs);
    if (verify(instance, sv).complete) out.insert(std::move(sv));
  }
  return out;
}

std::set<SignVector> enumerate_solutions(const CfpInstance& instance,
                                         std::size_t max_solutions) {
  const auto& b = instance.board;
  std::set<SignVector> out;
  if (!b.contains(b.start()) || b.blocked(b.start())) return out;
  // State = visited bitmap plus frog cell, stored verbatim.
  const std::size_t cells = b.cell_count();
  std::string state((cells + 7) / 8 + sizeof(std::size_t), '\0');
  auto flip = [&](Cell c) {
    const std::size_t i = b.index(c);
    state[i / 8] = static_cast<char>(state[i / 8] ^ (1 << (i % 8)));
  };
  auto set_frog = [&](Cell c) {
    const std::size_t i = b.index(c);
    std::memcpy(state.data() + (cells + 7) / 8, &i, sizeof i);
  };
  std::unordered_set<std::string> dead;
  std::vector<bool> used(cells, false);
  used[b.index(b.start())] = true;
  flip(b.start());
  std::vector<std::int8_t> signs;
  signs.reserve(instance.jumps.size());

  std::function<bool(Cell, std::size_t)> rec = [&](Cell at, std::size_t i) {
    if (i == instance.jumps.size()) {
      if (out.size() >= max_solutions)
        throw Refused("solution enumeration exceeded " + std::to_string(max_solutions));
      out.insert(SignVector(signs));
      return true;
    }
    bool any = false;
    for (int s : {1, -1}) {
      Cell n{at.x + s * instance.jumps[i].dx, at.y + s * instance.jumps[i].dy};
      if (!b.contains(n) || b.blocked(n) || used[b.index(n)]) continue;
      used[b.index(n)] = true;
      flip(n);
      set_frog(n);
      if (!dead.count(state)) {
        signs.push_back(static_cast<std::int8_t>(s));
        if (rec(n, i + 1)) {
          any = true;
        } else {
          set_frog(n);
          dead.insert(state);
        }
        signs.pop_back();
      }
      flip(n);
      used[b.index(n)] = false;
    }
    return any;
  };
  rec(b.start(), 0);
  return out;
}

}  // namespace frog
