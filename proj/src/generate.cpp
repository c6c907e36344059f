#include <random>

#include "frog/io.hpp"

namespace frog {
namespace {

// Uniform in [0, n) by rejection; std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

constexpr std::uint64_t kNodeBudget = 200000;
constexpr int kAttempts = 64;

}  // namespace

GeneratedInstance make_instance(int width, int height, int walk_length, std::uint64_t seed) {
  if (width < 1 || height < 1) throw std::invalid_argument("board dimensions must be positive");
  const std::int64_t cells = std::int64_t{width} * height;
  if (walk_length < 0 || walk_length > cells - 1)
    throw std::invalid_argument("walk length must be in [0, width*height-1]");

  std::vector<Jump> steps;
  for (int dy = -2; dy <= 2; ++dy)
    for (int dx = -2; dx <= 2; ++dx)
      if (dx || dy) steps.push_back({dx, dy});

  std::mt19937_64 rng(seed);
  Board2D shape(width, height, {0, 0});
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const Cell start{static_cast<int>(below(rng, width)), static_cast<int>(below(rng, height))};
    std::vector<Cell> walk{start};
    std::vector<std::uint8_t> used(static_cast<std::size_t>(cells), 0);
    used[shape.index(start)] = 1;
    // Each frame holds a shuffled move order and the next move to try.
    std::vector<std::pair<std::vector<Jump>, std::size_t>> frames;
    auto push_frame = [&] {
      std::vector<Jump> order = steps;
      for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[below(rng, i)]);
      frames.push_back({std::move(order), 0});
    };
    push_frame();
    std::uint64_t nodes = 0;
    while (static_cast<int>(walk.size()) <= walk_length && !frames.empty() &&
           nodes < kNodeBudget) {
      auto& [order, next] = frames.back();
      bool moved = false;
      while (next < order.size()) {
        const Jump d = order[next++];
        const Cell c{walk.back().x + d.dx, walk.back().y + d.dy};
        if (!shape.contains(c) || used[shape.index(c)]) continue;
        used[shape.index(c)] = 1;
        walk.push_back(c);
        ++nodes;
        moved = true;
        break;
      }
      if (moved) {
        push_frame();
        continue;
      }
      frames.pop_back();
      if (walk.size() > 1) {
        used[shape.index(walk.back())] = 0;
        walk.pop_back();
      }
    }
    if (static_cast<int>(walk.size()) != walk_length + 1) continue;

    GeneratedInstance out{{Board2D(width, height, start), {}}, {}};
    out.instance.board.fill_blocked(true);
    for (const auto& c : walk) out.instance.board.set_blocked(c, false);
    for (std::size_t i = 1; i < walk.size(); ++i) {
      Jump d{walk[i].x - walk[i - 1].x, walk[i].y - walk[i - 1].y};
      // Store the first nonzero component positive; the witness keeps the direction.
      const bool flip = d.dx < 0 || (d.dx == 0 && d.dy < 0);
      out.instance.jumps.push_back(flip ? -d : d);
      out.witness.push_back(flip ? -1 : 1);
    }
    return out;
  }
  throw ConstructionError("no self-avoiding walk of length " + std::to_string(walk_length) +
                          " found after " + std::to_string(kAttempts) + " attempts");
}

}  // namespace frog
