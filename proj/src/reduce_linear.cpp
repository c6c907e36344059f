#include <cstdlib>
#include <limits>
#include <sstream>

#include "frog/prd.hpp"
#include "frog/reduce.hpp"

namespace frog {

Cfp1dInstance unsolvable_1d() {
  Cfp1dInstance out;
  out.length = 2;
  out.start = 0;
  out.jumps = {2};
  return out;
}

LinearReduction reduce_2d_to_1d(const CfpInstance& instance) {
  const auto& b = instance.board;
  LinearReduction out;
  const std::int64_t n = std::max(b.width(), b.height());
  out.side = static_cast<int>(n);
  for (std::size_t i = 0; i < instance.jumps.size(); ++i) {
    const auto& j = instance.jumps[i];
    if (std::abs(j.dx) >= n || std::abs(j.dy) >= n) {
      out.rejected = true;
      out.instance = unsolvable_1d();
      out.diagnostics.push_back(
          {Severity::Warning, "jump " + std::to_string(i + 1) + " (" + std::to_string(j.dx) +
                                  "," + std::to_string(j.dy) + ") reaches the board side " +
                                  std::to_string(n) + "; emitted an unsolvable instance"});
      return out;
    }
  }
  const std::int64_t length = 9 * n * n;
  if (length > std::numeric_limits<int>::max()) throw Refused("linearized board too large");
  if (b.width() != b.height())
    out.diagnostics.push_back({Severity::Warning, "board padded to a " + std::to_string(n) +
                                                      "x" + std::to_string(n) + " square"});
  auto map = [&](Cell c) { return (c.x + n) + 3 * n * (c.y + n); };
  out.instance.length = static_cast<int>(length);
  out.instance.start = static_cast<int>(map(b.start()));
  // Everything is blocked except the original non-blocked cells.
  std::vector<std::uint8_t> open(static_cast<std::size_t>(length), 0);
  for (int y = 0; y < b.height(); ++y)
    for (int x = 0; x < b.width(); ++x)
      if (!b.blocked({x, y})) open[static_cast<std::size_t>(map({x, y}))] = 1;
  out.instance.blocked.reserve(static_cast<std::size_t>(length));
  for (std::int64_t i = 0; i < length; ++i)
    if (!open[static_cast<std::size_t>(i)]) out.instance.blocked.push_back(static_cast<int>(i));
  out.instance.jumps.reserve(instance.jumps.size());
  for (const auto& j : instance.jumps) out.instance.jumps.push_back(j.dx + 3 * n * j.dy);
  return out;
}

Cfp1dInstance normalize_start_leftmost(const Cfp1dInstance& instance) {
  Cfp1dInstance out;
  out.length = instance.length + 1;
  out.start = 0;
  out.blocked.reserve(instance.blocked.size());
  for (int c : instance.blocked) out.blocked.push_back(c + 1);
  out.jumps.reserve(instance.jumps.size() + 1);
  out.jumps.push_back(instance.start + 1);
  out.jumps.insert(out.jumps.end(), instance.jumps.begin(), instance.jumps.end());
  return out;
}

EmptyReduction reduce_1d_to_empty(const Cfp1dInstance& instance) {
  if (instance.start != 0) throw ContractViolation("reduce_1d_to_empty needs start 0");
  EmptyReduction out;
  const std::int64_t n = instance.length;
  for (std::size_t i = 0; i < instance.jumps.size(); ++i) {
    if (std::llabs(instance.jumps[i]) >= n) {
      out.rejected = true;
      out.instance = unsolvable_1d();
      out.diagnostics.push_back({Severity::Warning,
                                 "jump " + std::to_string(i + 1) + " has magnitude >= board length " +
                                     std::to_string(n) + "; emitted an unsolvable instance"});
      return out;
    }
  }
  if (2 * n + 1 > std::numeric_limits<int>::max()) throw Refused("empty board too large");
  std::vector<std::int64_t> xs{0};
  for (int c : instance.blocked) {
    if (c == 0) throw ContractViolation("start cell is blocked");
    xs.push_back(c);
  }
  xs.push_back(n);
  auto& J = out.instance.jumps;
  J.reserve(2 * static_cast<std::size_t>(n));
  J.push_back(xs[1] - xs[0] + 1);
  for (std::size_t i = 2; i < xs.size(); ++i) J.push_back(xs[i] - xs[i - 1]);
  for (std::int64_t i = 0; i + 1 < n; ++i) J.push_back(1);
  J.push_back(2 * n - 1);
  out.back_jump = J.size() - 1;
  out.prefix_length = J.size();
  J.insert(J.end(), instance.jumps.begin(), instance.jumps.end());
  out.instance.length = static_cast<int>(2 * n + 1);
  out.instance.start = 0;
  return out;
}

SignVector lift_signs_to_normalized(const SignVector& s) {
  SignVector out;
  out.push_back(1);
  out.append(s);
  return out;
}

SignVector lift_signs_to_empty(const EmptyReduction& r, const SignVector& s) {
  if (r.rejected) throw ContractViolation("rejected instance has no solutions to lift");
  SignVector out;
  for (std::size_t i = 0; i < r.prefix_length; ++i) out.push_back(i == r.back_jump ? -1 : 1);
  out.append(s);
  return out;
}

SignVector drop_empty_prefix(const EmptyReduction& r, const SignVector& s) {
  if (r.rejected) throw ContractViolation("rejected instance has no solutions");
  if (s.size() != r.instance.jumps.size())
    throw ContractViolation("sign vector length does not match the reduced instance");
  for (std::size_t i = 0; i < r.prefix_length; ++i)
    if (s[i] != (i == r.back_jump ? -1 : 1))
      throw ContractViolation("prefix jump " + std::to_string(i + 1) + " is not the forced one");
  std::vector<std::int8_t> rest(s.values().begin() + static_cast<std::ptrdiff_t>(r.prefix_length),
                                s.values().end());
  return SignVector(std::move(rest));
}

std::pair<FullReduction, PrdInstance> reduce_full(const GridGraph& g) {
  FullReduction full;
  full.ham = reduce_ham_to_cfp(g);
  const auto& L = full.ham.layout;
  const auto& inst = full.ham.instance;
  auto line = [](auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
  };
  full.provenance.push_back(line("ham2cfp vertices=", L.n, " k=", L.strip.k, " w=", L.strip.w,
                                 " v=", L.strip.v, " width=", inst.board.width(),
                                 " height=", inst.board.height(), " empty=",
                                 inst.board.empty_count(), " jumps=", inst.jumps.size()));
  LinearReduction lin = reduce_2d_to_1d(inst);
  full.provenance.push_back(line("cfp2lin side=", lin.side, " length=", lin.instance.length,
                                 " blocked=", lin.instance.blocked.size(),
                                 " jumps=", lin.instance.jumps.size(),
                                 " rejected=", lin.rejected ? 1 : 0));
  Cfp1dInstance left = normalize_start_leftmost(lin.instance);
  full.provenance.push_back(line("leftmost length=", left.length,
                                 " blocked=", left.blocked.size(), " jumps=", left.jumps.size()));
  lin = {};
  EmptyReduction empty = reduce_1d_to_empty(left);
  full.provenance.push_back(line("lin2empty length=", empty.instance.length,
                                 " jumps=", empty.instance.jumps.size(),
                                 " rejected=", empty.rejected ? 1 : 0));
  left = {};
  PrdInstance prd = cfp1d_to_prd(empty.instance);
  full.provenance.push_back(line("empty2prd n=", prd.n(), " differences=", prd.differences.size()));
  return {std::move(full), std::move(prd)};
}

}  // namespace frog
