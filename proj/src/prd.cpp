#include "frog/prd.hpp"

#include <algorithm>
#include <numeric>

namespace frog {

bool verify_prd(const PrdInstance& instance, const Permutation& perm) {
  const std::size_t n = instance.n();
  if (perm.size() != n)
    throw ContractViolation("permutation has " + std::to_string(perm.size()) +
                            " entries, instance needs " + std::to_string(n));
  std::vector<bool> seen(n + 1, false);
  for (auto p : perm) {
    if (p < 1 || p > static_cast<std::int64_t>(n) || seen[static_cast<std::size_t>(p)])
      return false;
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (std::llabs(perm[i + 1] - perm[i]) != instance.differences[i]) return false;
  return true;
}

Permutation mirror(const Permutation& perm) {
  const auto n = static_cast<std::int64_t>(perm.size());
  Permutation out(perm.size());
  std::transform(perm.begin(), perm.end(), out.begin(), [n](auto p) { return n - p + 1; });
  return out;
}

std::vector<Permutation> prd_oracle(const PrdInstance& instance) {
  const std::size_t n = instance.n();
  if (n > kPrdOracleCap)
    throw Refused("prd oracle refused: n=" + std::to_string(n) + " exceeds cap " +
                  std::to_string(kPrdOracleCap));
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Permutation> out;
  do {
    if (verify_prd(instance, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

int binary_k_for(std::size_t n) {
  int k = 2;
  while ((std::size_t{1} << k) < 2 * n) ++k;
  return k;
}

}  // namespace

PrdEmbedding prd_to_cfp1d(const PrdInstance& instance) {
  PrdEmbedding e;
  const std::size_t n = instance.n();
  e.n = n;
  const auto& a = instance.differences;
  if (n >= 2 && a[0] == static_cast<std::int64_t>(n) - 1) {
    e.kind = PrdEmbedding::Kind::Direct;
    e.instance.length = static_cast<int>(n - 1);
    e.instance.start = 0;
    e.instance.jumps.assign(a.begin() + 1, a.end());
    return e;
  }
  e.kind = PrdEmbedding::Kind::BinaryLine;
  const StripParams p = StripParams::from_k(binary_k_for(n));
  const int w = p.w;
  e.window = 2 * w;
  auto& line = e.line;
  line.length = 2 * w + 2 * static_cast<int>(n) - 1;
  line.start = p.v - 1;
  for (int c = w; c < line.length; ++c)
    if (c < 2 * w || (c - 2 * w) % 2) line.blocked.push_back(c);
  for (int m : gen_binary(p.k)) line.jumps.push_back(m);
  line.jumps.push_back(2 * w);
  for (auto d : a) line.jumps.push_back(2 * d);
  e.empty = reduce_1d_to_empty(normalize_start_leftmost(line));
  e.instance = e.empty.instance;
  return e;
}

Permutation permutation_from_embedding(const PrdEmbedding& e, const SignVector& signs) {
  if (e.kind == PrdEmbedding::Kind::Direct) {
    Trace1d t = verify_1d(e.instance, signs);
    if (!t.complete) throw ContractViolation("signs do not solve the embedded instance");
    Permutation out{static_cast<std::int64_t>(e.n)};
    for (auto x : t.visited) out.push_back(x + 1);
    return out;
  }
  SignVector normalized = drop_empty_prefix(e.empty, signs);
  std::vector<std::int8_t> rest(normalized.values().begin() + 1, normalized.values().end());
  if (normalized.empty() || normalized[0] != 1)
    throw ContractViolation("leftmost normalization jump must move right");
  Trace1d t = verify_1d(e.line, SignVector(std::move(rest)));
  if (!t.complete) throw ContractViolation("signs do not solve the embedded instance");
  const std::size_t entry = gen_binary(StripParams::from_k(binary_k_for(e.n)).k).size() + 1;
  Permutation out;
  for (std::size_t i = entry; i < t.visited.size(); ++i)
    out.push_back((t.visited[i] - e.window) / 2 + 1);
  return out;
}

PrdInstance cfp1d_to_prd(const Cfp1dInstance& instance) {
  if (!instance.blocked.empty())
    throw Refused("board has blocked cells; reduce it to an empty board first");
  if (instance.start != 0) throw Refused("start must be the leftmost cell");
  if (instance.jumps.size() + 1 != static_cast<std::size_t>(instance.length))
    throw ContractViolation("jump count must be board length - 1");
  PrdInstance out;
  out.differences.reserve(instance.jumps.size() + 1);
  out.differences.push_back(instance.length);
  for (auto j : instance.jumps) out.differences.push_back(std::llabs(j));
  return out;
}

Permutation permutation_from_cfp_solution(const Cfp1dInstance& instance,
                                          const SignVector& signs) {
  Trace1d t = verify_1d(instance, signs);
  if (!t.complete) throw ContractViolation("signs do not solve the instance");
  Permutation out{static_cast<std::int64_t>(instance.length) + 1};
  for (auto x : t.visited) out.push_back(x + 1);
  return out;
}

SignVector cfp_solution_from_permutation(const Cfp1dInstance& instance,
                                         const Permutation& perm) {
  const PrdInstance prd = cfp1d_to_prd(instance);
  if (!verify_prd(prd, perm)) throw ContractViolation("permutation does not solve the instance");
  Permutation p = perm.front() == 1 ? mirror(perm) : perm;
  SignVector out;
  for (std::size_t i = 0; i < instance.jumps.size(); ++i) {
    const std::int64_t step = p[i + 2] - p[i + 1];
    out.push_back(step == instance.jumps[i] ? 1 : -1);
  }
  return out;
}

PrdSolveResult solve_prd(const PrdInstance& instance, const SearchLimits& limits) {
  PrdSolveResult r;
  const auto n = static_cast<std::int64_t>(instance.n());
  if (n == 1) {
    r.outcome = PrdSat{{1}};
    return r;
  }
  for (auto d : instance.differences)
    if (d <= 0 || d >= n) {
      r.outcome = PrdUnsat{};
      r.short_circuit = true;
      return r;
    }
  const PrdEmbedding e = prd_to_cfp1d(instance);
  SolveResult s = solve_1d(e.instance, limits);
  r.nodes = s.nodes;
  if (s.inconclusive()) {
    r.outcome = PrdInconclusive{s.nodes};
  } else if (s.unsolvable()) {
    r.outcome = PrdUnsat{};
  } else {
    Permutation p = permutation_from_embedding(e, s.signs());
    if (!verify_prd(instance, p)) throw Error("decoded permutation does not verify");
    r.outcome = PrdSat{std::move(p)};
  }
  return r;
}

}  // namespace frog
