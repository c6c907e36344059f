#include "frog/board.hpp"

#include <algorithm>
#include <sstream>

namespace frog {

Board2D::Board2D(int width, int height, Cell start)
    : width_(width), height_(height), start_(start) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("board dimensions must be positive");
  blocked_.assign(static_cast<std::size_t>(width) * height, 0);
}

void Board2D::set_start(Cell c) { start_ = c; }

void Board2D::set_blocked(Cell c, bool b) {
  if (!contains(c)) throw std::out_of_range("cell outside board");
  blocked_[index(c)] = b ? 1 : 0;
}

void Board2D::fill_blocked(bool b) {
  std::fill(blocked_.begin(), blocked_.end(), b ? 1 : 0);
}

std::size_t Board2D::empty_count() const {
  auto open = static_cast<std::size_t>(
      std::count(blocked_.begin(), blocked_.end(), std::uint8_t{0}));
  if (contains(start_) && !blocked(start_)) --open;
  return open;
}

std::vector<Cell> Board2D::blocked_cells() const {
  std::vector<Cell> out;
  for (std::size_t i = 0; i < blocked_.size(); ++i)
    if (blocked_[i]) out.push_back(cell_at(i));
  return out;
}

std::size_t Cfp1dInstance::empty_count() const {
  auto n = static_cast<std::size_t>(length) - blocked.size();
  bool start_blocked = std::binary_search(blocked.begin(), blocked.end(), start);
  return start_blocked ? n : n - 1;
}

SignVector::SignVector(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  for (auto s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
}

SignVector SignVector::all_positive(std::size_t n) {
  return SignVector(std::vector<std::int8_t>(n, 1));
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<std::int8_t> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '+')
      out.push_back(1);
    else if (c == '-')
      out.push_back(-1);
    else if (c == '\n' || c == '\r' || c == ' ' || c == '\t')
      continue;
    else
      throw std::invalid_argument("column " + std::to_string(i + 1) +
                                  ": expected '+' or '-'");
  }
  return SignVector(std::move(out));
}

void SignVector::set(std::size_t i, int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
  signs_.at(i) = static_cast<std::int8_t>(s);
}

void SignVector::push_back(int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("sign must be +1 or -1");
  signs_.push_back(static_cast<std::int8_t>(s));
}

void SignVector::append(const SignVector& other) {
  signs_.insert(signs_.end(), other.signs_.begin(), other.signs_.end());
}

std::string SignVector::to_string() const {
  std::string s(signs_.size(), '+');
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] < 0) s[i] = '-';
  return s;
}

const char* to_string(FailureKind k) {
  switch (k) {
    case FailureKind::OutOfBoard: return "OutOfBoard";
    case FailureKind::Blocked: return "Blocked";
    case FailureKind::Revisit: return "Revisit";
  }
  return "?";
}

std::vector<Diagnostic> validate_instance(const CfpInstance& instance) {
  std::vector<Diagnostic> out;
  const auto& b = instance.board;
  if (!b.contains(b.start())) {
    out.push_back({Severity::Error, "start cell is outside the board"});
  } else if (b.blocked(b.start())) {
    out.push_back({Severity::Error, "start cell is blocked"});
  } else if (instance.jumps.size() != b.empty_count()) {
    std::ostringstream os;
    os << "jump count " << instance.jumps.size() << " != empty count "
       << b.empty_count();
    out.push_back({Severity::Error, os.str()});
  }
  for (std::size_t i = 0; i < instance.jumps.size(); ++i) {
    if (instance.jumps[i] == Jump{0, 0}) {
      out.push_back({Severity::Warning,
                     "jump " + std::to_string(i + 1) +
                         " is (0,0): it always lands on a visited cell"});
    }
  }
  return out;
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

Trace verify(const CfpInstance& instance, const SignVector& signs) {
  if (signs.size() != instance.jumps.size())
    throw ContractViolation("sign vector length " + std::to_string(signs.size()) +
                            " != jump count " + std::to_string(instance.jumps.size()));
  const auto& b = instance.board;
  Trace t;
  t.visited.reserve(instance.jumps.size() + 1);
  Cell cur = b.start();
  t.visited.push_back(cur);
  std::vector<std::uint8_t> seen(b.cell_count(), 0);
  if (b.contains(cur)) seen[b.index(cur)] = 1;
  for (std::size_t i = 0; i < instance.jumps.size(); ++i) {
    const Jump& j = instance.jumps[i];
    Cell next{cur.x + signs[i] * j.dx, cur.y + signs[i] * j.dy};
    FailureKind kind{};
    bool bad = true;
    if (!b.contains(next))
      kind = FailureKind::OutOfBoard;
    else if (b.blocked(next))
      kind = FailureKind::Blocked;
    else if (seen[b.index(next)])
      kind = FailureKind::Revisit;
    else
      bad = false;
    if (bad) {
      t.failed_step = i + 1;
      t.failure = kind;
      return t;
    }
    seen[b.index(next)] = 1;
    t.visited.push_back(next);
    cur = next;
  }
  t.complete = true;
  return t;
}

Trace1d verify_1d(const Cfp1dInstance& instance, const SignVector& signs) {
  Trace trace = verify(lift_1d(instance), signs);
  Trace1d out;
  out.visited.reserve(trace.visited.size());
  for (const auto& c : trace.visited) out.visited.push_back(c.x);
  out.complete = trace.complete;
  out.failed_step = trace.failed_step;
  out.failure = trace.failure;
  return out;
}

CfpInstance lift_1d(const Cfp1dInstance& instance) {
  CfpInstance out{Board2D(instance.length, 1, {instance.start, 0}), {}};
  for (int x : instance.blocked) out.board.set_blocked({x, 0});
  out.jumps.reserve(instance.jumps.size());
  for (auto d : instance.jumps) {
    if (d > INT32_MAX || d < -INT32_MAX)
      throw ContractViolation("1-D jump magnitude exceeds supported range");
    out.jumps.push_back({static_cast<int>(d), 0});
  }
  return out;
}

bool covers_board(const CfpInstance& instance, const Trace& trace) {
  if (!trace.complete) return false;
  const auto& b = instance.board;
  std::vector<std::uint8_t> seen(b.cell_count(), 0);
  for (const auto& c : trace.visited) {
    if (!b.contains(c) || seen[b.index(c)]) return false;
    seen[b.index(c)] = 1;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i] && !b.blocked_bitmap()[i]) return false;
  return true;
}

}  // namespace frog
