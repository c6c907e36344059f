#pragma once

// Core domain types for the Crazy Frog Puzzle and the rule-enforcing simulator.
//
// Coordinates: x is the column (left to right), y is the row (top to bottom).
// The start cell counts as visited at time 0; every other non-blocked cell is
// "empty" and must be visited exactly once by the jump sequence.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frog {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (length mismatch, bad trace...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A gadget or reduction could not be built from the given parameters.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// The request is well-formed but over a hard cap (oracle sizes, k < 2, ...).
class Refused : public Error {
 public:
  using Error::Error;
};

struct Cell {
  int x = 0;
  int y = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Jump {
  int dx = 0;
  int dy = 0;
  friend bool operator==(const Jump&, const Jump&) = default;
  Jump operator-() const { return {-dx, -dy}; }
};

/// Rectangular arena. Blocked cells are stored as a dense bitmap.
class Board2D {
 public:
  Board2D() : Board2D(1, 1, {0, 0}) {}
  Board2D(int width, int height, Cell start);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t cell_count() const { return blocked_.size(); }
  Cell start() const { return start_; }
  void set_start(Cell c);

  bool contains(Cell c) const {
    return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_;
  }
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(c.y) * width_ + c.x;
  }
  Cell cell_at(std::size_t idx) const {
    return {static_cast<int>(idx % width_), static_cast<int>(idx / width_)};
  }

  bool blocked(Cell c) const { return blocked_[index(c)] != 0; }
  void set_blocked(Cell c, bool b = true);
  void fill_blocked(bool b);

  /// Cells that are neither blocked nor the start.
  std::size_t empty_count() const;
  std::vector<Cell> blocked_cells() const;

  const std::vector<std::uint8_t>& blocked_bitmap() const { return blocked_; }

  friend bool operator==(const Board2D&, const Board2D&) = default;

 private:
  int width_;
  int height_;
  Cell start_;
  std::vector<std::uint8_t> blocked_;
};

struct CfpInstance {
  Board2D board;
  std::vector<Jump> jumps;
  friend bool operator==(const CfpInstance&, const CfpInstance&) = default;
};

struct Cfp1dInstance {
  int length = 1;
  std::vector<int> blocked;  // sorted, unique
  int start = 0;
  std::vector<std::int64_t> jumps;
  friend bool operator==(const Cfp1dInstance&, const Cfp1dInstance&) = default;

  std::size_t empty_count() const;
};

/// One direction choice per jump, each +1 or -1.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<std::int8_t> signs);

  static SignVector all_positive(std::size_t n);
  /// Parses a string over '+'/'-'. Throws std::invalid_argument otherwise.
  static SignVector parse(std::string_view text);

  std::size_t size() const { return signs_.size(); }
  bool empty() const { return signs_.empty(); }
  int operator[](std::size_t i) const { return signs_[i]; }
  void set(std::size_t i, int s);
  void push_back(int s);
  void append(const SignVector& other);
  const std::vector<std::int8_t>& values() const { return signs_; }
  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector& a, const SignVector& b) {
    return a.signs_ <=> b.signs_;
  }

 private:
  std::vector<std::int8_t> signs_;
};

enum class FailureKind { OutOfBoard, Blocked, Revisit };

const char* to_string(FailureKind k);

struct Trace {
  std::vector<Cell> visited;  // begins with the start cell
  bool complete = false;
  std::size_t failed_step = 0;  // 1-based jump index when !complete
  FailureKind failure = FailureKind::OutOfBoard;

  Cell final_cell() const { return visited.back(); }
};

enum class Severity { Warning, Error };

struct Diagnostic {
  Severity severity;
  std::string message;
};

std::vector<Diagnostic> validate_instance(const CfpInstance& instance);
bool has_errors(const std::vector<Diagnostic>& diagnostics);

/// Simulates the jumps under the given signs. Stops at the first illegal jump.
Trace verify(const CfpInstance& instance, const SignVector& signs);

/// Same rules on a 1-D board; visited cells are reported as x-coordinates.
struct Trace1d {
  std::vector<std::int64_t> visited;
  bool complete = false;
  std::size_t failed_step = 0;
  FailureKind failure = FailureKind::OutOfBoard;
};
Trace1d verify_1d(const Cfp1dInstance& instance, const SignVector& signs);

CfpInstance lift_1d(const Cfp1dInstance& instance);

/// True if a trace is complete and covers every non-blocked cell.
bool covers_board(const CfpInstance& instance, const Trace& trace);

}  // namespace frog
