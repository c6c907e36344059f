#pragma once

// Text formats, the JSON interchange format, instance bundles, and the seeded
// puzzle generator.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "frog/board.hpp"
#include "frog/prd.hpp"
#include "frog/reduce.hpp"

namespace frog {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// One row per line: '#'/'B' blocked, '.'/'E' empty, 'F' start.
Board2D parse_board(std::string_view text);
std::string format_board(const Board2D& board);

/// One "dx dy" pair per line.
std::vector<Jump> parse_jumps(std::string_view text);
std::string format_jumps(const std::vector<Jump>& jumps);
/// One signed integer per line.
std::vector<std::int64_t> parse_jumps_1d(std::string_view text);
std::string format_jumps_1d(const std::vector<std::int64_t>& jumps);

/// Single-row board text.
Cfp1dInstance parse_1d(std::string_view board_text, std::string_view jumps_text);
std::string format_board_1d(const Cfp1dInstance& instance);

SignVector parse_signs(std::string_view text);

PrdInstance parse_prd(std::string_view text);
std::string format_prd(const PrdInstance& instance);
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& perm);

/// Lines "s x y", "t x y" and "x y".
GridGraph parse_graph(std::string_view text);
std::string format_graph(const GridGraph& g);

/// {"width","height","blocked":[[x,y]...],"start":[x,y],"jumps":[[dx,dy]...]}
/// plus "solution" when one is given.
std::string to_json(const CfpInstance& instance, const SignVector* solution = nullptr);
CfpInstance from_json(std::string_view text, std::optional<SignVector>* solution = nullptr);

enum class BundleKind { Cfp2d, Cfp1d, Prd, GridGraph };
const char* to_string(BundleKind k);

struct InstanceBundle {
  BundleKind kind = BundleKind::Cfp2d;
  std::variant<CfpInstance, Cfp1dInstance, PrdInstance, GridGraph> payload;
  std::vector<std::string> provenance;
  std::optional<SignVector> witness;

  friend bool operator==(const InstanceBundle&, const InstanceBundle&);
};

bool operator==(const GridGraph& a, const GridGraph& b);

/// Sectioned plain text:
///   kind cfp2d
///   board / jumps / differences / graph sections closed by "end"
///   witness <signs>
///   provenance <line>   (repeatable)
std::string serialize_bundle(const InstanceBundle& bundle);
InstanceBundle parse_bundle(std::string_view text);

struct GeneratedInstance {
  CfpInstance instance;
  SignVector witness;
};

/// Random self-avoiding walk with steps |dx|,|dy| <= 2 from a random start.
/// Unvisited cells become blocked. Seeded mt19937_64 with rejection sampling
/// for bounded integers, so output is identical on every platform.
GeneratedInstance make_instance(int width, int height, int walk_length, std::uint64_t seed);

}  // namespace frog
