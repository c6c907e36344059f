#include "frog/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace frog {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    if (end == text.size()) break;
    begin = end + 1;
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::vector<Token> tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

std::int64_t to_int(const Token& t, std::size_t line) {
  std::string_view s = t.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ParseError(line, t.column, "expected an integer, got '" + std::string(t.text) + "'");
  return v;
}

int to_int32(const Token& t, std::size_t line) {
  std::int64_t v = to_int(t, line);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw ParseError(line, t.column, "integer out of range");
  return static_cast<int>(v);
}

std::vector<std::int64_t> int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (const auto& t : tokens(lines[i])) out.push_back(to_int(t, i + 1));
  return out;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  out += '\n';
  return out;
}

}  // namespace

Board2D parse_board(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty board");
  const std::size_t width = lines[0].size();
  if (width == 0) throw ParseError(1, 1, "empty board row");
  std::optional<Cell> start;
  std::vector<Cell> blocked;
  for (std::size_t y = 0; y < lines.size(); ++y) {
    if (lines[y].size() != width)
      throw ParseError(y + 1, std::min(lines[y].size(), width) + 1,
                       "row has " + std::to_string(lines[y].size()) + " cells, expected " +
                           std::to_string(width));
    for (std::size_t x = 0; x < width; ++x) {
      const Cell c{static_cast<int>(x), static_cast<int>(y)};
      switch (lines[y][x]) {
        case '#':
        case 'B':
          blocked.push_back(c);
          break;
        case '.':
        case 'E':
          break;
        case 'F':
          if (start) throw ParseError(y + 1, x + 1, "second start cell");
          start = c;
          break;
        default:
          throw ParseError(y + 1, x + 1, std::string("unexpected character '") + lines[y][x] + "'");
      }
    }
  }
  if (!start) throw ParseError(1, 1, "no start cell 'F'");
  Board2D b(static_cast<int>(width), static_cast<int>(lines.size()), *start);
  for (const auto& c : blocked) b.set_blocked(c);
  return b;
}

std::string format_board(const Board2D& board) {
  std::string out;
  out.reserve(board.cell_count() + board.height());
  for (int y = 0; y < board.height(); ++y) {
    for (int x = 0; x < board.width(); ++x) {
      const Cell c{x, y};
      out += c == board.start() ? 'F' : board.blocked(c) ? '#' : '.';
    }
    out += '\n';
  }
  return out;
}

std::vector<Jump> parse_jumps(std::string_view text) {
  std::vector<Jump> out;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto t = tokens(lines[i]);
    if (t.empty()) continue;
    if (t.size() != 2)
      throw ParseError(i + 1, t.size() > 2 ? t[2].column : 1, "expected 'dx dy'");
    out.push_back({to_int32(t[0], i + 1), to_int32(t[1], i + 1)});
  }
  return out;
}

std::string format_jumps(const std::vector<Jump>& jumps) {
  std::string out;
  for (const auto& j : jumps) out += std::to_string(j.dx) + ' ' + std::to_string(j.dy) + '\n';
  return out;
}

std::vector<std::int64_t> parse_jumps_1d(std::string_view text) {
  std::vector<std::int64_t> out;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto t = tokens(lines[i]);
    if (t.empty()) continue;
    if (t.size() != 1) throw ParseError(i + 1, t[1].column, "expected one integer per line");
    out.push_back(to_int(t[0], i + 1));
  }
  return out;
}

std::string format_jumps_1d(const std::vector<std::int64_t>& jumps) {
  std::string out;
  for (auto j : jumps) out += std::to_string(j) + '\n';
  return out;
}

Cfp1dInstance parse_1d(std::string_view board_text, std::string_view jumps_text) {
  Board2D b = parse_board(board_text);
  if (b.height() != 1) throw ParseError(2, 1, "a 1-D board has a single row");
  Cfp1dInstance out;
  out.length = b.width();
  out.start = b.start().x;
  for (const auto& c : b.blocked_cells()) out.blocked.push_back(c.x);
  out.jumps = parse_jumps_1d(jumps_text);
  return out;
}

std::string format_board_1d(const Cfp1dInstance& instance) {
  std::string out(static_cast<std::size_t>(instance.length), '.');
  for (int c : instance.blocked) out[static_cast<std::size_t>(c)] = '#';
  out[static_cast<std::size_t>(instance.start)] = 'F';
  return out + '\n';
}

SignVector parse_signs(std::string_view text) {
  std::vector<std::int8_t> out;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = 0; j < lines[i].size(); ++j) {
      char c = lines[i][j];
      if (c == '+') out.push_back(1);
      else if (c == '-') out.push_back(-1);
      else if (c != ' ' && c != '\t')
        throw ParseError(i + 1, j + 1, std::string("unexpected sign character '") + c + "'");
    }
  return SignVector(std::move(out));
}

PrdInstance parse_prd(std::string_view text) {
  PrdInstance out{int_list(text)};
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (const auto& t : tokens(lines[i]))
      if (to_int(t, i + 1) <= 0) throw ParseError(i + 1, t.column, "differences must be positive");
  return out;
}

std::string format_prd(const PrdInstance& instance) { return join(instance.differences); }

Permutation parse_permutation(std::string_view text) { return int_list(text); }

std::string format_permutation(const Permutation& perm) { return join(perm); }

GridGraph parse_graph(std::string_view text) {
  GridGraph g;
  bool have_s = false, have_t = false;
  std::set<Cell> seen;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto t = tokens(lines[i]);
    if (t.empty()) continue;
    std::size_t at = 0;
    char tag = 0;
    if (t[0].text == "s" || t[0].text == "t") {
      tag = t[0].text[0];
      at = 1;
    }
    if (t.size() != at + 2) throw ParseError(i + 1, t[0].column, "expected '[s|t] x y'");
    Cell c{to_int32(t[at], i + 1), to_int32(t[at + 1], i + 1)};
    if (tag == 's') {
      if (have_s) throw ParseError(i + 1, 1, "second 's' line");
      g.s = c;
      have_s = true;
    } else if (tag == 't') {
      if (have_t) throw ParseError(i + 1, 1, "second 't' line");
      g.t = c;
      have_t = true;
    } else {
      if (!seen.insert(c).second) throw ParseError(i + 1, t[0].column, "duplicate vertex");
      g.vertices.push_back(c);
    }
  }
  if (!have_s || !have_t) throw ParseError(lines.size() + 1, 1, "missing 's' or 't' line");
  if (!seen.count(g.s)) throw ParseError(1, 1, "s is not a listed vertex");
  if (!seen.count(g.t)) throw ParseError(1, 1, "t is not a listed vertex");
  return g;
}

std::string format_graph(const GridGraph& g) {
  std::ostringstream os;
  os << "s " << g.s.x << ' ' << g.s.y << "\nt " << g.t.x << ' ' << g.t.y << '\n';
  for (const auto& c : g.vertices) os << c.x << ' ' << c.y << '\n';
  return os.str();
}

bool operator==(const GridGraph& a, const GridGraph& b) {
  return a.vertices == b.vertices && a.s == b.s && a.t == b.t;
}

std::string to_json(const CfpInstance& instance, const SignVector* solution) {
  using nlohmann::json;
  const auto& b = instance.board;
  json blocked = json::array();
  for (const auto& c : b.blocked_cells()) blocked.push_back({c.x, c.y});
  json jumps = json::array();
  for (const auto& j : instance.jumps) jumps.push_back({j.dx, j.dy});
  json out = {{"width", b.width()},
              {"height", b.height()},
              {"blocked", std::move(blocked)},
              {"start", {b.start().x, b.start().y}},
              {"jumps", std::move(jumps)}};
  if (solution) {
    json s = json::array();
    for (auto v : solution->values()) s.push_back(static_cast<int>(v));
    out["solution"] = std::move(s);
  }
  return out.dump() + '\n';
}

CfpInstance from_json(std::string_view text, std::optional<SignVector>* solution) {
  using nlohmann::json;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // Byte offset to line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, "invalid JSON");
  }
  try {
    const int width = j.at("width").get<int>(), height = j.at("height").get<int>();
    if (width < 1 || height < 1) throw ParseError(1, 1, "width and height must be positive");
    auto start = j.at("start").get<std::vector<int>>();
    if (start.size() != 2) throw ParseError(1, 1, "start must be [x,y]");
    Board2D b(width, height, {start[0], start[1]});
    if (!b.contains(b.start())) throw ParseError(1, 1, "start is off the board");
    for (const auto& c : j.at("blocked")) {
      auto xy = c.get<std::vector<int>>();
      if (xy.size() != 2 || !b.contains({xy[0], xy[1]}))
        throw ParseError(1, 1, "blocked cell must be an on-board [x,y]");
      b.set_blocked({xy[0], xy[1]});
    }
    CfpInstance out{std::move(b), {}};
    for (const auto& c : j.at("jumps")) {
      auto d = c.get<std::vector<int>>();
      if (d.size() != 2) throw ParseError(1, 1, "jump must be [dx,dy]");
      out.jumps.push_back({d[0], d[1]});
    }
    if (j.contains("solution")) {
      std::vector<std::int8_t> s;
      for (const auto& v : j.at("solution")) {
        int x = v.get<int>();
        if (x != 1 && x != -1) throw ParseError(1, 1, "solution entries must be 1 or -1");
        s.push_back(static_cast<std::int8_t>(x));
      }
      if (solution) *solution = SignVector(std::move(s));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(1, 1, std::string("schema: ") + e.what());
  }
}

const char* to_string(BundleKind k) {
  switch (k) {
    case BundleKind::Cfp2d: return "cfp2d";
    case BundleKind::Cfp1d: return "cfp1d";
    case BundleKind::Prd: return "prd";
    case BundleKind::GridGraph: return "gridgraph";
  }
  return "?";
}

bool operator==(const InstanceBundle& a, const InstanceBundle& b) {
  return a.kind == b.kind && a.payload == b.payload && a.provenance == b.provenance &&
         a.witness == b.witness;
}

std::string serialize_bundle(const InstanceBundle& bundle) {
  std::string out = std::string("kind ") + to_string(bundle.kind) + '\n';
  auto section = [&](const char* name, const std::string& body) {
    out += name;
    out += '\n';
    out += body;
    out += "end\n";
  };
  switch (bundle.kind) {
    case BundleKind::Cfp2d: {
      const auto& c = std::get<CfpInstance>(bundle.payload);
      section("board", format_board(c.board));
      section("jumps", format_jumps(c.jumps));
      break;
    }
    case BundleKind::Cfp1d: {
      const auto& c = std::get<Cfp1dInstance>(bundle.payload);
      section("board", format_board_1d(c));
      section("jumps", format_jumps_1d(c.jumps));
      break;
    }
    case BundleKind::Prd:
      section("differences", format_prd(std::get<PrdInstance>(bundle.payload)));
      break;
    case BundleKind::GridGraph:
      section("graph", format_graph(std::get<GridGraph>(bundle.payload)));
      break;
  }
  if (bundle.witness) out += "witness " + bundle.witness->to_string() + '\n';
  for (const auto& p : bundle.provenance) out += "provenance " + p + '\n';
  return out;
}

InstanceBundle parse_bundle(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty() || lines[0].substr(0, 5) != "kind ")
    throw ParseError(1, 1, "bundle must start with 'kind <name>'");
  InstanceBundle b;
  std::string_view kind = lines[0].substr(5);
  if (kind == "cfp2d") b.kind = BundleKind::Cfp2d;
  else if (kind == "cfp1d") b.kind = BundleKind::Cfp1d;
  else if (kind == "prd") b.kind = BundleKind::Prd;
  else if (kind == "gridgraph") b.kind = BundleKind::GridGraph;
  else throw ParseError(1, 6, "unknown kind '" + std::string(kind) + "'");

  struct Section {
    std::string body;
    std::size_t first_line = 0;
    bool present = false;
  };
  std::map<std::string, Section, std::less<>> sections;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view l = lines[i];
    if (l.substr(0, 8) == "witness ") {
      try {
        b.witness = SignVector::parse(l.substr(8));
      } catch (const std::invalid_argument&) {
        throw ParseError(i + 1, 9, "bad witness");
      }
    } else if (l.substr(0, 11) == "provenance ") {
      b.provenance.emplace_back(l.substr(11));
    } else if (l == "board" || l == "jumps" || l == "differences" || l == "graph") {
      Section& s = sections[std::string(l)];
      s.present = true;
      s.first_line = i + 2;
      std::size_t j = i + 1;
      for (; j < lines.size() && lines[j] != "end"; ++j) {
        s.body += lines[j];
        s.body += '\n';
      }
      if (j == lines.size()) throw ParseError(i + 1, 1, "section not closed by 'end'");
      i = j;
    } else if (!l.empty()) {
      throw ParseError(i + 1, 1, "unexpected line");
    }
  }
  auto need = [&](const char* name) -> Section& {
    auto it = sections.find(name);
    if (it == sections.end()) throw ParseError(lines.size(), 1, std::string("missing section ") + name);
    return it->second;
  };
  // Re-raise section errors with absolute line numbers.
  auto in_section = [&](Section& s, auto&& fn) {
    try {
      return fn(s.body);
    } catch (const ParseError& e) {
      throw ParseError(s.first_line + e.line() - 1, e.column(),
                       std::string(e.what()).substr(std::string(e.what()).find(' ') + 1));
    }
  };
  switch (b.kind) {
    case BundleKind::Cfp2d: {
      Board2D board = in_section(need("board"), [](const std::string& t) { return parse_board(t); });
      auto jumps = in_section(need("jumps"), [](const std::string& t) { return parse_jumps(t); });
      b.payload = CfpInstance{std::move(board), std::move(jumps)};
      break;
    }
    case BundleKind::Cfp1d: {
      Section& js = need("jumps");
      auto inst = in_section(need("board"), [&](const std::string& t) { return parse_1d(t, ""); });
      inst.jumps = in_section(js, [](const std::string& t) { return parse_jumps_1d(t); });
      b.payload = std::move(inst);
      break;
    }
    case BundleKind::Prd:
      b.payload = in_section(need("differences"), [](const std::string& t) { return parse_prd(t); });
      break;
    case BundleKind::GridGraph:
      b.payload = in_section(need("graph"), [](const std::string& t) { return parse_graph(t); });
      break;
  }
  return b;
}

}  // namespace frog
