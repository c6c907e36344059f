// frogpuzzle: command-line front end over the C interface.

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "frog/frogpuzzle.h"

namespace {

constexpr int kExitIo = 66;

struct Exit {
  int code;
};

struct CString {
  char* p = nullptr;
  ~CString() { fp_free_string(p); }
  char** out() { return &p; }
  std::string str() const { return p ? p : ""; }
};

using Instance = std::unique_ptr<fp_instance, decltype(&fp_instance_free)>;
using Prd = std::unique_ptr<fp_prd, decltype(&fp_prd_free)>;
using Graph = std::unique_ptr<fp_graph, decltype(&fp_graph_free)>;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << ": " << std::strerror(errno) << '\n';
    throw Exit{kExitIo};
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write " << path << ": " << std::strerror(errno) << '\n';
    throw Exit{kExitIo};
  }
}

// Fails with the library's exit code unless the status is one of `ok`.
fp_status check(fp_status s, std::initializer_list<fp_status> ok = {FP_OK}) {
  for (auto o : ok)
    if (s == o) return s;
  std::cerr << "error: " << fp_last_error() << '\n';
  throw Exit{s == FP_ERR_PARSE ? 65 : s == FP_ERR_USAGE ? 64 : static_cast<int>(s)};
}

struct InstanceArgs {
  std::string board, jumps, json;
  bool one_d = false;

  void add(CLI::App* app) {
    app->add_option("--board,-b", board, "board text file");
    app->add_option("--jumps,-j", jumps, "jump list file");
    app->add_option("--json", json, "interchange file instead of --board/--jumps");
    app->add_flag("--1d", one_d, "read a single-row board with one integer per jump");
  }

  Instance load() const {
    fp_instance* p = nullptr;
    if (!json.empty()) {
      check(fp_instance_from_json(read_file(json).c_str(), &p, nullptr));
      return {p, fp_instance_free};
    }
    if (board.empty() || jumps.empty()) {
      std::cerr << "error: need --board and --jumps, or --json\n";
      throw Exit{64};
    }
    const std::string b = read_file(board), j = read_file(jumps);
    if (one_d) {
      check(fp_instance_parse_1d(b.c_str(), j.c_str(), &p));
    } else if (fp_instance_parse(b.c_str(), j.c_str(), &p) != FP_OK) {
      // A single row with one integer per line is a 1-D instance.
      const std::string first = fp_last_error();
      if (b.find('\n') + 1 >= b.size() && fp_instance_parse_1d(b.c_str(), j.c_str(), &p) == FP_OK)
        return {p, fp_instance_free};
      std::cerr << "error: " << first << '\n';
      throw Exit{65};
    }
    return {p, fp_instance_free};
  }
};

void emit_instance(const fp_instance* inst, const std::string& prefix) {
  CString board, jumps;
  check(fp_instance_format(inst, board.out(), jumps.out()));
  if (prefix.empty()) {
    std::cout << "board\n" << board.str() << "end\njumps\n" << jumps.str() << "end\n";
  } else {
    write_file(prefix + ".board", board.str());
    write_file(prefix + ".jumps", jumps.str());
  }
}

std::string signs_arg(const std::string& value) {
  // A literal over +/- or a file holding one.
  if (!value.empty() && value.find_first_not_of("+-") == std::string::npos) return value;
  return read_file(value);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crazy Frog Puzzle toolkit"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "depth-first search for a sign vector");
  InstanceArgs solve_in;
  solve_in.add(solve);
  std::uint64_t max_nodes = 0;
  solve->add_option("--max-nodes", max_nodes, "node budget, 0 = unlimited");

  // verify
  auto* verify = app.add_subcommand("verify", "simulate a sign vector");
  InstanceArgs verify_in;
  verify_in.add(verify);
  std::string signs;
  verify->add_option("--signs,-s", signs, "sign string or file")->required();
  bool trace = false;
  verify->add_flag("--trace", trace, "print the visited cells");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "enumerate every sign vector");
  InstanceArgs oracle_in;
  oracle_in.add(oracle);
  std::size_t max_m = 20;
  oracle->add_option("--max-m", max_m, "refuse above this many jumps");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "run one reduction stage");
  std::string stage, graph_file, out_prefix;
  reduce->add_option("--stage", stage, "stage")
      ->required()
      ->check(CLI::IsMember({"ham2cfp", "cfp2lin", "lin2empty", "empty2prd", "full"}));
  reduce->add_option("--graph,-g", graph_file, "grid graph file (ham2cfp, full)");
  InstanceArgs reduce_in;
  reduce_in.add(reduce);
  reduce->add_option("--out,-o", out_prefix, "write <prefix>.board/.jumps/... instead of stdout");
  bool want_witness = false;
  reduce->add_flag("--witness", want_witness, "ham2cfp: also emit a traversal from a brute-forced path");

  // gen-gadget
  auto* gadget = app.add_subcommand("gen-gadget", "print a gadget jump sequence");
  std::string family;
  int k = 2;
  bool fixture = false;
  gadget->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"binary", "binary-rev", "fill", "hole", "selector", "strip-cleanup"}));
  gadget->add_option("--k", k)->required();
  gadget->add_flag("--fixture", fixture, "also print the companion board");

  // prd
  auto* prd = app.add_subcommand("prd", "permutation reconstruction from differences");
  prd->require_subcommand(1);
  std::string prd_file, perm;
  auto* prd_solve = prd->add_subcommand("solve", "find a permutation");
  prd_solve->add_option("input", prd_file, "differences file")->required();
  prd_solve->add_option("--max-nodes", max_nodes, "node budget, 0 = unlimited");
  auto* prd_verify = prd->add_subcommand("verify", "check a permutation");
  prd_verify->add_option("input", prd_file, "differences file")->required();
  prd_verify->add_option("--perm,-p", perm, "permutation file")->required();
  auto* prd_to = prd->add_subcommand("to-cfp", "embed into an empty 1-D puzzle");
  prd_to->add_option("input", prd_file, "differences file")->required();
  prd_to->add_option("--out,-o", out_prefix);
  auto* prd_from = prd->add_subcommand("from-cfp", "empty 1-D puzzle to differences");
  InstanceArgs prd_from_in;
  prd_from_in.add(prd_from);

  // make-instance
  auto* make = app.add_subcommand("make-instance", "random solvable puzzle");
  int width = 5, height = 5, length = 10;
  std::uint64_t seed = 1;
  make->add_option("--width", width);
  make->add_option("--height", height);
  make->add_option("--length", length, "number of jumps");
  make->add_option("--seed", seed);
  make->add_option("--out,-o", out_prefix, "write <prefix>.board/.jumps/.signs");

  // export-ui
  auto* exp = app.add_subcommand("export-ui", "write the JSON interchange file");
  InstanceArgs exp_in;
  exp_in.add(exp);
  std::string exp_out, exp_signs;
  bool with_solution = false;
  exp->add_option("--out,-o", exp_out, "output path")->required();
  exp->add_flag("--with-solution", with_solution, "include a solution");
  exp->add_option("--signs,-s", exp_signs, "solution to include (solved if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }

  try {
    if (*solve) {
      auto inst = solve_in.load();
      CString s;
      std::uint64_t nodes = 0;
      fp_status st = check(fp_solve(inst.get(), max_nodes, s.out(), &nodes),
                           {FP_OK, FP_UNSAT, FP_INCONCLUSIVE});
      if (st == FP_OK) std::cout << s.str() << '\n';
      else if (st == FP_UNSAT) std::cout << "UNSAT\n";
      else std::cout << "INCONCLUSIVE " << nodes << '\n';
      return st;
    }
    if (*verify) {
      auto inst = verify_in.load();
      CString report;
      fp_status st =
          check(fp_verify(inst.get(), signs_arg(signs).c_str(), report.out()), {FP_OK, FP_UNSAT});
      std::string r = report.str();
      std::cout << (trace ? r : r.substr(0, r.find('\n') + 1));
      return st;
    }
    if (*oracle) {
      auto inst = oracle_in.load();
      CString all;
      std::size_t count = 0;
      fp_status st = check(fp_oracle(inst.get(), max_m, all.out(), &count), {FP_OK, FP_UNSAT});
      std::cout << all.str() << "count " << count << '\n';
      return st;
    }
    if (*reduce) {
      auto load_graph = [&] {
        if (graph_file.empty()) {
          std::cerr << "error: --graph is required for this stage\n";
          throw Exit{64};
        }
        fp_graph* g = nullptr;
        check(fp_graph_parse(read_file(graph_file).c_str(), &g));
        return Graph(g, fp_graph_free);
      };
      if (stage == "ham2cfp") {
        auto g = load_graph();
        fp_instance* p = nullptr;
        CString layout;
        check(fp_reduce_ham(g.get(), &p, layout.out()));
        Instance inst(p, fp_instance_free);
        emit_instance(inst.get(), out_prefix);
        if (out_prefix.empty()) std::cout << "layout\n" << layout.str() << "end\n";
        else write_file(out_prefix + ".layout", layout.str());
        if (want_witness) {
          CString path, w;
          fp_status st = check(fp_ham_witness(g.get(), path.out(), w.out()), {FP_OK, FP_UNSAT});
          if (st == FP_UNSAT) {
            std::cout << "no Hamiltonian path\n";
            return 1;
          }
          if (out_prefix.empty()) std::cout << "path\n" << path.str() << "end\nwitness " << w.str() << '\n';
          else write_file(out_prefix + ".signs", w.str() + '\n');
        }
        return 0;
      }
      if (stage == "full") {
        auto g = load_graph();
        fp_prd* p = nullptr;
        CString prov, text;
        check(fp_reduce_full(g.get(), &p, prov.out()));
        Prd out(p, fp_prd_free);
        check(fp_prd_format(out.get(), text.out()));
        std::cerr << prov.str();
        if (out_prefix.empty()) std::cout << text.str();
        else {
          write_file(out_prefix + ".prd", text.str());
          write_file(out_prefix + ".provenance", prov.str());
        }
        return 0;
      }
      auto inst = reduce_in.load();
      if (stage == "empty2prd") {
        fp_prd* p = nullptr;
        CString text;
        check(fp_empty_to_prd(inst.get(), &p));
        Prd out(p, fp_prd_free);
        check(fp_prd_format(out.get(), text.out()));
        if (out_prefix.empty()) std::cout << text.str();
        else write_file(out_prefix + ".prd", text.str());
        return 0;
      }
      fp_instance* p = nullptr;
      CString notes;
      if (stage == "cfp2lin") check(fp_reduce_2d_to_1d(inst.get(), &p, notes.out()));
      else check(fp_reduce_1d_to_empty(inst.get(), &p, notes.out()));
      Instance out(p, fp_instance_free);
      std::cerr << notes.str();
      emit_instance(out.get(), out_prefix);
      return 0;
    }
    if (*gadget) {
      CString jumps, board;
      check(fp_gen_gadget(family.c_str(), k, fixture, jumps.out(), board.out()));
      std::cout << jumps.str();
      if (fixture) std::cout << "fixture\n" << board.str();
      return 0;
    }
    if (*prd) {
      if (*prd_from) {
        auto inst = prd_from_in.load();
        fp_prd* p = nullptr;
        CString text;
        check(fp_empty_to_prd(inst.get(), &p));
        Prd out(p, fp_prd_free);
        check(fp_prd_format(out.get(), text.out()));
        std::cout << text.str();
        return 0;
      }
      fp_prd* p = nullptr;
      check(fp_prd_parse(read_file(prd_file).c_str(), &p));
      Prd inst(p, fp_prd_free);
      if (*prd_solve) {
        CString out;
        std::uint64_t nodes = 0;
        fp_status st = check(fp_prd_solve(inst.get(), max_nodes, out.out(), &nodes),
                             {FP_OK, FP_UNSAT, FP_INCONCLUSIVE});
        if (st == FP_OK) std::cout << out.str();
        else if (st == FP_UNSAT) std::cout << "UNSAT\n";
        else std::cout << "INCONCLUSIVE " << nodes << '\n';
        return st;
      }
      if (*prd_verify) {
        fp_status st = check(fp_prd_verify(inst.get(), read_file(perm).c_str()), {FP_OK, FP_UNSAT});
        std::cout << (st == FP_OK ? "valid\n" : "invalid\n");
        return st;
      }
      fp_instance* c = nullptr;
      check(fp_prd_to_cfp(inst.get(), &c));
      Instance cfp(c, fp_instance_free);
      emit_instance(cfp.get(), out_prefix);
      return 0;
    }
    if (*make) {
      fp_instance* p = nullptr;
      CString w;
      check(fp_make_instance(width, height, length, seed, &p, w.out()));
      Instance inst(p, fp_instance_free);
      emit_instance(inst.get(), out_prefix);
      if (out_prefix.empty()) std::cout << "witness " << w.str() << '\n';
      else write_file(out_prefix + ".signs", w.str() + '\n');
      return 0;
    }
    if (*exp) {
      auto inst = exp_in.load();
      std::string sol;
      if (with_solution) {
        if (!exp_signs.empty()) {
          sol = signs_arg(exp_signs);
        } else {
          CString s;
          std::uint64_t nodes = 0;
          fp_status st = check(fp_solve(inst.get(), 0, s.out(), &nodes), {FP_OK, FP_UNSAT});
          if (st == FP_UNSAT) {
            std::cerr << "error: instance has no solution to include\n";
            return 1;
          }
          sol = s.str();
        }
        while (!sol.empty() && (sol.back() == '\n' || sol.back() == '\r')) sol.pop_back();
      }
      CString json;
      check(fp_instance_to_json(inst.get(), with_solution ? sol.c_str() : nullptr, json.out()));
      write_file(exp_out, json.str());
      return 0;
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return 64;
}
