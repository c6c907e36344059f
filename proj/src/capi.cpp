#include "frog/frogpuzzle.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <variant>

#include "frog/gadgets.hpp"
#include "frog/io.hpp"
#include "frog/prd.hpp"
#include "frog/reduce.hpp"
#include "frog/solver.hpp"

struct fp_instance {
  std::variant<frog::CfpInstance, frog::Cfp1dInstance> v;
};
struct fp_prd {
  frog::PrdInstance v;
};
struct fp_graph {
  frog::GridGraph v;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void set_out(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

template <class F>
fp_status guard(F&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const frog::ParseError& e) {
    last_error = e.what();
    return FP_ERR_PARSE;
  } catch (const frog::ContractViolation& e) {
    last_error = e.what();
    return FP_ERR_CONTRACT;
  } catch (const frog::Refused& e) {
    last_error = e.what();
    return FP_ERR_REFUSED;
  } catch (const frog::ConstructionError& e) {
    last_error = e.what();
    return FP_ERR_CONSTRUCTION;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return FP_ERR_USAGE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FP_ERR_INTERNAL;
  }
}

fp_status usage(const char* what) {
  last_error = what;
  return FP_ERR_USAGE;
}

frog::CfpInstance as_2d(const fp_instance* inst) {
  if (auto* p = std::get_if<frog::CfpInstance>(&inst->v)) return *p;
  return frog::lift_1d(std::get<frog::Cfp1dInstance>(inst->v));
}

const frog::Cfp1dInstance& need_1d(const fp_instance* inst) {
  auto* p = std::get_if<frog::Cfp1dInstance>(&inst->v);
  if (!p) throw std::invalid_argument("this stage needs a 1-D instance");
  return *p;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  return frog::format_permutation(v);
}

std::string path_text(const frog::NodePath& p) {
  std::string out;
  for (const auto& c : p) out += std::to_string(c.x) + ' ' + std::to_string(c.y) + '\n';
  return out;
}

std::string diag_text(const std::vector<frog::Diagnostic>& d) {
  std::string out;
  for (const auto& x : d)
    out += std::string(x.severity == frog::Severity::Error ? "error: " : "warning: ") + x.message +
           '\n';
  return out;
}

}  // namespace

extern "C" {

const char* fp_last_error(void) { return last_error.c_str(); }
void fp_free_string(char* s) { std::free(s); }
void fp_instance_free(fp_instance* inst) { delete inst; }
void fp_prd_free(fp_prd* prd) { delete prd; }
void fp_graph_free(fp_graph* g) { delete g; }

fp_status fp_instance_parse(const char* board, const char* jumps, fp_instance** out) {
  if (!board || !jumps || !out) return usage("null argument");
  return guard([&] {
    *out = new fp_instance{frog::CfpInstance{frog::parse_board(board), frog::parse_jumps(jumps)}};
    return FP_OK;
  });
}

fp_status fp_instance_parse_1d(const char* board, const char* jumps, fp_instance** out) {
  if (!board || !jumps || !out) return usage("null argument");
  return guard([&] {
    *out = new fp_instance{frog::parse_1d(board, jumps)};
    return FP_OK;
  });
}

fp_status fp_instance_from_json(const char* json, fp_instance** out, char** solution) {
  if (!json || !out) return usage("null argument");
  return guard([&] {
    std::optional<frog::SignVector> sol;
    auto inst = frog::from_json(json, &sol);
    *out = new fp_instance{std::move(inst)};
    if (solution) *solution = sol ? dup(sol->to_string()) : nullptr;
    return FP_OK;
  });
}

int fp_instance_is_1d(const fp_instance* inst) {
  return inst && std::holds_alternative<frog::Cfp1dInstance>(inst->v);
}

size_t fp_instance_jump_count(const fp_instance* inst) {
  if (!inst) return 0;
  return std::visit([](const auto& i) { return i.jumps.size(); }, inst->v);
}

size_t fp_instance_empty_count(const fp_instance* inst) {
  if (!inst) return 0;
  if (auto* p = std::get_if<frog::CfpInstance>(&inst->v)) return p->board.empty_count();
  return std::get<frog::Cfp1dInstance>(inst->v).empty_count();
}

void fp_instance_size(const fp_instance* inst, int* width, int* height) {
  if (!inst) return;
  if (auto* p = std::get_if<frog::CfpInstance>(&inst->v)) {
    if (width) *width = p->board.width();
    if (height) *height = p->board.height();
  } else {
    if (width) *width = std::get<frog::Cfp1dInstance>(inst->v).length;
    if (height) *height = 1;
  }
}

fp_status fp_instance_format(const fp_instance* inst, char** board, char** jumps) {
  if (!inst) return usage("null instance");
  return guard([&] {
    if (auto* p = std::get_if<frog::CfpInstance>(&inst->v)) {
      set_out(board, frog::format_board(p->board));
      set_out(jumps, frog::format_jumps(p->jumps));
    } else {
      const auto& i = std::get<frog::Cfp1dInstance>(inst->v);
      set_out(board, frog::format_board_1d(i));
      set_out(jumps, frog::format_jumps_1d(i.jumps));
    }
    return FP_OK;
  });
}

fp_status fp_instance_to_json(const fp_instance* inst, const char* signs, char** out) {
  if (!inst || !out) return usage("null argument");
  return guard([&] {
    const auto c = as_2d(inst);
    if (signs) {
      auto s = frog::parse_signs(signs);
      if (s.size() != c.jumps.size())
        throw frog::ContractViolation("solution length does not match the jump count");
      *out = dup(frog::to_json(c, &s));
    } else {
      *out = dup(frog::to_json(c));
    }
    return FP_OK;
  });
}

fp_status fp_instance_validate(const fp_instance* inst, char** report, int* errors) {
  if (!inst) return usage("null instance");
  return guard([&] {
    auto d = frog::validate_instance(as_2d(inst));
    int e = 0;
    for (const auto& x : d) e += x.severity == frog::Severity::Error;
    if (errors) *errors = e;
    set_out(report, diag_text(d));
    return FP_OK;
  });
}

fp_status fp_solve(const fp_instance* inst, uint64_t max_nodes, char** signs, uint64_t* nodes) {
  if (!inst) return usage("null instance");
  return guard([&] {
    frog::SearchLimits lim;
    lim.max_nodes = max_nodes;
    frog::SolveResult r = std::visit(
        [&](const auto& i) {
          if constexpr (std::is_same_v<std::decay_t<decltype(i)>, frog::CfpInstance>)
            return frog::solve(i, lim);
          else
            return frog::solve_1d(i, lim);
        },
        inst->v);
    if (nodes) *nodes = r.nodes;
    if (r.solved()) {
      set_out(signs, r.signs().to_string());
      return FP_OK;
    }
    return r.unsolvable() ? FP_UNSAT : FP_INCONCLUSIVE;
  });
}

fp_status fp_verify(const fp_instance* inst, const char* signs, char** report) {
  if (!inst || !signs) return usage("null argument");
  return guard([&] {
    const auto s = frog::parse_signs(signs);
    const auto t = frog::verify(as_2d(inst), s);
    std::ostringstream os;
    if (t.complete)
      os << "complete\n";
    else
      os << "failed at step " << t.failed_step << ": " << frog::to_string(t.failure) << '\n';
    const bool one_d = fp_instance_is_1d(inst);
    for (const auto& c : t.visited) {
      if (one_d) os << c.x << '\n';
      else os << c.x << ' ' << c.y << '\n';
    }
    set_out(report, os.str());
    return t.complete ? FP_OK : FP_UNSAT;
  });
}

fp_status fp_oracle(const fp_instance* inst, size_t max_m, char** solutions, size_t* count) {
  if (!inst) return usage("null instance");
  return guard([&] {
    auto all = frog::oracle_enumerate(as_2d(inst), max_m);
    std::string out;
    for (const auto& s : all) out += s.to_string() + '\n';
    if (count) *count = all.size();
    set_out(solutions, out);
    return all.empty() ? FP_UNSAT : FP_OK;
  });
}

fp_status fp_gen_gadget(const char* family, int k, int want_fixture, char** jumps, char** board) {
  if (!family) return usage("null family");
  return guard([&] {
    const std::string f = family;
    const auto p = frog::StripParams::from_k(k);
    std::vector<int> line;
    std::vector<frog::Jump> plane;
    std::optional<frog::CfpInstance> fixture;
    if (f == "binary") {
      line = frog::gen_binary(k);
      if (want_fixture) fixture = frog::binary_fixture(k);
    } else if (f == "binary-rev") {
      line = frog::gen_binary_rev(k);
      if (want_fixture) fixture = frog::binary_rev_fixture(k, 0);
    } else if (f == "fill") {
      line = frog::gen_fill(p);
      if (want_fixture) fixture = frog::fill_fixture(p);
    } else if (f == "hole") {
      line = frog::gen_hole(p);
      if (want_fixture) fixture = frog::hole_fixture(p);
    } else if (f == "selector") {
      plane = frog::gen_selector(p).jumps;
      if (want_fixture) fixture = frog::selector_fixture(p);
    } else if (f == "strip-cleanup") {
      plane = frog::gen_strip_cleanup(p, frog::default_slot_columns(p));
      if (want_fixture) fixture = frog::strip_cleanup_fixture(p, {frog::Cell{0, 0}, {2, 2}});
    } else {
      throw std::invalid_argument("unknown gadget family '" + f + "'");
    }
    std::string text;
    for (int m : line) text += std::to_string(m) + '\n';
    if (line.empty()) text = frog::format_jumps(plane);
    set_out(jumps, text);
    if (board) *board = fixture ? dup(frog::format_board(fixture->board)) : nullptr;
    return FP_OK;
  });
}

fp_status fp_graph_parse(const char* text, fp_graph** out) {
  if (!text || !out) return usage("null argument");
  return guard([&] {
    *out = new fp_graph{frog::parse_graph(text)};
    return FP_OK;
  });
}

fp_status fp_reduce_ham(const fp_graph* g, fp_instance** out, char** layout) {
  if (!g || !out) return usage("null argument");
  return guard([&] {
    auto r = frog::reduce_ham_to_cfp(g->v);
    const auto& L = r.layout;
    std::ostringstream os;
    auto list = [&](const char* name, const auto& v) {
      os << name;
      for (auto x : v) os << ' ' << x;
      os << '\n';
    };
    os << "k " << L.strip.k << "\nw " << L.strip.w << "\nv " << L.strip.v << "\nwidth "
       << L.width << "\nheight " << L.height << "\nstart " << L.start_cell.x << ' '
       << L.start_cell.y << "\ntarget " << L.target_cell.x << ' ' << L.target_cell.y << "\nhop "
       << L.hop_cell.x << ' ' << L.hop_cell.y << '\n';
    list("gadget_rows", L.gadget_rows);
    list("edge_begin", L.edge_begin);
    os << "target_jump " << L.target_jump << "\ncleanup_begin " << L.cleanup_begin << '\n';
    list("strip_begin", L.strip_begin);
    os << "jumps " << L.total_jumps << '\n';
    set_out(layout, os.str());
    *out = new fp_instance{std::move(r.instance)};
    return FP_OK;
  });
}

fp_status fp_ham_witness(const fp_graph* g, char** path, char** signs) {
  if (!g) return usage("null graph");
  return guard([&] {
    auto p = frog::ham_oracle(g->v);
    if (!p) return FP_UNSAT;
    auto r = frog::reduce_ham_to_cfp(g->v);
    set_out(path, path_text(*p));
    set_out(signs, frog::witness_from_ham_path(r, *p).to_string());
    return FP_OK;
  });
}

fp_status fp_ham_extract(const fp_graph* g, const char* signs, char** path) {
  if (!g || !signs) return usage("null argument");
  return guard([&] {
    auto r = frog::reduce_ham_to_cfp(g->v);
    set_out(path, path_text(frog::extract_ham_path(r, frog::parse_signs(signs))));
    return FP_OK;
  });
}

fp_status fp_reduce_2d_to_1d(const fp_instance* inst, fp_instance** out, char** notes) {
  if (!inst || !out) return usage("null argument");
  return guard([&] {
    auto r = frog::reduce_2d_to_1d(as_2d(inst));
    set_out(notes, diag_text(r.diagnostics));
    *out = new fp_instance{std::move(r.instance)};
    return FP_OK;
  });
}

fp_status fp_normalize_leftmost(const fp_instance* inst, fp_instance** out) {
  if (!inst || !out) return usage("null argument");
  return guard([&] {
    *out = new fp_instance{frog::normalize_start_leftmost(need_1d(inst))};
    return FP_OK;
  });
}

fp_status fp_reduce_1d_to_empty(const fp_instance* inst, fp_instance** out, char** notes) {
  if (!inst || !out) return usage("null argument");
  return guard([&] {
    const auto& i = need_1d(inst);
    auto r = frog::reduce_1d_to_empty(i.start == 0 ? i : frog::normalize_start_leftmost(i));
    set_out(notes, diag_text(r.diagnostics));
    *out = new fp_instance{std::move(r.instance)};
    return FP_OK;
  });
}

fp_status fp_empty_to_prd(const fp_instance* inst, fp_prd** out) {
  if (!inst || !out) return usage("null argument");
  return guard([&] {
    *out = new fp_prd{frog::cfp1d_to_prd(need_1d(inst))};
    return FP_OK;
  });
}

fp_status fp_reduce_full(const fp_graph* g, fp_prd** out, char** provenance) {
  if (!g || !out) return usage("null argument");
  return guard([&] {
    auto [full, prd] = frog::reduce_full(g->v);
    std::string text;
    for (const auto& l : full.provenance) text += l + '\n';
    set_out(provenance, text);
    *out = new fp_prd{std::move(prd)};
    return FP_OK;
  });
}

fp_status fp_prd_parse(const char* text, fp_prd** out) {
  if (!text || !out) return usage("null argument");
  return guard([&] {
    *out = new fp_prd{frog::parse_prd(text)};
    return FP_OK;
  });
}

fp_status fp_prd_format(const fp_prd* prd, char** out) {
  if (!prd || !out) return usage("null argument");
  return guard([&] {
    *out = dup(frog::format_prd(prd->v));
    return FP_OK;
  });
}

fp_status fp_prd_solve(const fp_prd* prd, uint64_t max_nodes, char** perm, uint64_t* nodes) {
  if (!prd) return usage("null instance");
  return guard([&] {
    frog::SearchLimits lim;
    lim.max_nodes = max_nodes;
    auto r = frog::solve_prd(prd->v, lim);
    if (nodes) *nodes = r.nodes;
    if (r.sat()) {
      set_out(perm, join_ints(r.perm()));
      return FP_OK;
    }
    return r.unsat() ? FP_UNSAT : FP_INCONCLUSIVE;
  });
}

fp_status fp_prd_verify(const fp_prd* prd, const char* perm) {
  if (!prd || !perm) return usage("null argument");
  return guard([&] {
    return frog::verify_prd(prd->v, frog::parse_permutation(perm)) ? FP_OK : FP_UNSAT;
  });
}

fp_status fp_prd_to_cfp(const fp_prd* prd, fp_instance** out) {
  if (!prd || !out) return usage("null argument");
  return guard([&] {
    *out = new fp_instance{frog::prd_to_cfp1d(prd->v).instance};
    return FP_OK;
  });
}

fp_status fp_make_instance(int width, int height, int walk_length, uint64_t seed,
                           fp_instance** out, char** witness) {
  if (!out) return usage("null argument");
  return guard([&] {
    auto g = frog::make_instance(width, height, walk_length, seed);
    set_out(witness, g.witness.to_string());
    *out = new fp_instance{std::move(g.instance)};
    return FP_OK;
  });
}

}  // extern "C"
