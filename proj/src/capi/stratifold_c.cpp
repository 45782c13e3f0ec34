#include "stratifold/stratifold.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "core/deciders.hpp"
#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "core/homology.hpp"
#include "core/report.hpp"

using namespace stratifold;

struct sfd_graph {
  std::shared_ptr<const StratifoldGraph> rep;
};

struct sfd_verdict {
  Verdict rep;
  std::shared_ptr<const StratifoldGraph> graph;
};

struct sfd_group {
  AbelianGroup rep;
  bool modular = false;  // torsion holds Z/n cyclic orders
  std::int64_t modulus = 0;
};

struct sfd_enumeration {
  std::vector<sfd_graph> graphs;
};

namespace {

thread_local std::string last_error;

sfd_status status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Argument: return SFD_ERR_ARGUMENT;
    case ErrorKind::Parse: return SFD_ERR_PARSE;
    case ErrorKind::InvalidGraph: return SFD_ERR_INVALID_GRAPH;
    case ErrorKind::Precondition: return SFD_ERR_PRECONDITION;
    case ErrorKind::Internal: return SFD_ERR_INTERNAL;
  }
  return SFD_ERR_INTERNAL;
}

// Runs fn, mapping exceptions onto status codes.
template <class Fn>
sfd_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return SFD_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_for(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SFD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SFD_ERR_INTERNAL;
  }
}

sfd_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return SFD_ERR_ARGUMENT;
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

sfd_status make_verdict(const sfd_graph* g, sfd_verdict** out, Verdict (*decider)(const StratifoldGraph&)) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new sfd_verdict{decider(*g->rep), g->rep}; });
}

}  // namespace

extern "C" {

const char* sfd_version(void) { return "1.0.0"; }

const char* sfd_last_error(void) { return last_error.c_str(); }

void sfd_string_free(char* s) { std::free(s); }

sfd_status sfd_graph_parse(const char* text, size_t length, sfd_graph** out) {
  if (text == nullptr) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    auto graph = std::make_shared<const StratifoldGraph>(parse_graph(std::string_view(text, length)));
    *out = new sfd_graph{std::move(graph)};
  });
}

void sfd_graph_free(sfd_graph* g) { delete g; }

size_t sfd_graph_white_count(const sfd_graph* g) { return g ? g->rep->white_count() : 0; }
size_t sfd_graph_black_count(const sfd_graph* g) { return g ? g->rep->black_count() : 0; }
size_t sfd_graph_edge_count(const sfd_graph* g) { return g ? g->rep->edge_count() : 0; }

sfd_status sfd_graph_serialize(const sfd_graph* g, char** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = copy_string(canonical_serialize(*g->rep)); });
}

sfd_status sfd_graph_export_dot(const sfd_graph* g, char** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = copy_string(export_dot(*g->rep)); });
}

sfd_status sfd_graph_validate(const sfd_graph* g, sfd_format format, int* ok, char** report) {
  if (g == nullptr) return null_argument("graph");
  return guarded([&] {
    auto r = validate(*g->rep);
    if (ok) *ok = r.ok() ? 1 : 0;
    if (report)
      *report = copy_string(format == SFD_FORMAT_JSON ? to_json(r).dump(2) + "\n" : validation_text(r));
  });
}

sfd_status sfd_graph_shape(const sfd_graph* g, sfd_shape* out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    auto s = classify_shape(*g->rep);
    *out = {s.is_tree, s.is_single_white, s.is_linear, s.is_trivalent};
  });
}

sfd_status sfd_h1(const sfd_graph* g, sfd_group** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new sfd_group{h1(*g->rep), false, 0}; });
}

sfd_status sfd_h1_mod(const sfd_graph* g, int64_t n, sfd_group** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    AbelianGroup group;
    for (auto order : h1_mod(*g->rep, n)) group.torsion.push_back(to_integer(order));
    *out = new sfd_group{std::move(group), true, n};
  });
}

void sfd_group_free(sfd_group* group) { delete group; }

int sfd_group_is_trivial(const sfd_group* group) { return group && group->rep.is_trivial() ? 1 : 0; }

uint64_t sfd_group_free_rank(const sfd_group* group) { return group ? group->rep.free_rank : 0; }

size_t sfd_group_torsion_count(const sfd_group* group) { return group ? group->rep.torsion.size() : 0; }

sfd_status sfd_group_torsion_at(const sfd_group* group, size_t i, char** out) {
  if (group == nullptr) return null_argument("group");
  if (out == nullptr) return null_argument("out");
  if (i >= group->rep.torsion.size()) {
    last_error = "torsion index out of range";
    return SFD_ERR_ARGUMENT;
  }
  return guarded([&] { *out = copy_string(group->rep.torsion[i].get_str()); });
}

sfd_status sfd_group_render(const sfd_group* group, sfd_format format, char** out) {
  if (group == nullptr) return null_argument("group");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    if (format == SFD_FORMAT_TEXT) {
      *out = copy_string(group->rep.to_string());
      return;
    }
    auto doc = to_json(group->rep);
    if (group->modular) {
      doc = {{"modulus", group->modulus},
             {"orders", doc["torsion"]},
             {"trivial", group->rep.is_trivial()},
             {"text", group->rep.to_string()}};
    }
    *out = copy_string(doc.dump(2) + "\n");
  });
}

sfd_status sfd_graph_betti1(const sfd_graph* g, int64_t* out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = graph_betti1(*g->rep); });
}

sfd_status sfd_euler_char_m(const sfd_graph* g, int64_t* out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = euler_char_M(*g->rep); });
}

sfd_status sfd_sphere_count(const sfd_graph* g, int64_t* out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = sphere_count(*g->rep); });
}

sfd_status sfd_decide(const sfd_graph* g, sfd_verdict** out) { return make_verdict(g, out, &decide); }
sfd_status sfd_decide_linear(const sfd_graph* g, sfd_verdict** out) { return make_verdict(g, out, &decide_linear); }
sfd_status sfd_decide_trivalent(const sfd_graph* g, sfd_verdict** out) {
  return make_verdict(g, out, &decide_trivalent);
}
sfd_status sfd_z6_verdict(const sfd_graph* g, sfd_verdict** out) { return make_verdict(g, out, &z6_verdict); }

void sfd_verdict_free(sfd_verdict* v) { delete v; }

sfd_verdict_status sfd_verdict_get_status(const sfd_verdict* v) {
  if (v == nullptr) return SFD_UNKNOWN;
  switch (v->rep.status) {
    case Status::SimplyConnected: return SFD_SIMPLY_CONNECTED;
    case Status::NotSimplyConnected: return SFD_NOT_SIMPLY_CONNECTED;
    case Status::Unknown: return SFD_UNKNOWN;
  }
  return SFD_UNKNOWN;
}

int sfd_verdict_has_trace(const sfd_verdict* v) { return v && v->rep.trace ? 1 : 0; }

sfd_status sfd_verdict_render(const sfd_verdict* v, sfd_format format, int include_trace, char** out) {
  if (v == nullptr) return null_argument("verdict");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    if (format == SFD_FORMAT_JSON) {
      *out = copy_string(to_json(v->rep, *v->graph, include_trace != 0).dump(2) + "\n");
      return;
    }
    std::string text = verdict_text(v->rep, *v->graph) + "\n";
    if (include_trace && v->rep.trace) text += "trace:\n" + trace_text(*v->rep.trace);
    *out = copy_string(text);
  });
}

void sfd_gen_params_default(sfd_gen_params* p) {
  if (p == nullptr) return;
  const GenParams defaults;
  *p = {defaults.seed, static_cast<uint32_t>(defaults.max_black), defaults.label_bound, defaults.genus_min,
        defaults.genus_max, defaults.inject_terminal_blacks ? 1 : 0};
}

sfd_status sfd_generate(sfd_gen_kind kind, const sfd_gen_params* p, sfd_graph** out) {
  if (p == nullptr) return null_argument("params");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    GenParams params{p->seed, p->max_black, p->label_bound, p->genus_min, p->genus_max, p->inject_terminal_blacks != 0};
    StratifoldGraph g;
    switch (kind) {
      case SFD_GEN_LINEAR: g = gen_linear(params); break;
      case SFD_GEN_TRIVALENT: g = gen_trivalent(params); break;
      case SFD_GEN_TREE: g = gen_tree(params); break;
      default: fail(ErrorKind::Argument, "unknown generator kind");
    }
    *out = new sfd_graph{std::make_shared<const StratifoldGraph>(std::move(g))};
  });
}

sfd_status sfd_enumerate_trivalent(uint32_t max_black, sfd_enumeration** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    auto e = std::make_unique<sfd_enumeration>();
    for (auto& g : enumerate_trivalent(max_black))
      e->graphs.push_back(sfd_graph{std::make_shared<const StratifoldGraph>(std::move(g))});
    *out = e.release();
  });
}

size_t sfd_enumeration_size(const sfd_enumeration* e) { return e ? e->graphs.size() : 0; }

const sfd_graph* sfd_enumeration_at(const sfd_enumeration* e, size_t i) {
  if (e == nullptr || i >= e->graphs.size()) return nullptr;
  return &e->graphs[i];
}

void sfd_enumeration_free(sfd_enumeration* e) { delete e; }

}  // extern "C"
