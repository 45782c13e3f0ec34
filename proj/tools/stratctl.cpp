// stratctl: command-line front end over the stratifold C API.
//
// Exit codes: 0 command ran (verdicts are report content), 1 invalid input,
// 2 usage error, 3 internal invariant violation or crosscheck disagreement.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "stratifold/stratifold.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct GraphDeleter {
  void operator()(sfd_graph* g) const { sfd_graph_free(g); }
};
struct VerdictDeleter {
  void operator()(sfd_verdict* v) const { sfd_verdict_free(v); }
};
struct GroupDeleter {
  void operator()(sfd_group* g) const { sfd_group_free(g); }
};
struct EnumerationDeleter {
  void operator()(sfd_enumeration* e) const { sfd_enumeration_free(e); }
};
struct StringDeleter {
  void operator()(char* s) const { sfd_string_free(s); }
};

using Graph = std::unique_ptr<sfd_graph, GraphDeleter>;
using VerdictPtr = std::unique_ptr<sfd_verdict, VerdictDeleter>;
using Group = std::unique_ptr<sfd_group, GroupDeleter>;
using Enumeration = std::unique_ptr<sfd_enumeration, EnumerationDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind with a specific exit code after printing a message.
struct Exit {
  int code;
};

int exit_code_for(sfd_status s) {
  switch (s) {
    case SFD_OK: return kExitOk;
    case SFD_ERR_ARGUMENT: return kExitUsage;
    case SFD_ERR_INTERNAL: return kExitInternal;
    default: return kExitInvalidInput;
  }
}

void check(sfd_status s, const std::string& context) {
  if (s == SFD_OK) return;
  std::cerr << "stratctl: " << context << ": " << sfd_last_error() << "\n";
  throw Exit{exit_code_for(s)};
}

std::string take(char* s) {
  CString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "stratctl: cannot read '" << path << "'\n";
    throw Exit{kExitInvalidInput};
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto text = buffer.str();
  sfd_graph* raw = nullptr;
  check(sfd_graph_parse(text.data(), text.size(), &raw), path);
  return Graph(raw);
}

// Parses and requires validate() to pass.
Graph load_valid_graph(const std::string& path) {
  auto g = load_graph(path);
  int ok = 0;
  char* report = nullptr;
  check(sfd_graph_validate(g.get(), SFD_FORMAT_TEXT, &ok, &report), path);
  auto text = take(report);
  if (!ok) {
    std::cerr << "stratctl: " << path << ": " << text;
    throw Exit{kExitInvalidInput};
  }
  return g;
}

std::string render(const sfd_verdict* v, sfd_format format, bool trace) {
  char* out = nullptr;
  check(sfd_verdict_render(v, format, trace ? 1 : 0, &out), "render verdict");
  return take(out);
}

std::string render(const sfd_group* g, sfd_format format) {
  char* out = nullptr;
  check(sfd_group_render(g, format, &out), "render group");
  return take(out);
}

VerdictPtr run_decider(sfd_status (*decider)(const sfd_graph*, sfd_verdict**), const sfd_graph* g,
                       const std::string& context) {
  sfd_verdict* raw = nullptr;
  check(decider(g, &raw), context);
  return VerdictPtr(raw);
}

int cmd_validate(const std::string& path, sfd_format format) {
  auto g = load_graph(path);
  int ok = 0;
  char* report = nullptr;
  check(sfd_graph_validate(g.get(), format, &ok, &report), path);
  std::cout << take(report);
  return ok ? kExitOk : kExitInvalidInput;
}

int cmd_decide(const std::string& path, bool trace, sfd_format format) {
  auto g = load_valid_graph(path);
  auto v = run_decider(&sfd_decide, g.get(), path);
  std::cout << render(v.get(), format, trace);
  if (trace && !sfd_verdict_has_trace(v.get()) && format == SFD_FORMAT_TEXT)
    std::cout << "trace: none (verdict not produced by the pruning algorithm)\n";
  return kExitOk;
}

int cmd_homology(const std::string& path, std::optional<std::int64_t> modulus, sfd_format format) {
  auto g = load_valid_graph(path);
  sfd_group* raw = nullptr;
  if (modulus)
    check(sfd_h1_mod(g.get(), *modulus, &raw), path);
  else
    check(sfd_h1(g.get(), &raw), path);
  Group group(raw);
  if (format == SFD_FORMAT_JSON) {
    std::cout << render(group.get(), format);
    return kExitOk;
  }
  const std::string lhs = modulus ? "H1(X;Z" + std::to_string(*modulus) + ")" : "H1(X)";
  std::cout << lhs << " = " << render(group.get(), SFD_FORMAT_TEXT)
            << (sfd_group_is_trivial(group.get()) ? " (trivial)" : " (nontrivial)") << "\n";
  return kExitOk;
}

int cmd_homotopy(const std::string& path, sfd_format format) {
  auto g = load_valid_graph(path);
  auto v = run_decider(&sfd_decide, g.get(), path);
  const bool simply_connected = sfd_verdict_get_status(v.get()) == SFD_SIMPLY_CONNECTED;

  std::optional<std::int64_t> spheres, kappa;
  if (simply_connected) {
    std::int64_t s = 0, k = 0;
    check(sfd_sphere_count(g.get(), &s), path);
    check(sfd_euler_char_m(g.get(), &k), path);
    spheres = s;
    kappa = k;
  }

  if (format == SFD_FORMAT_JSON) {
    nlohmann::json doc{{"verdict", nlohmann::json::parse(render(v.get(), SFD_FORMAT_JSON, false))}};
    if (simply_connected) {
      doc["sphere_count"] = *spheres;
      doc["euler_char_M"] = *kappa;
      doc["euler_char_M_minus_one"] = *kappa - 1;
    } else {
      doc["sphere_count"] = nullptr;
    }
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << render(v.get(), SFD_FORMAT_TEXT, false);
  if (!simply_connected) {
    std::cout << "homotopy type: not classified (needs a simply connected instance)\n";
    return kExitOk;
  }
  std::cout << "sphere count (#white - #black): " << *spheres << "\n"
            << "kappa(M) - 1: " << (*kappa - 1) << "\n"
            << "homotopy type: wedge of " << *spheres << " 2-sphere" << (*spheres == 1 ? "" : "s") << "\n";
  return kExitOk;
}

int cmd_export_dot(const std::string& path) {
  auto g = load_graph(path);
  char* out = nullptr;
  check(sfd_graph_export_dot(g.get(), &out), path);
  std::cout << take(out);
  return kExitOk;
}

int cmd_generate(const std::string& kind, const sfd_gen_params& params) {
  sfd_gen_kind k = SFD_GEN_LINEAR;
  if (kind == "trivalent") k = SFD_GEN_TRIVALENT;
  if (kind == "tree") k = SFD_GEN_TREE;
  sfd_graph* raw = nullptr;
  check(sfd_generate(k, &params, &raw), "generate");
  Graph g(raw);
  char* out = nullptr;
  check(sfd_graph_serialize(g.get(), &out), "serialize");
  std::cout << take(out);
  return kExitOk;
}

struct Disagreement {
  std::string source;
  std::string pruning;
  std::string z6;
  std::string graph;
};

// Compares the pruning decision with the Z6 criterion on one graph.
std::optional<Disagreement> compare_deciders(const sfd_graph* g, const std::string& source) {
  auto pruning = run_decider(&sfd_decide_trivalent, g, source + " (pruning)");
  auto z6 = run_decider(&sfd_z6_verdict, g, source + " (z6)");
  if (sfd_verdict_get_status(pruning.get()) == sfd_verdict_get_status(z6.get())) return std::nullopt;
  char* text = nullptr;
  check(sfd_graph_serialize(g, &text), "serialize");
  return Disagreement{source, render(pruning.get(), SFD_FORMAT_TEXT, false), render(z6.get(), SFD_FORMAT_TEXT, false),
                      take(text)};
}

int cmd_crosscheck(std::uint32_t max_black, std::uint64_t random_count, std::uint64_t seed,
                   std::uint32_t random_max_black, sfd_format format) {
  sfd_enumeration* raw = nullptr;
  check(sfd_enumerate_trivalent(max_black, &raw), "enumerate");
  Enumeration all(raw);

  std::vector<Disagreement> disagreements;
  std::size_t simply_connected = 0;
  const std::size_t enumerated = sfd_enumeration_size(all.get());
  for (std::size_t i = 0; i < enumerated; ++i) {
    const auto* g = sfd_enumeration_at(all.get(), i);
    if (auto d = compare_deciders(g, "enumerated #" + std::to_string(i))) disagreements.push_back(*d);
    auto v = run_decider(&sfd_z6_verdict, g, "z6");
    if (sfd_verdict_get_status(v.get()) == SFD_SIMPLY_CONNECTED) ++simply_connected;
  }

  sfd_gen_params params;
  sfd_gen_params_default(&params);
  params.max_black = random_max_black;
  for (std::uint64_t i = 0; i < random_count; ++i) {
    params.seed = seed + i;
    sfd_graph* graw = nullptr;
    check(sfd_generate(SFD_GEN_TRIVALENT, &params, &graw), "generate");
    Graph g(graw);
    if (auto d = compare_deciders(g.get(), "random seed " + std::to_string(params.seed))) disagreements.push_back(*d);
  }

  if (format == SFD_FORMAT_JSON) {
    nlohmann::json doc{{"max_black", max_black},
                       {"enumerated", enumerated},
                       {"enumerated_simply_connected", simply_connected},
                       {"random", random_count},
                       {"agreed", disagreements.empty()}};
    doc["disagreements"] = nlohmann::json::array();
    for (const auto& d : disagreements)
      doc["disagreements"].push_back(
          {{"source", d.source}, {"pruning", d.pruning}, {"z6", d.z6}, {"graph", nlohmann::json::parse(d.graph)}});
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "enumerated trivalent trees (max_black=" << max_black << "): " << enumerated << " ("
              << simply_connected << " simply connected)\n";
    if (random_count > 0) std::cout << "random trivalent trees: " << random_count << "\n";
    std::cout << "disagreements between pruning and Z6 criterion: " << disagreements.size() << "\n";
    for (const auto& d : disagreements)
      std::cout << "--- " << d.source << "\n  pruning: " << d.pruning << "  z6:      " << d.z6 << d.graph;
  }
  return disagreements.empty() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide simple connectivity and homology of 2-stratifolds given as labeled bicolored graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(sfd_version()));

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file;
  auto* validate = app.add_subcommand("validate", "Check a graph document against the 2-stratifold rules");
  validate->add_option("FILE", file, "Graph document")->required();

  bool trace = false;
  auto* decide = app.add_subcommand("decide", "Decide whether the 2-stratifold is simply connected");
  decide->add_option("FILE", file, "Graph document")->required();
  decide->add_flag("--trace", trace, "Print the pruning trace for trivalent graphs");

  std::int64_t modulus = 0;
  auto* homology = app.add_subcommand("homology", "First homology with integer or Z/N coefficients");
  homology->add_option("FILE", file, "Graph document")->required();
  auto* mod_option = homology->add_option("--mod", modulus, "Coefficients Z/N, N >= 2")->check(CLI::Range(2, 1 << 30));

  auto* homotopy = app.add_subcommand("homotopy", "Homotopy type (sphere count) of a simply connected instance");
  homotopy->add_option("FILE", file, "Graph document")->required();

  auto* export_dot = app.add_subcommand("export-dot", "Write the graph in DOT format");
  export_dot->add_option("FILE", file, "Graph document")->required();

  std::string kind;
  sfd_gen_params params;
  sfd_gen_params_default(&params);
  bool terminal_blacks = false;
  auto* generate = app.add_subcommand("generate", "Write a seeded random graph document to stdout");
  generate->add_option("--kind", kind, "Graph family")->required()->check(CLI::IsMember({"linear", "trivalent", "tree"}));
  generate->add_option("--seed", params.seed, "Random seed")->required();
  generate->add_option("--max-black", params.max_black, "Upper bound on black vertices")->check(CLI::PositiveNumber);
  generate->add_option("--label-bound", params.label_bound, "Upper bound on edge labels (>= 3)")->check(CLI::Range(3, 1 << 30));
  generate->add_option("--genus-min", params.genus_min, "Smallest white genus");
  generate->add_option("--genus-max", params.genus_max, "Largest white genus");
  generate->add_flag("--terminal-blacks", terminal_blacks, "Allow terminal black vertices");

  std::uint32_t max_black = 0;
  std::uint64_t random_count = 0;
  std::uint64_t seed = 0;
  std::uint32_t random_max_black = 12;
  auto* crosscheck = app.add_subcommand("crosscheck", "Compare the pruning algorithm with the Z6 criterion");
  crosscheck->add_option("--max-black", max_black, "Enumerate all trivalent trees up to this many blacks (<= 8)")
      ->required()
      ->check(CLI::Range(0, 8));
  crosscheck->add_option("--random", random_count, "Additional random trivalent trees");
  crosscheck->add_option("--seed", seed, "First seed for random trees");
  crosscheck->add_option("--random-max-black", random_max_black, "Black bound for random trees")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto format = format_name == "json" ? SFD_FORMAT_JSON : SFD_FORMAT_TEXT;
  try {
    if (*validate) return cmd_validate(file, format);
    if (*decide) return cmd_decide(file, trace, format);
    if (*homology)
      return cmd_homology(file, *mod_option ? std::optional<std::int64_t>(modulus) : std::nullopt, format);
    if (*homotopy) return cmd_homotopy(file, format);
    if (*export_dot) return cmd_export_dot(file);
    if (*generate) {
      params.inject_terminal_blacks = terminal_blacks ? 1 : 0;
      return cmd_generate(kind, params);
    }
    if (*crosscheck) return cmd_crosscheck(max_black, random_count, seed, random_max_black, format);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
