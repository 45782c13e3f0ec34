#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "core/graph.hpp"
#include "core/int_matrix.hpp"
#include "core/presentation.hpp"

namespace stratifold {

enum class Status { SimplyConnected, NotSimplyConnected, Unknown };

// Which rule settled the verdict.
enum class Criterion {
    TreeCondition,      // H1 finite forces a tree
    GenusCondition,     // H1(X;Z2) = 0 forces genus-0 whites
    TerminalCondition,  // terminal black with label n gives a Z_n quotient
    SingleWhite,        // a lone genus-0 white is the 2-sphere
    LinearGcd,          // linear graphs: gcd(m_i, n_j) = 1 for i <= j
    TrivalentPruning,   // trivalent pruning algorithm
    Z6Homology,         // trivalent graphs: 1-connected iff H1(X;Z6) = 0
    Abelianization,     // nontrivial H1 for a general tree
    Undecided,          // no sufficient criterion applies
};

std::string_view to_string(Status s);
std::string_view to_string(Criterion c);
// Human description of the theorem behind a criterion.
std::string_view criterion_description(Criterion c);

struct CycleWitness {
    std::vector<std::size_t> edges;  // edge indices, in cycle order
};
struct GenusWitness {
    std::string white;
    std::int64_t genus = 0;
};
struct TerminalBlackWitness {
    std::string black;
    std::int64_t label = 0;
};
struct StuckWitness {
    std::string component;  // component id (smallest vertex id)
    StratifoldGraph graph;
};
struct IntegralHomologyWitness {
    AbelianGroup group;
};
struct ModHomologyWitness {
    std::int64_t modulus = 0;
    std::vector<std::int64_t> orders;
};

using Witness = std::variant<std::monostate, CycleWitness, GenusWitness, TerminalBlackWitness, GcdViolation,
                             StuckWitness, IntegralHomologyWitness, ModHomologyWitness>;

struct NecessaryReport {
    bool is_tree = false;
    bool all_white_genus0 = false;
    bool all_terminals_white = false;
    // Witnesses in the order tree, genus, terminal: one CycleWitness if not a
    // tree, one GenusWitness per nonzero-genus white, one TerminalBlackWitness
    // per terminal black.
    std::vector<Witness> failures;

    bool pass() const noexcept { return is_tree && all_white_genus0 && all_terminals_white; }
};

enum class StepKind { Step1, Step2 };

struct ReductionStep {
    StepKind kind = StepKind::Step1;
    std::vector<std::string> removed_vertices;
    std::size_t removed_edges = 0;
    std::vector<std::string> resulting_components;  // component ids touched by the step
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    bool all_whites = false;
    std::optional<std::string> stuck_component;  // first stuck component id
};

struct ReductionResult {
    ReductionTrace trace;
    std::vector<StratifoldGraph> components;  // ordered by component id
};

struct Verdict {
    Status status = Status::Unknown;
    Criterion criterion = Criterion::Undecided;
    Witness witness;
    std::optional<ReductionTrace> trace;
};

NecessaryReport necessary_conditions(const StratifoldGraph& g);

Verdict decide_linear(const StratifoldGraph& g);

// Runs the pruning: Step 1 removes a terminal branch w_t -1- b -2- w (keeping
// w) and is applied exhaustively in terminal-white id order; then Step 2
// removes the smallest-id black branch vertex with a terminal white neighbour.
// Repeats until neither applies. Throws Error(Internal) if a stuck component
// has a terminal edge whose label is not 2.
ReductionResult reduce_trivalent(const StratifoldGraph& g);

Verdict decide_trivalent(const StratifoldGraph& g);

Verdict z6_verdict(const StratifoldGraph& g);

Verdict decide(const StratifoldGraph& g);

// Component id used throughout traces: lexicographically smallest vertex id.
std::string component_id(const StratifoldGraph& g);

}  // namespace stratifold
