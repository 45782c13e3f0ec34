#pragma once

// Independent replay of a reduction trace: removes the recorded vertices
// from a working copy, checking each step's preconditions on the way.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "core/deciders.hpp"
#include "core/graph.hpp"

namespace replay {

using namespace stratifold;

inline StratifoldGraph remove_vertices(const StratifoldGraph& g, const std::set<std::string>& gone) {
    std::vector<std::size_t> keep;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!gone.count(g.vertex_id(v))) keep.push_back(v);
    return induced_subgraph(g, keep);
}

struct Outcome {
    bool consistent = true;
    std::string problem;
    std::vector<std::string> components;  // canonical serializations, sorted
};

inline Outcome replay(const StratifoldGraph& g, const ReductionTrace& trace) {
    Outcome out;
    auto bad = [&](std::string why) {
        out.consistent = false;
        if (out.problem.empty()) out.problem = std::move(why);
    };
    StratifoldGraph cur = g;
    for (const auto& step : trace.steps) {
        const auto edges_before = cur.edge_count();
        if (step.kind == StepKind::Step1) {
            if (step.removed_vertices.size() != 2) {
                bad("step 1 must remove two vertices");
                break;
            }
            auto w = cur.white_index(step.removed_vertices[0]);
            auto b = cur.black_index(step.removed_vertices[1]);
            if (!w || !b) {
                bad("step 1 removes unknown vertices");
                break;
            }
            const auto& we = cur.white_edges(*w);
            const auto& be = cur.black_edges(*b);
            if (we.size() != 1 || cur.edge_black(we[0]) != *b || cur.edges()[we[0]].label != 1) bad("bad terminal white");
            if (be.size() != 2) bad("step 1 black must have degree 2");
            std::vector<std::int64_t> labels;
            for (auto e : be) labels.push_back(cur.edges()[e].label);
            std::sort(labels.begin(), labels.end());
            if (labels != std::vector<std::int64_t>{1, 2}) bad("step 1 black must have labels 1 and 2");
        } else {
            if (step.removed_vertices.size() != 1) {
                bad("step 2 must remove one vertex");
                break;
            }
            auto b = cur.black_index(step.removed_vertices[0]);
            if (!b) {
                bad("step 2 removes an unknown vertex");
                break;
            }
            const auto& be = cur.black_edges(*b);
            if (be.size() < 3) bad("step 2 black must be a branch vertex");
            bool terminal = std::any_of(be.begin(), be.end(),
                                        [&](auto e) { return cur.white_edges(cur.edge_white(e)).size() == 1; });
            if (!terminal) bad("step 2 black needs a terminal white neighbour");
        }
        cur = remove_vertices(cur, {step.removed_vertices.begin(), step.removed_vertices.end()});
        const auto removed = edges_before - cur.edge_count();
        if (removed != step.removed_edges) bad("edge count mismatch");
        if (removed < 2) bad("step removed fewer than two edges");
    }
    bool all_whites = true;
    for (const auto& comp : connected_components(cur)) {
        auto c = induced_subgraph(cur, comp);
        if (c.edge_count() != 0) all_whites = false;
        out.components.push_back(canonical_serialize(c));
    }
    std::sort(out.components.begin(), out.components.end());
    if (all_whites != trace.all_whites) bad("terminal state mismatch");
    return out;
}

inline std::vector<std::string> serialized(const std::vector<StratifoldGraph>& components) {
    std::vector<std::string> out;
    for (const auto& c : components) out.push_back(canonical_serialize(c));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace replay
