#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace fixtures {

using namespace stratifold;

// w0 -m1- b1 -n1- w1 -m2- b2 ... -nr- wr, all genus 0.
inline StratifoldGraph linear(const std::vector<std::int64_t>& m, const std::vector<std::int64_t>& n) {
    std::vector<WhiteVertex> whites{{"w0", 0}};
    std::vector<BlackVertex> blacks;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m.size(); ++i) {
        auto b = "b" + std::to_string(i + 1);
        auto w = "w" + std::to_string(i + 1);
        blacks.push_back({b});
        whites.push_back({w, 0});
        edges.push_back({"w" + std::to_string(i), b, m[i]});
        edges.push_back({w, b, n[i]});
    }
    return StratifoldGraph(whites, blacks, edges);
}

// Centre black b0 (1+1+1) with three arms u_i -1- c_i -2- t_i.
inline StratifoldGraph branch_star() {
    return StratifoldGraph({{"u1", 0}, {"u2", 0}, {"u3", 0}, {"t1", 0}, {"t2", 0}, {"t3", 0}},
                           {{"b0"}, {"c1"}, {"c2"}, {"c3"}},
                           {{"u1", "b0", 1},
                            {"u2", "b0", 1},
                            {"u3", "b0", 1},
                            {"u1", "c1", 1},
                            {"t1", "c1", 2},
                            {"u2", "c2", 1},
                            {"t2", "c2", 2},
                            {"u3", "c3", 1},
                            {"t3", "c3", 2}});
}

inline StratifoldGraph single_white(std::int64_t genus = 0) { return StratifoldGraph({{"w", genus}}, {}, {}); }

// w_t -1- b -2- w'
inline StratifoldGraph step1_branch() {
    return StratifoldGraph({{"wt", 0}, {"wp", 0}}, {{"b"}}, {{"wt", "b", 1}, {"wp", "b", 2}});
}

// w -3- b
inline StratifoldGraph terminal_black() { return StratifoldGraph({{"w", 0}}, {{"b"}}, {{"w", "b", 3}}); }

// White centre c with three arms c -2- a_i -1- leaf_i.
inline StratifoldGraph white_star_three_arms() {
    return StratifoldGraph({{"c", 0}, {"l1", 0}, {"l2", 0}, {"l3", 0}}, {{"a1"}, {"a2"}, {"a3"}},
                           {{"c", "a1", 2}, {"l1", "a1", 1}, {"c", "a2", 2}, {"l2", "a2", 1}, {"c", "a3", 2},
                            {"l3", "a3", 1}});
}

// Branch black B (1+1+1) with terminal white t and two arms
// B -1- p_i -1- c_i -2- t_i.
inline StratifoldGraph two_arms_with_branch() {
    return StratifoldGraph({{"t", 0}, {"p1", 0}, {"p2", 0}, {"t1", 0}, {"t2", 0}}, {{"B"}, {"c1"}, {"c2"}},
                           {{"t", "B", 1},
                            {"p1", "B", 1},
                            {"p2", "B", 1},
                            {"p1", "c1", 1},
                            {"t1", "c1", 2},
                            {"p2", "c2", 1},
                            {"t2", "c2", 2}});
}

// White centre c of degree 3, arms c -4- b1 -5- w1, c -3- b2 -7- w2, c -2- b3 -9- w3.
inline StratifoldGraph unknown_tree() {
    return StratifoldGraph({{"c", 0}, {"w1", 0}, {"w2", 0}, {"w3", 0}}, {{"b1"}, {"b2"}, {"b3"}},
                           {{"c", "b1", 4}, {"w1", "b1", 5}, {"c", "b2", 3}, {"w2", "b2", 7}, {"c", "b3", 2},
                            {"w3", "b3", 9}});
}

// Same vertex set as g with edge e duplicated.
inline StratifoldGraph with_duplicate_edge(const StratifoldGraph& g, std::size_t e) {
    auto edges = g.edges();
    edges.push_back(edges.at(e));
    return StratifoldGraph(g.whites(), g.blacks(), edges);
}

inline StratifoldGraph with_genus(const StratifoldGraph& g, const std::string& white, std::int64_t genus) {
    auto whites = g.whites();
    for (auto& w : whites)
        if (w.id == white) w.genus = genus;
    return StratifoldGraph(whites, g.blacks(), g.edges());
}

// g with a terminal branch leaf -1- b -2- anchor hung off white `anchor`.
inline StratifoldGraph with_step1_branch(const StratifoldGraph& g, const std::string& anchor, const std::string& tag) {
    auto whites = g.whites();
    auto blacks = g.blacks();
    auto edges = g.edges();
    whites.push_back({"leaf_" + tag, 0});
    blacks.push_back({"branch_" + tag});
    edges.push_back({"leaf_" + tag, "branch_" + tag, 1});
    edges.push_back({anchor, "branch_" + tag, 2});
    return StratifoldGraph(whites, blacks, edges);
}

}  // namespace fixtures
