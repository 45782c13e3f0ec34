#pragma once

// Re-derives the obstruction behind a NotSimplyConnected verdict from the
// graph alone, without consulting the decider that produced it.

#include <numeric>
#include <set>
#include <string>
#include <variant>

#include "core/deciders.hpp"
#include "core/graph.hpp"
#include "core/homology.hpp"

namespace witness {

using namespace stratifold;

inline bool certifies(const StratifoldGraph& g, const Witness& w) {
    if (const auto* c = std::get_if<CycleWitness>(&w)) {
        // A closed walk alternating white/black with no repeated edge.
        if (c->edges.size() < 2) return false;
        std::set<std::size_t> seen(c->edges.begin(), c->edges.end());
        if (seen.size() != c->edges.size()) return false;
        for (std::size_t i = 0; i < c->edges.size(); ++i) {
            auto a = c->edges[i], b = c->edges[(i + 1) % c->edges.size()];
            if (a >= g.edge_count() || b >= g.edge_count()) return false;
            if (g.edge_white(a) != g.edge_white(b) && g.edge_black(a) != g.edge_black(b)) return false;
        }
        return graph_betti1(g) > 0;
    }
    if (const auto* gw = std::get_if<GenusWitness>(&w)) {
        auto idx = g.white_index(gw->white);
        return idx && g.whites()[*idx].genus == gw->genus && gw->genus != 0;
    }
    if (const auto* t = std::get_if<TerminalBlackWitness>(&w)) {
        auto idx = g.black_index(t->black);
        return idx && g.black_edges(*idx).size() == 1 && g.edges()[g.black_edges(*idx)[0]].label == t->label &&
               t->label >= 3;
    }
    if (const auto* v = std::get_if<GcdViolation>(&w)) {
        auto p = linear_profile(g);
        if (v->i < 1 || v->i > v->j || v->j > p.length()) return false;
        return p.m[v->i - 1] == v->m_i && p.n[v->j - 1] == v->n_j && std::gcd(v->m_i, v->n_j) == v->gcd &&
               v->gcd > 1;
    }
    if (const auto* s = std::get_if<StuckWitness>(&w)) {
        // A stuck component carries Z2 homology, which survives in X.
        return s->graph.edge_count() > 0 && !h1_mod(s->graph, 2).empty() && !h1_mod(g, 2).empty();
    }
    if (const auto* ih = std::get_if<IntegralHomologyWitness>(&w)) {
        return !ih->group.is_trivial() && h1(g) == ih->group;
    }
    if (const auto* mh = std::get_if<ModHomologyWitness>(&w)) {
        return !mh->orders.empty() && h1_mod(g, mh->modulus) == mh->orders;
    }
    return false;
}

}  // namespace witness
