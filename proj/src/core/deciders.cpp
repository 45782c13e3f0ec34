#include "core/deciders.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "core/errors.hpp"
#include "core/homology.hpp"

namespace stratifold {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::SimplyConnected: return "SimplyConnected";
        case Status::NotSimplyConnected: return "NotSimplyConnected";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

std::string_view to_string(Criterion c) {
    switch (c) {
        case Criterion::TreeCondition: return "tree_condition";
        case Criterion::GenusCondition: return "genus_condition";
        case Criterion::TerminalCondition: return "terminal_condition";
        case Criterion::SingleWhite: return "single_white";
        case Criterion::LinearGcd: return "linear_gcd";
        case Criterion::TrivalentPruning: return "trivalent_pruning";
        case Criterion::Z6Homology: return "z6_homology";
        case Criterion::Abelianization: return "abelianization";
        case Criterion::Undecided: return "undecided";
    }
    return "?";
}

std::string_view criterion_description(Criterion c) {
    switch (c) {
        case Criterion::TreeCondition: return "finite H1 requires the graph to be a tree";
        case Criterion::GenusCondition: return "H1(X;Z2) = 0 requires every white vertex to have genus 0";
        case Criterion::TerminalCondition: return "a terminal black vertex with label n gives a Z_n quotient of H1";
        case Criterion::SingleWhite: return "a single genus-0 white vertex is the 2-sphere";
        case Criterion::LinearGcd: return "linear gcd criterion";
        case Criterion::TrivalentPruning: return "trivalent pruning algorithm";
        case Criterion::Z6Homology: return "trivalent Z6 homology criterion";
        case Criterion::Abelianization: return "nontrivial abelianization";
        case Criterion::Undecided: return "no sufficient criterion for this graph family";
    }
    return "?";
}

std::string component_id(const StratifoldGraph& g) {
    std::string best;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (best.empty() || g.vertex_id(v) < best) best = g.vertex_id(v);
    return best;
}

namespace {

// Edge indices of some cycle, or empty if g is a forest.
std::vector<std::size_t> find_cycle(const StratifoldGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    // Spanning forest adjacency: (neighbour, edge).
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> forest(n);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto u = g.white_vertex(g.edge_white(e));
        const auto v = g.black_vertex(g.edge_black(e));
        if (find(u) != find(v)) {
            parent[find(u)] = find(v);
            forest[u].push_back({v, e});
            forest[v].push_back({u, e});
            continue;
        }
        // e closes a cycle: the forest path v -> u plus e.
        std::vector<std::pair<std::size_t, std::size_t>> via(n, {n, n});
        std::queue<std::size_t> queue;
        queue.push(v);
        via[v] = {v, n};
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop();
            if (x == u) break;
            for (auto [y, edge] : forest[x]) {
                if (via[y].first != n) continue;
                via[y] = {x, edge};
                queue.push(y);
            }
        }
        std::vector<std::size_t> cycle{e};
        for (auto x = u; x != v; x = via[x].first) cycle.push_back(via[x].second);
        return cycle;
    }
    return {};
}

Criterion criterion_for(const Witness& w) {
    if (std::holds_alternative<CycleWitness>(w)) return Criterion::TreeCondition;
    if (std::holds_alternative<GenusWitness>(w)) return Criterion::GenusCondition;
    return Criterion::TerminalCondition;
}

void require_trivalent(const StratifoldGraph& g) {
    if (!classify_shape(g).is_trivalent) fail(ErrorKind::Precondition, "graph is not trivalent");
}

// Mutable view of a tree used by the pruning.
class PruningState {
public:
    explicit PruningState(const StratifoldGraph& g)
        : g_(g), vertex_alive_(g.vertex_count(), true), edge_alive_(g.edge_count(), true) {
        for (std::size_t v = 0; v < g.vertex_count(); ++v) degree_.push_back(g.degree(v));
        for (std::size_t w = 0; w < g.white_count(); ++w) whites_by_id_.push_back(w);
        for (std::size_t b = 0; b < g.black_count(); ++b) blacks_by_id_.push_back(b);
        std::sort(whites_by_id_.begin(), whites_by_id_.end(),
                  [&g](auto a, auto b) { return g.whites()[a].id < g.whites()[b].id; });
        std::sort(blacks_by_id_.begin(), blacks_by_id_.end(),
                  [&g](auto a, auto b) { return g.blacks()[a].id < g.blacks()[b].id; });
    }

    bool try_step1(ReductionTrace& trace) {
        for (auto w : whites_by_id_) {
            const auto wv = g_.white_vertex(w);
            if (!vertex_alive_[wv] || degree_[wv] != 1) continue;
            const auto e1 = alive_edges(wv).front();
            if (g_.edges()[e1].label != 1) continue;
            const auto b = g_.edge_black(e1);
            const auto bv = g_.black_vertex(b);
            auto b_edges = alive_edges(bv);
            if (b_edges.size() != 2) continue;
            const auto e2 = b_edges[0] == e1 ? b_edges[1] : b_edges[0];
            if (g_.edges()[e2].label != 2) continue;
            const auto keep = g_.white_vertex(g_.edge_white(e2));
            if (keep == wv) continue;

            kill_vertex(wv);
            kill_vertex(bv);
            trace.steps.push_back({StepKind::Step1, {g_.vertex_id(wv), g_.vertex_id(bv)}, 2, {component_of(keep)}});
            return true;
        }
        return false;
    }

    bool try_step2(ReductionTrace& trace) {
        for (auto b : blacks_by_id_) {
            const auto bv = g_.black_vertex(b);
            if (!vertex_alive_[bv] || degree_[bv] < 3) continue;
            auto edges = alive_edges(bv);
            bool has_terminal_neighbour = std::any_of(edges.begin(), edges.end(), [&](auto e) {
                return degree_[g_.white_vertex(g_.edge_white(e))] == 1;
            });
            if (!has_terminal_neighbour) continue;

            std::vector<std::size_t> neighbours;
            for (auto e : edges) neighbours.push_back(g_.white_vertex(g_.edge_white(e)));
            kill_vertex(bv);
            std::vector<std::string> components;
            for (auto v : neighbours) components.push_back(component_of(v));
            std::sort(components.begin(), components.end());
            components.erase(std::unique(components.begin(), components.end()), components.end());
            trace.steps.push_back({StepKind::Step2, {g_.vertex_id(bv)}, edges.size(), std::move(components)});
            return true;
        }
        return false;
    }

    std::vector<StratifoldGraph> components() const {
        std::vector<std::size_t> alive;
        for (std::size_t v = 0; v < g_.vertex_count(); ++v)
            if (vertex_alive_[v]) alive.push_back(v);
        auto remaining = induced_subgraph(g_, alive);
        std::vector<StratifoldGraph> out;
        for (const auto& c : connected_components(remaining)) out.push_back(induced_subgraph(remaining, c));
        return out;
    }

private:
    std::vector<std::size_t> alive_edges(std::size_t v) const {
        const auto& all = g_.is_white_vertex(v) ? g_.white_edges(v) : g_.black_edges(v - g_.white_count());
        std::vector<std::size_t> out;
        for (auto e : all)
            if (edge_alive_[e]) out.push_back(e);
        return out;
    }

    std::size_t other_end(std::size_t v, std::size_t e) const {
        return g_.is_white_vertex(v) ? g_.black_vertex(g_.edge_black(e)) : g_.white_vertex(g_.edge_white(e));
    }

    void kill_vertex(std::size_t v) {
        for (auto e : alive_edges(v)) {
            edge_alive_[e] = false;
            --degree_[v];
            --degree_[other_end(v, e)];
        }
        vertex_alive_[v] = false;
    }

    std::string component_of(std::size_t start) const {
        std::vector<bool> seen(g_.vertex_count(), false);
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        std::string best = g_.vertex_id(start);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            best = std::min(best, g_.vertex_id(v));
            for (auto e : alive_edges(v)) {
                auto u = other_end(v, e);
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        return best;
    }

    const StratifoldGraph& g_;
    std::vector<bool> vertex_alive_;
    std::vector<bool> edge_alive_;
    std::vector<std::size_t> degree_;
    std::vector<std::size_t> whites_by_id_;
    std::vector<std::size_t> blacks_by_id_;
};

void check_stuck_component(const StratifoldGraph& c) {
    for (std::size_t v = 0; v < c.vertex_count(); ++v) {
        if (c.degree(v) != 1) continue;
        if (!c.is_white_vertex(v))
            fail(ErrorKind::Internal, "pruning reached a terminal black vertex '" + c.vertex_id(v) + "'");
        const auto& edge = c.edges()[c.white_edges(v).front()];
        if (edge.label != 2)
            fail(ErrorKind::Internal, "pruning stuck with terminal edge " + edge.white + "-" + edge.black +
                                          " of label " + std::to_string(edge.label));
    }
}

}  // namespace

NecessaryReport necessary_conditions(const StratifoldGraph& g) {
    require_valid(g);
    NecessaryReport report;

    auto cycle = find_cycle(g);
    report.is_tree = cycle.empty();
    if (!report.is_tree) report.failures.push_back(CycleWitness{std::move(cycle)});

    report.all_white_genus0 = true;
    for (const auto& w : g.whites()) {
        if (w.genus == 0) continue;
        report.all_white_genus0 = false;
        report.failures.push_back(GenusWitness{w.id, w.genus});
    }

    report.all_terminals_white = true;
    for (std::size_t b = 0; b < g.black_count(); ++b) {
        if (g.black_edges(b).size() != 1) continue;
        report.all_terminals_white = false;
        report.failures.push_back(TerminalBlackWitness{g.blacks()[b].id, g.edges()[g.black_edges(b).front()].label});
    }
    return report;
}

Verdict decide_linear(const StratifoldGraph& g) {
    auto profile = linear_profile(g);
    if (auto violation = first_gcd_violation(profile))
        return {Status::NotSimplyConnected, Criterion::LinearGcd, *violation, std::nullopt};
    return {Status::SimplyConnected, Criterion::LinearGcd, std::monostate{}, std::nullopt};
}

ReductionResult reduce_trivalent(const StratifoldGraph& g) {
    require_trivalent(g);
    if (!necessary_conditions(g).pass())
        fail(ErrorKind::Precondition, "pruning needs a tree with genus-0 whites and white terminals");

    ReductionResult result;
    PruningState state(g);
    const std::size_t step_bound = g.edge_count();
    while (state.try_step1(result.trace) || state.try_step2(result.trace)) {
        if (result.trace.steps.size() > step_bound) fail(ErrorKind::Internal, "pruning exceeded its step bound");
    }

    result.components = state.components();
    result.trace.all_whites = true;
    for (const auto& c : result.components) {
        if (c.edge_count() == 0) continue;
        check_stuck_component(c);
        result.trace.all_whites = false;
        if (!result.trace.stuck_component) result.trace.stuck_component = component_id(c);
    }
    return result;
}

Verdict decide_trivalent(const StratifoldGraph& g) {
    auto result = reduce_trivalent(g);
    Verdict v;
    v.criterion = Criterion::TrivalentPruning;
    if (result.trace.all_whites) {
        v.status = Status::SimplyConnected;
    } else {
        v.status = Status::NotSimplyConnected;
        for (auto& c : result.components) {
            if (component_id(c) == *result.trace.stuck_component) {
                v.witness = StuckWitness{*result.trace.stuck_component, std::move(c)};
                break;
            }
        }
    }
    v.trace = std::move(result.trace);
    return v;
}

Verdict z6_verdict(const StratifoldGraph& g) {
    require_trivalent(g);
    auto necessary = necessary_conditions(g);
    if (!necessary.pass())
        return {Status::NotSimplyConnected, Criterion::Z6Homology, necessary.failures.front(), std::nullopt};
    auto orders = h1_mod(g, 6);
    const auto status = orders.empty() ? Status::SimplyConnected : Status::NotSimplyConnected;
    return {status, Criterion::Z6Homology, ModHomologyWitness{6, std::move(orders)}, std::nullopt};
}

Verdict decide(const StratifoldGraph& g) {
    auto necessary = necessary_conditions(g);
    if (!necessary.pass()) {
        auto& first = necessary.failures.front();
        return {Status::NotSimplyConnected, criterion_for(first), std::move(first), std::nullopt};
    }
    auto shape = classify_shape(g);
    if (shape.is_single_white) return {Status::SimplyConnected, Criterion::SingleWhite, std::monostate{}, std::nullopt};
    if (shape.is_linear) return decide_linear(g);
    if (shape.is_trivalent) return decide_trivalent(g);

    auto group = h1(g);
    if (!group.is_trivial())
        return {Status::NotSimplyConnected, Criterion::Abelianization, IntegralHomologyWitness{std::move(group)},
                std::nullopt};
    return {Status::Unknown, Criterion::Undecided, IntegralHomologyWitness{std::move(group)}, std::nullopt};
}

}  // namespace stratifold
