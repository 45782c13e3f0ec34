#include "core/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "core/errors.hpp"

namespace stratifold {

StratifoldGraph::StratifoldGraph(std::vector<WhiteVertex> whites, std::vector<BlackVertex> blacks,
                                 std::vector<Edge> edges)
    : whites_(std::move(whites)), blacks_(std::move(blacks)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < whites_.size(); ++i) {
        const auto& id = whites_[i].id;
        if (id.empty()) fail(ErrorKind::Parse, "white vertex " + std::to_string(i) + " has an empty id");
        if (!white_lookup_.emplace(id, i).second) fail(ErrorKind::Parse, "duplicate vertex id '" + id + "'");
    }
    for (std::size_t i = 0; i < blacks_.size(); ++i) {
        const auto& id = blacks_[i].id;
        if (id.empty()) fail(ErrorKind::Parse, "black vertex " + std::to_string(i) + " has an empty id");
        if (white_lookup_.count(id) != 0 || !black_lookup_.emplace(id, i).second)
            fail(ErrorKind::Parse, "duplicate vertex id '" + id + "'");
    }

    white_edges_.resize(whites_.size());
    black_edges_.resize(blacks_.size());
    edge_white_.reserve(edges_.size());
    edge_black_.reserve(edges_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& edge = edges_[e];
        auto w = white_lookup_.find(edge.white);
        auto b = black_lookup_.find(edge.black);
        if (w == white_lookup_.end()) {
            if (black_lookup_.count(edge.white) != 0)
                fail(ErrorKind::Parse, "edge " + std::to_string(e) + ": '" + edge.white + "' is black, expected a white vertex");
            fail(ErrorKind::Parse, "edge " + std::to_string(e) + " references unknown white vertex '" + edge.white + "'");
        }
        if (b == black_lookup_.end()) {
            if (white_lookup_.count(edge.black) != 0)
                fail(ErrorKind::Parse, "edge " + std::to_string(e) + ": '" + edge.black + "' is white, expected a black vertex");
            fail(ErrorKind::Parse, "edge " + std::to_string(e) + " references unknown black vertex '" + edge.black + "'");
        }
        if (edge.label < 1)
            fail(ErrorKind::Parse, "edge " + std::to_string(e) + " has non-positive label " + std::to_string(edge.label));
        edge_white_.push_back(w->second);
        edge_black_.push_back(b->second);
        white_edges_[w->second].push_back(e);
        black_edges_[b->second].push_back(e);
    }
}

std::optional<std::size_t> StratifoldGraph::white_index(std::string_view id) const {
    auto it = white_lookup_.find(id);
    if (it == white_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> StratifoldGraph::black_index(std::string_view id) const {
    auto it = black_lookup_.find(id);
    if (it == black_lookup_.end()) return std::nullopt;
    return it->second;
}

const std::string& StratifoldGraph::vertex_id(std::size_t v) const {
    return is_white_vertex(v) ? whites_[v].id : blacks_[v - whites_.size()].id;
}

std::size_t StratifoldGraph::degree(std::size_t v) const {
    return is_white_vertex(v) ? white_edges_[v].size() : black_edges_[v - whites_.size()].size();
}

namespace {

auto edge_key(const Edge& e) { return std::tie(e.white, e.black, e.label, e.sign); }

// Neighbouring unified vertex index across edge e from v.
std::size_t across(const StratifoldGraph& g, std::size_t v, std::size_t e) {
    return g.is_white_vertex(v) ? g.black_vertex(g.edge_black(e)) : g.white_vertex(g.edge_white(e));
}

const std::vector<std::size_t>& incident(const StratifoldGraph& g, std::size_t v) {
    return g.is_white_vertex(v) ? g.white_edges(v) : g.black_edges(v - g.white_count());
}

std::int64_t label_sum(const StratifoldGraph& g, std::size_t b) {
    std::int64_t sum = 0;
    for (auto e : g.black_edges(b)) sum += g.edges()[e].label;
    return sum;
}

std::vector<std::int64_t> sorted_labels(const StratifoldGraph& g, std::size_t b) {
    std::vector<std::int64_t> labels;
    for (auto e : g.black_edges(b)) labels.push_back(g.edges()[e].label);
    std::sort(labels.begin(), labels.end());
    return labels;
}

bool is_trivalent_partition(const std::vector<std::int64_t>& labels) {
    static const std::vector<std::int64_t> star{1, 1, 1}, pair{1, 2}, cycle{3};
    return labels == star || labels == pair || labels == cycle;
}

}  // namespace

bool operator==(const StratifoldGraph& a, const StratifoldGraph& b) {
    auto sa = sorted_copy(a);
    auto sb = sorted_copy(b);
    return sa.whites_ == sb.whites_ && sa.blacks_ == sb.blacks_ && sa.edges_ == sb.edges_;
}

LinearProfile LinearProfile::reversed() const {
    LinearProfile out;
    out.m.assign(n.rbegin(), n.rend());
    out.n.assign(m.rbegin(), m.rend());
    return out;
}

std::vector<std::vector<std::size_t>> connected_components(const StratifoldGraph& g) {
    const std::size_t count = g.vertex_count();
    std::vector<bool> seen(count, false);
    std::vector<std::vector<std::size_t>> components;
    for (std::size_t start = 0; start < count; ++start) {
        if (seen[start]) continue;
        std::vector<std::size_t> component;
        std::vector<std::size_t> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (auto e : incident(g, v)) {
                auto u = across(g, v, e);
                if (!seen[u]) {
                    seen[u] = true;
                    stack.push_back(u);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    auto smallest_id = [&g](const std::vector<std::size_t>& c) {
        const std::string* best = &g.vertex_id(c.front());
        for (auto v : c)
            if (g.vertex_id(v) < *best) best = &g.vertex_id(v);
        return *best;
    };
    std::sort(components.begin(), components.end(),
              [&](const auto& x, const auto& y) { return smallest_id(x) < smallest_id(y); });
    return components;
}

ValidationReport validate(const StratifoldGraph& g) {
    ValidationReport report;
    if (g.vertex_count() == 0) {
        report.violations.push_back({"empty", "", "graph has no vertices"});
        return report;
    }
    if (g.white_count() == 0)
        report.violations.push_back({"no_white", "", "graph has no white vertex"});

    auto components = connected_components(g);
    if (components.size() > 1) {
        for (std::size_t i = 1; i < components.size(); ++i) {
            const auto& id = g.vertex_id(components[i].front());
            report.violations.push_back({"disconnected", id,
                                         "vertex '" + id + "' is not connected to '" +
                                             g.vertex_id(components[0].front()) + "'"});
        }
    }

    for (std::size_t b = 0; b < g.black_count(); ++b) {
        const auto& id = g.blacks()[b].id;
        const auto& edges = g.black_edges(b);
        if (edges.size() == 1) {
            auto label = g.edges()[edges.front()].label;
            if (label < 3)
                report.violations.push_back({"terminal_black_label", id,
                                             "terminal black vertex '" + id + "' has edge label " +
                                                 std::to_string(label) + " < 3"});
            continue;
        }
        auto sum = label_sum(g, b);
        if (sum < 3)
            report.violations.push_back({"black_label_sum", id,
                                         "black vertex '" + id + "' has label sum " + std::to_string(sum) +
                                             " < 3"});
    }
    return report;
}

void require_valid(const StratifoldGraph& g) {
    auto report = validate(g);
    if (!report.ok()) fail(ErrorKind::InvalidGraph, report.violations.front().message);
}

ShapeFlags classify_shape(const StratifoldGraph& g) {
    require_valid(g);
    ShapeFlags flags;
    flags.is_tree = g.edge_count() + 1 == g.vertex_count();
    flags.is_single_white = g.white_count() == 1 && g.black_count() == 0 && g.edge_count() == 0;

    flags.is_trivalent = true;
    for (std::size_t b = 0; b < g.black_count(); ++b) {
        if (!is_trivalent_partition(sorted_labels(g, b))) {
            flags.is_trivalent = false;
            break;
        }
    }

    if (flags.is_tree && g.black_count() > 0) {
        bool linear = true;
        for (std::size_t w = 0; w < g.white_count() && linear; ++w) {
            if (g.whites()[w].genus != 0 || g.white_edges(w).size() > 2) linear = false;
        }
        for (std::size_t b = 0; b < g.black_count() && linear; ++b) {
            if (g.black_edges(b).size() != 2) linear = false;
        }
        flags.is_linear = linear;
    }
    return flags;
}

std::vector<std::int64_t> black_partition(const StratifoldGraph& g, std::string_view black_id) {
    auto b = g.black_index(black_id);
    if (!b) {
        if (g.white_index(black_id))
            fail(ErrorKind::Argument, "'" + std::string(black_id) + "' is a white vertex");
        fail(ErrorKind::Argument, "unknown vertex '" + std::string(black_id) + "'");
    }
    return sorted_labels(g, *b);
}

LinearProfile linear_profile(const StratifoldGraph& g) {
    if (!classify_shape(g).is_linear) fail(ErrorKind::Precondition, "graph is not linear");

    // Walk the path from white endpoint `start`, collecting labels m1, n1, m2, ...
    auto walk = [&g](std::size_t start) {
        std::vector<std::int64_t> labels;
        std::size_t prev_edge = g.edge_count();
        std::size_t v = start;
        while (true) {
            const auto& edges = incident(g, v);
            auto next = std::find_if(edges.begin(), edges.end(), [&](auto e) { return e != prev_edge; });
            if (next == edges.end()) break;
            labels.push_back(g.edges()[*next].label);
            prev_edge = *next;
            v = across(g, v, *next);
        }
        return labels;
    };

    std::vector<std::size_t> ends;
    for (std::size_t w = 0; w < g.white_count(); ++w)
        if (g.white_edges(w).size() == 1) ends.push_back(w);
    if (ends.size() != 2) fail(ErrorKind::Internal, "linear graph without two white endpoints");

    auto forward = walk(ends[0]);
    auto backward = walk(ends[1]);
    const auto& labels = std::min(forward, backward);

    LinearProfile profile;
    for (std::size_t i = 0; i + 1 < labels.size(); i += 2) {
        profile.m.push_back(labels[i]);
        profile.n.push_back(labels[i + 1]);
    }
    return profile;
}

StratifoldGraph sorted_copy(const StratifoldGraph& g) {
    auto whites = g.whites();
    auto blacks = g.blacks();
    auto edges = g.edges();
    std::sort(whites.begin(), whites.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    std::sort(blacks.begin(), blacks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return edge_key(a) < edge_key(b); });
    return StratifoldGraph(std::move(whites), std::move(blacks), std::move(edges));
}

StratifoldGraph induced_subgraph(const StratifoldGraph& g, const std::vector<std::size_t>& vertices) {
    std::vector<bool> keep(g.vertex_count(), false);
    for (auto v : vertices) keep.at(v) = true;

    std::vector<WhiteVertex> whites;
    std::vector<BlackVertex> blacks;
    std::vector<Edge> edges;
    for (std::size_t w = 0; w < g.white_count(); ++w)
        if (keep[g.white_vertex(w)]) whites.push_back(g.whites()[w]);
    for (std::size_t b = 0; b < g.black_count(); ++b)
        if (keep[g.black_vertex(b)]) blacks.push_back(g.blacks()[b]);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (keep[g.white_vertex(g.edge_white(e))] && keep[g.black_vertex(g.edge_black(e))])
            edges.push_back(g.edges()[e]);
    return StratifoldGraph(std::move(whites), std::move(blacks), std::move(edges));
}

}  // namespace stratifold
