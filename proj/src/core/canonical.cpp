#include "core/canonical.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace stratifold {

namespace {

struct Neighbour {
    std::size_t vertex;
    std::size_t edge;
};

class RootedCoder {
public:
    explicit RootedCoder(const StratifoldGraph& g) : g_(g), adjacency_(g.vertex_count()) {
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            auto w = g.white_vertex(g.edge_white(e));
            auto b = g.black_vertex(g.edge_black(e));
            adjacency_[w].push_back({b, e});
            adjacency_[b].push_back({w, e});
        }
    }

    const std::vector<std::vector<Neighbour>>& adjacency() const { return adjacency_; }

    // Code of the subtree at v entered through edge `via` (edge_count() for the root).
    std::string code(std::size_t v, std::size_t via) const {
        std::vector<std::string> children;
        for (const auto& [u, e] : adjacency_[v]) {
            if (e == via) continue;
            children.push_back(edge_code(e) + code(u, e));
        }
        std::sort(children.begin(), children.end());
        std::string out = g_.is_white_vertex(v) ? "W" + std::to_string(g_.whites()[v].genus) : "B";
        out += "(";
        for (const auto& c : children) out += c + ",";
        return out + ")";
    }

    std::string edge_code(std::size_t e) const {
        const auto& edge = g_.edges()[e];
        return std::to_string(edge.label) + (edge.sign == EdgeSign::Minus ? "-" : "") + ":";
    }

    std::vector<std::size_t> centres() const {
        const std::size_t n = g_.vertex_count();
        if (n <= 2) {
            std::vector<std::size_t> all(n);
            for (std::size_t i = 0; i < n; ++i) all[i] = i;
            return all;
        }
        std::vector<std::size_t> degree(n);
        std::vector<std::size_t> leaves;
        for (std::size_t v = 0; v < n; ++v) {
            degree[v] = adjacency_[v].size();
            if (degree[v] <= 1) leaves.push_back(v);
        }
        std::size_t remaining = n;
        while (remaining > 2) {
            remaining -= leaves.size();
            std::vector<std::size_t> next;
            for (auto leaf : leaves)
                for (const auto& [u, e] : adjacency_[leaf])
                    if (--degree[u] == 1) next.push_back(u);
            leaves = std::move(next);
        }
        std::sort(leaves.begin(), leaves.end());
        return leaves;
    }

private:
    const StratifoldGraph& g_;
    std::vector<std::vector<Neighbour>> adjacency_;
};

void require_tree(const StratifoldGraph& g) {
    if (g.vertex_count() == 0 || g.edge_count() + 1 != g.vertex_count() || connected_components(g).size() != 1)
        fail(ErrorKind::Precondition, "canonical form is implemented for trees only");
}

std::pair<std::size_t, std::string> best_root(const RootedCoder& coder, std::size_t edge_count) {
    std::pair<std::size_t, std::string> best{0, ""};
    bool first = true;
    for (auto c : coder.centres()) {
        auto code = coder.code(c, edge_count);
        if (first || code < best.second) best = {c, std::move(code)};
        first = false;
    }
    return best;
}

}  // namespace

std::string tree_canonical_code(const StratifoldGraph& g) {
    require_tree(g);
    RootedCoder coder(g);
    return best_root(coder, g.edge_count()).second;
}

StratifoldGraph canonical_relabel(const StratifoldGraph& g) {
    require_tree(g);
    RootedCoder coder(g);
    const auto root = best_root(coder, g.edge_count()).first;

    std::vector<WhiteVertex> whites;
    std::vector<BlackVertex> blacks;
    std::vector<std::string> new_id(g.vertex_count());
    std::vector<Edge> edges;

    // Preorder walk with children sorted by (edge code + subtree code).
    auto visit = [&](auto& self, std::size_t v, std::size_t via) -> void {
        if (g.is_white_vertex(v)) {
            new_id[v] = "w" + std::to_string(whites.size());
            whites.push_back({new_id[v], g.whites()[v].genus});
        } else {
            new_id[v] = "b" + std::to_string(blacks.size());
            blacks.push_back({new_id[v]});
        }
        std::vector<std::pair<std::string, Neighbour>> children;
        for (const auto& nb : coder.adjacency()[v])
            if (nb.edge != via) children.push_back({coder.edge_code(nb.edge) + coder.code(nb.vertex, nb.edge), nb});
        std::sort(children.begin(), children.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [code, nb] : children) self(self, nb.vertex, nb.edge);
    };
    visit(visit, root, g.edge_count());

    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        Edge edge = g.edges()[e];
        edge.white = new_id[g.white_vertex(g.edge_white(e))];
        edge.black = new_id[g.black_vertex(g.edge_black(e))];
        edges.push_back(std::move(edge));
    }
    return StratifoldGraph(std::move(whites), std::move(blacks), std::move(edges));
}

}  // namespace stratifold
