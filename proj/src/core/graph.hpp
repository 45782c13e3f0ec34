#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stratifold {

// White vertex: a component of the 2-manifold part. Negative genus encodes a
// nonorientable surface with |genus| crosscaps.
struct WhiteVertex {
    std::string id;
    std::int64_t genus = 0;

    friend bool operator==(const WhiteVertex&, const WhiteVertex&) = default;
};

// Black vertex: regular neighborhood of a singular circle. Its partition is
// carried by the labels of the incident edges.
struct BlackVertex {
    std::string id;

    friend bool operator==(const BlackVertex&, const BlackVertex&) = default;
};

enum class EdgeSign { Plus, Minus };

struct Edge {
    std::string white;
    std::string black;
    std::int64_t label = 1;
    EdgeSign sign = EdgeSign::Plus;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Labeled bicolored graph of a 2-stratifold. Immutable after construction;
// the constructor enforces the structural rules (unique non-empty ids, edges
// referencing known vertices of the right colour, positive labels) and throws
// Error(Parse) otherwise. Semantic validity is checked by validate().
class StratifoldGraph {
public:
    StratifoldGraph() = default;
    StratifoldGraph(std::vector<WhiteVertex> whites, std::vector<BlackVertex> blacks,
                    std::vector<Edge> edges);

    const std::vector<WhiteVertex>& whites() const noexcept { return whites_; }
    const std::vector<BlackVertex>& blacks() const noexcept { return blacks_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    std::size_t white_count() const noexcept { return whites_.size(); }
    std::size_t black_count() const noexcept { return blacks_.size(); }
    std::size_t vertex_count() const noexcept { return whites_.size() + blacks_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::optional<std::size_t> white_index(std::string_view id) const;
    std::optional<std::size_t> black_index(std::string_view id) const;

    // Endpoint indices of edge e into whites() / blacks().
    std::size_t edge_white(std::size_t e) const { return edge_white_[e]; }
    std::size_t edge_black(std::size_t e) const { return edge_black_[e]; }

    // Incident edge indices, in document order.
    const std::vector<std::size_t>& white_edges(std::size_t w) const { return white_edges_[w]; }
    const std::vector<std::size_t>& black_edges(std::size_t b) const { return black_edges_[b]; }

    // Unified vertex numbering: whites are 0..W-1, blacks are W..W+B-1.
    std::size_t white_vertex(std::size_t w) const noexcept { return w; }
    std::size_t black_vertex(std::size_t b) const noexcept { return whites_.size() + b; }
    bool is_white_vertex(std::size_t v) const noexcept { return v < whites_.size(); }
    const std::string& vertex_id(std::size_t v) const;
    std::size_t degree(std::size_t v) const;

    // Same vertices and the same edge multiset, regardless of listing order.
    friend bool operator==(const StratifoldGraph& a, const StratifoldGraph& b);

private:
    std::vector<WhiteVertex> whites_;
    std::vector<BlackVertex> blacks_;
    std::vector<Edge> edges_;

    std::map<std::string, std::size_t, std::less<>> white_lookup_;
    std::map<std::string, std::size_t, std::less<>> black_lookup_;
    std::vector<std::size_t> edge_white_;
    std::vector<std::size_t> edge_black_;
    std::vector<std::vector<std::size_t>> white_edges_;
    std::vector<std::vector<std::size_t>> black_edges_;
};

struct Violation {
    std::string code;  // machine-readable: disconnected, black_label_sum, ...
    std::string ref;   // offending vertex id, or empty
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

struct ShapeFlags {
    bool is_tree = false;
    bool is_single_white = false;
    bool is_linear = false;
    bool is_trivalent = false;

    friend bool operator==(const ShapeFlags&, const ShapeFlags&) = default;
};

// Labels along a linear graph w0 -m1- b1 -n1- w1 -m2- b2 ... -nr- wr.
struct LinearProfile {
    std::vector<std::int64_t> m;
    std::vector<std::int64_t> n;

    std::size_t length() const noexcept { return m.size(); }
    // Same graph read from the other end.
    LinearProfile reversed() const;

    friend bool operator==(const LinearProfile&, const LinearProfile&) = default;
};

ValidationReport validate(const StratifoldGraph& g);

// Throws Error(InvalidGraph) listing the first violation if validate() fails.
void require_valid(const StratifoldGraph& g);

ShapeFlags classify_shape(const StratifoldGraph& g);

// Incident labels of a black vertex, sorted ascending (multi-edges repeated).
std::vector<std::int64_t> black_partition(const StratifoldGraph& g, std::string_view black_id);

LinearProfile linear_profile(const StratifoldGraph& g);

StratifoldGraph parse_graph(std::string_view text);
std::string canonical_serialize(const StratifoldGraph& g);
std::string export_dot(const StratifoldGraph& g);

// The same graph with whites, blacks and edges sorted by id tuples.
StratifoldGraph sorted_copy(const StratifoldGraph& g);

// Subgraph induced by the given unified vertex indices (edges kept when both
// endpoints are kept).
StratifoldGraph induced_subgraph(const StratifoldGraph& g, const std::vector<std::size_t>& vertices);

// Connected components as lists of unified vertex indices, each list sorted,
// components ordered by their smallest vertex id.
std::vector<std::vector<std::size_t>> connected_components(const StratifoldGraph& g);

}  // namespace stratifold
