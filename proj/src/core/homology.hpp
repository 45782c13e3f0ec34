#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/int_matrix.hpp"

namespace stratifold {

// Relation matrix for H1 of a tree with genus-0 whites: one generator per
// black vertex (its core circle), one relation per white vertex
// sum(label(e) * x_black(e)) = 0 over the edges at that white.
struct H1Presentation {
    IntMatrix matrix;                          // rows = whites, cols = blacks
    std::map<std::string, std::size_t> row_index;
    std::map<std::string, std::size_t> col_index;
};

// Throws Error(Precondition) unless g is a tree whose whites all have genus 0.
H1Presentation h1_matrix(const StratifoldGraph& g);

AbelianGroup h1(const StratifoldGraph& g);

// Cyclic orders of H1(X; Z/n).
std::vector<std::int64_t> h1_mod(const StratifoldGraph& g, std::int64_t n);

// Cycle rank |E| - |V| + 1 of the (connected) graph.
std::int64_t graph_betti1(const StratifoldGraph& g);

// Euler characteristic of the 2-manifold part M: each white contributes the
// Euler characteristic of its closed surface minus its boundary count.
std::int64_t euler_char_M(const StratifoldGraph& g);

// Number of 2-spheres in the wedge homotopy equivalent to X, #white - #black.
// Throws Error(Precondition) unless decide(g) is SimplyConnected.
std::int64_t sphere_count(const StratifoldGraph& g);

// Closed-surface Euler characteristic for a signed genus.
constexpr std::int64_t closed_surface_euler(std::int64_t genus) { return genus >= 0 ? 2 - 2 * genus : 2 + genus; }

}  // namespace stratifold
