#pragma once

#include <string>

#include "core/graph.hpp"

namespace stratifold {

// Isomorphism-invariant code of a tree (colours, genera and edge labels
// included): the smaller of the rooted codes at the tree's one or two centres.
// Throws Error(Precondition) if g is not a tree.
std::string tree_canonical_code(const StratifoldGraph& g);

// Copy of a tree with ids replaced by w0, w1, ... and b0, b1, ... in canonical
// DFS order, so isomorphic trees get byte-identical serializations.
StratifoldGraph canonical_relabel(const StratifoldGraph& g);

}  // namespace stratifold
