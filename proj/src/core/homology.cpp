#include "core/homology.hpp"

#include "core/deciders.hpp"
#include "core/errors.hpp"

namespace stratifold {

H1Presentation h1_matrix(const StratifoldGraph& g) {
    require_valid(g);
    if (!classify_shape(g).is_tree) fail(ErrorKind::Precondition, "H1 presentation needs a tree");
    for (const auto& w : g.whites())
        if (w.genus != 0)
            fail(ErrorKind::Precondition, "H1 presentation needs genus 0 whites; '" + w.id + "' has genus " +
                                              std::to_string(w.genus));

    H1Presentation p;
    p.matrix = IntMatrix(g.white_count(), g.black_count());
    for (std::size_t w = 0; w < g.white_count(); ++w) p.row_index[g.whites()[w].id] = w;
    for (std::size_t b = 0; b < g.black_count(); ++b) p.col_index[g.blacks()[b].id] = b;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        p.matrix(g.edge_white(e), g.edge_black(e)) += to_integer(g.edges()[e].label);
    return p;
}

AbelianGroup h1(const StratifoldGraph& g) { return cokernel(h1_matrix(g).matrix); }

std::vector<std::int64_t> h1_mod(const StratifoldGraph& g, std::int64_t n) {
    if (n < 2) fail(ErrorKind::Argument, "coefficient modulus must be >= 2, got " + std::to_string(n));
    return mod_invariants(h1(g), n);
}

std::int64_t graph_betti1(const StratifoldGraph& g) {
    require_valid(g);
    return static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(g.vertex_count()) + 1;
}

std::int64_t euler_char_M(const StratifoldGraph& g) {
    require_valid(g);
    std::int64_t total = 0;
    for (std::size_t w = 0; w < g.white_count(); ++w)
        total += closed_surface_euler(g.whites()[w].genus) - static_cast<std::int64_t>(g.white_edges(w).size());
    return total;
}

std::int64_t sphere_count(const StratifoldGraph& g) {
    auto verdict = decide(g);
    if (verdict.status != Status::SimplyConnected)
        fail(ErrorKind::Precondition, "sphere count is defined only for simply connected instances (verdict: " +
                                          std::string(to_string(verdict.status)) + ")");
    return static_cast<std::int64_t>(g.white_count()) - static_cast<std::int64_t>(g.black_count());
}

}  // namespace stratifold
