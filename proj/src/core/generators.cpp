#include "core/generators.hpp"

#include <map>
#include <string>

#include "core/canonical.hpp"
#include "core/errors.hpp"

namespace stratifold {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) fail(ErrorKind::Argument, "Rng::below(0)");
    // Reject the low (2^64 mod n) outputs so the remainder is unbiased.
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
        std::uint64_t x = engine_();
        if (x >= threshold) return x % n;
    }
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) fail(ErrorKind::Argument, "Rng::between with empty range");
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
    return lo + static_cast<std::int64_t>(below(span));
}

namespace {

void check_params(const GenParams& p) {
    if (p.max_black < 1) fail(ErrorKind::Argument, "max_black must be >= 1");
    if (p.label_bound < 3) fail(ErrorKind::Argument, "label_bound must be >= 3");
    if (p.genus_min > p.genus_max) fail(ErrorKind::Argument, "empty genus range");
}

// Incrementally grown tree with generated ids.
struct Builder {
    std::vector<WhiteVertex> whites;
    std::vector<BlackVertex> blacks;
    std::vector<Edge> edges;

    std::string add_white(std::int64_t genus) {
        whites.push_back({"w" + std::to_string(whites.size()), genus});
        return whites.back().id;
    }
    std::string add_black() {
        blacks.push_back({"b" + std::to_string(blacks.size())});
        return blacks.back().id;
    }
    void connect(const std::string& w, const std::string& b, std::int64_t label) { edges.push_back({w, b, label}); }

    StratifoldGraph build() && { return StratifoldGraph(std::move(whites), std::move(blacks), std::move(edges)); }
};

}  // namespace

StratifoldGraph gen_linear(const GenParams& p) {
    check_params(p);
    Rng rng(p.seed);
    const auto r = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(p.max_black)));
    std::vector<WhiteVertex> whites{{"w0", 0}};
    std::vector<BlackVertex> blacks;
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= r; ++i) {
        std::int64_t m = 0, n = 0;
        do {
            m = rng.between(1, p.label_bound);
            n = rng.between(1, p.label_bound);
        } while (m + n < 3);
        const auto b = "b" + std::to_string(i);
        const auto w = "w" + std::to_string(i);
        blacks.push_back({b});
        whites.push_back({w, 0});
        edges.push_back({"w" + std::to_string(i - 1), b, m});
        edges.push_back({w, b, n});
    }
    return StratifoldGraph(std::move(whites), std::move(blacks), std::move(edges));
}

StratifoldGraph gen_trivalent(const GenParams& p) {
    check_params(p);
    Rng rng(p.seed);
    Builder tree;
    auto genus = [&] { return rng.between(p.genus_min, p.genus_max); };
    tree.add_white(genus());

    const auto k = rng.between(1, static_cast<std::int64_t>(p.max_black));
    for (std::int64_t i = 0; i < k; ++i) {
        const auto anchor = tree.whites[rng.below(tree.whites.size())].id;
        const auto b = tree.add_black();
        switch (rng.below(p.inject_terminal_blacks ? 3 : 2)) {
            case 0:  // 1 + 1 + 1
                tree.connect(anchor, b, 1);
                tree.connect(tree.add_white(genus()), b, 1);
                tree.connect(tree.add_white(genus()), b, 1);
                break;
            case 1: {  // 1 + 2, anchored by either summand
                const std::int64_t anchor_label = rng.below(2) == 0 ? 1 : 2;
                tree.connect(anchor, b, anchor_label);
                tree.connect(tree.add_white(genus()), b, 3 - anchor_label);
                break;
            }
            default:  // 3
                tree.connect(anchor, b, 3);
                break;
        }
    }
    return std::move(tree).build();
}

StratifoldGraph gen_tree(const GenParams& p) {
    check_params(p);
    Rng rng(p.seed);
    Builder tree;
    auto genus = [&] { return rng.between(p.genus_min, p.genus_max); };
    tree.add_white(genus());

    const auto k = rng.between(1, static_cast<std::int64_t>(p.max_black));
    for (std::int64_t i = 0; i < k; ++i) {
        const auto anchor = tree.whites[rng.below(tree.whites.size())].id;
        const auto b = tree.add_black();
        const auto degree = rng.between(p.inject_terminal_blacks ? 1 : 2, 4);
        if (degree == 1) {
            tree.connect(anchor, b, rng.between(3, p.label_bound));
            continue;
        }
        std::vector<std::int64_t> labels;
        do {
            labels.clear();
            std::int64_t sum = 0;
            for (std::int64_t d = 0; d < degree; ++d) {
                labels.push_back(rng.between(1, p.label_bound));
                sum += labels.back();
            }
            if (sum >= 3) break;
        } while (true);
        tree.connect(anchor, b, labels[0]);
        for (std::size_t d = 1; d < labels.size(); ++d) tree.connect(tree.add_white(genus()), b, labels[d]);
    }
    return std::move(tree).build();
}

std::vector<StratifoldGraph> enumerate_trivalent(std::size_t max_black) {
    if (max_black > kMaxEnumerationBlacks)
        fail(ErrorKind::Argument, "enumeration bound " + std::to_string(max_black) + " exceeds " +
                                      std::to_string(kMaxEnumerationBlacks));

    // Each level is keyed by canonical code; every trivalent tree with k + 1
    // blacks arises from one with k blacks by hanging a black (with fresh
    // white leaves) off an existing white: remove a deepest black to see it.
    std::vector<StratifoldGraph> out;
    std::map<std::string, StratifoldGraph> level;
    {
        StratifoldGraph single({{"w0", 0}}, {}, {});
        level.emplace(tree_canonical_code(single), single);
    }
    for (std::size_t k = 0;; ++k) {
        for (const auto& [code, g] : level) out.push_back(canonical_relabel(g));
        if (k == max_black) break;

        std::map<std::string, StratifoldGraph> next;
        for (const auto& [code, g] : level) {
            for (std::size_t w = 0; w < g.white_count(); ++w) {
                // Attachment patterns: anchor label, then labels of the new leaves.
                static const std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> patterns{
                    {1, {1, 1}}, {1, {2}}, {2, {1}}};
                for (const auto& [anchor_label, leaves] : patterns) {
                    auto whites = g.whites();
                    auto blacks = g.blacks();
                    auto edges = g.edges();
                    const auto b = "b" + std::to_string(blacks.size());
                    blacks.push_back({b});
                    edges.push_back({g.whites()[w].id, b, anchor_label});
                    for (auto label : leaves) {
                        const auto leaf = "w" + std::to_string(whites.size());
                        whites.push_back({leaf, 0});
                        edges.push_back({leaf, b, label});
                    }
                    StratifoldGraph grown(std::move(whites), std::move(blacks), std::move(edges));
                    auto grown_code = tree_canonical_code(grown);
                    next.try_emplace(std::move(grown_code), std::move(grown));
                }
            }
        }
        level = std::move(next);
    }
    return out;
}

}  // namespace stratifold
