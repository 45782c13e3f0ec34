#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "core/graph.hpp"

namespace stratifold {

struct GenParams {
    std::uint64_t seed = 0;
    std::size_t max_black = 4;
    std::int64_t label_bound = 6;  // >= 3
    std::int64_t genus_min = 0;
    std::int64_t genus_max = 0;
    // gen_trivalent: allow terminal blacks (partition 3); gen_tree: allow
    // degree-1 blacks.
    bool inject_terminal_blacks = false;
};

// Portable random source: std::mt19937_64 (sequence fixed by the standard)
// with bounded draws by rejection, so a seed reproduces across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n);
    // Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

StratifoldGraph gen_linear(const GenParams& p);
StratifoldGraph gen_trivalent(const GenParams& p);
StratifoldGraph gen_tree(const GenParams& p);

constexpr std::size_t kMaxEnumerationBlacks = 8;

// One representative per isomorphism class of trivalent trees with genus-0
// whites, white terminals and at most max_black blacks (including the lone
// white), ids canonically relabelled. Ordered by black count, then code.
std::vector<StratifoldGraph> enumerate_trivalent(std::size_t max_black);

}  // namespace stratifold
