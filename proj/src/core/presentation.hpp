#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/int_matrix.hpp"

namespace stratifold {

// A relator is a word of generator powers; every linear-graph relator has
// one or two terms, e.g. x1^n1 x2^-m2.
struct Power {
    std::size_t generator = 0;  // 0-based
    std::int64_t exponent = 0;

    friend bool operator==(const Power&, const Power&) = default;
};
using Relator = std::vector<Power>;

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Relator> relators;

    // "<x1, x2 | x1^2 = 1, x1^5 = x2^3, x2^7 = 1>"
    std::string to_string() const;
};

// Fundamental group of the linear 2-stratifold:
// x1^m1 = 1, x_i^n_i = x_{i+1}^m_{i+1} (i < r), x_r^n_r = 1.
Presentation linear_presentation(const LinearProfile& p);

// r x r lower bidiagonal relation matrix of the group without the final
// relation x_r^n_r: diagonal m1..mr, subdiagonal -n1..-n_{r-1}.
IntMatrix chain_relation_matrix(const LinearProfile& p);

// chain_relation_matrix with the row for x_r^n_r appended: the abelianized
// full presentation.
IntMatrix full_relation_matrix(const LinearProfile& p);

// gcd(m_i, n_j) = 1 for all 1 <= i <= j <= r.
bool gcd_criterion(const LinearProfile& p);

struct GcdViolation {
    std::size_t i = 0;  // 1-based, as in m_i
    std::size_t j = 0;  // 1-based, as in n_j
    std::int64_t m_i = 0;
    std::int64_t n_j = 0;
    std::int64_t gcd = 0;

    friend bool operator==(const GcdViolation&, const GcdViolation&) = default;
};

// First pair (i, j), i <= j, in lexicographic order with gcd(m_i, n_j) > 1.
std::optional<GcdViolation> first_gcd_violation(const LinearProfile& p);

AbelianGroup chain_group_invariants(const LinearProfile& p);

}  // namespace stratifold
