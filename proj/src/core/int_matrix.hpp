#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "core/integer.hpp"

namespace stratifold {

// Dense row-major matrix of exact integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    // Returns a copy with `row` appended at the bottom; row.size() must equal cols().
    IntMatrix with_row(const std::vector<Integer>& row) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
    // "0", "Z", "Z^2 + Z2 + Z6", ...
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Invariant factors d1 | d2 | ... of A, length min(rows, cols), zeros last.
std::vector<Integer> smith_normal_form(IntMatrix a);

// Z^cols / rowspan(A): columns are generators, rows are relations.
AbelianGroup cokernel(const IntMatrix& a);

// Cyclic orders of G (x) Z/n; empty iff the tensor product vanishes.
std::vector<std::int64_t> mod_invariants(const AbelianGroup& g, std::int64_t n);

// |det A| by fraction-free (Bareiss) elimination, independent of the SNF path.
Integer det_abs(IntMatrix a);

}  // namespace stratifold
