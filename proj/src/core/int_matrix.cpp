#include "core/int_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

#include "core/errors.hpp"

namespace stratifold {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) fail(ErrorKind::Argument, "ragged matrix literal");
        for (auto v : row) data_.push_back(to_integer(v));
    }
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::with_row(const std::vector<Integer>& row) const {
    if (row.size() != cols_) fail(ErrorKind::Argument, "appended row has wrong length");
    IntMatrix out(rows_ + 1, cols_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(row.begin(), row.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(rows_ * cols_));
    return out;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    auto append = [&out](const std::string& part) {
        if (!out.empty()) out += " + ";
        out += part;
    };
    if (free_rank == 1) append("Z");
    if (free_rank > 1) append("Z^" + std::to_string(free_rank));
    for (const auto& d : torsion) append("Z" + d.get_str());
    return out;
}

namespace {

// Smallest nonzero |a(i,j)| over i, j >= t; ties go to the lowest (row, col).
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < a.rows(); ++i) {
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (sgn(a(i, j)) == 0) continue;
            Integer v = abs(a(i, j));
            if (!best || v < best_abs) {
                best = {i, j};
                best_abs = std::move(v);
            }
        }
    }
    return best;
}

// Clears row t and column t below/right of the pivot by division with
// remainder. Returns false if some remainder is left over.
bool eliminate_cross(IntMatrix& a, std::size_t t) {
    bool clean = true;
    const Integer pivot = a(t, t);
    for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Integer q = a(i, t) / pivot;
        a.add_row_multiple(i, t, -q);
        if (sgn(a(i, t)) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Integer q = a(t, j) / pivot;
        a.add_col_multiple(j, t, -q);
        if (sgn(a(t, j)) != 0) clean = false;
    }
    return clean;
}

// Row index i > t holding an entry not divisible by the pivot, if any.
std::optional<std::size_t> find_indivisible_row(const IntMatrix& a, std::size_t t) {
    const Integer& pivot = a(t, t);
    for (std::size_t i = t + 1; i < a.rows(); ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
            if (!mpz_divisible_p(a(i, j).get_mpz_t(), pivot.get_mpz_t())) return i;
    return std::nullopt;
}

}  // namespace

std::vector<Integer> smith_normal_form(IntMatrix a) {
    const std::size_t diag_len = std::min(a.rows(), a.cols());
    std::vector<Integer> diag;
    diag.reserve(diag_len);

    for (std::size_t t = 0; t < diag_len; ++t) {
        while (true) {
            auto pivot = find_pivot(a, t);
            if (!pivot) {
                diag.resize(diag_len, Integer(0));
                return diag;
            }
            a.swap_rows(t, pivot->first);
            a.swap_cols(t, pivot->second);
            if (!eliminate_cross(a, t)) continue;
            if (auto row = find_indivisible_row(a, t)) {
                a.add_row_multiple(t, *row, Integer(1));
                continue;
            }
            break;
        }
        diag.push_back(abs(a(t, t)));
    }
    return diag;
}

AbelianGroup cokernel(const IntMatrix& a) {
    AbelianGroup group;
    std::size_t rank = 0;
    for (auto& d : smith_normal_form(a)) {
        if (sgn(d) == 0) continue;
        ++rank;
        if (d > 1) group.torsion.push_back(std::move(d));
    }
    group.free_rank = a.cols() - rank;
    return group;
}

std::vector<std::int64_t> mod_invariants(const AbelianGroup& g, std::int64_t n) {
    if (n < 2) fail(ErrorKind::Argument, "coefficient modulus must be >= 2, got " + std::to_string(n));
    std::vector<std::int64_t> orders;
    const Integer modulus = to_integer(n);
    for (const auto& d : g.torsion) {
        Integer common = gcd(d, modulus);
        if (common > 1) orders.push_back(to_int64(common));
    }
    orders.insert(orders.end(), g.free_rank, n);
    return orders;
}

Integer det_abs(IntMatrix a) {
    if (a.rows() != a.cols())
        fail(ErrorKind::Argument, "determinant of a non-square " + std::to_string(a.rows()) + "x" +
                                      std::to_string(a.cols()) + " matrix");
    const std::size_t n = a.rows();
    if (n == 0) return Integer(1);

    Integer previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && sgn(a(swap_with, k)) == 0) ++swap_with;
            if (swap_with == n) return Integer(0);
            a.swap_rows(k, swap_with);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                a(i, j) = std::move(v);
            }
            a(i, k) = 0;
        }
        previous = a(k, k);
    }
    return abs(a(n - 1, n - 1));
}

}  // namespace stratifold
