#include "core/presentation.hpp"

#include <numeric>

#include "core/errors.hpp"

namespace stratifold {

namespace {

void check_profile(const LinearProfile& p) {
    if (p.m.empty()) fail(ErrorKind::Argument, "empty linear profile");
    if (p.m.size() != p.n.size()) fail(ErrorKind::Argument, "profile sequences have different lengths");
    for (std::size_t i = 0; i < p.m.size(); ++i) {
        if (p.m[i] < 1 || p.n[i] < 1) fail(ErrorKind::Argument, "profile labels must be positive");
        if (p.m[i] + p.n[i] < 3) fail(ErrorKind::Argument, "profile has m_i + n_i < 3 at i = " + std::to_string(i + 1));
    }
}

std::string power_string(const std::vector<std::string>& gens, const Power& p) {
    return gens[p.generator] + "^" + std::to_string(p.exponent);
}

}  // namespace

std::string Presentation::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
    out += " |";
    for (std::size_t k = 0; k < relators.size(); ++k) {
        const auto& rel = relators[k];
        out += k ? ", " : " ";
        // Two-term relators x^a y^-b are displayed as x^a = y^b.
        if (rel.size() == 2 && rel[1].exponent < 0)
            out += power_string(generators, rel[0]) + " = " +
                   power_string(generators, {rel[1].generator, -rel[1].exponent});
        else {
            for (std::size_t t = 0; t < rel.size(); ++t) out += (t ? " " : "") + power_string(generators, rel[t]);
            out += " = 1";
        }
    }
    return out + ">";
}

Presentation linear_presentation(const LinearProfile& p) {
    check_profile(p);
    const std::size_t r = p.length();
    Presentation out;
    for (std::size_t i = 0; i < r; ++i) out.generators.push_back("x" + std::to_string(i + 1));
    out.relators.push_back({{0, p.m[0]}});
    for (std::size_t i = 0; i + 1 < r; ++i) out.relators.push_back({{i, p.n[i]}, {i + 1, -p.m[i + 1]}});
    out.relators.push_back({{r - 1, p.n[r - 1]}});
    return out;
}

IntMatrix chain_relation_matrix(const LinearProfile& p) {
    if (p.m.empty()) fail(ErrorKind::Argument, "empty linear profile");
    const std::size_t r = p.m.size();
    if (p.n.size() + 1 < r) fail(ErrorKind::Argument, "chain matrix needs n_1..n_{r-1}");
    IntMatrix a(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        a(i, i) = to_integer(p.m[i]);
        if (i > 0) a(i, i - 1) = -to_integer(p.n[i - 1]);
    }
    return a;
}

IntMatrix full_relation_matrix(const LinearProfile& p) {
    check_profile(p);
    std::vector<Integer> last(p.length());
    last.back() = to_integer(p.n.back());
    return chain_relation_matrix(p).with_row(last);
}

std::optional<GcdViolation> first_gcd_violation(const LinearProfile& p) {
    check_profile(p);
    for (std::size_t i = 0; i < p.length(); ++i)
        for (std::size_t j = i; j < p.length(); ++j)
            if (auto d = std::gcd(p.m[i], p.n[j]); d != 1) return GcdViolation{i + 1, j + 1, p.m[i], p.n[j], d};
    return std::nullopt;
}

bool gcd_criterion(const LinearProfile& p) { return !first_gcd_violation(p).has_value(); }

AbelianGroup chain_group_invariants(const LinearProfile& p) { return cokernel(chain_relation_matrix(p)); }

}  // namespace stratifold
