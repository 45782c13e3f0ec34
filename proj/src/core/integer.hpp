#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace stratifold {

// Exact integer used by every matrix and group computation.
using Integer = mpz_class;

inline Integer to_integer(std::int64_t v) {
    // mpz_class(long) is exact; long is 64-bit on every supported target.
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return Integer(static_cast<long>(v));
}

inline bool fits_int64(const Integer& v) { return v.fits_slong_p(); }

inline std::int64_t to_int64(const Integer& v) { return static_cast<std::int64_t>(v.get_si()); }

inline std::string to_string(const Integer& v) { return v.get_str(); }

}  // namespace stratifold
