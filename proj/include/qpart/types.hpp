#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qpart {

// Exact integer type used for every count and series coefficient.
using Int = mpz_class;

inline std::string dec(const Int& v) { return v.get_str(); }

}  // namespace qpart
