#pragma once

#include <gmpxx.h>

namespace necklace {

// Matrix entries are exact integers throughout; only spectral quantities
// drop to floating point.
using BigInt = mpz_class;

inline double to_double(const BigInt& x) { return x.get_d(); }

}  // namespace necklace
