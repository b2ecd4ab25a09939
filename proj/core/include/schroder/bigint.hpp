#pragma once

#include <gmpxx.h>

namespace schroder {

/// Arbitrary-precision nonnegative count. Every enumeration result in the
/// library is a BigCount: the level sets grow like the large Schröder
/// numbers, so fixed-width integers would overflow for inputs the CLI
/// happily accepts.
using BigCount = mpz_class;

/// Arbitrary-precision signed integer (Möbius values, series coefficients).
using BigInt = mpz_class;

}  // namespace schroder
