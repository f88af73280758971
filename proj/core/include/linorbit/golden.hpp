#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "linorbit/truncpoly.hpp"

namespace linorbit::golden {

/// One term of the raw total local correction, exponents in the order
/// m, n, q, qbar, r, S. The full correction is n S^2 times the sum.
struct RawTerm {
  std::int64_t coeff;
  int m, n, q, qbar, r, S;
};

/// The 63-term inner polynomial of the raw local correction.
const std::vector<RawTerm>& raw_local_terms();

/// The raw local correction at numeric (m, n): n S^2 * sum of terms, as an
/// element of the formal (q, qbar, r, S) assembly ring.
TruncPoly raw_local_polynomial(std::int64_t m, std::int64_t n);

/// counts[jmu][jmubar][jlambda] for curves through the complementary number
/// of general points.
using Pyramid = std::array<std::array<std::array<std::int64_t, 3>, 3>, 3>;

/// Characteristic-number pyramid for cuspidal cubics (type (2,3)).
const Pyramid& pyramid_cubic();

/// Characteristic-number pyramid for the type (4,7) curve.
const Pyramid& pyramid_4_7();

/// Adjusted predegree coefficients of a smooth conic.
const std::array<std::int64_t, 8>& conic_predegree();

/// Plain-text forms identical to the files shipped under tests/data; the
/// tests assert the two copies agree.
std::string_view raw_local_text();
std::string_view pyramid_cubic_text();
std::string_view pyramid_4_7_text();
std::string_view conic_predegree_text();

} // namespace linorbit::golden
