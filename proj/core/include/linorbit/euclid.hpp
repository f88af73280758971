#pragma once

#include <cstdint>
#include <vector>

namespace linorbit {

/// One line of the Euclidean algorithm on (m, n): the multiplicity m_i of
/// the curve at the corresponding batch of blow-up centers, and the number
/// of steps l_i in that batch.
struct EuclidStage {
  std::int64_t m = 0;
  std::int64_t l = 0;
};

/// The full ladder m_1 = m, m_{i-1} = l_i m_i + m_{i+1}, ending at m_e = 1.
/// Drives the directed blow-up stages for one cusp.
struct EuclidData {
  std::vector<EuclidStage> stages;
  std::size_t e() const { return stages.size(); }
};

/// Requires 1 <= m < n with gcd(m, n) = 1.
EuclidData euclid_data(std::int64_t m, std::int64_t n);

} // namespace linorbit
