#include "linorbit/euclid.hpp"

#include <numeric>
#include <stdexcept>

namespace linorbit {

EuclidData euclid_data(std::int64_t m, std::int64_t n) {
  if (m < 1 || m >= n) throw std::invalid_argument("euclid_data: need 1 <= m < n");
  if (std::gcd(m, n) != 1) throw std::invalid_argument("euclid_data: m and n must be coprime");
  EuclidData out;
  std::int64_t prev = n, cur = m;
  while (cur > 0) {
    out.stages.push_back({cur, prev / cur});
    const std::int64_t next = prev % cur;
    prev = cur;
    cur = next;
  }
  // coprimality forces the ladder to land exactly on 1
  if (out.stages.back().m != 1) throw std::logic_error("euclid_data: ladder did not end at 1");
  return out;
}

} // namespace linorbit
