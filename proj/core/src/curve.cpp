#include "linorbit/curve.hpp"

#include <numeric>
#include <stdexcept>

namespace linorbit {

std::int64_t CurveSpec::S() const {
  std::int64_t s = 0;
  for (const auto& c : components) s += c.mult;
  return s;
}

Rational CurveSpec::power_sum(std::uint32_t k) const {
  Rational out(0);
  for (const auto& c : components) out += Rational(c.mult).pow(k);
  return out;
}

bool CurveSpec::alphas_present() const {
  if (components.empty()) return false;
  for (const auto& c : components)
    if (!c.alpha) return false;
  return true;
}

CurveSpec CurveSpec::swapped() const {
  CurveSpec out = *this;
  out.m = mbar();
  std::swap(out.q, out.qbar);
  return out;
}

void CurveSpec::validate() const {
  if (m < 1 || m >= n) throw std::invalid_argument("CurveSpec: need 1 <= m < n");
  if (std::gcd(m, n) != 1) throw std::invalid_argument("CurveSpec: m and n must be coprime");
  if (r < 0 || q < 0 || qbar < 0)
    throw std::invalid_argument("CurveSpec: line multiplicities must be >= 0");
  std::size_t with_alpha = 0;
  for (const auto& c : components) {
    if (c.mult < 1) throw std::invalid_argument("CurveSpec: component multiplicities must be >= 1");
    if (c.alpha) {
      if (c.alpha->is_zero()) throw std::invalid_argument("CurveSpec: pencil parameters must be nonzero");
      ++with_alpha;
    }
  }
  if (with_alpha != 0 && with_alpha != components.size())
    throw std::invalid_argument("CurveSpec: pencil parameters must be given for all components or none");
  if (with_alpha == components.size()) {
    for (std::size_t i = 0; i < components.size(); ++i)
      for (std::size_t j = i + 1; j < components.size(); ++j)
        if (*components[i].alpha == *components[j].alpha)
          throw std::invalid_argument("CurveSpec: pencil parameters must be pairwise distinct");
  }
  if (A_override && *A_override < 1)
    throw std::invalid_argument("CurveSpec: stabilizer component count must be >= 1");
}

void ConditionProfile::validate() const {
  if (jmu < 0 || jmu > 2 || jmubar < 0 || jmubar > 2 || jlambda < 0 || jlambda > 2)
    throw std::invalid_argument("ConditionProfile: line exponents must lie in 0..2");
}

const std::vector<ConditionProfile>& all_profiles() {
  static const std::vector<ConditionProfile> profiles = [] {
    std::vector<ConditionProfile> out;
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b)
        for (int c = 0; c <= 2; ++c) out.push_back({a, b, c});
    return out;
  }();
  return profiles;
}

} // namespace linorbit
