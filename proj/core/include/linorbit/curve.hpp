#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linorbit/rational.hpp"

namespace linorbit {

/// One member of the pencil x^n = alpha y^m z^(n-m), taken with
/// multiplicity `mult`. The pencil parameter is optional: the degree
/// formulas never need it, only stabilizer enumeration does.
struct PencilComponent {
  std::int64_t mult = 1;
  std::optional<GaussianRational> alpha;
};

/// The curve data: type (m, n), pencil components, and the multiplicities
/// r, q, qbar of the triangle lines (the line joining the two distinguished
/// points and the two tangent cones).
struct CurveSpec {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<PencilComponent> components;
  std::int64_t r = 0;
  std::int64_t q = 0;
  std::int64_t qbar = 0;
  std::optional<std::int64_t> A_override;

  std::int64_t mbar() const { return n - m; }
  std::int64_t S() const;
  std::int64_t degree_d() const { return S() * n + r + q + qbar; }
  std::int64_t ambient_N() const { const auto d = degree_d(); return d * (d + 3) / 2; }

  /// Sum of s_i^k over the components.
  Rational power_sum(std::uint32_t k) const;

  bool alphas_present() const;
  bool triangle_only() const { return S() == 0; }

  /// Swaps the roles of the two distinguished points: (m, q) <-> (mbar, qbar).
  CurveSpec swapped() const;

  /// Throws std::invalid_argument when the data is out of contract:
  /// 1 <= m < n coprime, s_i >= 1, r/q/qbar >= 0, alphas all-or-none,
  /// pairwise distinct and nonzero.
  void validate() const;
};

/// The exponents (j_mu, j_mubar, j_lambda) of the triangle-line conditions
/// in one term of the point-condition expansion; j_c picks up the rest of
/// the seven point conditions.
struct ConditionProfile {
  int jmu = 0;
  int jmubar = 0;
  int jlambda = 0;
  int jc() const { return 7 - jmu - jmubar - jlambda; }
  ConditionProfile swapped() const { return {jmubar, jmu, jlambda}; }
  void validate() const;
};

/// All 27 profiles with each line exponent at most 2, in lexicographic
/// (jmu, jmubar, jlambda) order.
const std::vector<ConditionProfile>& all_profiles();

} // namespace linorbit
