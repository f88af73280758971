#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linorbit/curve.hpp"

namespace linorbit {

struct StabilizerResult {
  std::int64_t A = 1;
  bool defaulted = false; // true when pencil parameters were absent and A was assumed generic
  std::vector<std::string> warnings;
};

/// Number of components of the stabilizer of the curve: the count of scalings
/// u (necessarily roots of unity, since they permute the finite multiset of
/// pencil parameters) with u * {alpha_i} = {alpha_i} respecting multiplicities,
/// doubled when n = 2 and q = qbar (the coordinate switch of the two tangent
/// cones fixes every pencil member). An explicit override wins; absent
/// parameters fall back to the generic count 1 with a warning.
StabilizerResult curve_component_count(const CurveSpec& spec);

/// Stabilizer component count for a union of quadritangent conics with
/// parameters alpha_i: twice the maximum order of an affine map
/// u*alpha + v of finite order preserving the multiset.
std::int64_t quadritangent_component_count(const std::vector<GaussianRational>& alphas,
                                           const std::vector<std::int64_t>& mults);

/// Degree of the stabilizer closure for a curve supported on the full
/// triangle: 6 when all three multiplicities agree, 2 when exactly two do,
/// 1 otherwise. All multiplicities must be positive.
std::int64_t triangle_stabilizer_degree(std::int64_t q, std::int64_t qbar, std::int64_t r);

} // namespace linorbit
