#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linorbit/corrections.hpp"
#include "linorbit/curve.hpp"
#include "linorbit/stabilizer.hpp"
#include "linorbit/truncpoly.hpp"

namespace linorbit {

/// The closed degree polynomial Q as an element of the (q, qbar, r) ring,
/// with the component multiplicities substituted: the symmetric bracket
/// scaled by n^2 m^2 mbar^2, minus the power-sum tail
/// 84 d^2 sum s^5 - 252 d sum s^6 + 192 sum s^7.
TruncPoly degree_polynomial_formal(const CurveSpec& spec);

/// Q evaluated at the curve's line multiplicities.
Rational degree_polynomial_value(const CurveSpec& spec);

/// The intersection-theoretic route: Bezout term minus assembled local and
/// global corrections, before the division by A n.
TruncPoly pipeline_numerator_formal(const CurveSpec& spec);
Rational pipeline_numerator_value(const CurveSpec& spec);

enum class DegreeMethod { Closed, Pipeline };

struct DegreeResult {
  Rational degree;
  Rational Q;              // degree times the stabilizer component count
  std::int64_t A = 1;
  bool A_defaulted = false;
  std::vector<std::string> warnings;
};

/// Degree of the orbit closure (Q / A) by either route. Emits a warning when
/// the value is 0, which signals an orbit of dimension below 7.
DegreeResult orbit_degree(const CurveSpec& spec, DegreeMethod method = DegreeMethod::Closed);

struct PredegreePolynomial {
  std::array<Rational, 8> c{}; // coefficient of t^j / j!
  int orbit_dimension = 0;     // largest j with c_j != 0
};

/// Adjusted predegree polynomial: the exponential Bezout series minus the
/// global tail (degrees 5..7) and the local tail (degrees 6..7), truncated
/// past t^7, evaluated at the curve's line multiplicities last.
PredegreePolynomial predegree(const CurveSpec& spec);

/// The same eight coefficients kept formal in (q, qbar, r).
std::array<TruncPoly, 8> predegree_formal(const CurveSpec& spec);

/// Degree of the locus of translates putting jmu, jmubar, jlambda chosen
/// points on the two tangent cones and the connecting line: the scaled
/// iterated partial derivative of Q.
Rational constrained_degree(const CurveSpec& spec, const ConditionProfile& jp);

/// Same count assembled directly from per-profile intersection numbers,
/// bypassing Q entirely. Cross-check route.
Rational constrained_degree_direct(const CurveSpec& spec, const ConditionProfile& jp);

struct ClosedCounts {
  Rational unconstrained;
  Rational one_lambda_point;
  Rational two_lambda_points;
};

/// The three closed count formulas for S distinct components, all s_i = 1,
/// no triangle lines.
ClosedCounts closed_counts(const CurveSpec& spec);

using CharacteristicTable = std::array<std::array<std::array<Rational, 3>, 3>, 3>;

/// table[i][j][k] = curves with i points on mu, j points on mubar, k points
/// on lambda, and 7-i-j-k general plane points. Requires the all-ones,
/// no-line regime.
CharacteristicTable characteristic_table(const CurveSpec& spec);

struct QuadritangentResult {
  Rational Q;
  std::int64_t A = 2;
  Rational degree;
  bool A_defaulted = false;
  std::vector<std::string> warnings;
};

/// Degree polynomial for a union of quadritangent conics with multiplicities
/// s_i plus the common tangent line with multiplicity q.
Rational quadritangent_Q(const std::vector<std::int64_t>& mults, std::int64_t q);

/// Full quadritangent computation; A from the override, from the affine
/// enumeration when parameters are given, or from the component structure.
QuadritangentResult quadritangent_degree(const std::vector<std::int64_t>& mults, std::int64_t q,
                                         const std::vector<GaussianRational>& alphas,
                                         std::optional<std::int64_t> A_override);

} // namespace linorbit
