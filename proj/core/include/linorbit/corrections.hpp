#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "linorbit/chow.hpp"
#include "linorbit/curve.hpp"
#include "linorbit/euclid.hpp"
#include "linorbit/truncpoly.hpp"

namespace linorbit {

/// Ring in which the total corrections are assembled: q, qbar, r with
/// cube truncation (three point-conditions of a line never meet), plus a
/// formal S when requested. Truncation always happens before any numeric
/// substitution.
RingPtr make_assembly_ring(bool formal_S);

/// Scalar block carried inside every Chow context: empty for fully numeric
/// multiplicities, or the single uncapped variable S.
struct ScalarBlock {
  RingPtr ring;   // scalar-only ring
  TruncPoly S;    // element of `ring`: the sum of component multiplicities
  static ScalarBlock numeric(const Rational& S_value);
  static ScalarBlock formal_S();
};

/// Correction terms for the directed blow-up ladder over one cusp of a
/// type (m, n) curve. Stage i works over the i-th center: the plane for
/// i = 1, the projectivized normal 4-fold for i = 2, and the stable 6-fold
/// for every later stage, where the exceptional classes satisfy
/// e_i = e_{i-2} - l_{i-1} e_{i-1}.
class LocalCusp {
public:
  LocalCusp(std::int64_t n, std::int64_t m, ScalarBlock scalars);

  const EuclidData& ladder() const { return euclid_; }

  /// Correction from the i-th directed blow-up (1-based).
  TruncPoly stage_correction(std::size_t stage, const ConditionProfile& jp) const;

  /// Sum of all stage corrections for this cusp.
  TruncPoly stage_sum(const ConditionProfile& jp) const;

  /// Closed form of the whole ladder as a single plane integral
  ///   S^jc n^(3-jl) \int k^(jmubar+1) (m + n k)^(jc+jl-3) / (1+k)^(3-jmu),
  /// independent of the intermediate multiplicities.
  TruncPoly closed_correction(const ConditionProfile& jp) const;

private:
  std::int64_t n_, m_;
  EuclidData euclid_;
  ScalarBlock scalars_;
  ChowContext plane_;
  ChowContext fourfold_;
  ChowContext sixfold_;
  std::vector<TruncPoly> e_cls_; // e_i restricted to the 6-fold, 1-based
};

/// Correction terms for the two blow-ups separating the point-conditions of
/// the pencil components once the cusps are resolved: one over each
/// (plane x normalized-curve) component, one over the P^1-bundle above it.
class GlobalCorrection {
public:
  GlobalCorrection(std::int64_t n, std::vector<std::int64_t> component_mults, ScalarBlock scalars);

  /// Sum over components of both correction integrals for one profile.
  TruncPoly profile_boxes(const ConditionProfile& jp) const;

private:
  std::int64_t n_;
  std::vector<std::int64_t> mults_;
  ScalarBlock scalars_;
  ChowContext threefold_;
  ChowContext p1bundle_;
};

/// Assembles per-profile scalars over all 27 profiles with the
/// point-condition splitting weights 7! q^jmu qbar^jmubar r^jlambda /
/// (jmu! jmubar! jlambda! jc!), in the given assembly ring.
TruncPoly assemble_profiles(const RingPtr& assembly_ring,
                            const std::function<TruncPoly(const ConditionProfile&)>& per_profile);

/// Total local correction for both cusps, assembled over profiles. With
/// formal_S the result lives in (q, qbar, r, S).
TruncPoly local_correction(const CurveSpec& spec, bool formal_S = false);

/// Same total, but accumulated stage by stage instead of through the closed
/// per-cusp form. Slow route kept for cross-checking.
TruncPoly local_correction_stagewise(const CurveSpec& spec, bool formal_S = false);

/// The structured rewriting of the total local correction:
/// (Sn+r+q+qbar)^7 minus n^3 m^2 mbar^2 times the symmetric bracket.
TruncPoly local_correction_structured(const CurveSpec& spec, bool formal_S = false);

/// Total global correction assembled from the two boxed integrals.
TruncPoly global_correction_boxes(const CurveSpec& spec, bool formal_S = false);

/// Printed closed form of the global correction:
/// n (84 d^2 sum s^5 - 252 d sum s^6 + 192 sum s^7) with d = Sn+r+q+qbar.
TruncPoly global_correction_closed(const CurveSpec& spec, bool formal_S = false);

/// The symmetric bracket shared by the closed degree polynomial and the
/// structured local correction, over a ring containing q, qbar, r.
TruncPoly symmetric_bracket(const RingPtr& ring, const TruncPoly& S, std::int64_t n,
                            std::int64_t m, std::int64_t mbar);

} // namespace linorbit
