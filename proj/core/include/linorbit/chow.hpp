#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linorbit/truncpoly.hpp"

namespace linorbit {

/// Pushforward of powers of one fiber generator down one bundle level:
/// images[j] is the image of fiber^j, a class of the next-lower context.
/// The table extends to the whole ring by linearity over base classes.
struct BundleTable {
  std::size_t fiber_index = 0;     // index of the fiber variable in the source ring
  std::vector<TruncPoly> images;   // elements of the target ring
};

/// A graded ring with a pushforward-to-point functional. The working ring
/// lists the geometric generators first (all of degree 1), optionally
/// followed by formal scalar multiplicities (e.g. S) that carry through
/// every computation untouched by the grading. Integration extracts the
/// degree-`dim` piece in the geometric generators, walks the pushforward
/// chain, and reads off the coefficient of the designated top monomial.
class ChowContext {
public:
  /// Base space with a designated top monomial of degree `dim`
  /// (e.g. the plane: generator k with k^3 = 0, dim 2, top monomial k^2).
  static ChowContext base(RingPtr ring, std::size_t geo_count, int dim,
                          const std::map<std::string, std::uint32_t>& top_monomial,
                          RingPtr scalar_ring);

  /// Bundle over an existing context: the ring gains the fiber generator,
  /// classes push forward through `table` into `under`.
  static ChowContext bundle(RingPtr ring, int dim, BundleTable table, ChowContext under);

  const RingPtr& ring() const { return ring_; }
  const RingPtr& scalar_ring() const { return scalar_ring_; }
  std::size_t geo_count() const { return geo_count_; }
  int dim() const { return dim_; }

  TruncPoly zero() const { return TruncPoly::zero(ring_); }
  TruncPoly one() const { return TruncPoly::constant(ring_, Rational(1)); }
  TruncPoly constant(Rational c) const { return TruncPoly::constant(ring_, std::move(c)); }
  TruncPoly gen(std::string_view name) const { return TruncPoly::generator(ring_, name); }

  /// Degree map: the graded-degree-`dim` piece pushed down to the point.
  /// Classes of other degrees contribute nothing. The result is a scalar:
  /// an element of the scalar ring (a plain rational when that ring is empty).
  TruncPoly integrate(const TruncPoly& cls) const;

private:
  RingPtr ring_;
  RingPtr scalar_ring_;
  std::size_t geo_count_ = 0;
  int dim_ = 0;
  // chain[0] applies first; each step lands in the ring of the next, the
  // last lands in base_ring_ where top_monomial_ has degree 1.
  std::vector<BundleTable> chain_;
  std::vector<RingPtr> chain_targets_;
  RingPtr base_ring_;
  Exponents top_monomial_{};
};

/// Adams twist on a total class: the graded-degree-d piece picks up a
/// factor scale^d (grading over the context's geometric generators).
TruncPoly adams(const ChowContext& ctx, const TruncPoly& cls, std::int64_t scale);

/// Total Chern class of E ⊗ L for a line bundle L with first Chern class
/// c1L: sum over i of c_i(E) (1 + c1L)^(rank - i).
TruncPoly chern_tensor_line(const ChowContext& ctx, const TruncPoly& cE, std::uint32_t rank,
                            const TruncPoly& c1L);

/// Pushforward table for the projectivization of a bundle with total Chern
/// class cN and the given rank: fiber^j maps to 0 below the fiber dimension
/// and to (-1)^s [cN^{-1}]_s at j = rank-1+s. Normalized so that the
/// projectivized tangent ladder of the plane reproduces
/// e^2 -> 1, e^3 -> 3k, e^4 -> 6k^2 for cN = (1+k)^3.
BundleTable projective_bundle_pushforward(const ChowContext& target, const TruncPoly& cN,
                                          std::uint32_t rank, std::uint32_t total_dim,
                                          std::size_t fiber_index);

/// One divisor entering the directed-blow-up correction: its multiplicity
/// along the center (a scalar, possibly formal) and its restricted class.
/// Balanced divisors contain every center of the ladder with the stated
/// multiplicity; transverse ones meet only the first center.
struct DivisorOnCenter {
  enum class Kind { Balanced, Transverse };
  TruncPoly multiplicity; // geometric degree 0
  TruncPoly cls;
  Kind kind = Kind::Balanced;
};

/// Correction term of an l-step directed blow-up of V along the center B
/// (the context) in the direction of P: the degree map applied to
///   l^(dimP - dimB - #transverse)
///     * prod_transverse (r_i + l Y_i) * prod_balanced (m_i + X_i)
///     / (adams-twisted cN_BP * cN_PV).
/// With l = 1 and no transverse divisors this is the ordinary blow-up
/// correction with denominator c(N_B V).
TruncPoly blowup_correction(const ChowContext& ctxB, std::int64_t l, int dimV, int dimP,
                            const std::vector<DivisorOnCenter>& divisors, const TruncPoly& cN_BP,
                            const TruncPoly& cN_PV);

} // namespace linorbit
