#include "linorbit/chow.hpp"

#include <stdexcept>

namespace linorbit {

ChowContext ChowContext::base(RingPtr ring, std::size_t geo_count, int dim,
                              const std::map<std::string, std::uint32_t>& top_monomial,
                              RingPtr scalar_ring) {
  ChowContext ctx;
  ctx.ring_ = ring;
  ctx.scalar_ring_ = std::move(scalar_ring);
  ctx.geo_count_ = geo_count;
  ctx.dim_ = dim;
  ctx.base_ring_ = ring;
  ctx.top_monomial_.fill(0);
  for (const auto& [name, e] : top_monomial) ctx.top_monomial_[ring->index_of(name)] = e;
  return ctx;
}

ChowContext ChowContext::bundle(RingPtr ring, int dim, BundleTable table, ChowContext under) {
  ChowContext ctx;
  ctx.ring_ = std::move(ring);
  ctx.scalar_ring_ = under.scalar_ring_;
  ctx.geo_count_ = under.geo_count_ + 1;
  ctx.dim_ = dim;
  ctx.chain_.push_back(std::move(table));
  ctx.chain_targets_.push_back(under.ring_);
  for (std::size_t i = 0; i < under.chain_.size(); ++i) {
    ctx.chain_.push_back(std::move(under.chain_[i]));
    ctx.chain_targets_.push_back(under.chain_targets_[i]);
  }
  ctx.base_ring_ = under.base_ring_;
  ctx.top_monomial_ = under.top_monomial_;
  return ctx;
}

TruncPoly ChowContext::integrate(const TruncPoly& cls) const {
  if (cls.ring() != ring_) throw std::invalid_argument("integrate: class from a different context");
  TruncPoly cur = cls.graded_piece(static_cast<std::uint32_t>(dim_), geo_count_);
  RingPtr cur_ring = ring_;
  for (std::size_t step = 0; step < chain_.size(); ++step) {
    const BundleTable& table = chain_[step];
    const RingPtr& target = chain_targets_[step];
    TruncPoly pushed = TruncPoly::zero(target);
    cur.for_each_term([&](const Exponents& e, const Rational& c) {
      const std::uint32_t fpow = e[table.fiber_index];
      if (fpow >= table.images.size() || table.images[fpow].is_zero()) return;
      std::map<std::string, std::uint32_t> rest;
      for (std::size_t i = 0; i < cur_ring->arity(); ++i)
        if (e[i] > 0 && i != table.fiber_index) rest[cur_ring->var(i).name] = e[i];
      pushed += TruncPoly::monomial(target, rest, c) * table.images[fpow];
    });
    cur = std::move(pushed);
    cur_ring = target;
  }
  // All that survives at the bottom is (top monomial) x (scalar part).
  TruncPoly out = TruncPoly::zero(scalar_ring_);
  cur.for_each_term([&](const Exponents& e, const Rational& c) {
    std::map<std::string, std::uint32_t> scalar_part;
    for (std::size_t i = 0; i < base_ring_->arity(); ++i) {
      const auto& name = base_ring_->var(i).name;
      if (scalar_ring_->find(name)) {
        if (e[i] > 0) scalar_part[name] = e[i];
      } else if (e[i] != top_monomial_[i]) {
        throw std::logic_error("integrate: degree bookkeeping failed at the point");
      }
    }
    out += TruncPoly::monomial(scalar_ring_, scalar_part, c);
  });
  return out;
}

TruncPoly adams(const ChowContext& ctx, const TruncPoly& cls, std::int64_t scale) {
  TruncPoly out = ctx.zero();
  const auto top = cls.degree(ctx.geo_count());
  const Rational s(scale);
  for (std::uint32_t d = 0; d <= top; ++d)
    out += cls.graded_piece(d, ctx.geo_count()) * s.pow(d);
  return out;
}

TruncPoly chern_tensor_line(const ChowContext& ctx, const TruncPoly& cE, std::uint32_t rank,
                            const TruncPoly& c1L) {
  if (!cE.constant_term().is_one())
    throw std::invalid_argument("chern_tensor_line: total class must start at 1");
  if (!c1L.is_zero() && (c1L.degree(ctx.geo_count()) != 1 ||
                         !c1L.graded_piece(0, ctx.geo_count()).is_zero()))
    throw std::invalid_argument("chern_tensor_line: c1 must be pure degree 1");
  if (cE.degree(ctx.geo_count()) > rank)
    throw std::invalid_argument("chern_tensor_line: rank below top Chern degree");
  const TruncPoly twist = ctx.one() + c1L;
  TruncPoly out = ctx.zero();
  for (std::uint32_t i = 0; i <= rank; ++i)
    out += cE.graded_piece(i, ctx.geo_count()) * twist.pow(rank - i);
  return out;
}

BundleTable projective_bundle_pushforward(const ChowContext& target, const TruncPoly& cN,
                                          std::uint32_t rank, std::uint32_t total_dim,
                                          std::size_t fiber_index) {
  if (rank < 2) throw std::invalid_argument("projective_bundle_pushforward: rank must be >= 2");
  if (!cN.constant_term().is_one())
    throw std::invalid_argument("projective_bundle_pushforward: total class must start at 1");
  const TruncPoly inv = cN.inv_unit();
  BundleTable table;
  table.fiber_index = fiber_index;
  table.images.reserve(total_dim + 1);
  for (std::uint32_t j = 0; j <= total_dim; ++j) {
    if (j < rank - 1) {
      table.images.push_back(TruncPoly::zero(cN.ring()));
      continue;
    }
    const std::uint32_t s = j - (rank - 1);
    TruncPoly piece = inv.graded_piece(s, target.geo_count());
    if (s % 2 == 1) piece = -piece;
    table.images.push_back(std::move(piece));
  }
  return table;
}

TruncPoly blowup_correction(const ChowContext& ctxB, std::int64_t l, int dimV, int dimP,
                            const std::vector<DivisorOnCenter>& divisors, const TruncPoly& cN_BP,
                            const TruncPoly& cN_PV) {
  int transverse = 0;
  for (const auto& d : divisors)
    if (d.kind == DivisorOnCenter::Kind::Transverse) ++transverse;
  if (transverse >= dimP - ctxB.dim())
    throw std::invalid_argument("blowup_correction: too many transverse divisors for codim(B,P)");
  if (static_cast<int>(divisors.size()) != dimV)
    throw std::invalid_argument("blowup_correction: divisor count must match dim V");

  const Rational lr(l);
  TruncPoly numerator = ctxB.one();
  for (const auto& d : divisors) {
    if (d.multiplicity.degree(ctxB.geo_count()) > 0)
      throw std::invalid_argument("blowup_correction: multiplicity must be a scalar");
    if (d.kind == DivisorOnCenter::Kind::Transverse)
      numerator *= d.multiplicity + d.cls * lr;
    else
      numerator *= d.multiplicity + d.cls;
  }
  const TruncPoly denominator = adams(ctxB, cN_BP, l) * cN_PV;
  const std::int64_t lexp = dimP - ctxB.dim() - transverse;
  TruncPoly total = numerator * denominator.inv_unit() * lr.pow(lexp);
  return ctxB.integrate(total);
}

} // namespace linorbit
