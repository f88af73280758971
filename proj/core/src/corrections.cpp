#include "linorbit/corrections.hpp"

#include <stdexcept>

namespace linorbit {

namespace {

constexpr int kDimAmbient = 8; // the space of 3x3 matrices

RingPtr with_scalars(std::vector<VarSpec> geo, const RingPtr& scalar_ring) {
  for (const auto& v : scalar_ring->vars()) geo.push_back(v);
  return Ring::make(std::move(geo));
}

Rational fact_weight(const ConditionProfile& jp) {
  return factorial(7) / (factorial(jp.jmu) * factorial(jp.jmubar) * factorial(jp.jlambda) *
                         factorial(static_cast<std::uint32_t>(jp.jc())));
}

} // namespace

RingPtr make_assembly_ring(bool formal_S) {
  // One shared handle per flavor: assembled corrections, closed forms and
  // the degree polynomial must live in the same ring to be comparable.
  static const RingPtr numeric = Ring::make({{"q", 3}, {"qbar", 3}, {"r", 3}});
  static const RingPtr formal = Ring::make({{"q", 3}, {"qbar", 3}, {"r", 3}, {"S", kUncapped}});
  return formal_S ? formal : numeric;
}

ScalarBlock ScalarBlock::numeric(const Rational& S_value) {
  ScalarBlock b;
  b.ring = Ring::make({});
  b.S = TruncPoly::constant(b.ring, S_value);
  return b;
}

ScalarBlock ScalarBlock::formal_S() {
  ScalarBlock b;
  b.ring = Ring::make({{"S", kUncapped}});
  b.S = TruncPoly::generator(b.ring, "S");
  return b;
}

LocalCusp::LocalCusp(std::int64_t n, std::int64_t m, ScalarBlock scalars)
    : n_(n),
      m_(m),
      euclid_(euclid_data(m, n)),
      scalars_(std::move(scalars)),
      plane_(ChowContext::base(with_scalars({{"k", 3}}, scalars_.ring), 1, 2, {{"k", 2}},
                               scalars_.ring)),
      fourfold_(plane_),
      sixfold_(plane_) {
  // 4-fold: projectivized normal bundle of the plane, c(N) = (1+k)^3.
  const RingPtr r4 = with_scalars({{"k", 3}, {"e1", 5}}, scalars_.ring);
  const TruncPoly k_plane = plane_.gen("k");
  const TruncPoly cN1 = (plane_.one() + k_plane).pow(3);
  BundleTable t1 = projective_bundle_pushforward(plane_, cN1, 3, 4, r4->index_of("e1"));
  fourfold_ = ChowContext::bundle(r4, 4, std::move(t1), plane_);

  if (euclid_.e() >= 3) {
    const std::int64_t l1 = euclid_.stages[0].l;
    const RingPtr r6 = with_scalars({{"k", 3}, {"e1", 5}, {"e2", 7}}, scalars_.ring);
    const TruncPoly cN2 =
        (fourfold_.one() + fourfold_.gen("k") - fourfold_.gen("e1") * Rational(l1)).pow(3);
    BundleTable t2 = projective_bundle_pushforward(fourfold_, cN2, 3, 6, r6->index_of("e2"));
    sixfold_ = ChowContext::bundle(r6, 6, std::move(t2), fourfold_);
    // Exceptional classes on the stable 6-fold: e_i = e_{i-2} - l_{i-1} e_{i-1}.
    e_cls_.resize(euclid_.e() + 1, sixfold_.zero());
    e_cls_[1] = sixfold_.gen("e1");
    e_cls_[2] = sixfold_.gen("e2");
    for (std::size_t i = 3; i <= euclid_.e(); ++i)
      e_cls_[i] = e_cls_[i - 2] - e_cls_[i - 1] * Rational(euclid_.stages[i - 2].l);
  }
}

TruncPoly LocalCusp::stage_correction(std::size_t stage, const ConditionProfile& jp) const {
  jp.validate();
  if (stage < 1 || stage > euclid_.e())
    throw std::invalid_argument("stage_correction: stage index out of range");
  const std::int64_t l = euclid_.stages[stage - 1].l;
  const std::int64_t mi = euclid_.stages[stage - 1].m;
  using Kind = DivisorOnCenter::Kind;

  if (stage == 1) {
    const ChowContext& ctx = plane_;
    const TruncPoly k = ctx.gen("k");
    const TruncPoly S = transplant(scalars_.S, ctx.ring());
    std::vector<DivisorOnCenter> div;
    div.push_back({ctx.constant(0), k, Kind::Balanced}); // general hyperplane
    for (int i = 0; i < jp.jmu; ++i) div.push_back({ctx.one(), k, Kind::Balanced});
    for (int i = 0; i < jp.jmubar; ++i) div.push_back({ctx.constant(0), k, Kind::Balanced});
    for (int i = 0; i < jp.jlambda; ++i) div.push_back({ctx.one(), k, Kind::Transverse});
    const TruncPoly Xmult = S * Rational(mi);
    const TruncPoly Xcls = S * Rational(n_) * k;
    for (int i = 0; i < jp.jc(); ++i) div.push_back({Xmult, Xcls, Kind::Balanced});
    const TruncPoly cN = (ctx.one() + k).pow(3);
    return blowup_correction(ctx, l, kDimAmbient, 5, div, cN, cN);
  }

  if (stage == 2) {
    const ChowContext& ctx = fourfold_;
    const TruncPoly k = ctx.gen("k");
    const TruncPoly e1 = ctx.gen("e1");
    const TruncPoly S = transplant(scalars_.S, ctx.ring());
    const std::int64_t l1 = euclid_.stages[0].l;
    const std::int64_t m1 = euclid_.stages[0].m;
    std::vector<DivisorOnCenter> div;
    div.push_back({ctx.constant(0), k, Kind::Balanced});
    for (int i = 0; i < jp.jmu; ++i)
      div.push_back({ctx.one(), k - e1 * Rational(l1), Kind::Transverse});
    for (int i = 0; i < jp.jmubar; ++i) div.push_back({ctx.constant(0), k, Kind::Balanced});
    for (int i = 0; i < jp.jlambda; ++i) div.push_back({ctx.constant(0), k - e1, Kind::Balanced});
    const TruncPoly Xmult = S * Rational(mi);
    const TruncPoly Xcls = S * (k * Rational(n_) - e1 * Rational(l1 * m1));
    for (int i = 0; i < jp.jc(); ++i) div.push_back({Xmult, Xcls, Kind::Balanced});
    const TruncPoly cN_BP = (ctx.one() + k - e1 * Rational(l1)).pow(3);
    const TruncPoly cN_PV = ctx.one() + e1;
    return blowup_correction(ctx, l, kDimAmbient, 7, div, cN_BP, cN_PV);
  }

  const ChowContext& ctx = sixfold_;
  const TruncPoly k = ctx.gen("k");
  const TruncPoly S = transplant(scalars_.S, ctx.ring());
  const std::int64_t l1 = euclid_.stages[0].l;
  std::vector<DivisorOnCenter> div;
  div.push_back({ctx.constant(0), k, Kind::Balanced});
  for (int i = 0; i < jp.jmu; ++i)
    div.push_back({ctx.constant(0), k - e_cls_[1] * Rational(l1) - e_cls_[2], Kind::Balanced});
  for (int i = 0; i < jp.jmubar; ++i) div.push_back({ctx.constant(0), k, Kind::Balanced});
  for (int i = 0; i < jp.jlambda; ++i)
    div.push_back({ctx.constant(0), k - e_cls_[1], Kind::Balanced});
  TruncPoly pc = k * Rational(n_);
  for (std::size_t j = 1; j < stage; ++j)
    pc -= e_cls_[j] * Rational(euclid_.stages[j - 1].l * euclid_.stages[j - 1].m);
  const TruncPoly Xmult = S * Rational(mi);
  const TruncPoly Xcls = S * pc;
  for (int i = 0; i < jp.jc(); ++i) div.push_back({Xmult, Xcls, Kind::Balanced});
  const TruncPoly cN_BP = ctx.one() + e_cls_[stage];
  const TruncPoly cN_PV = ctx.one() + e_cls_[stage - 1];
  return blowup_correction(ctx, l, kDimAmbient, 7, div, cN_BP, cN_PV);
}

TruncPoly LocalCusp::stage_sum(const ConditionProfile& jp) const {
  TruncPoly out = TruncPoly::zero(scalars_.ring);
  for (std::size_t i = 1; i <= euclid_.e(); ++i) out += stage_correction(i, jp);
  return out;
}

TruncPoly LocalCusp::closed_correction(const ConditionProfile& jp) const {
  jp.validate();
  const int drop = jp.jc() + jp.jlambda - 3;
  if (drop < 0) throw std::logic_error("closed_correction: profile out of range");
  const TruncPoly k = plane_.gen("k");
  const TruncPoly S = transplant(scalars_.S, plane_.ring());
  TruncPoly integrand = k.pow(jp.jmubar + 1);
  integrand *= (plane_.constant(Rational(m_)) + k * Rational(n_)).pow(drop);
  integrand *= (plane_.one() + k).pow(3 - jp.jmu).inv_unit();
  integrand *= S.pow(jp.jc());
  return plane_.integrate(integrand) * Rational(n_).pow(3 - jp.jlambda);
}

GlobalCorrection::GlobalCorrection(std::int64_t n, std::vector<std::int64_t> component_mults,
                                   ScalarBlock scalars)
    : n_(n),
      mults_(std::move(component_mults)),
      scalars_(std::move(scalars)),
      threefold_(ChowContext::base(with_scalars({{"k", 3}, {"p", 2}}, scalars_.ring), 2, 3,
                                   {{"k", 2}, {"p", 1}}, scalars_.ring)),
      p1bundle_(threefold_) {
  // P^1-bundle over the threefold; the pushforward of the exceptional-class
  // powers is fixed data: f -> -1, f^2 -> -3k, f^3 -> -6k^2, f^4 -> 0.
  const RingPtr r4 = with_scalars({{"k", 3}, {"p", 2}, {"f", 5}}, scalars_.ring);
  const TruncPoly k = threefold_.gen("k");
  BundleTable table;
  table.fiber_index = r4->index_of("f");
  table.images.push_back(threefold_.zero());
  table.images.push_back(-threefold_.one());
  table.images.push_back(k * Rational(-3));
  table.images.push_back(k * k * Rational(-6));
  table.images.push_back(threefold_.zero());
  p1bundle_ = ChowContext::bundle(r4, 4, std::move(table), threefold_);
}

TruncPoly GlobalCorrection::profile_boxes(const ConditionProfile& jp) const {
  jp.validate();
  const int lines = jp.jmu + jp.jmubar + jp.jlambda;
  using Kind = DivisorOnCenter::Kind;
  TruncPoly out = TruncPoly::zero(scalars_.ring);
  for (const std::int64_t si : mults_) {
    {
      const ChowContext& ctx = threefold_;
      const TruncPoly k = ctx.gen("k");
      const TruncPoly S = transplant(scalars_.S, ctx.ring());
      std::vector<DivisorOnCenter> div;
      div.push_back({ctx.constant(0), k + ctx.gen("p") * Rational(n_), Kind::Balanced});
      for (int i = 0; i < lines; ++i) div.push_back({ctx.constant(0), k, Kind::Balanced});
      const TruncPoly Xcls = S * Rational(n_) * k;
      for (int i = 0; i < jp.jc(); ++i)
        div.push_back({ctx.constant(Rational(si)), Xcls, Kind::Balanced});
      const TruncPoly cN = (ctx.one() + k).pow(6);
      out += blowup_correction(ctx, 1, kDimAmbient, kDimAmbient, div, cN, ctx.one());
    }
    {
      const ChowContext& ctx = p1bundle_;
      const TruncPoly k = ctx.gen("k");
      const TruncPoly f = ctx.gen("f");
      const TruncPoly S = transplant(scalars_.S, ctx.ring());
      std::vector<DivisorOnCenter> div;
      div.push_back({ctx.constant(0), k + ctx.gen("p") * Rational(n_), Kind::Balanced});
      for (int i = 0; i < lines; ++i) div.push_back({ctx.constant(0), k, Kind::Balanced});
      const TruncPoly Xcls = S * Rational(n_) * k - f * Rational(si);
      for (int i = 0; i < jp.jc(); ++i)
        div.push_back({ctx.constant(Rational(si)), Xcls, Kind::Balanced});
      const TruncPoly cN = (ctx.one() + f) * (ctx.one() + k - f).pow(3);
      out += blowup_correction(ctx, 1, kDimAmbient, kDimAmbient, div, cN, ctx.one());
    }
  }
  return out;
}

TruncPoly assemble_profiles(const RingPtr& ring,
                            const std::function<TruncPoly(const ConditionProfile&)>& per_profile) {
  const TruncPoly q = TruncPoly::generator(ring, "q");
  const TruncPoly qbar = TruncPoly::generator(ring, "qbar");
  const TruncPoly r = TruncPoly::generator(ring, "r");
  TruncPoly out = TruncPoly::zero(ring);
  for (const auto& jp : all_profiles()) {
    const TruncPoly mono = q.pow(jp.jmu) * qbar.pow(jp.jmubar) * r.pow(jp.jlambda);
    out += transplant(per_profile(jp), ring) * mono * fact_weight(jp);
  }
  return out;
}

namespace {

ScalarBlock scalar_block_for(const CurveSpec& spec, bool formal_S) {
  return formal_S ? ScalarBlock::formal_S() : ScalarBlock::numeric(Rational(spec.S()));
}

} // namespace

TruncPoly local_correction(const CurveSpec& spec, bool formal_S) {
  const RingPtr ring = make_assembly_ring(formal_S);
  const ScalarBlock scalars = scalar_block_for(spec, formal_S);
  const LocalCusp cusp_mu(spec.n, spec.m, scalars);
  const LocalCusp cusp_mubar(spec.n, spec.mbar(), scalars);
  return assemble_profiles(ring, [&](const ConditionProfile& jp) {
    return cusp_mu.closed_correction(jp) + cusp_mubar.closed_correction(jp.swapped());
  });
}

TruncPoly local_correction_stagewise(const CurveSpec& spec, bool formal_S) {
  const RingPtr ring = make_assembly_ring(formal_S);
  const ScalarBlock scalars = scalar_block_for(spec, formal_S);
  const LocalCusp cusp_mu(spec.n, spec.m, scalars);
  const LocalCusp cusp_mubar(spec.n, spec.mbar(), scalars);
  return assemble_profiles(ring, [&](const ConditionProfile& jp) {
    return cusp_mu.stage_sum(jp) + cusp_mubar.stage_sum(jp.swapped());
  });
}

TruncPoly symmetric_bracket(const RingPtr& ring, const TruncPoly& S, std::int64_t n,
                            std::int64_t m, std::int64_t mbar) {
  const TruncPoly q = TruncPoly::generator(ring, "q");
  const TruncPoly qbar = TruncPoly::generator(ring, "qbar");
  const TruncPoly r = TruncPoly::generator(ring, "r");
  const TruncPoly base = S + r * Rational(1, n);
  const TruncPoly qm = q * Rational(1, m);
  const TruncPoly qbm = qbar * Rational(1, mbar);
  const TruncPoly quad =
      qm * qm - qm * qbm + qbm * qbm;
  return (base + qm + qbm).pow(7) + (base + qm).pow(7) * Rational(2) +
         (base + qbm).pow(7) * Rational(2) + base.pow(7) - base.pow(5) * quad * Rational(42);
}

namespace {

TruncPoly formal_degree_d(const RingPtr& ring, const TruncPoly& S, std::int64_t n) {
  return S * Rational(n) + TruncPoly::generator(ring, "q") + TruncPoly::generator(ring, "qbar") +
         TruncPoly::generator(ring, "r");
}

TruncPoly S_in_ring(const RingPtr& ring, const CurveSpec& spec, bool formal_S) {
  return formal_S ? TruncPoly::generator(ring, "S")
                  : TruncPoly::constant(ring, Rational(spec.S()));
}

} // namespace

TruncPoly local_correction_structured(const CurveSpec& spec, bool formal_S) {
  const RingPtr ring = make_assembly_ring(formal_S);
  const TruncPoly S = S_in_ring(ring, spec, formal_S);
  const TruncPoly d = formal_degree_d(ring, S, spec.n);
  const Rational scale = Rational(spec.n).pow(3) * Rational(spec.m).pow(2) *
                         Rational(spec.mbar()).pow(2);
  return d.pow(7) - symmetric_bracket(ring, S, spec.n, spec.m, spec.mbar()) * scale;
}

TruncPoly global_correction_boxes(const CurveSpec& spec, bool formal_S) {
  const RingPtr ring = make_assembly_ring(formal_S);
  std::vector<std::int64_t> mults;
  for (const auto& c : spec.components) mults.push_back(c.mult);
  const GlobalCorrection global(spec.n, std::move(mults), scalar_block_for(spec, formal_S));
  return assemble_profiles(ring,
                           [&](const ConditionProfile& jp) { return global.profile_boxes(jp); });
}

TruncPoly global_correction_closed(const CurveSpec& spec, bool formal_S) {
  const RingPtr ring = make_assembly_ring(formal_S);
  const TruncPoly S = S_in_ring(ring, spec, formal_S);
  const TruncPoly d = formal_degree_d(ring, S, spec.n);
  const TruncPoly sum = d * d * spec.power_sum(5) * Rational(84) -
                        d * spec.power_sum(6) * Rational(252) +
                        TruncPoly::constant(ring, spec.power_sum(7) * Rational(192));
  return sum * Rational(spec.n);
}

} // namespace linorbit
