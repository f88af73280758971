#include "linorbit/orbit.hpp"

#include <stdexcept>

namespace linorbit {

namespace {

TruncPoly bezout_term(const CurveSpec& spec) {
  const RingPtr ring = make_assembly_ring(false);
  const TruncPoly d = TruncPoly::constant(ring, Rational(spec.S() * spec.n)) +
                      TruncPoly::generator(ring, "q") + TruncPoly::generator(ring, "qbar") +
                      TruncPoly::generator(ring, "r");
  return d.pow(7);
}

std::map<std::string, Rational> line_values(const CurveSpec& spec) {
  return {{"q", Rational(spec.q)}, {"qbar", Rational(spec.qbar)}, {"r", Rational(spec.r)}};
}

Rational substituted(const TruncPoly& p, const CurveSpec& spec) {
  const TruncPoly v = p.substitute(line_values(spec));
  if (!v.is_constant()) throw std::logic_error("substituted: free variables remain");
  return v.constant_term();
}

} // namespace

TruncPoly degree_polynomial_formal(const CurveSpec& spec) {
  spec.validate();
  const RingPtr ring = make_assembly_ring(false);
  const TruncPoly S = TruncPoly::constant(ring, Rational(spec.S()));
  const Rational scale =
      Rational(spec.n).pow(2) * Rational(spec.m).pow(2) * Rational(spec.mbar()).pow(2);
  const TruncPoly head = symmetric_bracket(ring, S, spec.n, spec.m, spec.mbar()) * scale;
  // the global tail is the closed global correction without its leading n
  const TruncPoly tail = global_correction_closed(spec) * Rational(1, spec.n);
  return head - tail;
}

Rational degree_polynomial_value(const CurveSpec& spec) {
  return substituted(degree_polynomial_formal(spec), spec);
}

TruncPoly pipeline_numerator_formal(const CurveSpec& spec) {
  spec.validate();
  return bezout_term(spec) - local_correction(spec) - global_correction_boxes(spec);
}

Rational pipeline_numerator_value(const CurveSpec& spec) {
  return substituted(pipeline_numerator_formal(spec), spec);
}

DegreeResult orbit_degree(const CurveSpec& spec, DegreeMethod method) {
  spec.validate();
  const StabilizerResult stab = curve_component_count(spec);
  DegreeResult out;
  out.A = stab.A;
  out.A_defaulted = stab.defaulted;
  out.warnings = stab.warnings;
  if (method == DegreeMethod::Closed) {
    out.Q = degree_polynomial_value(spec);
  } else {
    out.Q = pipeline_numerator_value(spec) / Rational(spec.n);
  }
  out.degree = out.Q / Rational(out.A);
  if (out.degree.is_zero())
    out.warnings.push_back("result 0: orbit likely of dimension < 7");
  return out;
}

std::array<TruncPoly, 8> predegree_formal(const CurveSpec& spec) {
  spec.validate();
  static const RingPtr ring =
      Ring::make({{"q", 3}, {"qbar", 3}, {"r", 3}, {"t", 8}});
  const TruncPoly q = TruncPoly::generator(ring, "q");
  const TruncPoly qbar = TruncPoly::generator(ring, "qbar");
  const TruncPoly r = TruncPoly::generator(ring, "r");
  const TruncPoly t = TruncPoly::generator(ring, "t");
  const TruncPoly S = TruncPoly::constant(ring, Rational(spec.S()));
  const std::int64_t n = spec.n, m = spec.m, mbar = spec.mbar();
  const TruncPoly d = S * Rational(n) + q + qbar + r;

  TruncPoly poly = (d * t).exp_trunc(7);

  // global tail
  const Rational p5 = spec.power_sum(5), p6 = spec.power_sum(6), p7 = spec.power_sum(7);
  const TruncPoly g5 = TruncPoly::constant(ring, Rational(12 * n) * p5);
  const TruncPoly g6 = (d * p5 * Rational(48) - TruncPoly::constant(ring, p6 * Rational(72))) *
                       Rational(n);
  const TruncPoly g7 = (d * d * p5 * Rational(84) - d * p6 * Rational(252) +
                        TruncPoly::constant(ring, p7 * Rational(192))) *
                       Rational(n);
  poly -= g5 * t.pow(5) * factorial(5).reciprocal();
  poly -= g6 * t.pow(6) * factorial(6).reciprocal();
  poly -= g7 * t.pow(7) * factorial(7).reciprocal();

  // local tail
  const TruncPoly base = S + r * Rational(1, n);
  const TruncPoly l6 = ((base + q * Rational(1, m)).pow(6) * Rational(m).pow(3) +
                        (base + qbar * Rational(1, mbar)).pow(6) * Rational(mbar).pow(3)) *
                       Rational(n).pow(3);
  const TruncPoly l7 =
      d.pow(7) - symmetric_bracket(ring, S, n, m, mbar) *
                     (Rational(n).pow(3) * Rational(m).pow(2) * Rational(mbar).pow(2));
  poly -= l6 * t.pow(6) * factorial(6).reciprocal();
  poly -= l7 * t.pow(7) * factorial(7).reciprocal();

  std::array<TruncPoly, 8> out;
  for (std::uint32_t j = 0; j < 8; ++j)
    out[j] = poly.partial("t", j).substitute({{"t", Rational(0)}});
  return out;
}

PredegreePolynomial predegree(const CurveSpec& spec) {
  const auto formal = predegree_formal(spec);
  PredegreePolynomial out;
  for (std::size_t j = 0; j < 8; ++j) out.c[j] = substituted(formal[j], spec);
  out.orbit_dimension = 0;
  for (int j = 7; j >= 0; --j) {
    if (!out.c[j].is_zero()) {
      out.orbit_dimension = j;
      break;
    }
  }
  return out;
}

Rational constrained_degree(const CurveSpec& spec, const ConditionProfile& jp) {
  spec.validate();
  jp.validate();
  const StabilizerResult stab = curve_component_count(spec);
  TruncPoly derived = degree_polynomial_formal(spec)
                          .partial("q", jp.jmu)
                          .partial("qbar", jp.jmubar)
                          .partial("r", jp.jlambda);
  const Rational scale =
      factorial(static_cast<std::uint32_t>(jp.jc())) / (factorial(7) * Rational(stab.A));
  return substituted(derived, spec) * scale;
}

Rational constrained_degree_direct(const CurveSpec& spec, const ConditionProfile& jp) {
  spec.validate();
  jp.validate();
  const StabilizerResult stab = curve_component_count(spec);
  const ScalarBlock scalars = ScalarBlock::numeric(Rational(spec.S()));
  const LocalCusp cusp_mu(spec.n, spec.m, scalars);
  const LocalCusp cusp_mubar(spec.n, spec.mbar(), scalars);
  std::vector<std::int64_t> mults;
  for (const auto& c : spec.components) mults.push_back(c.mult);
  const GlobalCorrection global(spec.n, std::move(mults), scalars);

  const Rational Sn(spec.S() * spec.n);
  auto profile_value = [&](const ConditionProfile& p) {
    TruncPoly v = TruncPoly::constant(scalars.ring, Sn.pow(p.jc()));
    v -= cusp_mu.closed_correction(p);
    v -= cusp_mubar.closed_correction(p.swapped());
    v -= global.profile_boxes(p);
    return v.constant_term();
  };

  // Expand the point-condition power multinomially; every term with three
  // or more conditions on one line dies.
  const int jrest = jp.jc();
  Rational total(0);
  const Rational qv(spec.q), qbv(spec.qbar), rv(spec.r);
  for (int a = 0; a <= jrest; ++a) {
    if (jp.jmu + a > 2) continue;
    for (int b = 0; a + b <= jrest; ++b) {
      if (jp.jmubar + b > 2) continue;
      for (int c = 0; a + b + c <= jrest; ++c) {
        if (jp.jlambda + c > 2) continue;
        const int d = jrest - a - b - c;
        const Rational multinom =
            factorial(jrest) / (factorial(a) * factorial(b) * factorial(c) * factorial(d));
        const ConditionProfile inner{jp.jmu + a, jp.jmubar + b, jp.jlambda + c};
        total += multinom * qv.pow(a) * qbv.pow(b) * rv.pow(c) * profile_value(inner);
      }
    }
  }
  return total / (Rational(stab.A) * Rational(spec.n));
}

namespace {

void require_counting_regime(const CurveSpec& spec) {
  if (spec.r != 0 || spec.q != 0 || spec.qbar != 0)
    throw std::invalid_argument("counting regime requires no triangle-line components");
  if (spec.components.empty())
    throw std::invalid_argument("counting regime requires at least one pencil component");
  for (const auto& c : spec.components)
    if (c.mult != 1)
      throw std::invalid_argument("counting regime requires all multiplicities equal to 1");
}

} // namespace

ClosedCounts closed_counts(const CurveSpec& spec) {
  spec.validate();
  require_counting_regime(spec);
  const StabilizerResult stab = curve_component_count(spec);
  const Rational A(stab.A);
  const Rational S(spec.S());
  const Rational n(spec.n);
  const Rational mm = Rational(spec.m).pow(2) * Rational(spec.mbar()).pow(2);
  ClosedCounts out;
  out.unconstrained =
      Rational(6) * S / A * (mm * n * n * S.pow(6) - Rational(14) * n * n * S * S + Rational(42) * n * S - Rational(32));
  out.one_lambda_point = Rational(6) * S / A * (mm * n * S.pow(5) - Rational(4) * n * S + Rational(6));
  out.two_lambda_points = Rational(2) * S / A * (Rational(3) * mm * S.pow(4) - Rational(2));
  return out;
}

CharacteristicTable characteristic_table(const CurveSpec& spec) {
  spec.validate();
  require_counting_regime(spec);
  CharacteristicTable table;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k) table[i][j][k] = constrained_degree(spec, {i, j, k});
  return table;
}

Rational quadritangent_Q(const std::vector<std::int64_t>& mults, std::int64_t q) {
  std::int64_t S = 0;
  Rational p5(0), p6(0), p7(0);
  for (const auto s : mults) {
    if (s < 1) throw std::invalid_argument("quadritangent_Q: multiplicities must be >= 1");
    S += s;
    p5 += Rational(s).pow(5);
    p6 += Rational(s).pow(6);
    p7 += Rational(s).pow(7);
  }
  if (q < 0) throw std::invalid_argument("quadritangent_Q: tangent-line multiplicity must be >= 0");
  const Rational Sr(S), qr(q);
  const Rational two_S_q = Rational(2) * Sr + qr;
  return Rational(24) * Sr.pow(7) + Rational(84) * Sr.pow(6) * qr + Rational(84) * Sr.pow(5) * qr * qr -
         Rational(84) * two_S_q * two_S_q * p5 + Rational(252) * two_S_q * p6 - Rational(192) * p7;
}

QuadritangentResult quadritangent_degree(const std::vector<std::int64_t>& mults, std::int64_t q,
                                         const std::vector<GaussianRational>& alphas,
                                         std::optional<std::int64_t> A_override) {
  if (mults.empty()) throw std::invalid_argument("quadritangent: at least one conic required");
  QuadritangentResult out;
  out.Q = quadritangent_Q(mults, q);
  if (A_override) {
    if (*A_override < 1) throw std::invalid_argument("quadritangent: override must be >= 1");
    out.A = *A_override;
  } else if (!alphas.empty()) {
    if (alphas.size() != mults.size())
      throw std::invalid_argument("quadritangent: one parameter per conic required");
    out.A = quadritangent_component_count(alphas, mults);
  } else if (mults.size() >= 2) {
    // Two conics always admit the swap when their multiplicities agree; with
    // more components only the identity is generic.
    out.A_defaulted = true;
    if (mults.size() == 2) {
      out.A = (mults[0] == mults[1]) ? 4 : 2;
    } else {
      out.A = 2;
      out.warnings.push_back(
          "conic parameters not given: assuming a generic configuration (stabilizer count 2)");
    }
  } else {
    throw std::invalid_argument(
        "quadritangent: a single conic needs an explicit stabilizer override");
  }
  out.degree = out.Q / Rational(out.A);
  return out;
}

} // namespace linorbit
