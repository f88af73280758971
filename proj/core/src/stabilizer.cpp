#include "linorbit/stabilizer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace linorbit {

namespace {

// (alpha, multiplicity) pairs, sorted canonically for multiset comparison.
using ParamSet = std::vector<std::pair<GaussianRational, std::int64_t>>;

bool gauss_less(const GaussianRational& a, const GaussianRational& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

ParamSet canonical(ParamSet s) {
  std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return gauss_less(x.first, y.first);
    return x.second < y.second;
  });
  return s;
}

bool preserves(const ParamSet& canon, const GaussianRational& u, const GaussianRational& v) {
  ParamSet mapped;
  mapped.reserve(canon.size());
  for (const auto& [a, s] : canon) mapped.emplace_back(u * a + v, s);
  return canonical(std::move(mapped)) == canon;
}

} // namespace

StabilizerResult curve_component_count(const CurveSpec& spec) {
  StabilizerResult out;
  if (spec.A_override) {
    out.A = *spec.A_override;
    return out;
  }
  const bool doubled = (spec.n == 2 && spec.q == spec.qbar);
  if (!spec.alphas_present()) {
    // A one-point multiset admits only the identity scaling, so single
    // components need no parameter; otherwise assume a generic configuration.
    out.A = doubled ? 2 : 1;
    if (spec.components.size() > 1) {
      out.defaulted = true;
      out.warnings.push_back(
          "pencil parameters not given: assuming a generic configuration (stabilizer count " +
          std::to_string(out.A) + ")");
    }
    return out;
  }

  ParamSet params;
  for (const auto& c : spec.components) params.emplace_back(*c.alpha, c.mult);
  const ParamSet canon = canonical(params);

  // Any preserving scaling u maps some parameter to one of equal multiplicity,
  // so ratios of equal-multiplicity pairs exhaust the candidates; u is then a
  // root of unity automatically, being a permutation of a finite multiset.
  std::vector<GaussianRational> found;
  const GaussianRational zero;
  for (const auto& [a, sa] : canon) {
    for (const auto& [b, sb] : canon) {
      if (sa != sb) continue;
      const GaussianRational u = b / a;
      if (std::any_of(found.begin(), found.end(), [&](const auto& w) { return w == u; })) continue;
      if (preserves(canon, u, zero)) found.push_back(u);
    }
  }
  out.A = static_cast<std::int64_t>(found.size());
  if (doubled) out.A *= 2;
  return out;
}

std::int64_t quadritangent_component_count(const std::vector<GaussianRational>& alphas,
                                           const std::vector<std::int64_t>& mults) {
  if (alphas.size() != mults.size())
    throw std::invalid_argument("quadritangent_component_count: size mismatch");
  if (alphas.size() < 2)
    throw std::invalid_argument(
        "quadritangent_component_count: a single conic has no finite enumeration; override required");
  ParamSet params;
  for (std::size_t i = 0; i < alphas.size(); ++i) params.emplace_back(alphas[i], mults[i]);
  const ParamSet canon = canonical(params);

  // An affine map preserving the multiset permutes the distinct parameters;
  // fixing two of them forces the identity, so the map order equals the
  // order of the induced permutation.
  std::int64_t max_order = 1;
  for (const auto& [a1, s1] : canon) {
    for (const auto& [b1, t1] : canon) {
      if (s1 != t1) continue;
      for (const auto& [a2, s2] : canon) {
        if (a2 == a1) continue;
        for (const auto& [b2, t2] : canon) {
          if (s2 != t2) continue;
          const GaussianRational u = (b1 - b2) / (a1 - a2);
          if (u.is_zero()) continue;
          const GaussianRational v = b1 - u * a1;
          if (!preserves(canon, u, v)) continue;
          // order of the induced permutation of the distinct parameters
          std::int64_t order = 1;
          GaussianRational pu = u, pv = v; // current iterate alpha -> pu*alpha + pv
          while (!(pu == GaussianRational(Rational(1), Rational(0)) && pv.is_zero())) {
            pu = u * pu;
            pv = u * pv + v;
            ++order;
            if (order > static_cast<std::int64_t>(canon.size()) * static_cast<std::int64_t>(canon.size()) + 2)
              throw std::logic_error("quadritangent_component_count: runaway map order");
          }
          max_order = std::max(max_order, order);
        }
      }
    }
  }
  return 2 * max_order;
}

std::int64_t triangle_stabilizer_degree(std::int64_t q, std::int64_t qbar, std::int64_t r) {
  if (q < 1 || qbar < 1 || r < 1)
    throw std::invalid_argument("triangle_stabilizer_degree: all three multiplicities must be >= 1");
  if (q == qbar && qbar == r) return 6;
  if (q == qbar || qbar == r || q == r) return 2;
  return 1;
}

} // namespace linorbit
