#include "linorbit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

#include "linorbit/corrections.hpp"
#include "linorbit/golden.hpp"
#include "linorbit/orbit.hpp"

namespace linorbit {

namespace {

std::string spec_label(const CurveSpec& spec) {
  std::ostringstream os;
  os << "n=" << spec.n << " m=" << spec.m << " s=(";
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    if (i) os << ",";
    os << spec.components[i].mult;
  }
  os << ") r=" << spec.r << " q=" << spec.q << " qbar=" << spec.qbar;
  return os.str();
}

CurveSpec make_spec(std::int64_t m, std::int64_t n, const std::vector<std::int64_t>& s,
                    std::int64_t r = 0, std::int64_t q = 0, std::int64_t qbar = 0) {
  CurveSpec spec;
  spec.n = n;
  spec.m = m;
  for (auto mult : s) spec.components.push_back({mult, std::nullopt});
  spec.r = r;
  spec.q = q;
  spec.qbar = qbar;
  return spec;
}

// Deterministic parallel map over an index range: results land in slot
// order, so failure reporting is independent of scheduling.
template <class F>
void parallel_indices(std::size_t count, F&& body) {
  unsigned workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = std::min<unsigned>(workers, 8);
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  for (auto& t : pool) t.join();
}

} // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs(std::int64_t max_n) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t n = 2; n <= max_n; ++n)
    for (std::int64_t m = 1; m < n; ++m)
      if (std::gcd(m, n) == 1) out.emplace_back(m, n);
  return out;
}

const std::vector<std::vector<std::int64_t>>& grid_s_lists() {
  static const std::vector<std::vector<std::int64_t>> lists = {
      {1}, {2}, {1, 1}, {1, 2}, {3, 1, 1}};
  return lists;
}

CheckResult check_ladder_closed_form(std::int64_t max_n) {
  CheckResult out;
  out.name = "ladder stage sums match the closed per-cusp form";
  const auto pairs = coprime_pairs(max_n);
  std::vector<std::string> failures(pairs.size());
  std::vector<std::size_t> counts(pairs.size(), 0);
  parallel_indices(pairs.size(), [&](std::size_t idx) {
    const auto [m, n] = pairs[idx];
    const LocalCusp cusp(n, m, ScalarBlock::formal_S());
    for (const auto& jp : all_profiles()) {
      ++counts[idx];
      if (cusp.stage_sum(jp) != cusp.closed_correction(jp)) {
        std::ostringstream os;
        os << "n=" << n << " m=" << m << " profile=(" << jp.jmu << "," << jp.jmubar << ","
           << jp.jlambda << ")";
        if (failures[idx].empty()) failures[idx] = os.str();
      }
    }
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.checks += counts[i];
    if (!failures[i].empty() && out.passed) {
      out.passed = false;
      out.counterexample = failures[i];
    }
  }
  return out;
}

CheckResult check_pipeline_matches_closed(std::int64_t max_n) {
  CheckResult out;
  out.name = "pipeline numerator equals n * Q";
  const auto pairs = coprime_pairs(max_n);
  std::vector<std::string> failures(pairs.size());
  std::vector<std::size_t> counts(pairs.size(), 0);
  parallel_indices(pairs.size(), [&](std::size_t idx) {
    const auto [m, n] = pairs[idx];
    for (const auto& s : grid_s_lists()) {
      CurveSpec spec = make_spec(m, n, s);
      const TruncPoly numerator = pipeline_numerator_formal(spec);
      const TruncPoly nQ = degree_polynomial_formal(spec) * Rational(n);
      ++counts[idx];
      if (numerator != nQ) {
        if (failures[idx].empty()) failures[idx] = spec_label(spec) + " (formal)";
        continue;
      }
      for (std::int64_t r = 0; r <= 2; ++r)
        for (std::int64_t q = 0; q <= 2; ++q)
          for (std::int64_t qb = 0; qb <= 2; ++qb) {
            spec.r = r;
            spec.q = q;
            spec.qbar = qb;
            const std::map<std::string, Rational> at{
                {"q", Rational(q)}, {"qbar", Rational(qb)}, {"r", Rational(r)}};
            ++counts[idx];
            if (numerator.substitute(at) != nQ.substitute(at) && failures[idx].empty())
              failures[idx] = spec_label(spec);
          }
    }
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.checks += counts[i];
    if (!failures[i].empty() && out.passed) {
      out.passed = false;
      out.counterexample = failures[i];
    }
  }
  return out;
}

CheckResult check_global_boxes(std::int64_t max_n) {
  CheckResult out;
  out.name = "global boxes equal the closed global form";
  // the boxes depend on (n, s) only; m enters nowhere
  std::vector<std::int64_t> ns;
  for (std::int64_t n = 2; n <= max_n; ++n) ns.push_back(n);
  std::vector<std::string> failures(ns.size());
  std::vector<std::size_t> counts(ns.size(), 0);
  parallel_indices(ns.size(), [&](std::size_t idx) {
    const std::int64_t n = ns[idx];
    for (const auto& s : grid_s_lists()) {
      const CurveSpec spec = make_spec(1, n, s);
      ++counts[idx];
      if (global_correction_boxes(spec) != global_correction_closed(spec) &&
          failures[idx].empty())
        failures[idx] = spec_label(spec);
    }
  });
  for (std::size_t i = 0; i < ns.size(); ++i) {
    out.checks += counts[i];
    if (!failures[i].empty() && out.passed) {
      out.passed = false;
      out.counterexample = failures[i];
    }
  }
  return out;
}

CheckResult check_raw_local_fixture() {
  CheckResult out;
  out.name = "raw local polynomial matches the bundled fixture";
  const std::vector<std::pair<std::int64_t, std::int64_t>> pairs = {
      {1, 2}, {2, 3}, {1, 3}, {3, 5}, {4, 7}, {5, 8}};
  for (const auto& [m, n] : pairs) {
    const CurveSpec spec = make_spec(m, n, {1});
    const TruncPoly assembled = local_correction(spec, /*formal_S=*/true);
    const TruncPoly fixture = golden::raw_local_polynomial(m, n);
    const TruncPoly structured = local_correction_structured(spec, /*formal_S=*/true);
    ++out.checks;
    if (assembled != fixture || assembled != structured) {
      out.passed = false;
      out.counterexample = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      return out;
    }
  }
  return out;
}

CheckResult check_predegree(std::int64_t max_n) {
  CheckResult out;
  out.name = "predegree coefficients consistent";
  // conic
  {
    const CurveSpec conic = make_spec(1, 2, {1});
    const PredegreePolynomial p = predegree(conic);
    ++out.checks;
    for (std::size_t j = 0; j < 8; ++j)
      if (p.c[j] != Rational(golden::conic_predegree()[j])) {
        out.passed = false;
        out.counterexample = "conic coefficient c" + std::to_string(j);
        return out;
      }
    if (p.orbit_dimension != 5) {
      out.passed = false;
      out.counterexample = "conic orbit dimension";
      return out;
    }
  }
  // triangle-only: the series factors into the three line exponentials
  {
    CurveSpec triangle = make_spec(1, 3, {});
    triangle.q = triangle.qbar = triangle.r = 1;
    const auto formal = predegree_formal(triangle);
    static const RingPtr ring = Ring::make({{"q", 3}, {"qbar", 3}, {"r", 3}});
    const TruncPoly q = TruncPoly::generator(ring, "q");
    const TruncPoly qbar = TruncPoly::generator(ring, "qbar");
    const TruncPoly r = TruncPoly::generator(ring, "r");
    const Rational half(1, 2);
    const TruncPoly product = (TruncPoly::constant(ring, 1) + q + q * q * half) *
                              (TruncPoly::constant(ring, 1) + qbar + qbar * qbar * half) *
                              (TruncPoly::constant(ring, 1) + r + r * r * half);
    for (std::uint32_t j = 0; j < 8; ++j) {
      ++out.checks;
      TruncPoly expected = TruncPoly::zero(ring);
      product.for_each_term([&](const Exponents& e, const Rational& c) {
        std::uint32_t deg = 0;
        for (std::size_t i = 0; i < 3; ++i) deg += e[i];
        if (deg != j) return;
        std::map<std::string, std::uint32_t> mono;
        for (std::size_t i = 0; i < 3; ++i)
          if (e[i] > 0) mono[ring->var(i).name] = e[i];
        expected += TruncPoly::monomial(ring, mono, c * factorial(j));
      });
      if (transplant(formal[j], ring) != expected) {
        out.passed = false;
        out.counterexample = "triangle-only coefficient c" + std::to_string(j);
        return out;
      }
    }
    const PredegreePolynomial p = predegree(triangle);
    ++out.checks;
    if (p.c[6] != Rational(90) || p.orbit_dimension != 6) {
      out.passed = false;
      out.counterexample = "triangle-only predegree at q=qbar=r=1";
      return out;
    }
  }
  // c7 = n Q across the grid
  const auto pairs = coprime_pairs(max_n);
  std::vector<std::string> failures(pairs.size());
  std::vector<std::size_t> counts(pairs.size(), 0);
  parallel_indices(pairs.size(), [&](std::size_t idx) {
    const auto [m, n] = pairs[idx];
    for (const auto& s : grid_s_lists()) {
      const CurveSpec spec = make_spec(m, n, s);
      const auto formal = predegree_formal(spec);
      const TruncPoly nQ = degree_polynomial_formal(spec) * Rational(n);
      ++counts[idx];
      if (transplant(formal[7], make_assembly_ring(false)) != nQ && failures[idx].empty())
        failures[idx] = spec_label(spec);
    }
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.checks += counts[i];
    if (!failures[i].empty() && out.passed) {
      out.passed = false;
      out.counterexample = failures[i];
    }
  }
  return out;
}

CheckResult check_symmetry_and_integrality(std::int64_t max_n) {
  CheckResult out;
  out.name = "symmetry, vanishing and integrality";
  const auto pairs = coprime_pairs(max_n);
  std::vector<std::string> failures(pairs.size());
  std::vector<std::size_t> counts(pairs.size(), 0);
  parallel_indices(pairs.size(), [&](std::size_t idx) {
    const auto [m, n] = pairs[idx];
    auto fail = [&](const CurveSpec& spec, const char* what) {
      if (failures[idx].empty()) failures[idx] = spec_label(spec) + " (" + what + ")";
    };
    for (const auto& s : grid_s_lists()) {
      CurveSpec spec = make_spec(m, n, s);
      const TruncPoly Qf = degree_polynomial_formal(spec);
      const TruncPoly Qf_swapped = degree_polynomial_formal(spec.swapped());
      const auto pf = predegree_formal(spec);
      for (std::int64_t r = 0; r <= 2; ++r)
        for (std::int64_t q = 0; q <= 2; ++q)
          for (std::int64_t qb = 0; qb <= 2; ++qb) {
            spec.r = r;
            spec.q = q;
            spec.qbar = qb;
            // the stabilizer count depends on q = qbar for n = 2
            const StabilizerResult stab = curve_component_count(spec);
            const std::map<std::string, Rational> at{
                {"q", Rational(q)}, {"qbar", Rational(qb)}, {"r", Rational(r)}};
            const std::map<std::string, Rational> at_swapped{
                {"q", Rational(qb)}, {"qbar", Rational(q)}, {"r", Rational(r)}};
            counts[idx] += 2;
            // symmetry under swapping the two distinguished points
            const Rational Q = Qf.substitute(at).constant_term();
            if (Q != Qf_swapped.substitute(at_swapped).constant_term()) fail(spec, "symmetry");
            const Rational degree = Q / Rational(stab.A);
            if (!degree.is_integer() || degree.sign() < 0) fail(spec, "degree integrality");
            for (const auto& cj : pf) {
              const Rational c =
                  cj.substitute({{"q", Rational(q)}, {"qbar", Rational(qb)}, {"r", Rational(r)}})
                      .constant_term();
              if (!c.is_integer() || c.sign() < 0) fail(spec, "predegree integrality");
            }
          }
    }
    // S = 0 kills Q
    CurveSpec empty = make_spec(m, n, {});
    empty.r = empty.q = empty.qbar = 2;
    ++counts[idx];
    if (!degree_polynomial_value(empty).is_zero()) fail(empty, "S=0 vanishing");
  });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out.checks += counts[i];
    if (!failures[i].empty() && out.passed) {
      out.passed = false;
      out.counterexample = failures[i];
    }
  }
  // the conic evaluates to 0
  const CurveSpec conic = make_spec(1, 2, {1});
  ++out.checks;
  if (!degree_polynomial_value(conic).is_zero() && out.passed) {
    out.passed = false;
    out.counterexample = "smooth conic should give 0";
  }
  return out;
}

CheckResult check_constrained_routes() {
  CheckResult out;
  out.name = "derivative counts equal direct single-profile assembly";
  for (const auto& [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {4, 7}}) {
    const CurveSpec spec = make_spec(m, n, {1});
    for (const auto& jp : all_profiles()) {
      ++out.checks;
      if (constrained_degree(spec, jp) != constrained_degree_direct(spec, jp)) {
        out.passed = false;
        std::ostringstream os;
        os << spec_label(spec) << " profile=(" << jp.jmu << "," << jp.jmubar << "," << jp.jlambda
           << ")";
        out.counterexample = os.str();
        return out;
      }
    }
  }
  return out;
}

CheckResult check_stabilizers() {
  CheckResult out;
  out.name = "stabilizer component counts";
  {
    CurveSpec spec = make_spec(2, 3, {1, 1});
    spec.components[0].alpha = GaussianRational(Rational(1), Rational(0));
    spec.components[1].alpha = GaussianRational(Rational(2), Rational(0));
    ++out.checks;
    if (curve_component_count(spec).A != 1) {
      out.passed = false;
      out.counterexample = "two components with parameters 1, 2";
      return out;
    }
  }
  {
    CurveSpec spec = make_spec(1, 2, {1, 1});
    spec.components[0].alpha = GaussianRational(Rational(1), Rational(0));
    spec.components[1].alpha = GaussianRational(Rational(-1), Rational(0));
    spec.q = spec.qbar = 1;
    ++out.checks;
    if (curve_component_count(spec).A != 4) {
      out.passed = false;
      out.counterexample = "opposite parameters with n=2, q=qbar";
      return out;
    }
  }
  {
    ++out.checks;
    const auto res = quadritangent_degree({1, 1}, 0, {}, std::nullopt);
    if (res.A != 4 || res.Q != Rational(2016) || res.degree != Rational(504)) {
      out.passed = false;
      out.counterexample = "pair of quadritangent conics";
      return out;
    }
  }
  return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  results.push_back(check_ladder_closed_form(opts.deep ? 20 : 10));
  results.push_back(check_pipeline_matches_closed(10));
  results.push_back(check_global_boxes(10));
  results.push_back(check_raw_local_fixture());
  results.push_back(check_predegree(10));
  results.push_back(check_symmetry_and_integrality(10));
  results.push_back(check_constrained_routes());
  results.push_back(check_stabilizers());
  return results;
}

} // namespace linorbit
