#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linorbit/stabilizer.hpp"

using namespace linorbit;

namespace {

GaussianRational g(std::int64_t re, std::int64_t im = 0) {
  return {Rational(re), Rational(im)};
}

CurveSpec with_alphas(std::int64_t m, std::int64_t n,
                      std::vector<std::pair<GaussianRational, std::int64_t>> comps) {
  CurveSpec spec;
  spec.n = n;
  spec.m = m;
  for (auto& [a, s] : comps) spec.components.push_back({s, a});
  return spec;
}

} // namespace

TEST_CASE("two generic components give the identity only") {
  const CurveSpec spec = with_alphas(2, 3, {{g(1), 1}, {g(2), 1}});
  CHECK(curve_component_count(spec).A == 1);
}

TEST_CASE("opposite parameters double up twice for bitangent conics") {
  CurveSpec spec = with_alphas(1, 2, {{g(1), 1}, {g(-1), 1}});
  spec.q = spec.qbar = 1;
  CHECK(curve_component_count(spec).A == 4);
  // without the coordinate switch (q != qbar) only the scaling remains
  spec.qbar = 2;
  CHECK(curve_component_count(spec).A == 2);
}

TEST_CASE("a single component always has count 1 away from n = 2") {
  const CurveSpec spec = with_alphas(2, 3, {{g(7), 2}});
  CHECK(curve_component_count(spec).A == 1);
  CurveSpec bare;
  bare.n = 3;
  bare.m = 2;
  bare.components = {{1, std::nullopt}};
  const StabilizerResult res = curve_component_count(bare);
  CHECK(res.A == 1);
  CHECK_FALSE(res.defaulted);
}

TEST_CASE("fourth roots of unity are found exactly") {
  const CurveSpec spec =
      with_alphas(2, 3, {{g(1), 1}, {g(0, 1), 1}, {g(-1), 1}, {g(0, -1), 1}});
  CHECK(curve_component_count(spec).A == 4); // multiplication by i cycles the set
}

TEST_CASE("multiplicities must match for a scaling to count") {
  const CurveSpec spec = with_alphas(2, 3, {{g(1), 1}, {g(-1), 2}});
  CHECK(curve_component_count(spec).A == 1);
  const CurveSpec matched = with_alphas(2, 3, {{g(1), 2}, {g(-1), 2}});
  CHECK(curve_component_count(matched).A == 2);
}

TEST_CASE("override wins") {
  CurveSpec spec = with_alphas(2, 3, {{g(1), 1}, {g(2), 1}});
  spec.A_override = 7;
  CHECK(curve_component_count(spec).A == 7);
}

TEST_CASE("absent parameters fall back to the generic count with a warning") {
  CurveSpec spec;
  spec.n = 3;
  spec.m = 2;
  spec.components = {{1, std::nullopt}, {1, std::nullopt}};
  const StabilizerResult res = curve_component_count(spec);
  CHECK(res.A == 1);
  CHECK(res.defaulted);
  CHECK_FALSE(res.warnings.empty());

  CurveSpec conics = spec;
  conics.n = 2;
  conics.m = 1;
  CHECK(curve_component_count(conics).A == 2); // coordinate switch survives
}

TEST_CASE("quadritangent affine symmetries") {
  // swap of two points: order 2, count 4
  CHECK(quadritangent_component_count({g(0), g(1)}, {1, 1}) == 4);
  // unequal multiplicities admit the identity only
  CHECK(quadritangent_component_count({g(0), g(1)}, {1, 2}) == 2);
  // multiplication by i cycles the fourth roots: order 4, count 8
  CHECK(quadritangent_component_count({g(1), g(0, 1), g(-1), g(0, -1)}, {1, 1, 1, 1}) == 8);
  // translation-symmetric triple: alpha -> -alpha + 2 swaps the ends
  CHECK(quadritangent_component_count({g(0), g(1), g(2)}, {1, 1, 1}) == 4);
  CHECK_THROWS_AS(quadritangent_component_count({g(1)}, {1}), std::invalid_argument);
}

TEST_CASE("triangle stabilizer degrees") {
  CHECK(triangle_stabilizer_degree(1, 1, 1) == 6);
  CHECK(triangle_stabilizer_degree(1, 1, 2) == 2);
  CHECK(triangle_stabilizer_degree(1, 2, 3) == 1);
  CHECK(triangle_stabilizer_degree(5, 2, 5) == 2);
  CHECK_THROWS_AS(triangle_stabilizer_degree(0, 1, 1), std::invalid_argument);
}
