#include "linorbit/golden.hpp"

#include "linorbit/corrections.hpp"

#include <sstream>

namespace linorbit::golden {

const std::vector<RawTerm>& raw_local_terms() {
  // exponent order: m n q qbar r S
  static const std::vector<RawTerm> terms = {
      {630, 1, 0, 2, 1, 2, 0},  {-630, 1, 0, 1, 2, 2, 0}, {630, 0, 1, 1, 2, 2, 0},
      {420, 1, 1, 2, 1, 1, 1},  {-420, 1, 1, 1, 2, 1, 1}, {420, 0, 2, 1, 2, 1, 1},
      {-210, 2, 0, 2, 0, 2, 1}, {420, 1, 1, 2, 0, 2, 1},  {840, 2, 0, 1, 1, 2, 1},
      {-840, 1, 1, 1, 1, 2, 1}, {420, 0, 2, 1, 1, 2, 1},  {-210, 2, 0, 0, 2, 2, 1},
      {210, 0, 2, 0, 2, 2, 1},  {105, 1, 2, 2, 1, 0, 2},  {-105, 1, 2, 1, 2, 0, 2},
      {105, 0, 3, 1, 2, 0, 2},  {-105, 2, 1, 2, 0, 1, 2}, {210, 1, 2, 2, 0, 1, 2},
      {420, 2, 1, 1, 1, 1, 2},  {-420, 1, 2, 1, 1, 1, 2}, {210, 0, 3, 1, 1, 1, 2},
      {-105, 2, 1, 0, 2, 1, 2}, {105, 0, 3, 0, 2, 1, 2},  {-315, 3, 0, 1, 0, 2, 2},
      {630, 2, 1, 1, 0, 2, 2},  {-315, 1, 2, 1, 0, 2, 2}, {105, 0, 3, 1, 0, 2, 2},
      {315, 3, 0, 0, 1, 2, 2},  {-315, 2, 1, 0, 1, 2, 2}, {105, 0, 3, 0, 1, 2, 2},
      {-21, 2, 2, 2, 0, 0, 3},  {42, 1, 3, 2, 0, 0, 3},   {84, 2, 2, 1, 1, 0, 3},
      {-84, 1, 3, 1, 1, 0, 3},  {42, 0, 4, 1, 1, 0, 3},   {-21, 2, 2, 0, 2, 0, 3},
      {21, 0, 4, 0, 2, 0, 3},   {-126, 3, 1, 1, 0, 1, 3}, {252, 2, 2, 1, 0, 1, 3},
      {-126, 1, 3, 1, 0, 1, 3}, {42, 0, 4, 1, 0, 1, 3},   {126, 3, 1, 0, 1, 1, 3},
      {-126, 2, 2, 0, 1, 1, 3}, {42, 0, 4, 0, 1, 1, 3},   {-126, 4, 0, 0, 0, 2, 3},
      {252, 3, 1, 0, 0, 2, 3},  {-126, 2, 2, 0, 0, 2, 3}, {21, 0, 4, 0, 0, 2, 3},
      {-21, 3, 2, 1, 0, 0, 4},  {42, 2, 3, 1, 0, 0, 4},   {-21, 1, 4, 1, 0, 0, 4},
      {7, 0, 5, 1, 0, 0, 4},    {21, 3, 2, 0, 1, 0, 4},   {-21, 2, 3, 0, 1, 0, 4},
      {7, 0, 5, 0, 1, 0, 4},    {-42, 4, 1, 0, 0, 1, 4},  {84, 3, 2, 0, 0, 1, 4},
      {-42, 2, 3, 0, 0, 1, 4},  {7, 0, 5, 0, 0, 1, 4},    {-6, 4, 2, 0, 0, 0, 5},
      {12, 3, 3, 0, 0, 0, 5},   {-6, 2, 4, 0, 0, 0, 5},   {1, 0, 6, 0, 0, 0, 5},
  };
  return terms;
}

TruncPoly raw_local_polynomial(std::int64_t m, std::int64_t n) {
  const RingPtr ring = make_assembly_ring(true);
  TruncPoly out = TruncPoly::zero(ring);
  for (const auto& t : raw_local_terms()) {
    const Rational coeff = Rational(t.coeff) * Rational(m).pow(t.m) * Rational(n).pow(t.n);
    out += TruncPoly::monomial(
        ring,
        {{"q", static_cast<std::uint32_t>(t.q)},
         {"qbar", static_cast<std::uint32_t>(t.qbar)},
         {"r", static_cast<std::uint32_t>(t.r)},
         {"S", static_cast<std::uint32_t>(t.S) + 2}}, // the S^2 prefactor
        coeff * Rational(n));                          // the n prefactor
  }
  return out;
}

const Pyramid& pyramid_cubic() {
  // [jmu][jmubar][jlambda]
  static const Pyramid p = {{
      {{{24, 36, 20}, {72, 32, 12}, {32, 12, 4}}},
      {{{18, 14, 6}, {32, 12, 4}, {18, 6, 2}}},
      {{{5, 3, 1}, {9, 3, 1}, {9, 3, 1}}},
  }};
  return p;
}

const Pyramid& pyramid_4_7() {
  static const Pyramid p = {{
      {{{39792, 5916, 860}, {6924, 1004, 144}, {780, 112, 16}}},
      {{{5160, 752, 108}, {1172, 168, 24}, {196, 28, 4}}},
      {{{437, 63, 9}, {147, 21, 3}, {49, 7, 1}}},
  }};
  return p;
}

const std::array<std::int64_t, 8>& conic_predegree() {
  static const std::array<std::int64_t, 8> c = {1, 2, 4, 8, 16, 8, 0, 0};
  return c;
}

namespace {

std::string render_raw_local_text() {
  std::ostringstream os;
  os << "# Raw total local correction for a type (m,n) curve, prior to the\n"
        "# structured rewriting. The full correction is n*S^2 times the sum of\n"
        "# the terms below. Columns: coeff, exponents of m n q qbar r S.\n";
  for (const auto& t : raw_local_terms())
    os << t.coeff << ' ' << t.m << ' ' << t.n << ' ' << t.q << ' ' << t.qbar << ' ' << t.r << ' '
       << t.S << '\n';
  return os.str();
}

std::string render_pyramid_text(const Pyramid& p, std::string_view title) {
  std::ostringstream os;
  os << "# " << title << "\n";
  os << "# Columns: jmu jmubar jlambda count, where the count is the number of\n"
        "# curves with jmu points on mu, jmubar points on mubar, jlambda points\n"
        "# on lambda and 7-jmu-jmubar-jlambda further general points.\n";
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j)
      for (int k = 0; k <= 2; ++k) os << i << ' ' << j << ' ' << k << ' ' << p[i][j][k] << '\n';
  return os.str();
}

} // namespace

std::string_view raw_local_text() {
  static const std::string text = render_raw_local_text();
  return text;
}

std::string_view pyramid_cubic_text() {
  static const std::string text = render_pyramid_text(
      pyramid_cubic(), "Characteristic-number pyramid for cuspidal cubics, type (2,3).");
  return text;
}

std::string_view pyramid_4_7_text() {
  static const std::string text =
      render_pyramid_text(pyramid_4_7(), "Characteristic-number pyramid for the type (4,7) curve.");
  return text;
}

std::string_view conic_predegree_text() {
  static const std::string text =
      "# Adjusted predegree coefficients c_0..c_7 of a smooth conic.\n"
      "1 2 4 8 16 8 0 0\n";
  return text;
}

} // namespace linorbit::golden
