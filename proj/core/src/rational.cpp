#include "linorbit/rational.hpp"

#include <cctype>

namespace linorbit {

Rational::Rational(std::int64_t num, std::int64_t den)
    : v_(static_cast<long>(num), static_cast<long>(den)) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) : v_(std::move(num), std::move(den)) {
  if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
  v_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!digits_ok(text)) return std::nullopt;
    return Rational(mpz_class(std::string(text)), mpz_class(1));
  }
  const auto ns = text.substr(0, slash);
  const auto ds = text.substr(slash + 1);
  if (!digits_ok(ns) || !digits_ok(ds)) return std::nullopt;
  mpz_class den{std::string(ds)};
  if (den == 0) return std::nullopt;
  return Rational(mpz_class{std::string(ns)}, std::move(den));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::pow(std::int64_t e) const {
  if (e < 0) return reciprocal().pow(-e);
  Rational base = *this;
  Rational out(1);
  auto k = static_cast<std::uint64_t>(e);
  while (k != 0) {
    if (k & 1u) out *= base;
    base *= base;
    k >>= 1u;
  }
  return out;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::invalid_argument("Rational: reciprocal of zero");
  return Rational(den(), num());
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational factorial(std::uint32_t n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(std::move(f), mpz_class(1));
}

Rational binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(std::move(b), mpz_class(1));
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::invalid_argument("GaussianRational: division by zero");
  const Rational norm = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / norm, (a.im * b.re - a.re * b.im) / norm};
}

namespace {

// One summand of the a/b+c/d*i syntax: a signed rational, optionally times i.
struct GaussTerm {
  Rational value;
  bool imaginary = false;
};

std::optional<GaussTerm> parse_gauss_term(std::string_view t, bool negate) {
  GaussTerm out;
  if (t == "i") {
    out.value = Rational(1);
    out.imaginary = true;
  } else if (t.size() > 2 && t.substr(t.size() - 2) == "*i") {
    auto v = Rational::parse(t.substr(0, t.size() - 2));
    if (!v) return std::nullopt;
    out.value = *v;
    out.imaginary = true;
  } else {
    auto v = Rational::parse(t);
    if (!v) return std::nullopt;
    out.value = *v;
  }
  if (negate) out.value = -out.value;
  return out;
}

} // namespace

std::optional<GaussianRational> GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return std::nullopt;

  GaussianRational out;
  std::size_t pos = 0;
  bool seen_real = false, seen_imag = false;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = (s[pos] == '-');
      ++pos;
    } else if (pos != 0) {
      return std::nullopt;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    auto term = parse_gauss_term(std::string_view(s).substr(pos, end - pos), neg);
    if (!term) return std::nullopt;
    if (term->imaginary) {
      if (seen_imag) return std::nullopt;
      seen_imag = true;
      out.im = term->value;
    } else {
      if (seen_real) return std::nullopt;
      seen_real = true;
      out.re = term->value;
    }
    pos = end;
  }
  return out;
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::string s;
  if (!re.is_zero()) s = re.str();
  if (im.sign() > 0 && !s.empty()) s += "+";
  if (im == Rational(-1)) s += "-";
  else if (im != Rational(1)) s += im.str() + "*";
  s += "i";
  return s;
}

} // namespace linorbit
