#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linorbit/rational.hpp"

namespace linorbit {

/// Cap value meaning "no nilpotency relation for this generator".
inline constexpr std::uint32_t kUncapped = std::numeric_limits<std::uint32_t>::max();

/// Rings stay tiny (a handful of named classes plus formal multiplicities),
/// so exponent vectors are dense and fixed width.
inline constexpr std::size_t kMaxVars = 8;

struct VarSpec {
  std::string name;
  std::uint32_t cap = kUncapped; // generator^cap == 0 when finite
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// A truncated multivariate polynomial ring over the rationals: an ordered
/// list of named generators, each optionally nilpotent (generator^cap = 0).
/// All elements constructed through one handle share variable order and caps;
/// elements of distinct handles never mix.
class Ring {
public:
  static RingPtr make(std::vector<VarSpec> vars);

  std::size_t arity() const { return vars_.size(); }
  const VarSpec& var(std::size_t i) const { return vars_[i]; }
  const std::vector<VarSpec>& vars() const { return vars_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const; // throws on unknown variable

  /// 1 + sum over finitely capped generators of (cap-1): no product of that
  /// many nilpotent-bearing monomials can survive truncation.
  std::uint32_t nilpotency_bound() const;

private:
  explicit Ring(std::vector<VarSpec> vars) : vars_(std::move(vars)) {}
  std::vector<VarSpec> vars_;
};

using Exponents = std::array<std::uint32_t, kMaxVars>;

/// Graded-lexicographic term order on the declared variable order; gives the
/// canonical storage and serialization order.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Element of a truncated polynomial ring. Immutable value semantics: every
/// operation returns a fresh element, re-truncated eagerly, with no zero
/// coefficients and no exponent at or above its generator's finite cap.
class TruncPoly {
public:
  TruncPoly() = default; // zero of the empty ring
  static TruncPoly zero(RingPtr ring);
  static TruncPoly constant(RingPtr ring, Rational c);
  static TruncPoly generator(RingPtr ring, std::string_view name);
  static TruncPoly monomial(RingPtr ring, const std::map<std::string, std::uint32_t>& expts,
                            Rational c);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  Rational constant_term() const;

  friend TruncPoly operator+(const TruncPoly& a, const TruncPoly& b);
  friend TruncPoly operator-(const TruncPoly& a, const TruncPoly& b);
  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
  TruncPoly operator-() const;
  friend TruncPoly operator*(const TruncPoly& a, const Rational& c);
  friend TruncPoly operator*(const Rational& c, const TruncPoly& a) { return a * c; }
  friend bool operator==(const TruncPoly& a, const TruncPoly& b);
  friend bool operator!=(const TruncPoly& a, const TruncPoly& b) { return !(a == b); }

  TruncPoly& operator+=(const TruncPoly& o) { *this = *this + o; return *this; }
  TruncPoly& operator-=(const TruncPoly& o) { *this = *this - o; return *this; }
  TruncPoly& operator*=(const TruncPoly& o) { *this = *this * o; return *this; }

  /// pow(a, 0) == 1, including for a == 0.
  TruncPoly pow(std::uint32_t e) const;

  /// Multiplicative inverse of a unit. Requires a nonzero constant term and
  /// finite caps on every variable occurring in the element, so the geometric
  /// series terminates.
  TruncPoly inv_unit() const;

  /// Sum of a^j / j! for j = 0..through. Requires zero constant term.
  TruncPoly exp_trunc(std::uint32_t through) const;

  /// Exact iterated partial derivative.
  TruncPoly partial(std::string_view var, std::uint32_t order = 1) const;

  /// Exact evaluation of the given variables; unassigned variables remain
  /// formal. The result lives in the same ring.
  TruncPoly substitute(const std::map<std::string, Rational>& assignments) const;

  /// Coefficient of the monomial; 0 for monomials absent or truncated away.
  Rational coeff(const std::map<std::string, std::uint32_t>& monomial) const;

  /// Max total degree over the first `nvars` variables (0 for the zero
  /// polynomial). The prefix convention is what lets a context carry formal
  /// scalar multiplicities after its geometric generators.
  std::uint32_t degree(std::size_t nvars) const;
  std::uint32_t degree() const;

  /// Piece whose total degree over the first `nvars` variables equals d.
  TruncPoly graded_piece(std::uint32_t d, std::size_t nvars) const;
  TruncPoly graded_piece(std::uint32_t d) const;

  /// Canonical text form: terms in graded-lex order joined by " + ",
  /// each "coeff*v1^e1*...", fractions as "p/q".
  std::string str() const;

  template <class F>
  void for_each_term(F&& f) const {
    for (const auto& [e, c] : terms_) f(e, c);
  }

private:
  void insert_truncated(const Exponents& e, Rational c);
  static void require_same_ring(const TruncPoly& a, const TruncPoly& b);

  RingPtr ring_;
  std::map<Exponents, Rational, GradedLexLess> terms_;
};

/// Moves an element into another ring, matching variables by name. Throws if
/// a variable carrying a nonzero exponent is missing from the target or
/// violates a tighter cap there.
TruncPoly transplant(const TruncPoly& p, const RingPtr& target);

} // namespace linorbit
