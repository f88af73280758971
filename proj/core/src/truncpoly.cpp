#include "linorbit/truncpoly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace linorbit {

RingPtr Ring::make(std::vector<VarSpec> vars) {
  if (vars.size() > kMaxVars)
    throw std::invalid_argument("Ring: at most " + std::to_string(kMaxVars) + " generators");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.name.empty()) throw std::invalid_argument("Ring: empty generator name");
    if (!seen.insert(v.name).second)
      throw std::invalid_argument("Ring: duplicate generator name '" + v.name + "'");
    if (v.cap == 0) throw std::invalid_argument("Ring: cap must be >= 1");
  }
  return RingPtr(new Ring(std::move(vars)));
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Ring::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("Ring: unknown variable '" + std::string(name) + "'");
}

std::uint32_t Ring::nilpotency_bound() const {
  std::uint32_t b = 1;
  for (const auto& v : vars_)
    if (v.cap != kUncapped) b += v.cap - 1;
  return b;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db;
  return a < b;
}

namespace {

Exponents zero_expts() {
  Exponents e{};
  e.fill(0);
  return e;
}

} // namespace

TruncPoly TruncPoly::zero(RingPtr ring) {
  TruncPoly p;
  p.ring_ = std::move(ring);
  return p;
}

TruncPoly TruncPoly::constant(RingPtr ring, Rational c) {
  TruncPoly p = zero(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(zero_expts(), std::move(c));
  return p;
}

TruncPoly TruncPoly::generator(RingPtr ring, std::string_view name) {
  const std::size_t idx = ring->index_of(name);
  TruncPoly p = zero(std::move(ring));
  Exponents e = zero_expts();
  e[idx] = 1;
  if (p.ring_->var(idx).cap > 1) p.terms_.emplace(e, Rational(1));
  return p;
}

TruncPoly TruncPoly::monomial(RingPtr ring, const std::map<std::string, std::uint32_t>& expts,
                              Rational c) {
  TruncPoly p = zero(std::move(ring));
  Exponents e = zero_expts();
  for (const auto& [name, k] : expts) e[p.ring_->index_of(name)] = k;
  p.insert_truncated(e, std::move(c));
  return p;
}

bool TruncPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == zero_expts();
}

Rational TruncPoly::constant_term() const {
  auto it = terms_.find(zero_expts());
  return it == terms_.end() ? Rational(0) : it->second;
}

void TruncPoly::require_same_ring(const TruncPoly& a, const TruncPoly& b) {
  if (a.ring_ != b.ring_) throw std::invalid_argument("TruncPoly: ring mismatch");
}

void TruncPoly::insert_truncated(const Exponents& e, Rational c) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < ring_->arity(); ++i) {
    const auto cap = ring_->var(i).cap;
    if (cap != kUncapped && e[i] >= cap) return;
  }
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) {
  TruncPoly::require_same_ring(a, b);
  TruncPoly out = a;
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = out.terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

TruncPoly TruncPoly::operator-() const {
  TruncPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

TruncPoly operator-(const TruncPoly& a, const TruncPoly& b) { return a + (-b); }

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
  TruncPoly::require_same_ring(a, b);
  TruncPoly out = TruncPoly::zero(a.ring_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{};
      bool dead = false;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        e[i] = ea[i] + eb[i];
        if (i < a.ring_->arity()) {
          const auto cap = a.ring_->var(i).cap;
          if (cap != kUncapped && e[i] >= cap) {
            dead = true;
            break;
          }
        }
      }
      if (dead) continue;
      Rational prod = ca * cb;
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        out.terms_.emplace(e, std::move(prod));
      } else {
        it->second += prod;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

TruncPoly operator*(const TruncPoly& a, const Rational& c) {
  if (c.is_zero()) return TruncPoly::zero(a.ring_);
  TruncPoly out = a;
  for (auto& [e, v] : out.terms_) v *= c;
  return out;
}

bool operator==(const TruncPoly& a, const TruncPoly& b) {
  TruncPoly::require_same_ring(a, b);
  return a.terms_ == b.terms_;
}

TruncPoly TruncPoly::pow(std::uint32_t e) const {
  TruncPoly out = constant(ring_, Rational(1));
  TruncPoly base = *this;
  while (e != 0) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

TruncPoly TruncPoly::inv_unit() const {
  const Rational c = constant_term();
  if (c.is_zero()) throw std::invalid_argument("inv_unit: zero constant term");
  const Rational cinv = c.reciprocal();
  // u = a/c - 1 must be nilpotent: every monomial of u needs a finitely
  // capped variable, otherwise the series cannot terminate.
  TruncPoly u = (*this * cinv) - constant(ring_, Rational(1));
  for (const auto& [e, coef] : u.terms_) {
    (void)coef;
    bool capped = false;
    for (std::size_t i = 0; i < ring_->arity(); ++i)
      if (e[i] > 0 && ring_->var(i).cap != kUncapped) capped = true;
    if (!capped)
      throw std::invalid_argument("inv_unit: inversion requires finite caps on all generators present");
  }
  TruncPoly out = constant(ring_, Rational(1));
  TruncPoly power = constant(ring_, Rational(1));
  const std::uint32_t bound = ring_->nilpotency_bound();
  for (std::uint32_t j = 1; j <= bound; ++j) {
    power = power * u;
    if (power.is_zero()) break;
    out = (j % 2 == 0) ? out + power : out - power;
  }
  return out * cinv;
}

TruncPoly TruncPoly::exp_trunc(std::uint32_t through) const {
  if (!constant_term().is_zero())
    throw std::invalid_argument("exp_trunc: nonzero constant term");
  TruncPoly out = constant(ring_, Rational(1));
  TruncPoly power = constant(ring_, Rational(1));
  for (std::uint32_t j = 1; j <= through; ++j) {
    power = power * *this;
    if (power.is_zero()) break;
    out += power * factorial(j).reciprocal();
  }
  return out;
}

TruncPoly TruncPoly::partial(std::string_view var, std::uint32_t order) const {
  const std::size_t idx = ring_->index_of(var);
  TruncPoly cur = *this;
  for (std::uint32_t round = 0; round < order; ++round) {
    TruncPoly next = zero(ring_);
    for (const auto& [e, c] : cur.terms_) {
      if (e[idx] == 0) continue;
      Exponents d = e;
      d[idx] -= 1;
      next.insert_truncated(d, c * Rational(static_cast<std::int64_t>(e[idx])));
    }
    cur = std::move(next);
  }
  return cur;
}

TruncPoly TruncPoly::substitute(const std::map<std::string, Rational>& assignments) const {
  std::array<std::optional<Rational>, kMaxVars> values;
  for (const auto& [name, v] : assignments) values[ring_->index_of(name)] = v;
  TruncPoly out = zero(ring_);
  for (const auto& [e, c] : terms_) {
    Exponents d = e;
    Rational scale = c;
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      if (values[i] && d[i] > 0) {
        scale *= values[i]->pow(static_cast<std::int64_t>(d[i]));
        d[i] = 0;
      }
    }
    out.insert_truncated(d, std::move(scale));
  }
  return out;
}

Rational TruncPoly::coeff(const std::map<std::string, std::uint32_t>& monomial) const {
  Exponents e = zero_expts();
  for (const auto& [name, k] : monomial) e[ring_->index_of(name)] = k;
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t TruncPoly::degree(std::size_t nvars) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    (void)c;
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < nvars; ++i) t += e[i];
    d = std::max(d, t);
  }
  return d;
}

std::uint32_t TruncPoly::degree() const { return degree(ring_ ? ring_->arity() : 0); }

TruncPoly TruncPoly::graded_piece(std::uint32_t d, std::size_t nvars) const {
  TruncPoly out = zero(ring_);
  for (const auto& [e, c] : terms_) {
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < nvars; ++i) t += e[i];
    if (t == d) out.terms_.emplace(e, c);
  }
  return out;
}

TruncPoly TruncPoly::graded_piece(std::uint32_t d) const {
  return graded_piece(d, ring_ ? ring_->arity() : 0);
}

std::string TruncPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      if (e[i] == 0) continue;
      mono += "*" + ring_->var(i).name;
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    out += c.str() + mono;
  }
  return out;
}

TruncPoly transplant(const TruncPoly& p, const RingPtr& target) {
  TruncPoly out = TruncPoly::zero(target);
  std::array<std::optional<std::size_t>, kMaxVars> where;
  const auto& src = p.ring();
  for (std::size_t i = 0; i < src->arity(); ++i) where[i] = target->find(src->var(i).name);
  bool truncated = false;
  p.for_each_term([&](const Exponents& e, const Rational& c) {
    Exponents d{};
    d.fill(0);
    for (std::size_t i = 0; i < src->arity(); ++i) {
      if (e[i] == 0) continue;
      if (!where[i])
        throw std::invalid_argument("transplant: variable '" + src->var(i).name +
                                    "' missing from target ring");
      const auto cap = target->var(*where[i]).cap;
      if (cap != kUncapped && e[i] >= cap) {
        truncated = true;
        return;
      }
      d[*where[i]] = e[i];
    }
    std::map<std::string, std::uint32_t> mono;
    for (std::size_t i = 0; i < target->arity(); ++i)
      if (d[i] > 0) mono[target->var(i).name] = d[i];
    out += TruncPoly::monomial(target, mono, c);
  });
  if (truncated)
    throw std::invalid_argument("transplant: term violates a tighter cap in the target ring");
  return out;
}

} // namespace linorbit
