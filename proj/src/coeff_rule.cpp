#include "glwidth/coeff_rule.hpp"

#include <numeric>

namespace glwidth {

namespace {
constexpr std::uint64_t kPeriodCap = 1 << 20;
}

CoeffRule CoeffRule::constant(const Scalar& c) {
  if (c.isZero()) fail(Errc::Unsupported, "coefficient rules must be nonzero");
  CoeffRule r(c.field());
  r.values_ = {c};
  return r;
}

CoeffRule CoeffRule::periodic(const Field& f, std::vector<Scalar> values,
                              std::map<std::uint64_t, Scalar> exceptions) {
  if (values.empty()) fail(Errc::Unsupported, "empty coefficient period");
  for (const auto& v : values)
    if (v.isZero()) fail(Errc::Unsupported, "coefficient rules must be nonzero");
  for (const auto& [i, v] : exceptions)
    if (v.isZero()) fail(Errc::Unsupported, "coefficient rules must be nonzero");
  CoeffRule r(f);
  r.period_ = values.size();
  r.values_ = std::move(values);
  r.exceptions_ = std::move(exceptions);
  return r;
}

Scalar CoeffRule::at(std::uint64_t i) const {
  auto it = exceptions_.find(i);
  if (it != exceptions_.end()) return it->second;
  return values_[i % period_];
}

bool CoeffRule::isAllOnes() const {
  for (const auto& v : values_)
    if (!v.isOne()) return false;
  for (const auto& [i, v] : exceptions_)
    if (!v.isOne()) return false;
  return true;
}

CoeffRule CoeffRule::inverted() const {
  CoeffRule r(field_);
  r.period_ = period_;
  r.values_.clear();
  for (const auto& v : values_) r.values_.push_back(v.inverse());
  for (const auto& [i, v] : exceptions_) r.exceptions_.emplace(i, v.inverse());
  return r;
}

CoeffRule CoeffRule::times(const CoeffRule& o) const {
  std::uint64_t p = std::lcm(period_, o.period_);
  if (p > kPeriodCap) fail(Errc::Unsupported, "coefficient period blow-up");
  CoeffRule r(field_);
  r.period_ = p;
  r.values_.clear();
  r.values_.reserve(p);
  for (std::uint64_t i = 0; i < p; ++i) r.values_.push_back(values_[i % period_] * o.values_[i % o.period_]);
  std::map<std::uint64_t, Scalar> exc;
  for (const auto& [i, v] : exceptions_) exc.emplace(i, v * o.at(i));
  for (const auto& [i, v] : o.exceptions_) {
    auto it = exceptions_.find(i);
    if (it == exceptions_.end()) exc.emplace(i, at(i) * v);
  }
  r.exceptions_ = std::move(exc);
  return r;
}

CoeffRule CoeffRule::pulledBackThrough(const AffineBijection& f) const {
  // Result rule r with r.at(i) = at(f(i)) for i in f's source; 1 elsewhere.
  // Each affine piece x -> (a x + b)/d contributes periodicity: stepping x by
  // d * period * m keeps f(x) in the same residue class mod period.
  std::uint64_t q = 1;
  for (const auto& p : f.pieces()) {
    std::uint64_t stepPeriod = p.domain.modulus() * period_ * static_cast<std::uint64_t>(p.den);
    q = std::lcm(q, stepPeriod);
    if (q > kPeriodCap) fail(Errc::Unsupported, "coefficient period blow-up in pullback");
  }
  // Indices whose pattern may be irregular: piece-domain corrections, the
  // exception keys of this rule pulled back, and f's own exceptions.
  std::uint64_t bound = 0;
  for (const auto& p : f.pieces()) {
    if (!p.domain.added().empty()) bound = std::max(bound, p.domain.added().back() + 1);
    if (!p.domain.removed().empty()) bound = std::max(bound, p.domain.removed().back() + 1);
  }
  for (const auto& [k, v] : f.exceptions()) bound = std::max(bound, k + 1);
  AffineBijection inv = f.inverse();
  for (const auto& [i, v] : exceptions_) {
    if (inv.definedAt(i)) {
      auto x = inv.tryApply(i);
      if (x) bound = std::max(bound, *x + 1);
    }
  }
  bound = ((bound + q - 1) / q) * q;
  CoeffRule r(field_);
  r.period_ = q;
  r.values_.assign(q, Scalar::one(field_));
  // Sample one full period beyond every irregularity.
  for (std::uint64_t off = 0; off < q; ++off) {
    std::uint64_t x = bound + off;
    auto y = f.tryApply(x);
    if (y) r.values_[x % q] = at(*y);
  }
  for (std::uint64_t x = 0; x < bound; ++x) {
    auto y = f.tryApply(x);
    Scalar v = y ? at(*y) : Scalar::one(field_);
    if (!(v == r.values_[x % q])) r.exceptions_.emplace(x, v);
  }
  return r;
}

bool CoeffRule::operator==(const CoeffRule& o) const {
  std::uint64_t p = std::lcm(period_, o.period_);
  if (p > kPeriodCap) return false;
  for (std::uint64_t i = 0; i < p; ++i)
    if (!(values_[i % period_] == o.values_[i % o.period_])) return false;
  auto allKeys = exceptions_;
  for (const auto& [k, v] : o.exceptions_) allKeys.emplace(k, v);
  for (const auto& [k, v] : allKeys)
    if (!(at(k) == o.at(k))) return false;
  return true;
}

}  // namespace glwidth
