#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "glwidth/affine_bijection.hpp"
#include "glwidth/scalar.hpp"

namespace glwidth {

// An eventually periodic rule index -> nonzero scalar: a finite exception
// table over a periodic base table. Closed under pointwise product, inversion
// and pullback along piecewise-affine maps, which keeps monomial-map inverses
// and compositions in closed form.
class CoeffRule {
 public:
  explicit CoeffRule(const Field& f)
      : field_(f), period_(1), values_{Scalar::one(f)} {}

  static CoeffRule constant(const Scalar& c);
  static CoeffRule periodic(const Field& f, std::vector<Scalar> values,
                            std::map<std::uint64_t, Scalar> exceptions = {});

  const Field& field() const { return field_; }
  std::uint64_t period() const { return period_; }
  const std::vector<Scalar>& values() const { return values_; }
  const std::map<std::uint64_t, Scalar>& exceptions() const { return exceptions_; }

  Scalar at(std::uint64_t i) const;
  bool isAllOnes() const;

  CoeffRule inverted() const;                       // i -> at(i)^-1
  CoeffRule times(const CoeffRule& o) const;        // pointwise product
  CoeffRule pulledBackThrough(const AffineBijection& f) const;  // i -> at(f(i))

  bool operator==(const CoeffRule& o) const;

 private:
  Field field_;
  std::uint64_t period_;
  std::vector<Scalar> values_;
  std::map<std::uint64_t, Scalar> exceptions_;
};

}  // namespace glwidth
