#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "glwidth/errors.hpp"

namespace glwidth {

// The coefficient field: the rationals (p == 0) or a prime field F_p.
// Factorization contexts additionally reject p == 2; plain algebra admits it
// so the finite width oracle and the CHAR_TWO guards can be exercised.
class Field {
 public:
  Field() : p_(0) {}

  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool isRational() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string describe() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

// An exact field element. Rationals are GMP-backed and kept in lowest terms;
// prime-field elements are residues in [0, p).
class Scalar {
 public:
  Scalar() : p_(0), rep_(0) {}

  static Scalar zero(const Field& f) { return ofInt(f, 0); }
  static Scalar one(const Field& f) { return ofInt(f, 1); }
  static Scalar ofInt(const Field& f, long long n);
  static Scalar rational(long long num, long long den);
  static Scalar fromMpq(mpq_class q);

  const Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
  bool isZero() const { return p_ == 0 ? rat_ == 0 : rep_ == 0; }
  bool isOne() const { return p_ == 0 ? rat_ == 1 : rep_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // Errc::Singular on zero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;
  static Scalar parse(const Field& f, const std::string& text);

  const mpq_class& rationalValue() const { return rat_; }
  std::uint64_t primeResidue() const { return rep_; }

 private:
  void checkSameField(const Scalar& o) const;

  std::uint64_t p_;    // 0 = rationals
  mpq_class rat_;      // used when p_ == 0
  std::uint64_t rep_;  // used when p_ > 0
};

}  // namespace glwidth
