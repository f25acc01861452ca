#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "glwidth/scalar.hpp"

namespace glwidth {

class IndexSet;

// A finitely supported coordinate vector over the basis e_0, e_1, ...
// Zero coefficients are never stored, so map equality is vector equality.
class Vector {
 public:
  Vector() = default;

  static Vector zero() { return Vector(); }
  static Vector basis(std::uint64_t i, const Field& f) {
    Vector v;
    v.entries_.emplace(i, Scalar::one(f));
    return v;
  }

  bool isZero() const { return entries_.empty(); }
  const std::map<std::uint64_t, Scalar>& entries() const { return entries_; }

  Scalar coeff(std::uint64_t i, const Field& f) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? Scalar::zero(f) : it->second;
  }

  void addTerm(std::uint64_t i, const Scalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = entries_.emplace(i, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.isZero()) entries_.erase(it);
    }
  }

  Vector operator+(const Vector& o) const {
    Vector r = *this;
    for (const auto& [i, c] : o.entries_) r.addTerm(i, c);
    return r;
  }

  Vector operator-(const Vector& o) const {
    Vector r = *this;
    for (const auto& [i, c] : o.entries_) r.addTerm(i, -c);
    return r;
  }

  Vector scaled(const Scalar& c) const {
    Vector r;
    if (c.isZero()) return r;
    for (const auto& [i, v] : entries_) r.entries_.emplace(i, v * c);
    return r;
  }

  // Keeps exactly the coordinates whose index lies in s.
  Vector projectedTo(const IndexSet& s) const;
  bool supportInside(const IndexSet& s) const;

  bool operator==(const Vector& o) const { return entries_ == o.entries_; }
  bool operator!=(const Vector& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::map<std::uint64_t, Scalar> entries_;
};

}  // namespace glwidth
