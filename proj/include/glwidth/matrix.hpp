#pragma once

#include <cstdint>
#include <vector>

#include "glwidth/scalar.hpp"
#include "glwidth/vector.hpp"

namespace glwidth {

// A dense square matrix of exact scalars. Column j holds the image of the
// j-th basis vector of the ambient block, so application is matrix * column.
class FiniteMatrix {
 public:
  FiniteMatrix() : n_(0) {}
  FiniteMatrix(std::size_t n, const Field& f)
      : n_(n), field_(f), data_(n * n, Scalar::zero(f)) {}

  static FiniteMatrix identity(std::size_t n, const Field& f);

  std::size_t dim() const { return n_; }
  const Field& field() const { return field_; }

  const Scalar& at(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
  Scalar& at(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }

  FiniteMatrix operator*(const FiniteMatrix& o) const;
  std::vector<Scalar> applyToColumn(const std::vector<Scalar>& x) const;

  bool isIdentity() const;
  bool operator==(const FiniteMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

 private:
  std::size_t n_;
  Field field_;
  std::vector<Scalar> data_;
};

// Exact Gauss-Jordan inverse. Throws Errc::Singular when elimination meets a
// zero pivot column.
FiniteMatrix matInverse(const FiniteMatrix& m);

bool matInvertible(const FiniteMatrix& m);

// Greedy extraction of a basis from a spanning family of vectors supported on
// the finite index set `ambient`, in input order. Throws Errc::NotSpanning if
// the family fails to span the coordinate subspace on `ambient`.
std::vector<Vector> selectBasis(const std::vector<Vector>& spanning,
                                const std::vector<std::uint64_t>& ambient, const Field& f);

// Positions (into `spanning`) that the greedy pass selects.
std::vector<std::size_t> selectBasisPositions(const std::vector<Vector>& spanning,
                                              const std::vector<std::uint64_t>& ambient,
                                              const Field& f);

}  // namespace glwidth
