#include "glwidth/matrix.hpp"

#include <algorithm>
#include <map>

namespace glwidth {

FiniteMatrix FiniteMatrix::identity(std::size_t n, const Field& f) {
  FiniteMatrix m(n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

FiniteMatrix FiniteMatrix::operator*(const FiniteMatrix& o) const {
  FiniteMatrix r(n_, field_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Scalar& a = at(i, k);
      if (a.isZero()) continue;
      for (std::size_t j = 0; j < n_; ++j) r.at(i, j) = r.at(i, j) + a * o.at(k, j);
    }
  return r;
}

std::vector<Scalar> FiniteMatrix::applyToColumn(const std::vector<Scalar>& x) const {
  std::vector<Scalar> y(n_, Scalar::zero(field_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (x[j].isZero()) continue;
      y[i] = y[i] + at(i, j) * x[j];
    }
  return y;
}

bool FiniteMatrix::isIdentity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j ? !at(i, j).isOne() : !at(i, j).isZero()) return false;
    }
  return true;
}

FiniteMatrix matInverse(const FiniteMatrix& m) {
  const std::size_t n = m.dim();
  const Field& f = m.field();
  FiniteMatrix a = m;
  FiniteMatrix inv = FiniteMatrix::identity(n, f);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t row = col; row < n; ++row)
      if (!a.at(row, col).isZero()) {
        pivot = row;
        break;
      }
    if (pivot == n) fail(Errc::Singular, "zero pivot column " + std::to_string(col));
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    Scalar s = a.at(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) * s;
      inv.at(col, j) = inv.at(col, j) * s;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      Scalar c = a.at(row, col);
      if (c.isZero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(row, j) = a.at(row, j) - c * a.at(col, j);
        inv.at(row, j) = inv.at(row, j) - c * inv.at(col, j);
      }
    }
  }
  return inv;
}

bool matInvertible(const FiniteMatrix& m) {
  try {
    matInverse(m);
    return true;
  } catch (const Error& e) {
    if (e.code() == Errc::Singular) return false;
    throw;
  }
}

std::vector<std::size_t> selectBasisPositions(const std::vector<Vector>& spanning,
                                              const std::vector<std::uint64_t>& ambient,
                                              const Field& f) {
  // Incremental elimination: keep reduced rows keyed by their pivot index.
  std::map<std::uint64_t, Vector> reduced;
  std::vector<std::size_t> picks;
  for (std::size_t pos = 0; pos < spanning.size(); ++pos) {
    Vector v = spanning[pos];
    for (const auto& [pivot, row] : reduced) {
      Scalar c = v.coeff(pivot, f);
      if (!c.isZero()) v = v - row.scaled(c);
    }
    if (v.isZero()) continue;
    std::uint64_t pivot = v.entries().begin()->first;
    Vector row = v.scaled(v.entries().begin()->second.inverse());
    reduced.emplace(pivot, row);
    picks.push_back(pos);
    if (picks.size() == ambient.size()) break;
  }
  if (picks.size() != ambient.size())
    fail(Errc::NotSpanning, "family spans a subspace of dimension " + std::to_string(picks.size()) +
                                " < " + std::to_string(ambient.size()));
  return picks;
}

std::vector<Vector> selectBasis(const std::vector<Vector>& spanning,
                                const std::vector<std::uint64_t>& ambient, const Field& f) {
  std::vector<Vector> out;
  for (std::size_t pos : selectBasisPositions(spanning, ambient, f)) out.push_back(spanning[pos]);
  return out;
}

}  // namespace glwidth
