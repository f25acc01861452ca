#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "glwidth/affine_bijection.hpp"
#include "glwidth/coeff_rule.hpp"
#include "glwidth/index_set.hpp"
#include "glwidth/matrix.hpp"
#include "glwidth/vector.hpp"

namespace glwidth {

// A closed expression representing an element of GL(V). Every leaf is
// invertible by construction; application to a basis vector terminates with a
// finitely supported vector, and inverses are formed in closed form.
class Automorphism {
 public:
  enum class Kind { Identity, Finitary, Monomial, Pattern, Block, Compose, Inverse };

  // Leaves ------------------------------------------------------------------
  static Automorphism identity(const Field& f);
  // Acts by the matrix on the listed coordinates (sorted, duplicate-free),
  // identity elsewhere. Column j is the image of the j-th supported vector.
  static Automorphism finitary(const Field& f, std::vector<std::uint64_t> support,
                               FiniteMatrix matrix);
  // e_i -> coeffs(i) * e_{bij(i)} on the source set, identity off it. The
  // bijection must permute its source (source == target as sets).
  static Automorphism monomial(const Field& f, AffineBijection bij, CoeffRule coeffs);
  static Automorphism monomial(const Field& f, AffineBijection bij);
  // Applies blockMatrix to every block of `blockSize` consecutive members of
  // s (in enumeration order), identity off s.
  static Automorphism patternBlock(const Field& f, IndexSet s, FiniteMatrix blockMatrix);
  // Countable block transport: the dyadic partition of `base` carries, in
  // part n, the automorphism rule(n) transported from `reference` via the
  // canonical bijection. rule(n) = table[n] for n < |table|, then the
  // periodic tail (identity when the tail is empty).
  static Automorphism blockTransport(const Field& f, IndexSet base, IndexSet reference,
                                     std::vector<Automorphism> table,
                                     std::vector<Automorphism> tailPeriod);
  // Nodes -------------------------------------------------------------------
  // compose({f, g}) applies g first, then f (the paper's left-action order).
  static Automorphism compose(std::vector<Automorphism> factors);
  static Automorphism inverseNode(Automorphism inner);

  // Evaluation --------------------------------------------------------------
  Vector applyToBasis(std::uint64_t i) const;
  Vector applyTo(const Vector& v) const;
  Automorphism inverse() const;  // closed form, eager

  const Field& field() const { return field_; }
  Kind kind() const;

  // Structure accessors (valid for the matching kind).
  const std::vector<std::uint64_t>& finSupport() const;
  const FiniteMatrix& finMatrix() const;
  const AffineBijection& monoBijection() const;
  const CoeffRule& monoCoeffs() const;
  const IndexSet& patternSet() const;
  const FiniteMatrix& patternMatrix() const;
  const IndexSet& blockBase() const;
  const IndexSet& blockReference() const;
  const std::vector<Automorphism>& blockTable() const;
  const std::vector<Automorphism>& blockTail() const;
  const std::vector<Automorphism>& composeFactors() const;
  const Automorphism& inverseInner() const;

  std::size_t nodeCount() const;
  std::string str() const;

 private:
  struct Node;
  Automorphism(Field f, std::shared_ptr<const Node> n) : field_(f), node_(std::move(n)) {}

  Field field_;
  std::shared_ptr<const Node> node_;
};

// Verified-equality report: agreement of two automorphisms on e_0..e_n.
struct AgreeReport {
  bool agree = true;
  std::uint64_t witness = 0;  // least disagreeing index when !agree
  Vector left, right;
};

AgreeReport agreeToDepth(const Automorphism& a, const Automorphism& b, std::uint64_t n);

// apply(a, e_i) == e_i for every member i <= n of s.
bool fixesPointwiseToDepth(const Automorphism& a, const IndexSet& s, std::uint64_t n);
// apply(a, e_i) and apply(a^-1, e_i) are supported inside s for every member
// i <= n of s.
bool stabilizesToDepth(const Automorphism& a, const IndexSet& s, std::uint64_t n);

// b-hat o a o b-hat^-1 where b-hat extends b: s -> t by the canonical
// bijection between the complements. Errc::OverlapUnresolved when the
// complements differ in kind.
Automorphism transport(const Automorphism& a, const AffineBijection& b);

// The standard involution of the span of `ambient`: swaps the even- and
// odd-rank members in enumeration order (e_{2i} <-> e_{2i+1} on the naturals).
Automorphism standardInvolution(const Field& f, const IndexSet& ambient);

}  // namespace glwidth
