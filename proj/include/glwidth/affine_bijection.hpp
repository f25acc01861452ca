#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glwidth/index_set.hpp"

namespace glwidth {

// One affine branch of a piecewise map: x -> (aNum*x + bNum) / den on its
// domain, with aNum, den > 0 and exact division on every domain member.
struct AffinePiece {
  IndexSet domain;
  std::int64_t aNum = 1;
  std::int64_t bNum = 0;
  std::int64_t den = 1;

  std::uint64_t map(std::uint64_t x) const;
  bool exactOn(const IndexSet& d) const;
};

// Exact image of a set under an affine map (set members only; the map must be
// exact and nonnegative on them).
IndexSet affineImage(const IndexSet& s, std::int64_t aNum, std::int64_t bNum, std::int64_t den);

// An injective piecewise-affine map between two index sets: finitely many
// affine pieces with pairwise disjoint domains plus a finite exception table.
// The image of `source` is exactly `target`; inverses and compositions stay
// in closed form.
class AffineBijection {
 public:
  AffineBijection() = default;

  static AffineBijection identityOn(const IndexSet& s);
  // The order-preserving bijection s -> t given by composing the enumerations
  // of s and t. Requires both infinite or both finite with equal size.
  static AffineBijection canonical(const IndexSet& s, const IndexSet& t);
  // Union of bijections with pairwise disjoint sources (and targets).
  static AffineBijection glue(const std::vector<AffineBijection>& parts);
  // The involution exchanging s and t along canonical(s, t).
  static AffineBijection swap(const IndexSet& s, const IndexSet& t);
  static AffineBijection fromPieces(IndexSet source, IndexSet target,
                                    std::vector<AffinePiece> pieces,
                                    std::map<std::uint64_t, std::uint64_t> exceptions);

  const IndexSet& sourceSet() const { return source_; }
  const IndexSet& targetSet() const { return target_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  const std::map<std::uint64_t, std::uint64_t>& exceptions() const { return exceptions_; }

  bool definedAt(std::uint64_t i) const { return source_.contains(i); }
  std::uint64_t apply(std::uint64_t i) const;
  std::optional<std::uint64_t> tryApply(std::uint64_t i) const;

  AffineBijection inverse() const;
  // this-after-f: (g.composeAfter(f))(x) = g(f(x)). Requires f.target == g.source.
  AffineBijection composeAfter(const AffineBijection& f) const;

  // Exact image of a subset of the source.
  IndexSet imageOf(const IndexSet& s) const;
  // Restriction to a subset of the source (target recomputed).
  AffineBijection restrictedTo(const IndexSet& s) const;

  // Debug / test helper: verifies bijectivity on the first n source members.
  bool checkOnPrefix(std::uint64_t n) const;

  std::string str() const;

 private:
  IndexSet source_;
  IndexSet target_;
  std::vector<AffinePiece> pieces_;
  std::map<std::uint64_t, std::uint64_t> exceptions_;
};

}  // namespace glwidth
