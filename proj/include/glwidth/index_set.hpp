#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "glwidth/errors.hpp"

namespace glwidth {

// A computable subset of the basis index set N: a union of residue classes
// modulo `modulus` plus a finite set of added indices minus a finite set of
// removed ones. Membership is O(1); the family is closed under complement,
// intersection, union and the moiety constructions the proofs need.
class IndexSet {
 public:
  IndexSet() : modulus_(1) {}  // empty set

  static IndexSet naturals() { return residueClass(1, {0}); }
  static IndexSet empty() { return IndexSet(); }
  static IndexSet residueClass(std::uint64_t modulus, std::set<std::uint64_t> residues);
  static IndexSet fromElements(const std::vector<std::uint64_t>& elems);
  static IndexSet make(std::uint64_t modulus, std::set<std::uint64_t> residues,
                       std::set<std::uint64_t> added, std::set<std::uint64_t> removed);

  bool contains(std::uint64_t i) const;
  bool isInfinite() const { return !residues_.empty(); }
  bool isEmpty() const;
  bool isCoinfinite() const;  // complement infinite
  std::optional<std::uint64_t> sizeIfFinite() const;

  // Number of members strictly below n.
  std::uint64_t countBelow(std::uint64_t n) const;
  // The k-th member in increasing order (k counts from 0).
  std::uint64_t nth(std::uint64_t k) const;
  // Position of member i in increasing order; i must be a member.
  std::uint64_t rankOf(std::uint64_t i) const;

  std::vector<std::uint64_t> firstN(std::uint64_t n) const;
  std::vector<std::uint64_t> elementsBelow(std::uint64_t bound) const;

  IndexSet complement() const;
  IndexSet intersect(const IndexSet& o) const;
  IndexSet unite(const IndexSet& o) const;
  IndexSet minus(const IndexSet& o) const;
  bool disjointWith(const IndexSet& o) const { return intersect(o).isEmpty(); }

  bool operator==(const IndexSet& o) const;
  bool operator!=(const IndexSet& o) const { return !(*this == o); }

  // Splits an infinite set into two disjoint infinite halves whose union is
  // the set; each half contains a full residue class. Errc::FiniteSet otherwise.
  std::pair<IndexSet, IndexSet> splitMoiety() const;

  // The finite set of the first n members (Errc::FiniteSet if fewer exist).
  IndexSet takeFirst(std::uint64_t n) const;

  std::uint64_t modulus() const { return modulus_; }
  const std::vector<std::uint64_t>& residues() const { return residues_; }
  const std::vector<std::uint64_t>& added() const { return added_; }
  const std::vector<std::uint64_t>& removed() const { return removed_; }

  // Enumeration tail: for ranks k >= stableRank the k-th member is
  // pureUnrank(k - shift) on the pure residue part.
  struct EnumTail {
    std::uint64_t stableRank;  // ranks at or beyond this follow the pure formula
    std::int64_t shift;        // |added| - |removed|
    std::uint64_t modulus;
    std::vector<std::uint64_t> residues;  // sorted
  };
  EnumTail enumTail() const;

  std::string str() const;

 private:
  void normalize();
  IndexSet rescaled(std::uint64_t newModulus) const;
  bool matchesPure(std::uint64_t i) const;

  std::uint64_t modulus_;
  std::vector<std::uint64_t> residues_;  // sorted, subset of [0, modulus)
  std::vector<std::uint64_t> added_;     // sorted, disjoint from pure part
  std::vector<std::uint64_t> removed_;   // sorted, subset of pure part
};

// Members of `base` whose enumeration rank is = res (mod mod). Pulls a rank
// residue class through the enumeration; the result is again an IndexSet.
IndexSet rankResidueSubset(const IndexSet& base, std::uint64_t mod, std::uint64_t res);

// The standard partition of an infinite IndexSet into countably many infinite
// parts: member of rank k belongs to part v2(k+1) (2-adic valuation). Part n
// of the naturals is the residue class {i : i = 2^n - 1 (mod 2^{n+1})}.
class DyadicPartition {
 public:
  explicit DyadicPartition(IndexSet base);

  const IndexSet& base() const { return base_; }
  IndexSet part(std::uint32_t n) const;
  // Part index of a member i of the base set.
  std::uint32_t partIndexOf(std::uint64_t i) const;
  // Rank of i inside its part.
  std::uint64_t rankInPart(std::uint64_t i) const;
  // The k-th member of part n.
  std::uint64_t nthOfPart(std::uint32_t n, std::uint64_t k) const;

 private:
  IndexSet base_;
};

// Deterministic carving helpers used by the factor constructions.

// Removes the first n members from s and returns (prefix, rest).
std::pair<IndexSet, IndexSet> carvePrefix(const IndexSet& s, std::uint64_t n);

// Carves a sub-zone of `host` matching the size kind of `model`: a finite
// prefix of |model| elements when model is finite, else an infinite,
// co-infinite-in-host moiety. Returns (zone, hostRest).
std::pair<IndexSet, IndexSet> carveLike(const IndexSet& host, const IndexSet& model);

}  // namespace glwidth
