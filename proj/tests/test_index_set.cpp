#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "glwidth/index_set.hpp"

using namespace glwidth;

namespace {
const IndexSet evens = IndexSet::residueClass(2, {0});
const IndexSet odds = IndexSet::residueClass(2, {1});
const IndexSet mult3 = IndexSet::residueClass(3, {0});
}  // namespace

TEST_CASE("membership, rank and unrank agree on a scan") {
  IndexSet s = IndexSet::make(6, {1, 4}, {0, 9}, {7});
  std::uint64_t rank = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    bool member = s.contains(i);
    bool expected = ((i % 6 == 1 || i % 6 == 4) || i == 0 || i == 9) && i != 7;
    CHECK(member == expected);
    if (member) {
      CHECK(s.rankOf(i) == rank);
      CHECK(s.nth(rank) == i);
      ++rank;
    }
    CHECK(s.countBelow(i + 1) == rank);
  }
}

TEST_CASE("complement is an involution and flips membership") {
  IndexSet s = IndexSet::make(4, {0, 3}, {1}, {4});
  IndexSet c = s.complement();
  for (std::uint64_t i = 0; i < 200; ++i) CHECK(c.contains(i) == !s.contains(i));
  CHECK(c.complement() == s);
  CHECK(evens.complement() == odds);
}

TEST_CASE("intersection uses the CRT") {
  IndexSet i6 = evens.intersect(mult3);
  CHECK(i6 == IndexSet::residueClass(6, {0}));
  CHECK_FALSE(odds.contains(4));
}

TEST_CASE("De Morgan holds on membership for sampled sets") {
  IndexSet a = IndexSet::make(4, {1, 2}, {0}, {5});
  IndexSet b = IndexSet::make(3, {0}, {7}, {9});
  IndexSet u = a.unite(b);
  IndexSet n = a.intersect(b);
  for (std::uint64_t i = 0; i < 300; ++i) {
    CHECK(u.contains(i) == (a.contains(i) || b.contains(i)));
    CHECK(n.contains(i) == (a.contains(i) && b.contains(i)));
  }
}

TEST_CASE("split_moiety of the naturals gives evens and odds") {
  auto [a, b] = IndexSet::naturals().splitMoiety();
  CHECK(a == evens);
  CHECK(b == odds);
}

TEST_CASE("split_moiety of the evens doubles the modulus") {
  auto [a, b] = evens.splitMoiety();
  CHECK(a == IndexSet::residueClass(4, {0}));
  CHECK(b == IndexSet::residueClass(4, {2}));
}

TEST_CASE("split_moiety rejects finite sets and partitions corrected sets") {
  CHECK_THROWS_AS(IndexSet::fromElements({0, 1, 2}).splitMoiety(), Error);
  IndexSet s = IndexSet::make(2, {0}, {3, 7}, {4});
  auto [a, b] = s.splitMoiety();
  CHECK(a.isInfinite());
  CHECK(b.isInfinite());
  CHECK(a.disjointWith(b));
  CHECK(a.unite(b) == s);
}

TEST_CASE("dyadic partition of the naturals follows v2(i+1)") {
  DyadicPartition d{IndexSet::naturals()};
  CHECK(d.partIndexOf(0) == 0);
  CHECK(d.partIndexOf(1) == 1);
  CHECK(d.partIndexOf(3) == 2);
  CHECK(d.part(0) == evens);
  CHECK(d.part(1) == IndexSet::residueClass(4, {1}));
  CHECK(d.part(2) == IndexSet::residueClass(8, {3}));
  CHECK(d.part(0).disjointWith(d.part(1)));
}

TEST_CASE("every index below 1000 sits in exactly one dyadic part with n <= 9") {
  DyadicPartition d{IndexSet::naturals()};
  std::vector<IndexSet> parts;
  for (std::uint32_t n = 0; n <= 9; ++n) parts.push_back(d.part(n));
  for (std::uint64_t i = 0; i < 1000; ++i) {
    int hits = 0;
    for (std::uint32_t n = 0; n <= 9; ++n)
      if (parts[n].contains(i)) ++hits;
    CHECK(hits == 1);
    CHECK(d.partIndexOf(i) <= 9);
  }
}

TEST_CASE("dyadic parts grow like N / 2^(n+1)") {
  DyadicPartition d{IndexSet::naturals()};
  const std::uint64_t N = 4096;
  for (std::uint32_t n = 0; n <= 5; ++n)
    CHECK(d.part(n).countBelow(N) >= N / (std::uint64_t(1) << (n + 1)));
}

TEST_CASE("dyadic partition of a general set matches rank valuations") {
  IndexSet s = IndexSet::make(3, {1, 2}, {0}, {4});
  DyadicPartition d{s};
  for (std::uint32_t n = 0; n <= 4; ++n) {
    IndexSet part = d.part(n);
    for (std::uint64_t i = 0; i < 400; ++i) {
      bool expected = s.contains(i) && d.partIndexOf(i) == n;
      CHECK(part.contains(i) == expected);
    }
    // rank within the part agrees with the part's own enumeration
    for (std::uint64_t k = 0; k < 8; ++k) {
      std::uint64_t x = part.nth(k);
      CHECK(d.rankInPart(x) == k);
      CHECK(d.nthOfPart(n, k) == x);
    }
  }
}

TEST_CASE("rank residue subsets slice a set by rank classes") {
  IndexSet s = IndexSet::make(5, {0, 2}, {3}, {10});
  for (std::uint64_t r = 0; r < 3; ++r) {
    IndexSet sub = rankResidueSubset(s, 3, r);
    for (std::uint64_t i = 0; i < 300; ++i) {
      bool expected = s.contains(i) && s.rankOf(i) % 3 == r;
      CHECK(sub.contains(i) == expected);
    }
  }
}

TEST_CASE("carve helpers produce prefix and moiety zones") {
  auto [prefix, rest] = carvePrefix(IndexSet::naturals(), 4);
  CHECK(prefix == IndexSet::fromElements({0, 1, 2, 3}));
  CHECK_FALSE(rest.contains(3));
  CHECK(rest.contains(4));
  auto [zone, hostRest] = carveLike(evens, odds);
  CHECK(zone.isInfinite());
  CHECK(zone.unite(hostRest) == evens);
  auto [zone2, hostRest2] = carveLike(evens, IndexSet::fromElements({5, 9}));
  CHECK(zone2 == IndexSet::fromElements({0, 2}));
  CHECK(hostRest2.contains(4));
}

TEST_CASE("finite sets expose exact sizes") {
  IndexSet f = IndexSet::fromElements({4, 1, 1, 9});
  CHECK(f.sizeIfFinite() == std::uint64_t(3));
  CHECK(f.nth(0) == 1);
  CHECK(f.nth(2) == 9);
  CHECK_FALSE(IndexSet::naturals().sizeIfFinite().has_value());
  CHECK(IndexSet::empty().isEmpty());
}
