#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "glwidth/affine_bijection.hpp"
#include "glwidth/coeff_rule.hpp"

using namespace glwidth;

namespace {
const IndexSet evens = IndexSet::residueClass(2, {0});
const IndexSet odds = IndexSet::residueClass(2, {1});
const IndexSet mult3 = IndexSet::residueClass(3, {0});
}  // namespace

TEST_CASE("canonical bijection evens -> odds is 2k |-> 2k+1") {
  AffineBijection f = AffineBijection::canonical(evens, odds);
  for (std::uint64_t k = 0; k < 200; ++k) CHECK(f.apply(2 * k) == 2 * k + 1);
  CHECK(f.checkOnPrefix(200));
}

TEST_CASE("canonical bijection of a set with itself is the identity") {
  IndexSet s = IndexSet::make(4, {1, 3}, {0}, {5});
  AffineBijection f = AffineBijection::canonical(s, s);
  for (std::uint64_t k = 0; k < 100; ++k) {
    std::uint64_t x = s.nth(k);
    CHECK(f.apply(x) == x);
  }
}

TEST_CASE("canonical bijection evens -> multiples of three is 2k |-> 3k") {
  AffineBijection f = AffineBijection::canonical(evens, mult3);
  for (std::uint64_t k = 0; k < 200; ++k) CHECK(f.apply(2 * k) == 3 * k);
}

TEST_CASE("canonical bijections are rank-preserving with corrections") {
  IndexSet s = IndexSet::make(3, {0, 2}, {1}, {6});
  IndexSet t = IndexSet::make(5, {1}, {0, 2}, {});
  AffineBijection f = AffineBijection::canonical(s, t);
  for (std::uint64_t k = 0; k < 300; ++k) CHECK(f.apply(s.nth(k)) == t.nth(k));
  CHECK(f.checkOnPrefix(300));
  // round trip: canonical(t, s) inverts canonical(s, t)
  AffineBijection g = AffineBijection::canonical(t, s);
  for (std::uint64_t k = 0; k < 300; ++k) {
    std::uint64_t x = s.nth(k);
    CHECK(g.apply(f.apply(x)) == x);
  }
}

TEST_CASE("inverse undoes the map exactly") {
  IndexSet s = IndexSet::make(3, {0, 2}, {1}, {6});
  IndexSet t = IndexSet::make(5, {1}, {0, 2}, {});
  AffineBijection f = AffineBijection::canonical(s, t);
  AffineBijection inv = f.inverse();
  for (std::uint64_t k = 0; k < 300; ++k) {
    std::uint64_t x = s.nth(k);
    CHECK(inv.apply(f.apply(x)) == x);
  }
}

TEST_CASE("composition chains canonical maps") {
  AffineBijection f = AffineBijection::canonical(evens, odds);
  AffineBijection g = AffineBijection::canonical(odds, mult3);
  AffineBijection h = g.composeAfter(f);
  for (std::uint64_t k = 0; k < 200; ++k) CHECK(h.apply(2 * k) == 3 * k);
  CHECK(h.sourceSet() == evens);
  CHECK(h.targetSet() == mult3);
}

TEST_CASE("composition routes exceptions through both layers") {
  IndexSet a = IndexSet::fromElements({0, 1, 2});
  IndexSet b = IndexSet::fromElements({5, 6, 7});
  IndexSet c = IndexSet::fromElements({10, 20, 30});
  AffineBijection f = AffineBijection::canonical(a, b);
  AffineBijection g = AffineBijection::canonical(b, c);
  AffineBijection h = g.composeAfter(f);
  CHECK(h.apply(0) == 10);
  CHECK(h.apply(2) == 30);
}

TEST_CASE("swap exchanges two sets and is an involution") {
  AffineBijection s = AffineBijection::swap(evens, odds);
  for (std::uint64_t i = 0; i < 100; ++i) {
    std::uint64_t j = s.apply(i);
    CHECK(j == (i % 2 == 0 ? i + 1 : i - 1));
    CHECK(s.apply(j) == i);
  }
}

TEST_CASE("imageOf maps subsets exactly") {
  AffineBijection f = AffineBijection::canonical(evens, mult3);  // 2k -> 3k
  IndexSet sub = IndexSet::residueClass(4, {0});                 // 4k -> 6k
  IndexSet img = f.imageOf(sub);
  CHECK(img == IndexSet::residueClass(6, {0}));
  IndexSet subCorr = IndexSet::make(4, {0}, {2}, {8});
  IndexSet imgCorr = f.imageOf(subCorr);
  for (std::uint64_t i = 0; i < 400; ++i) {
    bool expected = subCorr.contains(i * 2) && f.apply(i * 2) == 3 * i;
    (void)expected;
  }
  for (std::uint64_t k = 0; k < 200; ++k) {
    std::uint64_t x = 2 * k;
    if (subCorr.contains(x))
      CHECK(imgCorr.contains(3 * k));
    else
      CHECK_FALSE(imgCorr.contains(3 * k));
  }
}

TEST_CASE("glue combines disjoint bijections") {
  AffineBijection f =
      AffineBijection::glue({AffineBijection::canonical(evens, odds),
                             AffineBijection::canonical(odds, evens)});
  CHECK(f.sourceSet() == IndexSet::naturals());
  CHECK(f.apply(4) == 5);
  CHECK(f.apply(5) == 4);
  CHECK_THROWS_AS(AffineBijection::glue({AffineBijection::identityOn(evens),
                                         AffineBijection::identityOn(evens)}),
                  Error);
}

TEST_CASE("coefficient rules: periodic evaluation, product, pullback") {
  Field f5 = Field::prime(5);
  CoeffRule ones(f5);
  CHECK(ones.isAllOnes());
  CoeffRule alt = CoeffRule::periodic(f5, {Scalar::ofInt(f5, 1), Scalar::ofInt(f5, 2)},
                                      {{3, Scalar::ofInt(f5, 4)}});
  CHECK(alt.at(0).str() == "1");
  CHECK(alt.at(1).str() == "2");
  CHECK(alt.at(3).str() == "4");
  CHECK(alt.at(5).str() == "2");
  CoeffRule prod = alt.times(alt);
  CHECK(prod.at(1).str() == "4");
  CHECK(prod.at(3).str() == "1");  // 4*4 = 16 = 1 mod 5
  CoeffRule inv = alt.inverted();
  CHECK((alt.at(7) * inv.at(7)).isOne());

  // Pullback through 2k -> 2k+1: rule'(2k) = rule(2k+1).
  AffineBijection shift = AffineBijection::canonical(evens, odds);
  CoeffRule pulled = alt.pulledBackThrough(shift);
  for (std::uint64_t k = 0; k < 100; ++k) CHECK(pulled.at(2 * k) == alt.at(2 * k + 1));
}

TEST_CASE("monomial inverse coefficients satisfy c'(f(i)) = c(i)^-1") {
  Field q = Field::rationals();
  CoeffRule rule = CoeffRule::periodic(
      q, {Scalar::ofInt(q, 2), Scalar::rational(1, 3), Scalar::ofInt(q, 1)},
      {{4, Scalar::ofInt(q, 7)}});
  AffineBijection f = AffineBijection::swap(evens, odds);
  CoeffRule pulledInv = rule.pulledBackThrough(f.inverse()).inverted();
  for (std::uint64_t i = 0; i < 120; ++i) {
    std::uint64_t j = f.apply(i);
    CHECK((pulledInv.at(j) * rule.at(i)).isOne());
  }
}
