#include "glwidth/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace glwidth {

namespace {

constexpr std::uint64_t kModulusCap = std::uint64_t(1) << 40;

std::vector<std::uint64_t> toSortedVec(const std::set<std::uint64_t>& s) {
  return std::vector<std::uint64_t>(s.begin(), s.end());
}

bool sortedContains(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::uint64_t countLess(const std::vector<std::uint64_t>& v, std::uint64_t x) {
  return static_cast<std::uint64_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
}

}  // namespace

IndexSet IndexSet::residueClass(std::uint64_t modulus, std::set<std::uint64_t> residues) {
  return make(modulus, std::move(residues), {}, {});
}

IndexSet IndexSet::fromElements(const std::vector<std::uint64_t>& elems) {
  std::set<std::uint64_t> s(elems.begin(), elems.end());
  return make(1, {}, std::move(s), {});
}

IndexSet IndexSet::make(std::uint64_t modulus, std::set<std::uint64_t> residues,
                        std::set<std::uint64_t> added, std::set<std::uint64_t> removed) {
  if (modulus == 0) fail(Errc::Unsupported, "index set modulus must be positive");
  for (std::uint64_t r : residues)
    if (r >= modulus) fail(Errc::Unsupported, "residue out of range");
  IndexSet s;
  s.modulus_ = modulus;
  s.residues_ = toSortedVec(residues);
  s.added_ = toSortedVec(added);
  s.removed_ = toSortedVec(removed);
  s.normalize();
  return s;
}

bool IndexSet::matchesPure(std::uint64_t i) const {
  return sortedContains(residues_, i % modulus_);
}

void IndexSet::normalize() {
  // added may not duplicate the pure part; removed must refine it. An index in
  // both lists cancels out.
  std::vector<std::uint64_t> add2, rem2;
  for (std::uint64_t a : added_) {
    if (sortedContains(removed_, a)) continue;  // add then remove: no-op unless pure
    if (!matchesPure(a)) add2.push_back(a);
  }
  for (std::uint64_t r : removed_) {
    if (sortedContains(added_, r)) {
      // pure && added && removed cannot happen (added excludes pure below);
      // an element both added and removed is simply absent.
      if (matchesPure(r)) rem2.push_back(r);
      continue;
    }
    if (matchesPure(r)) rem2.push_back(r);
  }
  added_ = std::move(add2);
  removed_ = std::move(rem2);
  if (residues_.empty() && modulus_ != 1) modulus_ = 1;
  if (residues_.size() == modulus_ && modulus_ != 1) {
    residues_ = {0};
    modulus_ = 1;
  }
}

bool IndexSet::contains(std::uint64_t i) const {
  if (sortedContains(removed_, i)) return false;
  return matchesPure(i) || sortedContains(added_, i);
}

bool IndexSet::isEmpty() const { return residues_.empty() && added_.empty(); }

bool IndexSet::isCoinfinite() const {
  if (residues_.empty()) return true;
  return residues_.size() < modulus_;
}

std::optional<std::uint64_t> IndexSet::sizeIfFinite() const {
  if (isInfinite()) return std::nullopt;
  return added_.size();
}

std::uint64_t IndexSet::countBelow(std::uint64_t n) const {
  std::uint64_t pure = (n / modulus_) * residues_.size() + countLess(residues_, n % modulus_);
  return pure + countLess(added_, n) - countLess(removed_, n);
}

std::uint64_t IndexSet::nth(std::uint64_t k) const {
  if (!isInfinite()) {
    if (k >= added_.size()) fail(Errc::FiniteSet, "rank beyond finite set size");
    return added_[k];
  }
  // Exponential then binary search on countBelow, which is nondecreasing.
  std::uint64_t hi = 1;
  while (countBelow(hi) < k + 1) {
    if (hi > (std::uint64_t(1) << 62)) fail(Errc::Unsupported, "index overflow in nth");
    hi *= 2;
  }
  std::uint64_t lo = 0;  // invariant: countBelow(lo) <= k < countBelow(hi+? )
  while (lo + 1 < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (countBelow(mid) < k + 1)
      lo = mid;
    else
      hi = mid;
  }
  // hi is least index with countBelow(hi) == k+1, so the member is hi-1.
  return hi - 1;
}

std::uint64_t IndexSet::rankOf(std::uint64_t i) const {
  if (!contains(i)) fail(Errc::Unsupported, "rankOf on non-member " + std::to_string(i));
  return countBelow(i);
}

std::vector<std::uint64_t> IndexSet::firstN(std::uint64_t n) const {
  std::vector<std::uint64_t> out;
  if (!isInfinite() && n > added_.size()) n = added_.size();
  out.reserve(n);
  for (std::uint64_t k = 0; k < n; ++k) out.push_back(nth(k));
  return out;
}

std::vector<std::uint64_t> IndexSet::elementsBelow(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  std::uint64_t total = countBelow(bound);
  out.reserve(total);
  for (std::uint64_t k = 0; k < total; ++k) out.push_back(nth(k));
  return out;
}

IndexSet IndexSet::rescaled(std::uint64_t newModulus) const {
  if (newModulus % modulus_ != 0) fail(Errc::Unsupported, "rescale to non-multiple");
  IndexSet s;
  s.modulus_ = newModulus;
  for (std::uint64_t base = 0; base < newModulus; base += modulus_)
    for (std::uint64_t r : residues_) s.residues_.push_back(base + r);
  std::sort(s.residues_.begin(), s.residues_.end());
  s.added_ = added_;
  s.removed_ = removed_;
  return s;  // already normalized relative to the same membership function
}

IndexSet IndexSet::complement() const {
  IndexSet s;
  s.modulus_ = modulus_;
  for (std::uint64_t r = 0; r < modulus_; ++r)
    if (!sortedContains(residues_, r)) s.residues_.push_back(r);
  s.added_ = removed_;
  s.removed_ = added_;
  s.normalize();
  return s;
}

IndexSet IndexSet::intersect(const IndexSet& o) const {
  std::uint64_t l = std::lcm(modulus_, o.modulus_);
  if (l > kModulusCap) fail(Errc::Unsupported, "modulus blow-up in intersect");
  IndexSet a = rescaled(l), b = o.rescaled(l);
  IndexSet s;
  s.modulus_ = l;
  std::set_intersection(a.residues_.begin(), a.residues_.end(), b.residues_.begin(),
                        b.residues_.end(), std::back_inserter(s.residues_));
  // Corrections can only involve indices mentioned in either correction list.
  std::set<std::uint64_t> universe(a.added_.begin(), a.added_.end());
  universe.insert(a.removed_.begin(), a.removed_.end());
  universe.insert(b.added_.begin(), b.added_.end());
  universe.insert(b.removed_.begin(), b.removed_.end());
  std::set<std::uint64_t> add, rem;
  for (std::uint64_t i : universe) {
    bool member = contains(i) && o.contains(i);
    bool pure = sortedContains(s.residues_, i % l);
    if (member && !pure) add.insert(i);
    if (!member && pure) rem.insert(i);
  }
  s.added_ = toSortedVec(add);
  s.removed_ = toSortedVec(rem);
  s.normalize();
  return s;
}

IndexSet IndexSet::unite(const IndexSet& o) const {
  return complement().intersect(o.complement()).complement();
}

IndexSet IndexSet::minus(const IndexSet& o) const { return intersect(o.complement()); }

bool IndexSet::operator==(const IndexSet& o) const {
  std::uint64_t l = std::lcm(modulus_, o.modulus_);
  if (l > kModulusCap) fail(Errc::Unsupported, "modulus blow-up in equality");
  IndexSet a = rescaled(l), b = o.rescaled(l);
  a.normalize();
  b.normalize();
  return a.residues_ == b.residues_ && a.added_ == b.added_ && a.removed_ == b.removed_;
}

std::pair<IndexSet, IndexSet> IndexSet::splitMoiety() const {
  if (!isInfinite()) fail(Errc::FiniteSet, "splitMoiety of a finite set");
  std::uint64_t m2 = modulus_ * 2;
  if (m2 > kModulusCap) fail(Errc::Unsupported, "modulus blow-up in splitMoiety");
  IndexSet lowHalf, highHalf;
  lowHalf.modulus_ = highHalf.modulus_ = m2;
  for (std::uint64_t r : residues_) {
    lowHalf.residues_.push_back(r);
    highHalf.residues_.push_back(r + modulus_);
  }
  std::sort(lowHalf.residues_.begin(), lowHalf.residues_.end());
  std::sort(highHalf.residues_.begin(), highHalf.residues_.end());
  for (std::uint64_t r : removed_) {
    if (sortedContains(lowHalf.residues_, r % m2))
      lowHalf.removed_.push_back(r);
    else
      highHalf.removed_.push_back(r);
  }
  // Alternate the added corrections so neither half hoards them.
  for (std::size_t i = 0; i < added_.size(); ++i) {
    if (i % 2 == 0)
      lowHalf.added_.push_back(added_[i]);
    else
      highHalf.added_.push_back(added_[i]);
  }
  lowHalf.normalize();
  highHalf.normalize();
  return {lowHalf, highHalf};
}

IndexSet IndexSet::takeFirst(std::uint64_t n) const {
  if (!isInfinite() && added_.size() < n) fail(Errc::FiniteSet, "takeFirst beyond size");
  return fromElements(firstN(n));
}

IndexSet::EnumTail IndexSet::enumTail() const {
  if (!isInfinite()) fail(Errc::FiniteSet, "enumTail of a finite set");
  EnumTail t;
  std::uint64_t cutoff = 0;
  if (!added_.empty()) cutoff = std::max(cutoff, added_.back() + 1);
  if (!removed_.empty()) cutoff = std::max(cutoff, removed_.back() + 1);
  // Round the cutoff up to a multiple of the modulus so piece bounds align.
  cutoff = ((cutoff + modulus_ - 1) / modulus_) * modulus_;
  t.stableRank = countBelow(cutoff);
  t.shift = static_cast<std::int64_t>(added_.size()) - static_cast<std::int64_t>(removed_.size());
  t.modulus = modulus_;
  t.residues = residues_;
  return t;
}

std::string IndexSet::str() const {
  std::ostringstream os;
  os << "{mod " << modulus_ << ": ";
  for (std::size_t i = 0; i < residues_.size(); ++i) os << (i ? "," : "") << residues_[i];
  if (!added_.empty()) {
    os << " +[";
    for (std::size_t i = 0; i < added_.size(); ++i) os << (i ? "," : "") << added_[i];
    os << "]";
  }
  if (!removed_.empty()) {
    os << " -[";
    for (std::size_t i = 0; i < removed_.size(); ++i) os << (i ? "," : "") << removed_[i];
    os << "]";
  }
  os << "}";
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

// 2-adic valuation of k+1; the dyadic rule uses k+1 so rank 0 is covered.
std::uint32_t dyadicIndex(std::uint64_t k) {
  std::uint64_t x = k + 1;
  std::uint32_t n = 0;
  while ((x & 1) == 0) {
    x >>= 1;
    ++n;
  }
  return n;
}

}  // namespace

IndexSet rankResidueSubset(const IndexSet& base, std::uint64_t M, std::uint64_t target) {
  if (!base.isInfinite()) fail(Errc::FiniteSet, "rank residue subset of a finite set");
  if (M == 0 || target >= M) fail(Errc::Unsupported, "bad rank residue class");
  const auto tail = base.enumTail();
  const std::uint64_t r = tail.residues.size();
  // Beyond the stable rank, nth(k) = ((k - shift) / r) * m + residues[(k - shift) % r],
  // so nth(k + period) = nth(k) + outMod with the period aligning both M and r.
  const std::uint64_t period = std::lcm(M, r);
  const std::uint64_t outMod = (period / r) * tail.modulus;
  if (outMod > (std::uint64_t(1) << 40))
    fail(Errc::Unsupported, "modulus blow-up in rank residue subset");
  const std::uint64_t start = ((tail.stableRank + period - 1) / period) * period;
  std::set<std::uint64_t> residues;
  for (std::uint64_t k = start; k < start + period; ++k)
    if ((k % M) == target) residues.insert(base.nth(k) % outMod);
  // Every index at or beyond nth(start) lies in the subset iff it matches the
  // pure classes; smaller indices are corrected individually.
  const std::uint64_t bound = base.nth(start);
  IndexSet pure = IndexSet::make(outMod, residues, {}, {});
  std::set<std::uint64_t> add, rem;
  for (std::uint64_t i : pure.elementsBelow(bound)) {
    bool genuine = base.contains(i) && (base.rankOf(i) % M) == target;
    if (!genuine) rem.insert(i);
  }
  for (std::uint64_t k = target; k < start; k += M) {
    std::uint64_t i = base.nth(k);
    if (!pure.contains(i)) add.insert(i);
  }
  return IndexSet::make(outMod, residues, add, rem);
}

DyadicPartition::DyadicPartition(IndexSet base) : base_(std::move(base)) {
  if (!base_.isInfinite()) fail(Errc::FiniteSet, "dyadic partition of a finite set");
}

IndexSet DyadicPartition::part(std::uint32_t n) const {
  // Ranks with v2(k+1) == n form the class {k = 2^n - 1 (mod 2^{n+1})}.
  const std::uint64_t M = std::uint64_t(1) << (n + 1);
  if (M > (std::uint64_t(1) << 30)) fail(Errc::Unsupported, "dyadic part index too large");
  return rankResidueSubset(base_, M, (std::uint64_t(1) << n) - 1);
}

std::uint32_t DyadicPartition::partIndexOf(std::uint64_t i) const {
  return dyadicIndex(base_.rankOf(i));
}

std::uint64_t DyadicPartition::rankInPart(std::uint64_t i) const {
  std::uint64_t k = base_.rankOf(i);
  std::uint32_t n = dyadicIndex(k);
  // Ranks in part n are k = 2^n - 1 + j * 2^{n+1}.
  return (k - ((std::uint64_t(1) << n) - 1)) >> (n + 1);
}

std::uint64_t DyadicPartition::nthOfPart(std::uint32_t n, std::uint64_t k) const {
  std::uint64_t rank = ((std::uint64_t(1) << n) - 1) + (k << (n + 1));
  return base_.nth(rank);
}

std::pair<IndexSet, IndexSet> carvePrefix(const IndexSet& s, std::uint64_t n) {
  IndexSet prefix = s.takeFirst(n);
  return {prefix, s.minus(prefix)};
}

std::pair<IndexSet, IndexSet> carveLike(const IndexSet& host, const IndexSet& model) {
  if (auto sz = model.sizeIfFinite()) {
    auto [zone, rest] = carvePrefix(host, *sz);
    return {zone, rest};
  }
  if (!host.isInfinite()) fail(Errc::FiniteSet, "carveLike: infinite zone from finite host");
  auto [a, b] = host.splitMoiety();
  return {a, b};
}

}  // namespace glwidth
