#include "glwidth/affine_bijection.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace glwidth {

namespace {

using i128 = __int128;

std::int64_t floordiv(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t posmod(std::int64_t a, std::int64_t b) { return a - floordiv(a, b) * b; }

void reduceMap(std::int64_t& aNum, std::int64_t& bNum, std::int64_t& den) {
  std::int64_t g = std::gcd(std::gcd(std::llabs(aNum), std::llabs(bNum)), std::llabs(den));
  if (g > 1) {
    aNum /= g;
    bNum /= g;
    den /= g;
  }
}

constexpr std::uint64_t kRemovalCap = 1 << 20;

}  // namespace

std::uint64_t AffinePiece::map(std::uint64_t x) const {
  i128 v = (i128)aNum * (i128)x + bNum;
  if (v % den != 0) fail(Errc::Unsupported, "inexact affine map application");
  v /= den;
  if (v < 0) fail(Errc::Unsupported, "affine map produced a negative index");
  return static_cast<std::uint64_t>(v);
}

bool AffinePiece::exactOn(const IndexSet& d) const {
  // Exactness on a residue class propagates along the class when den | aNum*m.
  if (d.isInfinite() && ((i128)aNum * d.modulus()) % den != 0) return false;
  for (std::uint64_t r : d.residues()) {
    std::int64_t v = static_cast<std::int64_t>(((i128)aNum * r + bNum) % den);
    if (posmod(v, den) != 0) return false;
  }
  for (std::uint64_t a : d.added()) {
    std::int64_t v = static_cast<std::int64_t>(((i128)aNum * a + bNum) % den);
    if (posmod(v, den) != 0) return false;
  }
  return true;
}

IndexSet affineImage(const IndexSet& s, std::int64_t aNum, std::int64_t bNum, std::int64_t den) {
  if (aNum <= 0 || den <= 0) fail(Errc::Unsupported, "affine image needs positive slope");
  auto mapOne = [&](std::uint64_t x) -> std::uint64_t {
    i128 v = (i128)aNum * (i128)x + bNum;
    if (v % den != 0) fail(Errc::Unsupported, "inexact affine map in image");
    v /= den;
    if (v < 0) fail(Errc::Unsupported, "negative index in affine image");
    return static_cast<std::uint64_t>(v);
  };
  if (!s.isInfinite()) {
    std::vector<std::uint64_t> elems;
    for (std::uint64_t x : s.added()) elems.push_back(mapOne(x));
    return IndexSet::fromElements(elems);
  }
  const std::uint64_t m = s.modulus();
  if (((i128)aNum * m) % den != 0) fail(Errc::Unsupported, "affine image step not integral");
  const std::uint64_t step = static_cast<std::uint64_t>(((i128)aNum * m) / den);
  if (step > (std::uint64_t(1) << 40)) fail(Errc::Unsupported, "modulus blow-up in affine image");
  std::set<std::uint64_t> residues;
  std::set<std::uint64_t> removed;
  for (std::uint64_t r : s.residues()) {
    IndexSet cls = s.intersect(IndexSet::residueClass(m, {r}));
    if (cls.isEmpty()) continue;
    std::uint64_t x0 = cls.nth(0);
    std::uint64_t y0 = mapOne(x0);
    std::uint64_t res = y0 % step;
    residues.insert(res);
    // AP members below the first genuine image are not in the image.
    if (y0 / step > kRemovalCap) fail(Errc::Unsupported, "affine image removal blow-up");
    for (std::uint64_t y = res; y < y0; y += step) removed.insert(y);
    for (std::uint64_t x : cls.removed()) {
      if (x < x0) continue;  // its image slot already falls below y0
      removed.insert(mapOne(x));
    }
  }
  std::set<std::uint64_t> added;
  for (std::uint64_t x : s.added()) added.insert(mapOne(x));
  // Residue collisions between classes: a removed candidate may coincide with
  // a genuine image from another class; recheck by membership.
  std::set<std::uint64_t> removedFinal;
  for (std::uint64_t y : removed) {
    // y is in the image iff some source member maps to it.
    bool hit = false;
    i128 num = (i128)y * den - bNum;
    if (num >= 0 && num % aNum == 0) {
      std::uint64_t x = static_cast<std::uint64_t>(num / aNum);
      hit = s.contains(x);
    }
    if (!hit && !added.count(y)) removedFinal.insert(y);
  }
  return IndexSet::make(step, residues, added, removedFinal);
}

AffineBijection AffineBijection::fromPieces(IndexSet source, IndexSet target,
                                            std::vector<AffinePiece> pieces,
                                            std::map<std::uint64_t, std::uint64_t> exceptions) {
  AffineBijection f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  for (auto& p : pieces)
    if (!p.domain.isEmpty()) f.pieces_.push_back(std::move(p));
  f.exceptions_ = std::move(exceptions);
  return f;
}

AffineBijection AffineBijection::identityOn(const IndexSet& s) {
  AffinePiece p;
  p.domain = s;
  return fromPieces(s, s, {p}, {});
}

std::uint64_t AffineBijection::apply(std::uint64_t i) const {
  auto v = tryApply(i);
  if (!v) fail(Errc::Unsupported, "index " + std::to_string(i) + " outside bijection source");
  return *v;
}

std::optional<std::uint64_t> AffineBijection::tryApply(std::uint64_t i) const {
  if (!source_.contains(i)) return std::nullopt;
  auto it = exceptions_.find(i);
  if (it != exceptions_.end()) return it->second;
  for (const auto& p : pieces_)
    if (p.domain.contains(i)) return p.map(i);
  fail(Errc::Unsupported, "bijection has no branch for member " + std::to_string(i));
}

AffineBijection AffineBijection::canonical(const IndexSet& s, const IndexSet& t) {
  if (s.isInfinite() != t.isInfinite())
    fail(Errc::FiniteSet, "canonical bijection needs sets of the same kind");
  if (!s.isInfinite()) {
    auto ss = s.sizeIfFinite(), ts = t.sizeIfFinite();
    if (*ss != *ts) fail(Errc::FiniteSet, "canonical bijection between unequal finite sets");
    std::map<std::uint64_t, std::uint64_t> exc;
    for (std::uint64_t k = 0; k < *ss; ++k) exc[s.nth(k)] = t.nth(k);
    return fromPieces(s, t, {}, std::move(exc));
  }
  const auto st = s.enumTail();
  const auto tt = t.enumTail();
  const std::uint64_t rs = st.residues.size();
  const std::uint64_t rt = tt.residues.size();
  const std::uint64_t k0 = std::max(st.stableRank, tt.stableRank);
  const std::uint64_t xLo = s.nth(k0);
  IndexSet lowZone = IndexSet::fromElements(s.elementsBelow(xLo));
  std::map<std::uint64_t, std::uint64_t> exc;
  for (std::uint64_t k = 0; k < k0; ++k) exc[s.nth(k)] = t.nth(k);
  // For x in s with x >= xLo and x = c (mod m_s), rank k = ((x-c)/m_s)*rs + idx(c) + Ds.
  // Split by (k - Dt) mod rt to land in a single target residue.
  std::vector<AffinePiece> pieces;
  const std::uint64_t bigMod = st.modulus * rt;
  for (std::size_t ci = 0; ci < rs; ++ci) {
    const std::uint64_t c = st.residues[ci];
    const std::int64_t Ec =
        static_cast<std::int64_t>(ci) + st.shift - tt.shift;  // k - Dt = q*rs + Ec
    for (std::uint64_t u = 0; u < rt; ++u) {
      // q = u (mod rt) on this sub-class.
      std::int64_t j = posmod(static_cast<std::int64_t>(u * rs) + Ec, static_cast<std::int64_t>(rt));
      // y = ((q*rs + Ec - j)/rt) * m_t + R_t[j], with q = (x - c)/m_s.
      std::int64_t aNum = static_cast<std::int64_t>(rs * tt.modulus);
      std::int64_t den = static_cast<std::int64_t>(rt * st.modulus);
      std::int64_t bNum = -static_cast<std::int64_t>(rs * tt.modulus) * static_cast<std::int64_t>(c) +
                          static_cast<std::int64_t>(st.modulus * tt.modulus) * (Ec - j) +
                          static_cast<std::int64_t>(tt.residues[static_cast<std::size_t>(j)]) * den;
      reduceMap(aNum, bNum, den);
      AffinePiece p;
      p.aNum = aNum;
      p.bNum = bNum;
      p.den = den;
      p.domain =
          s.intersect(IndexSet::residueClass(bigMod, {c + u * st.modulus})).minus(lowZone);
      if (!p.domain.isEmpty()) pieces.push_back(std::move(p));
    }
  }
  return fromPieces(s, t, std::move(pieces), std::move(exc));
}

AffineBijection AffineBijection::glue(const std::vector<AffineBijection>& parts) {
  AffineBijection f;
  f.source_ = IndexSet::empty();
  f.target_ = IndexSet::empty();
  for (const auto& part : parts) {
    if (!f.source_.disjointWith(part.source_))
      fail(Errc::Unsupported, "glue with overlapping sources");
    f.source_ = f.source_.unite(part.source_);
    f.target_ = f.target_.unite(part.target_);
    for (const auto& p : part.pieces_) f.pieces_.push_back(p);
    for (const auto& [k, v] : part.exceptions_) f.exceptions_.emplace(k, v);
  }
  return f;
}

AffineBijection AffineBijection::swap(const IndexSet& s, const IndexSet& t) {
  if (!s.disjointWith(t)) fail(Errc::Unsupported, "swap of overlapping sets");
  AffineBijection fwd = canonical(s, t);
  return glue({fwd, fwd.inverse()});
}

AffineBijection AffineBijection::inverse() const {
  AffineBijection g;
  g.source_ = target_;
  g.target_ = source_;
  for (const auto& [k, v] : exceptions_) g.exceptions_[v] = k;
  for (const auto& p : pieces_) {
    AffinePiece q;
    q.domain = affineImage(p.domain, p.aNum, p.bNum, p.den);
    q.aNum = p.den;
    q.bNum = -p.bNum;
    q.den = p.aNum;
    reduceMap(q.aNum, q.bNum, q.den);
    if (!q.domain.isEmpty()) g.pieces_.push_back(std::move(q));
  }
  return g;
}

AffineBijection AffineBijection::composeAfter(const AffineBijection& f) const {
  const AffineBijection& g = *this;
  if (!(f.target_ == g.source_))
    fail(Errc::Unsupported, "composition target/source mismatch");
  AffineBijection h;
  h.source_ = f.source_;
  h.target_ = g.target_;
  // Exceptions coming from f, and f-piece points that hit g's exceptions.
  std::map<std::uint64_t, std::uint64_t> exc;
  for (const auto& [k, v] : f.exceptions_) exc[k] = g.apply(v);
  std::set<std::uint64_t> pieceExcKeys;
  for (const auto& [y, z] : g.exceptions_) {
    for (const auto& p : f.pieces_) {
      i128 num = (i128)y * p.den - p.bNum;
      if (num < 0 || num % p.aNum != 0) continue;
      std::uint64_t x = static_cast<std::uint64_t>(num / p.aNum);
      if (p.domain.contains(x)) {
        exc[x] = z;
        pieceExcKeys.insert(x);
        break;
      }
    }
  }
  IndexSet cut = IndexSet::fromElements(
      std::vector<std::uint64_t>(pieceExcKeys.begin(), pieceExcKeys.end()));
  for (const auto& p : f.pieces_) {
    IndexSet pDom = p.domain.minus(cut);
    if (pDom.isEmpty()) continue;
    IndexSet pImg = affineImage(pDom, p.aNum, p.bNum, p.den);
    for (const auto& q : g.pieces_) {
      IndexSet mid = pImg.intersect(q.domain);
      if (mid.isEmpty()) continue;
      AffinePiece r;
      // Pull the middle set back through p.
      r.domain = affineImage(mid, p.den, -p.bNum, p.aNum);
      r.aNum = q.aNum * p.aNum;
      r.bNum = q.aNum * p.bNum + q.bNum * p.den;
      r.den = q.den * p.den;
      reduceMap(r.aNum, r.bNum, r.den);
      h.pieces_.push_back(std::move(r));
    }
  }
  h.exceptions_ = std::move(exc);
  return h;
}

IndexSet AffineBijection::imageOf(const IndexSet& s) const {
  IndexSet result = IndexSet::empty();
  std::vector<std::uint64_t> excImg;
  for (const auto& [k, v] : exceptions_)
    if (s.contains(k)) excImg.push_back(v);
  result = result.unite(IndexSet::fromElements(excImg));
  for (const auto& p : pieces_) {
    IndexSet dom = p.domain.intersect(s);
    if (dom.isEmpty()) continue;
    result = result.unite(affineImage(dom, p.aNum, p.bNum, p.den));
  }
  return result;
}

AffineBijection AffineBijection::restrictedTo(const IndexSet& s) const {
  AffineBijection g;
  g.source_ = source_.intersect(s);
  g.target_ = imageOf(g.source_);
  for (const auto& p : pieces_) {
    AffinePiece q = p;
    q.domain = p.domain.intersect(s);
    if (!q.domain.isEmpty()) g.pieces_.push_back(std::move(q));
  }
  for (const auto& [k, v] : exceptions_)
    if (s.contains(k)) g.exceptions_.emplace(k, v);
  return g;
}

bool AffineBijection::checkOnPrefix(std::uint64_t n) const {
  std::set<std::uint64_t> seen;
  AffineBijection inv = inverse();
  std::uint64_t count = n;
  if (auto sz = source_.sizeIfFinite()) count = std::min(count, *sz);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t x = source_.nth(k);
    auto y = tryApply(x);
    if (!y) return false;
    if (!target_.contains(*y)) return false;
    if (!seen.insert(*y).second) return false;
    auto back = inv.tryApply(*y);
    if (!back || *back != x) return false;
  }
  return true;
}

std::string AffineBijection::str() const {
  std::ostringstream os;
  os << "bijection " << source_.str() << " -> " << target_.str() << " [" << pieces_.size()
     << " pieces, " << exceptions_.size() << " exceptions]";
  return os.str();
}

}  // namespace glwidth
