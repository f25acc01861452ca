#include "glwidth/automorphism.hpp"

#include <algorithm>
#include <sstream>

namespace glwidth {

struct Automorphism::Node {
  Kind kind = Kind::Identity;

  // Finitary
  std::vector<std::uint64_t> support;
  FiniteMatrix matrix;  // also the pattern block matrix

  // Monomial
  std::optional<AffineBijection> bij;
  std::optional<CoeffRule> coeffs;

  // Pattern / Block
  std::optional<IndexSet> set;        // pattern set or block base
  std::optional<IndexSet> reference;  // block reference
  std::vector<Automorphism> table;
  std::vector<Automorphism> tail;

  // Compose / Inverse
  std::vector<Automorphism> factors;

  // Lazy pushdown of an Inverse node, for evaluation.
  mutable std::mutex invMutex;
  mutable std::optional<Automorphism> invMemo;
};

Automorphism Automorphism::identity(const Field& f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Identity;
  return Automorphism(f, std::move(n));
}

Automorphism Automorphism::finitary(const Field& f, std::vector<std::uint64_t> support,
                                    FiniteMatrix matrix) {
  if (support.size() != matrix.dim()) fail(Errc::Unsupported, "finitary support/matrix mismatch");
  if (!std::is_sorted(support.begin(), support.end()) ||
      std::adjacent_find(support.begin(), support.end()) != support.end())
    fail(Errc::Unsupported, "finitary support must be sorted and duplicate-free");
  if (!matInvertible(matrix)) fail(Errc::Singular, "finitary matrix not invertible");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Finitary;
  n->support = std::move(support);
  n->matrix = std::move(matrix);
  return Automorphism(f, std::move(n));
}

Automorphism Automorphism::monomial(const Field& f, AffineBijection bij, CoeffRule coeffs) {
  if (!(bij.sourceSet() == bij.targetSet()))
    fail(Errc::Unsupported, "monomial map must permute its source set");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Monomial;
  n->bij = std::move(bij);
  n->coeffs = std::move(coeffs);
  return Automorphism(f, std::move(n));
}

Automorphism Automorphism::monomial(const Field& f, AffineBijection bij) {
  return monomial(f, std::move(bij), CoeffRule(f));
}

Automorphism Automorphism::patternBlock(const Field& f, IndexSet s, FiniteMatrix blockMatrix) {
  if (!s.isInfinite()) fail(Errc::FiniteSet, "pattern block set must be infinite");
  if (blockMatrix.dim() == 0) fail(Errc::Unsupported, "pattern block needs positive size");
  if (!matInvertible(blockMatrix)) fail(Errc::Singular, "pattern block matrix not invertible");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pattern;
  n->set = std::move(s);
  n->matrix = std::move(blockMatrix);
  return Automorphism(f, std::move(n));
}

Automorphism Automorphism::blockTransport(const Field& f, IndexSet base, IndexSet reference,
                                          std::vector<Automorphism> table,
                                          std::vector<Automorphism> tailPeriod) {
  if (!base.isInfinite()) fail(Errc::FiniteSet, "block transport base must be infinite");
  if (!reference.isInfinite()) fail(Errc::FiniteSet, "block transport reference must be infinite");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Block;
  n->set = std::move(base);
  n->reference = std::move(reference);
  n->table = std::move(table);
  n->tail = std::move(tailPeriod);
  return Automorphism(f, std::move(n));
}

Automorphism Automorphism::compose(std::vector<Automorphism> factors) {
  if (factors.empty()) fail(Errc::Unsupported, "empty composition");
  if (factors.size() == 1) return factors[0];
  Field f = factors[0].field();
  for (const auto& a : factors)
    if (a.field() != f) fail(Errc::Unsupported, "mixed-field composition");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compose;
  n->factors = std::move(factors);
  return Automorphism(f, std::move(n));
}

Automorphism Automorphism::inverseNode(Automorphism inner) {
  Field f = inner.field();
  auto n = std::make_shared<Node>();
  n->kind = Kind::Inverse;
  n->factors = {std::move(inner)};
  return Automorphism(f, std::move(n));
}

Automorphism::Kind Automorphism::kind() const { return node_->kind; }

const std::vector<std::uint64_t>& Automorphism::finSupport() const { return node_->support; }
const FiniteMatrix& Automorphism::finMatrix() const { return node_->matrix; }
const AffineBijection& Automorphism::monoBijection() const { return *node_->bij; }
const CoeffRule& Automorphism::monoCoeffs() const { return *node_->coeffs; }
const IndexSet& Automorphism::patternSet() const { return *node_->set; }
const FiniteMatrix& Automorphism::patternMatrix() const { return node_->matrix; }
const IndexSet& Automorphism::blockBase() const { return *node_->set; }
const IndexSet& Automorphism::blockReference() const { return *node_->reference; }
const std::vector<Automorphism>& Automorphism::blockTable() const { return node_->table; }
const std::vector<Automorphism>& Automorphism::blockTail() const { return node_->tail; }
const std::vector<Automorphism>& Automorphism::composeFactors() const { return node_->factors; }
const Automorphism& Automorphism::inverseInner() const { return node_->factors[0]; }

namespace {

const Automorphism* blockRule(const std::vector<Automorphism>& table,
                              const std::vector<Automorphism>& tail, std::uint32_t n) {
  if (n < table.size()) return &table[n];
  if (tail.empty()) return nullptr;  // identity beyond the table
  return &tail[(n - table.size()) % tail.size()];
}

}  // namespace

Vector Automorphism::applyToBasis(std::uint64_t i) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Identity:
      return Vector::basis(i, field_);
    case Kind::Finitary: {
      auto it = std::lower_bound(n.support.begin(), n.support.end(), i);
      if (it == n.support.end() || *it != i) return Vector::basis(i, field_);
      std::size_t j = static_cast<std::size_t>(it - n.support.begin());
      Vector out;
      for (std::size_t t = 0; t < n.support.size(); ++t)
        out.addTerm(n.support[t], n.matrix.at(t, j));
      return out;
    }
    case Kind::Monomial: {
      auto y = n.bij->tryApply(i);
      if (!y) return Vector::basis(i, field_);
      Vector out;
      out.addTerm(*y, n.coeffs->at(i));
      return out;
    }
    case Kind::Pattern: {
      const IndexSet& s = *n.set;
      if (!s.contains(i)) return Vector::basis(i, field_);
      std::uint64_t r = s.rankOf(i);
      std::uint64_t k = n.matrix.dim();
      std::uint64_t blockStart = (r / k) * k;
      std::size_t j = static_cast<std::size_t>(r - blockStart);
      Vector out;
      for (std::size_t t = 0; t < k; ++t)
        out.addTerm(s.nth(blockStart + t), n.matrix.at(t, j));
      return out;
    }
    case Kind::Block: {
      const IndexSet& base = *n.set;
      if (!base.contains(i)) return Vector::basis(i, field_);
      DyadicPartition part(base);
      std::uint32_t pn = part.partIndexOf(i);
      const Automorphism* rule = blockRule(n.table, n.tail, pn);
      if (rule == nullptr) return Vector::basis(i, field_);
      const IndexSet& ref = *n.reference;
      std::uint64_t k = part.rankInPart(i);
      Vector w = rule->applyToBasis(ref.nth(k));
      Vector out;
      for (const auto& [m, c] : w.entries()) {
        if (!ref.contains(m))
          fail(Errc::UnsupportedAlpha,
               "block rule leaves its reference set at index " + std::to_string(m));
        out.addTerm(part.nthOfPart(pn, ref.rankOf(m)), c);
      }
      return out;
    }
    case Kind::Compose: {
      Vector v = Vector::basis(i, field_);
      for (auto it = n.factors.rbegin(); it != n.factors.rend(); ++it) v = it->applyTo(v);
      return v;
    }
    case Kind::Inverse: {
      {
        std::lock_guard<std::mutex> lock(n.invMutex);
        if (!n.invMemo) n.invMemo = n.factors[0].inverse();
      }
      return n.invMemo->applyToBasis(i);
    }
  }
  fail(Errc::Unsupported, "unreachable");
}

Vector Automorphism::applyTo(const Vector& v) const {
  Vector out;
  for (const auto& [i, c] : v.entries()) out = out + applyToBasis(i).scaled(c);
  return out;
}

Automorphism Automorphism::inverse() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Identity:
      return *this;
    case Kind::Finitary:
      return finitary(field_, n.support, matInverse(n.matrix));
    case Kind::Monomial: {
      AffineBijection inv = n.bij->inverse();
      CoeffRule c = n.coeffs->pulledBackThrough(inv).inverted();
      return monomial(field_, std::move(inv), std::move(c));
    }
    case Kind::Pattern:
      return patternBlock(field_, *n.set, matInverse(n.matrix));
    case Kind::Block: {
      std::vector<Automorphism> table, tail;
      table.reserve(n.table.size());
      for (const auto& a : n.table) table.push_back(a.inverse());
      tail.reserve(n.tail.size());
      for (const auto& a : n.tail) tail.push_back(a.inverse());
      return blockTransport(field_, *n.set, *n.reference, std::move(table), std::move(tail));
    }
    case Kind::Compose: {
      std::vector<Automorphism> rev;
      rev.reserve(n.factors.size());
      for (auto it = n.factors.rbegin(); it != n.factors.rend(); ++it) rev.push_back(it->inverse());
      return compose(std::move(rev));
    }
    case Kind::Inverse:
      return n.factors[0];
  }
  fail(Errc::Unsupported, "unreachable");
}

std::size_t Automorphism::nodeCount() const {
  const Node& n = *node_;
  std::size_t total = 1;
  for (const auto& a : n.table) total += a.nodeCount();
  for (const auto& a : n.tail) total += a.nodeCount();
  for (const auto& a : n.factors) total += a.nodeCount();
  return total;
}

std::string Automorphism::str() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::Identity:
      return "id";
    case Kind::Finitary:
      return "finitary[" + std::to_string(n.support.size()) + "]";
    case Kind::Monomial:
      return "monomial[" + std::to_string(n.bij->pieces().size()) + "p]";
    case Kind::Pattern:
      return "pattern[" + std::to_string(n.matrix.dim()) + "]";
    case Kind::Block:
      return "block[" + std::to_string(n.table.size()) + "+" + std::to_string(n.tail.size()) + "]";
    case Kind::Compose: {
      std::ostringstream os;
      os << "(";
      for (std::size_t i = 0; i < n.factors.size(); ++i) os << (i ? " . " : "") << n.factors[i].str();
      os << ")";
      return os.str();
    }
    case Kind::Inverse:
      return "inv(" + n.factors[0].str() + ")";
  }
  return "?";
}

AgreeReport agreeToDepth(const Automorphism& a, const Automorphism& b, std::uint64_t n) {
  AgreeReport rep;
  for (std::uint64_t i = 0; i <= n; ++i) {
    Vector left = a.applyToBasis(i);
    Vector right = b.applyToBasis(i);
    if (!(left == right)) {
      rep.agree = false;
      rep.witness = i;
      rep.left = std::move(left);
      rep.right = std::move(right);
      return rep;
    }
  }
  return rep;
}

bool fixesPointwiseToDepth(const Automorphism& a, const IndexSet& s, std::uint64_t n) {
  for (std::uint64_t i = 0; i <= n; ++i) {
    if (!s.contains(i)) continue;
    if (!(a.applyToBasis(i) == Vector::basis(i, a.field()))) return false;
  }
  return true;
}

bool stabilizesToDepth(const Automorphism& a, const IndexSet& s, std::uint64_t n) {
  Automorphism inv = a.inverse();
  for (std::uint64_t i = 0; i <= n; ++i) {
    if (!s.contains(i)) continue;
    if (!a.applyToBasis(i).supportInside(s)) return false;
    if (!inv.applyToBasis(i).supportInside(s)) return false;
  }
  return true;
}

Automorphism transport(const Automorphism& a, const AffineBijection& b) {
  const IndexSet& s = b.sourceSet();
  const IndexSet& t = b.targetSet();
  AffineBijection total;
  if (s == t) {
    total = AffineBijection::glue({b, AffineBijection::identityOn(s.complement())});
  } else {
    IndexSet sc = s.complement();
    IndexSet tc = t.complement();
    if (sc.isInfinite() != tc.isInfinite())
      fail(Errc::OverlapUnresolved, "complements of transport source/target differ in kind");
    if (!sc.isInfinite()) {
      auto a1 = sc.sizeIfFinite();
      auto b1 = tc.sizeIfFinite();
      if (*a1 != *b1)
        fail(Errc::OverlapUnresolved, "finite complements of unequal size in transport");
    }
    total = AffineBijection::glue({b, AffineBijection::canonical(sc, tc)});
  }
  Automorphism hat = Automorphism::monomial(a.field(), total);
  return Automorphism::compose({hat, a, hat.inverse()});
}

Automorphism standardInvolution(const Field& f, const IndexSet& ambient) {
  IndexSet evens = rankResidueSubset(ambient, 2, 0);
  IndexSet odds = rankResidueSubset(ambient, 2, 1);
  return Automorphism::monomial(f, AffineBijection::swap(evens, odds));
}

}  // namespace glwidth
