#include "glwidth/scalar.hpp"

namespace glwidth {

namespace {

bool isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

// Extended Euclid; n must be nonzero mod p.
std::uint64_t invMod(std::uint64_t n, std::uint64_t p) {
  std::int64_t t = 0, newT = 1;
  std::int64_t r = static_cast<std::int64_t>(p), newR = static_cast<std::int64_t>(n % p);
  while (newR != 0) {
    std::int64_t q = r / newR;
    std::int64_t tmp = t - q * newT;
    t = newT;
    newT = tmp;
    tmp = r - q * newR;
    r = newR;
    newR = tmp;
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!isPrime(p)) fail(Errc::BadDocument, "field characteristic must be 0 or prime, got " + std::to_string(p));
  return Field(p);
}

Scalar Scalar::ofInt(const Field& f, long long n) {
  Scalar s;
  s.p_ = f.characteristic();
  if (s.p_ == 0) {
    s.rat_ = mpq_class(mpz_class(std::to_string(n)));
  } else {
    long long r = n % static_cast<long long>(s.p_);
    if (r < 0) r += static_cast<long long>(s.p_);
    s.rep_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) fail(Errc::Singular, "zero denominator");
  Scalar s;
  s.p_ = 0;
  s.rat_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  s.rat_.canonicalize();
  return s;
}

Scalar Scalar::fromMpq(mpq_class q) {
  Scalar s;
  s.p_ = 0;
  q.canonicalize();
  s.rat_ = std::move(q);
  return s;
}

void Scalar::checkSameField(const Scalar& o) const {
  if (p_ != o.p_) fail(Errc::Unsupported, "mixed-field scalar arithmetic");
}

Scalar Scalar::operator+(const Scalar& o) const {
  checkSameField(o);
  Scalar r;
  r.p_ = p_;
  if (p_ == 0)
    r.rat_ = rat_ + o.rat_;
  else
    r.rep_ = (rep_ + o.rep_) % p_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  checkSameField(o);
  Scalar r;
  r.p_ = p_;
  if (p_ == 0)
    r.rat_ = rat_ - o.rat_;
  else
    r.rep_ = (rep_ + p_ - o.rep_) % p_;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  checkSameField(o);
  Scalar r;
  r.p_ = p_;
  if (p_ == 0)
    r.rat_ = rat_ * o.rat_;
  else
    r.rep_ = mulMod(rep_, o.rep_, p_);
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.p_ = p_;
  if (p_ == 0)
    r.rat_ = -rat_;
  else
    r.rep_ = rep_ == 0 ? 0 : p_ - rep_;
  return r;
}

Scalar Scalar::inverse() const {
  if (isZero()) fail(Errc::Singular, "inverse of zero");
  Scalar r;
  r.p_ = p_;
  if (p_ == 0)
    r.rat_ = 1 / rat_;
  else
    r.rep_ = invMod(rep_, p_);
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? rat_ == o.rat_ : rep_ == o.rep_;
}

std::string Scalar::str() const {
  return p_ == 0 ? rat_.get_str() : std::to_string(rep_);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) fail(Errc::BadDocument, "empty scalar literal");
  if (f.isRational()) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) fail(Errc::BadDocument, "bad rational literal '" + text + "'");
    q.canonicalize();
    return fromMpq(q);
  }
  // Prime field: accept an optionally signed integer, or a/b with b invertible.
  auto slash = text.find('/');
  auto parseInt = [&](const std::string& t) -> long long {
    try {
      std::size_t used = 0;
      long long v = std::stoll(t, &used);
      if (used != t.size()) fail(Errc::BadDocument, "bad integer literal '" + t + "'");
      return v;
    } catch (const std::invalid_argument&) {
      fail(Errc::BadDocument, "bad integer literal '" + t + "'");
    } catch (const std::out_of_range&) {
      fail(Errc::BadDocument, "integer literal out of range '" + t + "'");
    }
  };
  if (slash == std::string::npos) return ofInt(f, parseInt(text));
  Scalar num = ofInt(f, parseInt(text.substr(0, slash)));
  Scalar den = ofInt(f, parseInt(text.substr(slash + 1)));
  return num * den.inverse();
}

}  // namespace glwidth
