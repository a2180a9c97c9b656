#include "fmlab/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace fmlab {

namespace {

constexpr int64_t kLimit = int64_t{1} << 62;

unsigned __int128 ugcd(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned __int128 uabs(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
}

bool fits(__int128 v) { return v <= kLimit && v >= -kLimit; }

mpz_class wide_to_mpz(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = uabs(v);
  mpz_class hi = static_cast<unsigned long>(static_cast<uint64_t>(u >> 64));
  mpz_class lo = static_cast<unsigned long>(static_cast<uint64_t>(u));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

int64_t mpz_small(const mpz_class& z) { return static_cast<int64_t>(z.get_si()); }

}  // namespace

Rational::Rational(long long v) {
  if (fits(v)) {
    num_ = v;
  } else {
    big_ = std::make_shared<const mpq_class>(mpz_class(std::to_string(v)));
  }
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Rational r;
  if (num == 0) return r;
  unsigned __int128 g = ugcd(uabs(num), static_cast<unsigned __int128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (fits(num) && den <= kLimit) {
    r.num_ = static_cast<int64_t>(num);
    r.den_ = static_cast<int64_t>(den);
    return r;
  }
  mpq_class q(wide_to_mpz(num), wide_to_mpz(den));
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  r.num_ = 0;
  r.den_ = 1;
  return r;
}

Rational Rational::from_mpq(mpq_class q) {
  q.canonicalize();
  Rational r;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (n.fits_slong_p() && d.fits_slong_p()) {
    int64_t ns = mpz_small(n), ds = mpz_small(d);
    if (fits(ns) && ds <= kLimit) {
      r.num_ = ns;
      r.den_ = ds;
      return r;
    }
  }
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  return q;
}

double Rational::to_double() const { return to_mpq().get_d(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  size_t start = s.find_first_not_of(" \t");
  if (start == std::string::npos) throw std::invalid_argument("empty rational literal");
  s = s.substr(start);
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  size_t slash = s.find('/');
  std::string ns = s.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(ns) || !valid_int(ds)) throw std::invalid_argument("bad rational literal: " + s);
  mpz_class n(strip_plus(ns)), d(strip_plus(ds));
  if (d == 0) throw std::invalid_argument("zero denominator in literal: " + s);
  return from_mpq(mpq_class(n, d));
}

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return Rational::from_wide(__int128(a.num_) + b.num_, a.den_);
    return Rational::from_wide(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
                               __int128(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) {
  if (b.is_zero()) return a;
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return Rational::from_wide(__int128(a.num_) - b.num_, a.den_);
    return Rational::from_wide(__int128(a.num_) * b.den_ - __int128(b.num_) * a.den_,
                               __int128(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() - b.to_mpq());
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  if (!a.big_ && !b.big_)
    return Rational::from_wide(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational");
  if (a.is_zero()) return Rational();
  if (!a.big_ && !b.big_)
    return Rational::from_wide(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational Rational::inverse() const { return Rational(1) / *this; }

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    __int128 l = __int128(a.num_) * b.den_, r = __int128(b.num_) * a.den_;
    return l <=> r;
  }
  int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace fmlab
