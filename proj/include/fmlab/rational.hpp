#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <Eigen/Core>

namespace fmlab {

// Exact rational number. Values that fit in 62-bit numerator and denominator
// stay in machine words; anything larger is held by a shared immutable mpq.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(int v) noexcept : num_(v) {}
  Rational(long v) : Rational(static_cast<long long>(v)) {}
  Rational(long long v);
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  // Accepts "p", "-p", "p/q" with decimal integers of any length.
  static Rational parse(std::string_view text);
  std::string str() const;
  mpq_class to_mpq() const;
  double to_double() const;

  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const noexcept;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational inverse() const;

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_mpq(mpq_class q);

  int64_t num_ = 0;
  int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline bool exactly_zero(const Rational& q) { return q.is_zero(); }

}  // namespace fmlab

namespace Eigen {

template <>
struct NumTraits<fmlab::Rational> : GenericNumTraits<fmlab::Rational> {
  typedef fmlab::Rational Real;
  typedef fmlab::Rational NonInteger;
  typedef fmlab::Rational Literal;
  typedef fmlab::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 6
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
