#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fmlab/rational.hpp"

namespace fmlab {

// Element of Q[c,s]/(c^2+s^2-1) in the normal form a(c) + s*b(c).
// Coefficient vectors are indexed by the power of c and carry no trailing zeros.
class RotScalar {
 public:
  RotScalar() = default;
  RotScalar(int v) : RotScalar(Rational(v)) {}
  RotScalar(const Rational& v);
  RotScalar(std::vector<Rational> a, std::vector<Rational> b);

  static RotScalar c();
  static RotScalar s();

  const std::vector<Rational>& a() const { return a_; }
  const std::vector<Rational>& b() const { return b_; }

  Rational eval(const Rational& c, const Rational& s) const;
  bool is_zero() const { return a_.empty() && b_.empty(); }
  std::string str() const;

  friend RotScalar operator+(const RotScalar& x, const RotScalar& y);
  friend RotScalar operator-(const RotScalar& x, const RotScalar& y);
  friend RotScalar operator*(const RotScalar& x, const RotScalar& y);
  RotScalar operator-() const;
  RotScalar& operator+=(const RotScalar& o) { return *this = *this + o; }
  RotScalar& operator-=(const RotScalar& o) { return *this = *this - o; }
  RotScalar& operator*=(const RotScalar& o) { return *this = *this * o; }
  friend bool operator==(const RotScalar& x, const RotScalar& y) = default;

 private:
  std::vector<Rational> a_, b_;
};

std::ostream& operator<<(std::ostream& os, const RotScalar& r);

inline bool exactly_zero(const RotScalar& r) { return r.is_zero(); }

// Polynomial in c and s before reduction; key (i, j) is the monomial c^i s^j.
using BivariatePoly = std::map<std::pair<int, int>, Rational>;

RotScalar rot_reduce(const BivariatePoly& p);

}  // namespace fmlab

namespace Eigen {

template <>
struct NumTraits<fmlab::RotScalar> : GenericNumTraits<fmlab::RotScalar> {
  typedef fmlab::RotScalar Real;
  typedef fmlab::RotScalar NonInteger;
  typedef fmlab::RotScalar Literal;
  typedef fmlab::RotScalar Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 40
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
