#include "fmlab/rot_scalar.hpp"

#include <ostream>
#include <sstream>

namespace fmlab {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly add(const Poly& x, const Poly& y, bool negate_y = false) {
  Poly r(std::max(x.size(), y.size()));
  for (size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  for (size_t i = 0; i < y.size(); ++i) r[i] = negate_y ? r[i] - y[i] : r[i] + y[i];
  trim(r);
  return r;
}

Poly mul(const Poly& x, const Poly& y) {
  if (x.empty() || y.empty()) return {};
  Poly r(x.size() + y.size() - 1);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  trim(r);
  return r;
}

// p * (1 - c^2)
Poly times_one_minus_c2(const Poly& p) {
  Poly shifted(p.size() + 2);
  for (size_t i = 0; i < p.size(); ++i) shifted[i + 2] = p[i];
  return add(p, shifted, true);
}

Rational horner(const Poly& p, const Rational& c) {
  Rational r;
  for (size_t i = p.size(); i-- > 0;) r = r * c + p[i];
  return r;
}

std::string poly_str(const Poly& p) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << p[i] << ")";
    if (i == 1) os << "c";
    if (i > 1) os << "c^" << i;
  }
  return first ? "0" : os.str();
}

}  // namespace

RotScalar::RotScalar(const Rational& v) {
  if (!v.is_zero()) a_.push_back(v);
}

RotScalar::RotScalar(std::vector<Rational> a, std::vector<Rational> b) : a_(std::move(a)), b_(std::move(b)) {
  trim(a_);
  trim(b_);
}

RotScalar RotScalar::c() { return RotScalar({Rational(0), Rational(1)}, {}); }
RotScalar RotScalar::s() { return RotScalar({}, {Rational(1)}); }

Rational RotScalar::eval(const Rational& c, const Rational& s) const { return horner(a_, c) + s * horner(b_, c); }

std::string RotScalar::str() const {
  if (b_.empty()) return poly_str(a_);
  return poly_str(a_) + " + s*[" + poly_str(b_) + "]";
}

RotScalar operator+(const RotScalar& x, const RotScalar& y) {
  RotScalar r;
  r.a_ = add(x.a_, y.a_);
  r.b_ = add(x.b_, y.b_);
  return r;
}

RotScalar operator-(const RotScalar& x, const RotScalar& y) {
  RotScalar r;
  r.a_ = add(x.a_, y.a_, true);
  r.b_ = add(x.b_, y.b_, true);
  return r;
}

RotScalar operator*(const RotScalar& x, const RotScalar& y) {
  RotScalar r;
  if (x.is_zero() || y.is_zero()) return r;
  r.a_ = add(mul(x.a_, y.a_), times_one_minus_c2(mul(x.b_, y.b_)));
  r.b_ = add(mul(x.a_, y.b_), mul(x.b_, y.a_));
  return r;
}

RotScalar RotScalar::operator-() const { return RotScalar() - *this; }

std::ostream& operator<<(std::ostream& os, const RotScalar& r) { return os << r.str(); }

RotScalar rot_reduce(const BivariatePoly& p) {
  RotScalar acc;
  for (const auto& [mono, coef] : p) {
    auto [i, j] = mono;
    if (coef.is_zero()) continue;
    Poly base(i + 1);
    base[i] = coef;
    // s^j = s^(j mod 2) * (1 - c^2)^(j / 2)
    for (int k = 0; k < j / 2; ++k) base = times_one_minus_c2(base);
    acc += (j % 2 == 0) ? RotScalar(base, {}) : RotScalar({}, base);
  }
  return acc;
}

}  // namespace fmlab
