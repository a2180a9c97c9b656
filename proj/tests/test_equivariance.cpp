#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmlab/catalogue.hpp"
#include "fmlab/equivariance.hpp"

using namespace fmlab;

namespace {

Mat swap2() {
  Mat s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

Mat scalar(int v) { return Mat::Constant(1, 1, Rational(v)); }

// A^1 -> A^2 onto the first coordinate over an algebra with the group forgotten.
FunPair first_inclusion(const AlgebraPtr& a) {
  ModulePtr e = standard_module(a, 1), f = standard_module(a, 2);
  Mat j = zeros<Rational>(2, 1);
  j(0, 0) = 1;
  FunPair p{e, f, kron(j, identity<Rational>(a->dim)), {}, "incl"};
  for (const auto& phi : e->functionals) p.ustar.push_back(mul(phi, Mat(p.u.transpose())));
  return p;
}

}  // namespace

TEST_CASE("averaging over the trivial group is the identity") {
  ModulePtr e = standard_module(catalogue("T2"), 2);
  Averaging av = average_extension(e);
  CHECK(av.report.ok());
  CHECK(same(av.pi.u, identity<Rational>(e->dim)));
  for (size_t k = 0; k < e->functionals.size(); ++k) CHECK(same(av.pi.ustar[k], e->functionals[k]));
}

TEST_CASE("averaging the regular Z2 module") {
  AlgebraPtr a = with_group(catalogue("Q[Z2]"), cyclic_group(2));
  ModulePtr e = standard_module_with_action(a, 1, {identity<Rational>(2), swap2()});
  Averaging av = average_extension(e);
  CHECK(av.report.ok());
  // pi(xi) = xi (+) S_g(xi)
  CHECK(same(Mat(av.pi.u.block(0, 0, 2, 2)), identity<Rational>(2)));
  CHECK(same(Mat(av.pi.u.block(2, 0, 2, 2)), swap2()));
  // pi*(phi) = 1/2 (phi (+) phi o S_g)
  const Mat& phi = e->functionals[0];
  CHECK(same(Mat(av.pi.ustar[0].block(0, 0, 2, 2)), Mat(phi * Rational(1, 2))));
  CHECK(same(Mat(av.pi.ustar[0].block(0, 2, 2, 2)), Mat(mul(phi, swap2()) * Rational(1, 2))));
  // the explicit witness solves the system for every basis eta
  CHECK(check_averaging_witness(av).ok());
  ExtensionDecision d = decide_functional_extension(av.pi);
  REQUIRE(d.extension);
}

TEST_CASE("averaging is equivariant for every h") {
  for (const char* name : {"Q[Z2]^Z2", "Q[Z3]^Z2", "Q^S3", "M2^Z2"}) {
    CAPTURE(name);
    AlgebraPtr a = catalogue(name);
    std::vector<Mat> rho;
    for (int h = 0; h < a->group_order(); ++h) rho.push_back(identity<Rational>(1));
    Averaging av = average_extension(standard_module(a, 1, rho));
    CHECK(av.report.ok());
    for (int h = 0; h < a->group_order(); ++h)
      CHECK(same(mul(av.pi.u, av.pi.source->gaction[static_cast<size_t>(h)]),
                 mul(av.pi.target->gaction[static_cast<size_t>(h)], av.pi.u)));
  }
}

TEST_CASE("amplifying non-equivariant extensions") {
  AlgebraPtr q2 = catalogue("Q^Z2");
  AlgebraPtr q = forget_group(q2);
  Amplified id = amplify_nonequivariant(identity_funpair(standard_module(q, 1)), q2);
  CHECK(id.report.ok());
  CHECK(same(id.sigma.u, identity<Rational>(2)));

  Amplified s = amplify_nonequivariant(first_inclusion(q), q2);
  CHECK(s.report.ok());
  CHECK(s.sigma.source->dim == 2);
  CHECK(s.sigma.target->dim == 4);
  for (int h = 0; h < 2; ++h)
    CHECK(same(mul(s.sigma.u, s.sigma.source->gaction[static_cast<size_t>(h)]),
               mul(s.sigma.target->gaction[static_cast<size_t>(h)], s.sigma.u)));
}

TEST_CASE("plain-module extension over the trivial group") {
  ModulePtr e = standard_module(catalogue("Q[Z2]"), 2);
  PlainExtension pe = plain_module_extension(e);
  CHECK(pe.report.ok());
  CHECK(same(pe.pi.u, identity<Rational>(e->dim)));
  CHECK(same(pe.v.u, identity<Rational>(e->dim)));
}

TEST_CASE("plain-module extension of the sign action on Q") {
  AlgebraPtr q = catalogue("Q^Z2");
  ModulePtr e = standard_module_with_action(q, 1, {scalar(1), scalar(-1)});
  PlainExtension pe = plain_module_extension(e);
  CHECK(pe.report.ok());
  Mat first = zeros<Rational>(2, 1);
  first(0, 0) = 1;
  CHECK(same(mul(pe.v.u, pe.pi.u), first));
  // W U_h = (S_h (x) tau_h) W
  for (int h = 0; h < 2; ++h)
    CHECK(same(mul(pe.w.u, pe.w.source->gaction[static_cast<size_t>(h)]),
               mul(pe.w.target->gaction[static_cast<size_t>(h)], pe.w.u)));
  CHECK(same(pe.x, averaging_basis(2)));
}

TEST_CASE("averaging basis") {
  for (int m : {1, 2, 3, 6}) {
    Mat x = averaging_basis(m);
    Vec ones = Vec::Constant(m, Rational(1));
    CHECK(same<Rational>(mul(x, ones), unit_vector<Rational>(m, 0)));
    for (int j = 0; j < m; ++j) CHECK(x(0, j) == Rational(1, m));
    CHECK(inverse(x));
  }
}

TEST_CASE("twisted plain modules over S3") {
  AlgebraPtr a = catalogue("Q^S3");
  // S_g = sign(g) on Q^1; the transpositions are the elements of order 2
  const FinGroup& g = *a->group;
  std::vector<Mat> s;
  for (int x = 0; x < g.order; ++x) {
    int order = 1, y = x;
    while (y != g.identity) {
      y = g.mul(y, x);
      ++order;
    }
    s.push_back(scalar(order == 2 ? -1 : 1));
  }
  PlainExtension pe = plain_module_extension(standard_module_with_action(a, 1, s));
  CHECK(pe.report.ok());
  Mat first = zeros<Rational>(6, 1);
  first(0, 0) = 1;
  CHECK(same(mul(pe.v.u, pe.pi.u), first));
}
