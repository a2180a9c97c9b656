#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fmlab/catalogue.hpp"
#include "fmlab/class_c.hpp"
#include "fmlab/corner51.hpp"

using namespace fmlab;

namespace {

Mat unit2(int i, int j) {
  Mat m = zeros<Rational>(2, 2);
  m(i, j) = 1;
  return m;
}

std::vector<Mat> ones(const AlgebraPtr& a, int n) {
  return std::vector<Mat>(static_cast<size_t>(a->group_order()), identity<Rational>(n));
}

}  // namespace

TEST_CASE("rotation path between the two corners of M2(Q)") {
  ModulePtr q2 = standard_module(catalogue("Q"), 2);
  RotationPath p = find_rotation_path(q2, {unit2(0, 0)}, {unit2(1, 1)}, 1);
  CHECK(p.report.ok());
  CHECK_FALSE(same(p.conj, lift(identity<Rational>(2))));
  // the conjugator is [[c, s], [-s, c]]
  CHECK(p.conj(0, 0) == RotScalar::c());
  CHECK(p.conj(0, 1) == RotScalar::s());
  CHECK(p.conj(1, 0) == -RotScalar::s());
  CHECK(same(evaluate(p.conj, 1, 0), identity<Rational>(2)));
}

TEST_CASE("constant rotation path") {
  ModulePtr q2 = standard_module(catalogue("Q"), 2);
  RotationPath p = find_rotation_path(q2, {unit2(0, 0), unit2(0, 1)}, {unit2(0, 0), unit2(0, 1)}, 1);
  CHECK(p.report.ok());
  CHECK(same(evaluate(p.conj, 0, 1), identity<Rational>(2)));
  CHECK_THROWS_AS(find_rotation_path(q2, {unit2(0, 0)}, {unit2(0, 1)}, 1), PreconditionError);
}

TEST_CASE("rotation path endpoints are checked") {
  ModulePtr q2 = standard_module(catalogue("Q"), 2);
  RotMat r = block_rotation(2, 0, 1, 1);
  RotMat ri = r.transpose();
  RotationPath good = rotation_path(q2, {unit2(0, 0)}, {unit2(1, 1)}, r, ri);
  CHECK(good.report.ok());
  RotationPath bad = rotation_path(q2, {unit2(0, 0)}, {unit2(0, 0)}, r, ri);
  CHECK_FALSE(bad.report.ok());
}

TEST_CASE("Prop 2.2 certificates") {
  AlgebraPtr q = catalogue("Q");
  SUBCASE("E = 0") {
    ModulePtr zero = zero_module(q);
    FunPair v{zero, standard_module(q, 0), Mat(0, 0), {}, "0"};
    Prop22Certificate c = verify_prop22(v);
    CHECK(c.report.ok());
    CHECK(c.n == 0);
  }
  SUBCASE("B = Q, V = id on Q^1") {
    Prop22Certificate c = verify_prop22(identity_funpair(standard_module(q, 1, ones(q, 1))));
    CHECK(c.report.ok());
    CHECK(c.n == 1);
    CHECK(c.m_2n2->dim == 4 * c.m->dim);  // 2n + 2 = 4 blocks
  }
  SUBCASE("B = Q[Z2] with Z2 acting, V = id") {
    AlgebraPtr b = catalogue("Q[Z2]^Z2");
    Prop22Certificate c = verify_prop22(identity_funpair(standard_module(b, 1, ones(b, 1))));
    CHECK(c.report.ok());
    CHECK(c.z_path.report.ok());
    CHECK(c.x_path.report.ok());
  }
}

TEST_CASE("Cor 5.1 witnesses") {
  SUBCASE("canonical action") {
    AlgebraPtr a = catalogue("Q^Z2");
    AlgebraPtr m = matrix_algebra(a, 2, ones(a, 2));
    CornerWitness51 w = corner51_witness(a, 2, m->action);
    CHECK(w.report.ok());
  }
  SUBCASE("twisted action on M2(Q[Z2])") {
    // gamma = alpha (+) (-alpha), so the invertibility witness applies as well
    AlgebraPtr a = catalogue("Q[Z2]^Z2");
    std::vector<Mat> gamma{identity<Rational>(4), block_diag<Rational>({a->action[1], Mat(-a->action[1])})};
    CornerWitness51 w = corner51_witness(a, 2, adjoint_action(a, 2, gamma));
    CHECK(w.report.ok());
    REQUIRE(w.invertibility);
    CHECK(w.invertibility->report.ok());
  }
  SUBCASE("conjugated action on M3(Q)") {
    // e equivariant and the first column invariant force gamma = alpha (+) gamma'
    AlgebraPtr a = catalogue("Q^Z2");
    Mat gamma(3, 3);
    gamma << 1, 0, 0, 0, 0, 1, 0, 1, 0;
    CornerWitness51 w = corner51_witness(a, 3, adjoint_action(a, 3, {identity<Rational>(3), gamma}));
    CHECK(w.report.ok());
    CHECK(w.efy_f.report.ok());
  }
}

TEST_CASE("class C certificates") {
  AlgebraPtr a = catalogue("Q[Z2]^Z2");
  SUBCASE("leaf") {
    ClassCNode n = certify_class_c(leaf(catalogue("M2"), 2));
    CHECK(flatten(n).ok());
    CHECK(n.is_extension);
    CHECK(n.unit.unit);
  }
  SUBCASE("internal tensor along the augmentation") {
    Mat aug(1, 2);
    aug << 1, 1;
    ClassCNode n = certify_class_c(internal_term(leaf(catalogue("Q[Z2]"), 2), {catalogue("Q[Z2]"), catalogue("Q"), aug}));
    CHECK(flatten(n).ok());
    CHECK(n.module->dim == 2);
    REQUIRE(n.transfer);
    CHECK(n.transfer->k_tensor.unit);
  }
  SUBCASE("corner module over Q") {
    ClassCNode n = certify_class_c(corner_term(leaf(catalogue("Q"), 1), 1));
    CHECK(flatten(n).ok());
    CHECK(n.prop22);
  }
  SUBCASE("depth 3 with every node kind") {
    Mat swap(2, 2), sg(2, 2);
    swap << 0, 1, 1, 0;
    sg << 1, 0, 0, -1;
    TermPtr t = corner_term(sum_term(internal_term(leaf(a, 2, {identity<Rational>(2), swap}), {a, a, sg}),
                                     external_term(leaf(a, 1), leaf(catalogue("Q^Z2"), 1))),
                            1);
    CHECK(depth(*t) == 3);
    ClassCNode n = certify_class_c(t);
    Report r = flatten(n);
    CHECK(r.ok());
    CHECK(n.is_extension);
    CHECK(n.unit.unit);
    CHECK(n.module_cofull);
    CHECK(n.theta_cofull);
  }
  SUBCASE("hypothesis failure names the node") {
    // the zero hom into col is fine, but col has no two-sided unit
    AlgebraPtr col = catalogue("col");
    try {
      certify_class_c(internal_term(leaf(catalogue("Q"), 1), {catalogue("Q"), col, Mat::Constant(2, 1, Rational(0))}));
      FAIL("expected a hypothesis failure");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("root") != std::string::npos);
    }
  }
}
