#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fmlab/catalogue.hpp"
#include "fmlab/certificate.hpp"
#include "fmlab/coefficients.hpp"

using namespace fmlab;

// Frozen outcomes. The expected values were derived by hand from the product
// tables and are not read back from the library.

namespace {

struct SubCase {
  bool hom = false;
  bool extension = false;
};

// Inclusion of the right submodule of A^1 generated by v, functionals phi o U, U* = restriction inverse.
SubCase sub_inclusion(const AlgebraPtr& a, const Vec& v) {
  ModulePtr f = standard_module(a, 1);
  Subspace s(2);
  s.insert(v);
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& b : s.basis())
      for (const auto& r : f->raction) grew = s.insert(mul(r, b)) || grew;
  }
  Mat basis = s.basis_matrix().transpose();
  std::vector<Mat> funcs;
  for (const auto& phi : f->functionals) funcs.push_back(mul(phi, basis));
  FunPair p{submodule(f, basis, funcs), f, basis, f->functionals, "sub"};
  SubCase out;
  out.hom = check_functional_hom(p).ok();
  if (out.hom) out.extension = decide_functional_extension(p).extension;
  return out;
}

}  // namespace

TEST_CASE("the only small non-extension lives over the row algebra") {
  // Over row = {[[a, b], [0, 0]]} the words are xi -> E11 xi = xi and 0, so they
  // see all of xi; span{E12} cannot reach E11. Every other dimension-2 algebra
  // with trivial group has no such inclusion among generators in {-1, 0, 1}^2.
  std::set<std::string> found, algebras;
  int cases = 0;
  for (const auto& name : catalogue_names()) {
    AlgebraPtr a = catalogue(name);
    if (a->dim != 2 || a->group_order() != 1) continue;
    algebras.insert(name);
    for (int x = -1; x <= 1; ++x)
      for (int y = -1; y <= 1; ++y) {
        if (x == 0 && y == 0) continue;
        Vec v(2);
        v << x, y;
        SubCase c = sub_inclusion(a, v);
        ++cases;
        if (c.hom && !c.extension) found.insert(name + " (" + std::to_string(x) + "," + std::to_string(y) + ")");
      }
  }
  CHECK(algebras == std::set<std::string>{"Q[Z2]", "QxQ", "dual", "col", "row", "null2", "Q(r2)"});
  CHECK(cases == 56);
  CHECK(found == std::set<std::string>{"row (0,-1)", "row (0,1)"});
}

TEST_CASE("col: the E11 coefficient does not push the identity forward") {
  // col = {[[a, 0], [b, 0]]}, pi(a E11 + b E21) = a. Relations xi.c - xi pi(c)
  // all vanish, so E (x)_pi Q = Q^2, while the only functional left is (a, b) -> a.
  AlgebraPtr col = catalogue("col"), q = catalogue("Q");
  Mat r(1, 2);
  r << 1, 0;
  AlgebraHom pi{col, q, r};
  REQUIRE(check_algebra_hom(pi).ok());
  ModulePtr e = standard_module(col, 1);
  InternalTensor t = internal_tensor(e, pi);
  CHECK(t.module->dim == 2);
  CHECK(t.relations.rank() == 0);
  CHECK(t.module->theta->dim() == 1);

  REQUIRE(find_unit(*col, Side::right).unit);
  ChangedCoefficients cc = change_coefficients(identity_funpair(e), pi);
  Mat expected(1, 2);
  expected << 1, 0;
  CHECK(same(cc.v.u, expected));
  CHECK_FALSE(cc.report.ok());
  bool named = false;
  for (const auto& f : cc.report.failures()) named = named || f == "V: U injective";
  CHECK(named);

  // the same through the certificate path
  Json doc{{"format", kInstanceFormat},
           {"funpairs", {{"U", {{"identity", {{"standard", {{"algebra", "col"}, {"n", 1}}}}}}}}},
           {"homs", {{"pi", {{"source", "col"}, {"target", "Q"}, {"matrix", to_json(r)}}}}},
           {"verify", {{"lemma41", {{"funpair", "U"}, {"pi", "pi"}}}}}};
  Certificate c = verify_lemma("lemma41", doc);
  CHECK_FALSE(c.ok());
  for (const auto& f : c.report.failures()) CHECK(f.rfind("hypothesis: ", 0) != 0);
}

TEST_CASE("failed parses leave no stale cycle marks") {
  Json doc = Json::parse(R"({"modules": {"bad": {"standard": {"algebra": "missing", "n": 1}},
                                         "ok": {"direct_sum": [{"standard": {"algebra": "Q", "n": 1}}]}}})");
  Instance in(doc);
  CHECK_THROWS_AS(in.module(Json("bad")), ParseError);
  try {
    in.module(Json("bad"));
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unresolved algebra") != std::string::npos);
  }
  CHECK(in.module(Json("ok"))->dim == 1);
}

TEST_CASE("sign action on Q[Z2]") {
  // g -> -g is the only nontrivial automorphism; the augmentation is not equivariant for it
  AlgebraPtr a = catalogue("Q[Z2]^Z2");
  Mat sign(2, 2);
  sign << 1, 0, 0, -1;
  CHECK(same(a->action[1], sign));
  Mat aug(1, 2);
  aug << 1, 1;
  CHECK_FALSE(check_algebra_hom({a, catalogue("Q^Z2"), aug}).ok());
}
