#include "fmlab/catalogue.hpp"

#include <map>
#include <mutex>

namespace fmlab {

namespace {

Mat unit_matrix(int n, int i, int j) {
  Mat m = zeros<Rational>(n, n);
  m(i, j) = 1;
  return m;
}

Mat diag2(int a, int b) {
  Mat m = zeros<Rational>(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

std::vector<Mat> z2_sign() { return {identity<Rational>(2), diag2(1, -1)}; }

AlgebraPtr build(const std::string& name) {
  GroupPtr z2 = cyclic_group(2);
  GroupPtr z3 = cyclic_group(3);
  GroupPtr s3 = symmetric_group3();
  if (name == "Q") return rationals();
  if (name == "Q^Z2") return rationals(z2);
  if (name == "Q^Z3") return rationals(z3);
  if (name == "Q^S3") return rationals(s3);
  if (name == "Q[Z2]") return group_algebra(z2, trivial_group(), {}, name);
  if (name == "Q[Z2]^Z2") {
    // Z2 has no nontrivial group automorphism; act by the sign g -> -g instead.
    AlgebraPtr base = group_algebra(z2);
    std::vector<Vec> products;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) products.push_back(base->product_vector(i, j));
    return make_algebra(2, products, z2, z2_sign(), name);
  }
  if (name == "Q[Z3]") return group_algebra(z3, trivial_group(), {}, name);
  if (name == "Q[Z3]^Z2") return group_algebra(z3, z2, {{0, 1, 2}, {0, 2, 1}}, name);
  if (name == "Q[S3]^S3") {
    std::vector<std::vector<int>> aut(6, std::vector<int>(6));
    for (int g = 0; g < 6; ++g)
      for (int h = 0; h < 6; ++h) aut[static_cast<size_t>(g)][static_cast<size_t>(h)] = s3->mul(s3->mul(g, h), s3->inv(g));
    return group_algebra(s3, s3, aut, name);
  }
  if (name == "QxQ" || name == "QxQ^Z2") {
    std::vector<Mat> basis = {unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)};
    if (name == "QxQ") return matrix_span_algebra(basis, trivial_group(), {}, name);
    Mat swap = zeros<Rational>(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    return matrix_span_algebra(basis, z2, {identity<Rational>(2), swap}, name);
  }
  if (name == "dual" || name == "dual^Z2") {
    // 1 and x with x^2 = 0, realised as [[a, b], [0, a]].
    Mat x = unit_matrix(2, 0, 1);
    std::vector<Mat> basis = {identity<Rational>(2), x};
    if (name == "dual") return matrix_span_algebra(basis, trivial_group(), {}, name);
    return matrix_span_algebra(basis, z2, z2_sign(), name);
  }
  if (name == "T2" || name == "T2^Z2") {
    std::vector<Mat> basis = {unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 1)};
    if (name == "T2") return matrix_span_algebra(basis, trivial_group(), {}, name);
    return matrix_span_algebra(basis, z2, z2_sign(), name);
  }
  if (name == "M2" || name == "M2^Z2") {
    std::vector<Mat> basis = {unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 0), unit_matrix(2, 1, 1)};
    if (name == "M2") return matrix_span_algebra(basis, trivial_group(), {}, name);
    return matrix_span_algebra(basis, z2, z2_sign(), name);
  }
  if (name == "col" || name == "col^Z2") {
    std::vector<Mat> basis = {unit_matrix(2, 0, 0), unit_matrix(2, 1, 0)};
    if (name == "col") return matrix_span_algebra(basis, trivial_group(), {}, name);
    return matrix_span_algebra(basis, z2, z2_sign(), name);
  }
  if (name == "row" || name == "row^Z2") {
    std::vector<Mat> basis = {unit_matrix(2, 0, 0), unit_matrix(2, 0, 1)};
    if (name == "row") return matrix_span_algebra(basis, trivial_group(), {}, name);
    return matrix_span_algebra(basis, z2, z2_sign(), name);
  }
  if (name == "null1" || name == "null2") {
    int d = name == "null1" ? 1 : 2;
    return make_algebra(d, std::vector<Vec>(static_cast<size_t>(d * d), Vec::Constant(d, Rational(0))),
                        trivial_group(), {}, name);
  }
  if (name == "Q(r2)" || name == "Q(r2)^Z2") {
    // 1 and r with r^2 = 2; Z2 acts by the Galois involution r -> -r.
    std::vector<Vec> p(4, Vec::Constant(2, Rational(0)));
    p[0](0) = 1;
    p[1](1) = 1;
    p[2](1) = 1;
    p[3](0) = 2;
    if (name == "Q(r2)") return make_algebra(2, p, trivial_group(), {}, name);
    return make_algebra(2, p, z2, z2_sign(), name);
  }
  throw PreconditionError("unknown catalogue algebra: " + name);
}

}  // namespace

AlgebraPtr matrix_span_algebra(const std::vector<Mat>& basis, GroupPtr g, const std::vector<Mat>& conj,
                               std::string name) {
  int d = static_cast<int>(basis.size());
  Index n = d ? basis[0].rows() : 0;
  Mat span = zeros<Rational>(n * n, d);
  for (int i = 0; i < d; ++i) span.col(i) = flatten(basis[static_cast<size_t>(i)]);
  auto coords = [&](const Mat& m) {
    SolveResult s = solve_linear(span, flatten(m));
    if (!s.solution) throw PreconditionError("matrix span is not closed under the operation");
    return *s.solution;
  };
  std::vector<Vec> prods;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prods.push_back(coords(mul(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)])));
  std::vector<Mat> act;
  for (size_t x = 0; x < conj.size(); ++x) {
    auto cinv = inverse(conj[x]);
    if (!cinv) throw PreconditionError("conjugating matrix is singular");
    Mat m(d, d);
    for (int i = 0; i < d; ++i) m.col(i) = coords(mul(mul(conj[x], basis[static_cast<size_t>(i)]), *cinv));
    act.push_back(m);
  }
  return make_algebra(d, prods, std::move(g), std::move(act), std::move(name));
}

AlgebraPtr group_algebra(GroupPtr h, GroupPtr g, const std::vector<std::vector<int>>& aut, std::string name) {
  int d = h->order;
  std::vector<Vec> prods;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prods.push_back(unit_vector<Rational>(d, h->mul(i, j)));
  std::vector<Mat> act;
  for (const auto& perm : aut) {
    Mat m = zeros<Rational>(d, d);
    for (int x = 0; x < d; ++x) m(perm[static_cast<size_t>(x)], x) = 1;
    act.push_back(m);
  }
  return make_algebra(d, prods, std::move(g), std::move(act), name.empty() ? "Q[" + h->name + "]" : std::move(name));
}

AlgebraPtr rationals(GroupPtr g) {
  std::string name = g->order == 1 ? "Q" : "Q^" + g->name;
  return make_algebra(1, {unit_vector<Rational>(1, 0)}, std::move(g), {}, name);
}

const std::vector<std::string>& catalogue_names() {
  static const std::vector<std::string> names = {
      "Q",      "Q^Z2",  "Q^Z3",  "Q^S3", "Q[Z2]", "Q[Z2]^Z2", "Q[Z3]", "Q[Z3]^Z2", "Q[S3]^S3",
      "QxQ",    "QxQ^Z2", "dual", "dual^Z2", "T2", "T2^Z2",    "M2",    "M2^Z2",    "col",
      "col^Z2", "row",   "row^Z2", "null1", "null2", "Q(r2)", "Q(r2)^Z2"};
  return names;
}

AlgebraPtr catalogue(const std::string& name) {
  static std::map<std::string, AlgebraPtr> cache;
  static std::mutex lock;
  std::lock_guard<std::mutex> hold(lock);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  AlgebraPtr a = build(name);
  cache.emplace(name, a);
  return a;
}

}  // namespace fmlab
