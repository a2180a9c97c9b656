#pragma once

// Generators and oracles shared by the property tests and the acceptance run.

#include <optional>
#include <utility>
#include <vector>

#include "fmlab/catalogue.hpp"
#include "fmlab/suite.hpp"

namespace fmlab::testing {

inline Vec random_vec(Rng& rng, Index n, int lo = -3, int hi = 3) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = Rational(rng.range(lo, hi));
  return v;
}

// Inclusion of the right submodule of A^n generated by a few random vectors,
// with functionals phi o U and U*(phi o U) = phi. Empty unless this is a
// functional homomorphism.
inline std::optional<FunPair> random_sub_inclusion(Rng& rng, const AlgebraPtr& a, int n) {
  ModulePtr f = standard_module(a, n);
  Subspace s(f->dim);
  int gens = rng.range(1, 2);
  for (int k = 0; k < gens; ++k) s.insert(random_vec(rng, f->dim));
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& v : s.basis())
      for (const auto& r : f->raction) grew = s.insert(mul(r, v)) || grew;
  }
  if (s.rank() == 0) return std::nullopt;
  Mat basis = s.basis_matrix().transpose();
  std::vector<Mat> funcs;
  for (const auto& phi : f->functionals) funcs.push_back(mul(phi, basis));
  FunPair p{submodule(f, basis, funcs), f, basis, f->functionals, "sub"};
  if (!check_functional_hom(p).ok()) return std::nullopt;
  return p;
}

// Brute force from the definition. The graph {(phi, U*(phi))} is closed under
// left multiplication and the group starting from the generator pairs, without
// going through the library's Theta basis or its U* extension. Then for each
// basis eta, the stacked values U*(phi)(eta) must lie in the column span of
// the stacked phi.
inline bool oracle_extension(const FunPair& p) {
  const FunctionalModule& e = *p.source;
  const FunctionalModule& f = *p.target;
  const Algebra& a = *e.coeff;
  int d = a.dim;
  std::vector<std::pair<Mat, Mat>> graph;
  Subspace seen(static_cast<Index>(d) * (e.dim + f.dim));
  auto add = [&](const Mat& phi, const Mat& psi) {
    Vec v(static_cast<Index>(d) * (e.dim + f.dim));
    v << flatten(phi), flatten(psi);
    if (seen.insert(v)) graph.emplace_back(phi, psi);
  };
  for (size_t k = 0; k < e.functionals.size(); ++k) add(e.functionals[k], p.ustar[k]);
  for (size_t i = 0; i < graph.size(); ++i) {
    auto [phi, psi] = graph[i];
    for (int k = 0; k < d; ++k) add(mul(a.left(k), phi), mul(a.left(k), psi));
    for (int g = 0; g < a.group->order; ++g) add(translate(a, e.gaction, phi, g), translate(a, f.gaction, psi, g));
  }
  Index rows = static_cast<Index>(graph.size()) * d;
  Mat stack(rows, e.dim);
  for (size_t w = 0; w < graph.size(); ++w) stack.middleRows(static_cast<Index>(w) * d, d) = graph[w].first;
  Subspace image = Subspace::column_space(stack);
  for (int eta = 0; eta < f.dim; ++eta) {
    Vec r(rows);
    for (size_t w = 0; w < graph.size(); ++w) r.segment(static_cast<Index>(w) * d, d) = graph[w].second.col(eta);
    if (!image.contains(r)) return false;
  }
  return true;
}

}  // namespace fmlab::testing
