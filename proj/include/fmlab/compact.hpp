#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "fmlab/module.hpp"

namespace fmlab {

// Span of the operators theta_{e_i, w} (module basis vector, basis word of Theta),
// realised on the module. The basis consists of the first independent
// generators in the order (i outer, w inner); algebra carries the structure
// constants and the conjugation action in that basis.
struct CompactAlgebra {
  ModulePtr module;
  std::vector<Mat> basis;
  std::vector<std::pair<int, Index>> terms;
  Subspace span;
  AlgebraPtr algebra;

  int dim() const { return static_cast<int>(basis.size()); }
  std::optional<Vec> coordinates(const Mat& op) const;
  Mat op(const Vec& coords) const;
};

using CompactPtr = std::shared_ptr<const CompactAlgebra>;

CompactPtr kalgebra(const ModulePtr& m);

// Linear map from an abstract algebra into operators on a module.
struct OperatorHom {
  AlgebraPtr source;
  ModulePtr target;
  std::vector<Mat> images;
};

Mat apply(const OperatorHom& h, const Vec& x);
// Multiplicative on basis pairs; equivariant for conjugation by the target action.
Report check_operator_hom(const OperatorHom& h, bool equivariant = true);
bool injective(const OperatorHom& h);
// Coordinates of every image in a compact algebra on the same module.
std::optional<AlgebraHom> to_algebra_hom(const OperatorHom& h, const CompactAlgebra& k);

struct CornerEmbedding {
  ModulePtr sum;  // E (+) B
  CompactPtr k;   // K_B(E (+) B)
  OperatorHom op;  // b -> 0 (+) left multiplication by b
  AlgebraHom hom;  // the same map into k->algebra
};

CornerEmbedding corner_embedding(const ModulePtr& e);

struct MatrixIso {
  CompactPtr k;
  AlgebraPtr matrices;  // M_n(A) with ad(mu) (x) alpha, or the transported action
  AlgebraHom hom;
  Report report;
};

// K_A(A^n) -> M_n(A), splitting each operator into n x n blocks of left multiplications.
MatrixIso matrix_iso(const ModulePtr& standard);

// Left regular representation a -> L_a must be injective; returns the block -> a map.
struct LeftRegular {
  AlgebraPtr a;
  Mat left_inverse;  // d x d^2 acting on flattened blocks
  std::optional<Vec> element(const Mat& block) const;
};
std::optional<LeftRegular> left_regular(const AlgebraPtr& a);

}  // namespace fmlab
