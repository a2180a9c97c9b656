#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fmlab/echelon.hpp"
#include "fmlab/group.hpp"
#include "fmlab/matrix.hpp"

namespace fmlab {

// Finite dimensional associative Q-algebra with a group acting by automorphisms.
// table[i * dim + j] holds the coordinates of b_i b_j.
struct Algebra {
  int dim = 0;
  std::vector<SparseRow> table;
  GroupPtr group = trivial_group();
  std::vector<Mat> action;  // one d x d matrix per group element
  std::string name;

  const SparseRow& product(int i, int j) const { return table[static_cast<size_t>(i * dim + j)]; }
  Vec product_vector(int i, int j) const;
  Vec mul(const Vec& x, const Vec& y) const;
  Vec basis(int i) const { return unit_vector<Rational>(dim, i); }
  Mat left(int i) const;   // x -> b_i x
  Mat right(int j) const;  // x -> x b_j
  Mat left_mult(const Vec& a) const;
  Mat right_mult(const Vec& a) const;
  int group_order() const { return group->order; }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// products[i * dim + j] = b_i b_j. Missing action means every element acts trivially.
AlgebraPtr make_algebra(int dim, const std::vector<Vec>& products, GroupPtr group = trivial_group(),
                        std::vector<Mat> action = {}, std::string name = {});

Report validate(const Algebra& a);

// Structure constants, group table and action all agree.
bool same_algebra(const Algebra& a, const Algebra& b);
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Same structure with G acting trivially, or with the group forgotten.
AlgebraPtr with_group(const AlgebraPtr& a, GroupPtr g, std::vector<Mat> action = {});
AlgebraPtr forget_group(const AlgebraPtr& a);

// Transport of structure along an invertible change of basis: new b'_i = sum_k p(k,i) b_k.
AlgebraPtr change_basis(const AlgebraPtr& a, const Mat& p, std::string name = {});

// Tensor product with basis b_i (x) c_j at index i * dim(B) + j and the diagonal action.
AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// M_n(A) with basis E_ij (x) b_k at index (i * n + j) * d + k. With coord_rep the group
// acts by ad(mu_g) (x) alpha_g, otherwise entrywise.
AlgebraPtr matrix_algebra(const AlgebraPtr& a, int n, const std::vector<Mat>& coord_rep = {});

// Left regular permutation of h: e_x -> e_{hx}.
Mat regular_rep(const FinGroup& g, int h);

enum class Side { left, right, two_sided };
std::string to_string(Side s);
Side side_from_string(const std::string& s);

struct UnitResult {
  std::optional<Vec> unit;
  // Infeasibility witness for the stacked unit equations when no unit exists.
  std::optional<Vec> certificate;
  Mat system;
  Vec rhs;
};

// Left unit: u b = b for all b. Right unit: b u = b.
UnitResult find_unit(const Algebra& a, Side side);
bool is_unit(const Algebra& a, const Vec& u, Side side);

struct AlgebraHom {
  AlgebraPtr source, target;
  Mat matrix;  // dim(target) x dim(source)
};

// Multiplicative on all basis pairs, and equivariant when both groups agree.
Report check_algebra_hom(const AlgebraHom& h, bool equivariant = true);
AlgebraHom compose(const AlgebraHom& second, const AlgebraHom& first);
bool injective(const AlgebraHom& h);

}  // namespace fmlab
