#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fmlab/algebra.hpp"

namespace fmlab {

// Present on modules of the form A^n. When coord_rep is non-empty the group acts
// by coord_rep[g] (x) alpha_g, coordinate index outer and algebra basis inner.
struct StandardInfo {
  int n = 0;
  std::vector<Mat> coord_rep;
};

// Saturation of a generator list under the group and left multiplication.
// words are in the order (generator, group element, [plain, b_0 ., ..., b_{d-1} .]);
// span tracks which words form a basis.
struct ThetaSpace {
  std::vector<Mat> words;
  Subspace span;
  const std::vector<Index>& basis() const { return span.chosen(); }
  Index dim() const { return span.rank(); }
  const Mat& basis_word(Index i) const { return words[static_cast<size_t>(basis()[static_cast<size_t>(i)])]; }
};

// Right A-module on Q^dim with a semilinear G-action and a chosen space of
// A-valued A-linear functionals, each stored as a d x dim matrix.
struct FunctionalModule {
  AlgebraPtr coeff;
  int dim = 0;
  std::vector<Mat> raction;      // xi . b_a = raction[a] * xi
  std::vector<Mat> gaction;      // one matrix per group element
  std::vector<Mat> functionals;  // generators of the functional space
  std::optional<StandardInfo> standard;
  std::string name;
  std::shared_ptr<const ThetaSpace> theta;

  int d() const { return coeff->dim; }
  int group_order() const { return coeff->group->order; }
  const FinGroup& group() const { return *coeff->group; }
  // Matrix of xi -> xi . a for an algebra element a.
  Mat right_action(const Vec& a) const;
};

using ModulePtr = std::shared_ptr<const FunctionalModule>;

// G-translate alpha_g o phi o S_{g^-1} of a functional.
Mat translate(const Algebra& a, const std::vector<Mat>& gaction, const Mat& phi, int g);

// Saturated words of generators under a module's group action, in ThetaSpace order.
std::vector<Mat> saturate(const Algebra& a, const std::vector<Mat>& gaction, const std::vector<Mat>& generators);

ModulePtr make_module(AlgebraPtr coeff, int dim, std::vector<Mat> raction, std::vector<Mat> gaction,
                      std::vector<Mat> functionals, std::optional<StandardInfo> standard = std::nullopt,
                      std::string name = {});

Report validate(const FunctionalModule& m);

// Same coefficient algebra, actions and functional space.
bool same_module(const FunctionalModule& a, const FunctionalModule& b);
bool same_module(const ModulePtr& a, const ModulePtr& b);
bool theta_contains(const FunctionalModule& m, const Mat& phi);
// Coordinates of a functional against the chosen basis words of theta.
std::optional<Vec> theta_coordinates(const FunctionalModule& m, const Mat& phi);

// A^n. Without coord_rep the group acts coordinatewise by alpha.
ModulePtr standard_module(const AlgebraPtr& a, int n, const std::vector<Mat>& coord_rep = {});
// A^n with an arbitrary semilinear action S_g on Q^{nd}.
ModulePtr standard_module_with_action(const AlgebraPtr& a, int n, const std::vector<Mat>& gaction);
ModulePtr zero_module(const AlgebraPtr& a);

ModulePtr direct_sum(const ModulePtr& e, const ModulePtr& f);
ModulePtr direct_sum(const std::vector<ModulePtr>& parts);

// Q^k (x) M with the group acting by rep[g] (x) S_g; copy index outer.
ModulePtr amplify(const ModulePtr& m, int k, const std::vector<Mat>& rep = {});

// E (x) F over A (x) B, index i * dim(F) + j, generators phi_k (x) psi_l with k outer.
ModulePtr external_tensor(const ModulePtr& e, const ModulePtr& f);

struct InternalTensor {
  ModulePtr module;
  Subspace relations;  // inside Q^{dim(E) * dim(B)}, index i * dim(B) + j
  Mat projection;      // onto the quotient
  Mat section;
};

// E (x)_pi B for an equivariant algebra hom pi: A -> B.
InternalTensor internal_tensor(const ModulePtr& e, const AlgebraHom& pi);

// Invariant subspace spanned by the columns of basis (independent), with the
// given functionals (d x k in subspace coordinates) as generators.
ModulePtr submodule(const ModulePtr& m, const Mat& basis, std::vector<Mat> functionals, std::string name = {});

// Same module over A with the group forgotten; the generators become the basis
// words of the original functional space so the space itself is unchanged.
ModulePtr forget_group(const ModulePtr& m);

// span{ xi . phi(eta) } = E.
bool is_cofull_module(const FunctionalModule& m);
// span{ phi(xi) . tau } = Theta.
bool is_cofull_theta(const FunctionalModule& m);

// The operator theta_{eta, phi}: xi -> eta . phi(xi).
Mat theta_op(const FunctionalModule& m, const Vec& eta, const Mat& phi);

}  // namespace fmlab
