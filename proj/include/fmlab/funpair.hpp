#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmlab/compact.hpp"

namespace fmlab {

// A module map U: E -> F together with images U*(phi_k) of the functional
// generators of E, each a d x dim(F) functional on F.
struct FunPair {
  ModulePtr source, target;
  Mat u;
  std::vector<Mat> ustar;
  std::string name;
};

// Images of all saturation words of the source, in ThetaSpace order.
std::vector<Mat> star_words(const FunPair& p);

// Module hom (injective, A-linear, equivariant), U* well defined on the
// saturation, images inside Theta(F), and U*(phi) o U = phi.
Report check_functional_hom(const FunPair& p);

// U* extended linearly; empty when phi is outside Theta(E).
std::optional<Mat> apply_star(const FunPair& p, const Mat& phi);

// apply_star with the images of the Theta(E) basis computed once.
class StarMap {
 public:
  explicit StarMap(const FunPair& p);
  std::optional<Mat> operator()(const Mat& phi) const;

 private:
  const FunPair* p_;
  std::vector<Mat> chosen_;
};

struct ExtensionDecision {
  bool extension = false;
  std::vector<Vec> witnesses;  // xi for each basis vector of F when extension
  int failing_eta = -1;
  Mat system;  // stacked basis words of Theta(E)
  Vec rhs;     // stacked U*-images evaluated at the failing eta
  std::optional<Vec> certificate;
};

// For each basis vector eta of F, is there xi in E with phi(xi) = U*(phi)(eta) for all phi?
ExtensionDecision decide_functional_extension(const FunPair& p);

FunPair identity_funpair(const ModulePtr& m);
FunPair compose(const FunPair& second, const FunPair& first);
FunPair direct_sum(const FunPair& p, const FunPair& q);
FunPair external_tensor(const FunPair& p, const FunPair& q);

// Permutation of Q^n as a module isomorphism M -> M' where M' carries the
// conjugated actions and transported generators.
FunPair relabel(const ModulePtr& m, const Mat& perm, const ModulePtr& target);

struct InducedHom {
  CompactPtr source;
  OperatorHom op;
  Report report;
};

// theta_{xi, phi} -> theta_{U xi, U* phi} on K_A(E) for an extension U.
InducedHom induced_compact_hom(const FunPair& p, CompactPtr source = nullptr);

}  // namespace fmlab
