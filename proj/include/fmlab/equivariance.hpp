#pragma once

#include "fmlab/funpair.hpp"

namespace fmlab {

// |G| copies of E, copy index outer. The group shifts copies,
// U_h(+xi_g) = +xi_{h^-1 g}, and A acts on copy g through alpha_{g^-1}.
// Functionals are alpha_g o phi on copy g, one per (g, generator phi).
ModulePtr shifted_sum(const ModulePtr& e, const AlgebraPtr& a);

struct Averaging {
  FunPair pi;  // xi -> +_g S_{g^-1} xi and phi -> |G|^-1 +_g phi o S_g
  Report report;
};

// Equivariant extension of an arbitrary module into its shifted sum.
Averaging average_extension(const ModulePtr& e);

// xi = |G|^-1 sum_g S_g(eta_g), the explicit witness for eta in the shifted sum.
Vec averaging_witness(const FunctionalModule& e, const Vec& eta);

// Checks the witness formula against every extension system of pi.
Report check_averaging_witness(const Averaging& av);

// Equivariance of U on vectors and of U* on every saturated functional word.
Report check_equivariance(const FunPair& p);

struct Amplified {
  FunPair sigma;
  Report report;
};

// gamma: a pair between modules over the algebra with the group forgotten.
// sigma = +_g gamma between the shifted sums over the algebra a (with group).
Amplified amplify_nonequivariant(const FunPair& gamma, const AlgebraPtr& a);

struct PlainExtension {
  ModulePtr source;  // (A^n, S)
  FunPair pi;        // into A^{nm}, coordinate rep nu_h = P_h (x) I_n
  FunPair w;         // A^{nm} -> A^n (x) Q^m with S (x) tau
  Mat x;             // m x m, sends (1, ..., 1) to e_0
  std::vector<Mat> mu;  // X tau X^-1
  FunPair v;         // (id (x) X) o W, into A^n (x) Q^m with S (x) mu
  Report report;
};

// A^n with an arbitrary semilinear action S (read from the module's gaction).
PlainExtension plain_module_extension(const ModulePtr& e);

// The rational m x m matrix with first row (1/m)(1, ..., 1) and rows e_j - e_0 below.
Mat averaging_basis(int m);

}  // namespace fmlab
