#pragma once

#include <optional>

#include "fmlab/equivariance.hpp"
#include "fmlab/prop22.hpp"

namespace fmlab {

// Data for a corner embedding e: A -> (M_n(A), Gamma) with an arbitrary action:
// the non-canonical embedding f, the isomorphisms x and X, the enlargements y
// and z, and the rotation witnesses e f x z ~ r and e f y ~ F.
struct CornerWitness51 {
  AlgebraPtr matrices;        // M_n(A) with Gamma
  int n = 0, m = 0;
  std::vector<Mat> gamma;     // Gamma restricted to the first column
  ModulePtr column;           // (A^n, gamma)
  AlgebraHom e;
  MatrixIso iso;              // K(A^n, gamma) -> (M_n(A), Gamma)
  PlainExtension ext;
  InducedHom f, x, big_x;     // from pi, V and V (+) id
  FunPair v_plus;
  OperatorHom fx, canonical;  // x o f against T -> E_00 (x) T
  OperatorHom xy, zx;         // X o y = z o x
  OperatorHom big_f, r, xf;   // X o F = r
  OperatorHom efxz, efy;
  RotationPath efxz_r, efy_f;
  std::optional<Prop22Certificate> invertibility;  // e itself, via gamma = alpha (+) gamma'
  Report report;
};

// gamma_action: one automorphism per group element on the basis of matrix_algebra(a, n).
CornerWitness51 corner51_witness(const AlgebraPtr& a, int n, const std::vector<Mat>& gamma_action);

// Gamma = ad(gamma) for a semilinear action gamma on A^n.
std::vector<Mat> adjoint_action(const AlgebraPtr& a, int n, const std::vector<Mat>& gamma);

}  // namespace fmlab
