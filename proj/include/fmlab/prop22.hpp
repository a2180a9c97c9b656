#pragma once

#include "fmlab/funpair.hpp"
#include "fmlab/rotation.hpp"

namespace fmlab {

// Witness that the corner embedding e: B -> K = K_B(E (+) B) is invertible
// modulo ordinary corner embeddings and rotations, built from an extension
// V: E -> B^n. Every map is realised on a module, so each is an OperatorHom.
// The distinguished (trivially acted) coordinate is always the last one.
struct Prop22Certificate {
  FunPair v;
  CornerEmbedding corner;  // e
  FunPair big_f;           // F = V (+) id_B : E (+) B -> B^{n+1}
  InducedHom f;            // K -> K_B(B^{n+1})
  ModulePtr m, m_n1, m_2, m_2n2;  // M = E (+) B, M^{n+1}, M^2, M^{2n+2}
  FunPair j;               // M^2 -> M (+) B^{n+1} -> M^{2n+2}
  int n = 0;
  OperatorHom fe, h;       // identity (1): f o e = h
  OperatorHom eh, he;      // identity (2): E o h = H o e
  OperatorHom phi_z, xef;  // identity (3): phi o z = x o E o f
  OperatorHom phi_zp, canon;  // identity (5): phi o z' = corner at the distinguished copy
  RotationPath z_path, x_path;  // identity (4)
  Report report;
};

Prop22Certificate verify_prop22(const FunPair& v);

}  // namespace fmlab
