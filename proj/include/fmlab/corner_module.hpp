#pragma once

#include "fmlab/funpair.hpp"

namespace fmlab {

// M . M_B for a module M over an algebra C with a corner hom e: B -> C:
// the span of xi . e(b), as a B-module with generators e^-1(e(b) . phi).
struct CornerPart {
  ModulePtr module;
  Mat inclusion;  // columns span M . M_B inside M
};

CornerPart corner_part(const ModulePtr& m, const AlgebraHom& e);

struct CornerModule {
  CornerEmbedding corner;  // B -> K = K_B(E (+) B)
  FunPair u;               // U0 (+) id_B : E (+) B -> B^n
  CompactPtr x;            // K_B(B^n)
  InducedHom f;            // K -> X
  CornerPart fm;           // F . M_B
  CornerPart km;           // K^m . M_B
  CornerPart xm;           // X^m . M_B
  FunPair pi, sigma, kappa, w;
  Report report;
};

// Given U0: E -> B^(n-1) and V: F -> K^m over K = K_B(E (+) B), builds the
// extension W: F . M_B -> B^(nm). corner must be corner_embedding(U0.source).
CornerModule corner_module_composition(const CornerEmbedding& corner, const FunPair& u0, const FunPair& v);

}  // namespace fmlab
