#pragma once

#include "fmlab/funpair.hpp"

namespace fmlab {

struct ChangedCoefficients {
  InternalTensor source;  // E (x)_pi B
  FunPair v;              // E (x)_pi B -> B^n
  Report report;
};

// Pushes an extension U: E -> A^n along pi: A -> B. Needs a right unit of A
// to recover the row x with U*(phi) = <x, .>.
ChangedCoefficients change_coefficients(const FunPair& u, const AlgebraHom& pi);

struct UnitTransfer {
  Side side = Side::two_sided;
  bool k_unit = false;        // K_A(E) has a unit of that side
  bool e_cofull = false;
  bool theta_cofull = false;
  bool a_left_unit = false;
  bool hypotheses = false;    // all conditions required for the side
  UnitResult k_source;
  UnitResult k_tensor;        // on K_B(E (x)_pi B)
  bool holds() const { return !hypotheses || k_tensor.unit.has_value(); }
};

UnitTransfer approx_unit_transfer(const ModulePtr& e, const AlgebraHom& pi, Side side);

}  // namespace fmlab
