#pragma once

#include <memory>
#include <optional>

#include "fmlab/coefficients.hpp"
#include "fmlab/corner_module.hpp"
#include "fmlab/equivariance.hpp"
#include "fmlab/prop22.hpp"

namespace fmlab {

// Expression tree over plain modules. A leaf is A^n with either a coordinate
// representation (coord_rep) or an arbitrary semilinear action (gaction); an
// empty choice means the coordinatewise action.
struct ClosureTerm;
using TermPtr = std::shared_ptr<const ClosureTerm>;

enum class TermKind { leaf, direct_sum, internal_tensor, external_tensor, corner_module };
std::string to_string(TermKind k);
TermKind term_kind_from_string(const std::string& s);

struct ClosureTerm {
  TermKind kind = TermKind::leaf;
  AlgebraPtr algebra;           // leaf
  int n = 1;                    // leaf: coordinates; corner_module: the m of K^m
  std::vector<Mat> coord_rep;   // leaf
  std::vector<Mat> gaction;     // leaf, used instead of coord_rep when non-empty
  std::optional<AlgebraHom> pi;  // internal_tensor
  std::vector<TermPtr> children;
};

TermPtr leaf(AlgebraPtr a, int n, std::vector<Mat> coord_rep = {});
TermPtr leaf_with_action(AlgebraPtr a, int n, std::vector<Mat> gaction);
TermPtr sum_term(TermPtr a, TermPtr b);
TermPtr internal_term(TermPtr e, AlgebraHom pi);
TermPtr external_term(TermPtr e, TermPtr g);
TermPtr corner_term(TermPtr e, int m);

// Depth of the tree counting non-leaf nodes.
int depth(const ClosureTerm& t);

struct ClassCNode {
  std::string path;  // "root", "root.0", ...
  TermKind kind = TermKind::leaf;
  ModulePtr module;
  FunPair extension;  // into a standard module B^n with coordinate representation
  bool is_extension = false;
  UnitResult unit;    // two-sided unit of K(module)
  bool module_cofull = false, theta_cofull = false;
  std::optional<UnitTransfer> transfer;      // internal tensor: unit transfer along pi
  std::optional<bool> tensor_unit;           // external tensor: u_E (x) u_G is the unit of K(E (x) G)
  std::optional<Prop22Certificate> prop22;   // non-leaf nodes
  Report report;
  std::vector<ClassCNode> children;
};

// Throws PreconditionError naming the node path when a hypothesis fails.
ClassCNode certify_class_c(const TermPtr& t);

// Every node's report in one list, prefixed with the node path.
Report flatten(const ClassCNode& n);

}  // namespace fmlab
