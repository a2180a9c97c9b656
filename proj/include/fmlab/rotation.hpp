#pragma once

#include <functional>
#include <vector>

#include "fmlab/module.hpp"

namespace fmlab {

// Identity on Q^{blocks * block} except that blocks i and j are mixed by
// [[c, s], [-s, c]]. The inverse is the transpose.
RotMat block_rotation(int blocks, int i, int j, int block);

// Images of a spanning set of the source algebra, produced on demand so large
// spanning sets need not be held in memory.
using ImageFn = std::function<Mat(size_t)>;

// Path t -> R_t h(a) R_t^-1 of operator-valued homs on a module.
struct RotationPath {
  ModulePtr module;
  RotMat conj, conj_inv;
  size_t count = 0;        // size of the spanning set
  bool exhaustive = true;  // every pair checked for multiplicativity
  size_t pairs_checked = 0;
  Report report;
};

// Pairs are drawn from at most this many spanning elements (all pairs among them).
inline constexpr size_t kRotationSubset = 64;

// Endpoints are checked on every spanning element; multiplicativity on all
// pairs when count <= kRotationSubset, otherwise on all pairs of a fixed
// pseudo-random subset of that size.
RotationPath rotation_path(const ModulePtr& module, size_t count, const ImageFn& source, const ImageFn& target,
                           const RotMat& conj, const RotMat& conj_inv);
RotationPath rotation_path(const ModulePtr& module, const std::vector<Mat>& source, const std::vector<Mat>& target,
                           const RotMat& conj, const RotMat& conj_inv);

// Tries the constant path and every swap of two blocks of size block.
// Throws PreconditionError when no rotation takes source to target.
RotationPath find_rotation_path(const ModulePtr& module, const std::vector<Mat>& source, const std::vector<Mat>& target,
                                int block);

}  // namespace fmlab
