#pragma once

#include <string>
#include <vector>

#include "fmlab/algebra.hpp"

namespace fmlab {

// Algebra spanned by the given matrices (closed under products). Each group
// element acts by conjugation with conj[g] when given.
AlgebraPtr matrix_span_algebra(const std::vector<Mat>& basis, GroupPtr g = trivial_group(),
                               const std::vector<Mat>& conj = {}, std::string name = {});

// Group algebra Q[H]; G acts through the automorphisms aut[g][h] of H when given.
AlgebraPtr group_algebra(GroupPtr h, GroupPtr g = trivial_group(), const std::vector<std::vector<int>>& aut = {},
                         std::string name = {});

AlgebraPtr rationals(GroupPtr g = trivial_group());

// Named small algebras used by tests and the instance suite. A "^G" suffix
// means G acts: Z2 by the sign or swap automorphism, S3 by conjugation.
AlgebraPtr catalogue(const std::string& name);
const std::vector<std::string>& catalogue_names();

}  // namespace fmlab
