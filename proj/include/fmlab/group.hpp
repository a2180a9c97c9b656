#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fmlab/report.hpp"

namespace fmlab {

// Finite group given by its Cayley table: cayley[g][h] is the index of gh.
struct FinGroup {
  int order = 1;
  std::vector<std::vector<int>> cayley{{0}};
  int identity = 0;
  std::vector<int> inverse{0};
  std::string name = "1";

  int mul(int g, int h) const { return cayley[static_cast<size_t>(g)][static_cast<size_t>(h)]; }
  int inv(int g) const { return inverse[static_cast<size_t>(g)]; }

  friend bool operator==(const FinGroup& a, const FinGroup& b) { return a.cayley == b.cayley; }
};

using GroupPtr = std::shared_ptr<const FinGroup>;

// Fills identity and inverses; throws PreconditionError if the table is not a group.
GroupPtr make_group(std::vector<std::vector<int>> cayley, std::string name = {});
Report validate(const FinGroup& g);

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr symmetric_group3();

}  // namespace fmlab
