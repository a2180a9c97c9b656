#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fmlab/matrix.hpp"

namespace fmlab {

using SparseRow = std::vector<std::pair<Index, Rational>>;

// Subspace of Q^n held as a fully reduced row echelon basis. Insertion order
// does not affect the basis, so two spans are equal iff their rows agree.
// With tracking on, every basis row also remembers how it is built from the
// inserted vectors that raised the rank ("chosen" vectors).
class Subspace {
 public:
  explicit Subspace(Index ambient = 0, bool track = false);

  static Subspace span(const std::vector<Vec>& gens, Index ambient, bool track = false);
  static Subspace row_space(const Mat& m, bool track = false);
  static Subspace column_space(const Mat& m, bool track = false);
  static Subspace full(Index ambient);

  Index ambient() const { return ambient_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }
  bool tracking() const { return track_; }

  // Returns true when v was independent of the current span.
  bool insert(const Vec& v);
  Vec residual(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  // Pivot columns in increasing order; basis()[i] has its leading 1 at pivots()[i].
  std::vector<Index> pivots() const;
  std::vector<Vec> basis() const;
  Mat basis_matrix() const;
  std::vector<Index> non_pivots() const;

  // Coordinates of a member vector against basis(). Throws if v is outside.
  Vec coordinates(const Vec& v) const;
  std::optional<Vec> try_coordinates(const Vec& v) const;

  // Insertion indices of the vectors that raised the rank.
  const std::vector<Index>& chosen() const { return chosen_; }
  Index inserted() const { return inserted_; }
  // Coordinates of a member vector against the chosen vectors (tracking only).
  Vec chosen_coordinates(const Vec& v) const;
  std::optional<Vec> try_chosen_coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  std::vector<size_t> sorted_rows() const;

  Index ambient_;
  bool track_;
  std::vector<SparseRow> rows_;
  std::vector<Index> pivot_;
  std::vector<Index> row_of_col_;
  std::vector<SparseRow> combo_;
  std::vector<Index> chosen_;
  Index inserted_ = 0;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Null space of m as a subspace of Q^cols, basis in canonical RREF order.
std::vector<Vec> kernel_basis(const Mat& m);
Index rank(const Mat& m);

struct SolveResult {
  std::optional<Vec> solution;
  // y with y^T A = 0 and y^T b != 0 when the system has no solution.
  std::optional<Vec> certificate;
  bool solvable() const { return solution.has_value(); }
};

SolveResult solve_linear(const Mat& a, const Vec& b);

// Solves A X = B one column at a time from a single elimination. Entry j is
// empty when column j is inconsistent.
std::vector<std::optional<Vec>> solve_columns(const Mat& a, const Mat& b);

// Exact inverse of a square matrix; empty when singular.
std::optional<Mat> inverse(const Mat& m);
// Some left inverse of a matrix with independent columns; empty otherwise.
std::optional<Mat> left_inverse(const Mat& m);

struct Quotient {
  std::vector<Vec> complement;  // representatives of a basis of W / rel
  Mat projection;               // q x n, exact on W, kills rel
  Mat section;                  // n x q, columns are the representatives
};

// Q^n / rel with the non-pivot unit vectors as complement.
Quotient quotient(const Subspace& rel);
Quotient quotient(const Subspace& ambient, const Subspace& rel);

}  // namespace fmlab
