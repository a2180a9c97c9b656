#include "fmlab/echelon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fmlab {

namespace {

// a - f * b for sparse rows sorted by index.
SparseRow axpy(const SparseRow& a, const Rational& f, const SparseRow& b) {
  SparseRow r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, -(f * b[j].second));
      ++j;
    } else {
      Rational v = a[i].second - f * b[j].second;
      if (!v.is_zero()) r.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

const Rational* find_entry(const SparseRow& row, Index col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const std::pair<Index, Rational>& e, Index c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

void sub_row(Vec& w, const Rational& c, const SparseRow& row) {
  for (const auto& [col, val] : row) w(col) -= c * val;
}

}  // namespace

Subspace::Subspace(Index ambient, bool track)
    : ambient_(ambient), track_(track), row_of_col_(static_cast<size_t>(ambient), -1) {}

Subspace Subspace::span(const std::vector<Vec>& gens, Index ambient, bool track) {
  Subspace s(ambient, track);
  for (const auto& g : gens) s.insert(g);
  return s;
}

Subspace Subspace::row_space(const Mat& m, bool track) {
  Subspace s(m.cols(), track);
  for (Index i = 0; i < m.rows(); ++i) s.insert(m.row(i).transpose());
  return s;
}

Subspace Subspace::column_space(const Mat& m, bool track) {
  Subspace s(m.rows(), track);
  for (Index j = 0; j < m.cols(); ++j) s.insert(m.col(j));
  return s;
}

Subspace Subspace::full(Index ambient) {
  Subspace s(ambient);
  for (Index i = 0; i < ambient; ++i) s.insert(unit_vector<Rational>(ambient, i));
  return s;
}

bool Subspace::insert(const Vec& v) {
  if (v.size() != ambient_) throw std::invalid_argument("subspace insert: dimension mismatch");
  Index slot = inserted_++;
  Vec w = v;
  std::vector<std::pair<size_t, Rational>> used;
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rational c = w(pivot_[r]);
    if (c.is_zero()) continue;
    sub_row(w, c, rows_[r]);
    if (track_) used.emplace_back(r, std::move(c));
  }
  Index np = -1;
  for (Index i = 0; i < ambient_; ++i)
    if (!w(i).is_zero()) {
      np = i;
      break;
    }
  if (np < 0) return false;
  Rational inv = w(np).inverse();
  SparseRow nr;
  for (Index i = np; i < ambient_; ++i)
    if (!w(i).is_zero()) nr.emplace_back(i, w(i) * inv);

  SparseRow nc;
  if (track_) {
    Index newslot = static_cast<Index>(chosen_.size());
    nc.emplace_back(newslot, Rational(1));
    for (const auto& [r, c] : used) nc = axpy(nc, c, combo_[r]);
    std::sort(nc.begin(), nc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& e : nc) e.second *= inv;
    chosen_.push_back(slot);
  }

  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational* f = find_entry(rows_[r], np);
    if (!f) continue;
    Rational fv = *f;
    rows_[r] = axpy(rows_[r], fv, nr);
    if (track_) combo_[r] = axpy(combo_[r], fv, nc);
  }
  rows_.push_back(std::move(nr));
  pivot_.push_back(np);
  row_of_col_[static_cast<size_t>(np)] = static_cast<Index>(rows_.size() - 1);
  if (track_) combo_.push_back(std::move(nc));
  return true;
}

Vec Subspace::residual(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("subspace residual: dimension mismatch");
  Vec w = v;
  for (size_t r = 0; r < rows_.size(); ++r) {
    Rational c = w(pivot_[r]);
    if (!c.is_zero()) sub_row(w, c, rows_[r]);
  }
  return w;
}

bool Subspace::contains(const Vec& v) const {
  Vec w = residual(v);
  for (Index i = 0; i < w.size(); ++i)
    if (!w(i).is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& b : other.basis())
    if (!contains(b)) return false;
  return true;
}

std::vector<size_t> Subspace::sorted_rows() const {
  std::vector<size_t> idx(rows_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return pivot_[a] < pivot_[b]; });
  return idx;
}

std::vector<Index> Subspace::pivots() const {
  std::vector<Index> p(pivot_);
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<Index> Subspace::non_pivots() const {
  std::vector<Index> r;
  for (Index i = 0; i < ambient_; ++i)
    if (row_of_col_[static_cast<size_t>(i)] < 0) r.push_back(i);
  return r;
}

std::vector<Vec> Subspace::basis() const {
  std::vector<Vec> out;
  for (size_t r : sorted_rows()) {
    Vec v = Vec::Constant(ambient_, Rational(0));
    for (const auto& [c, val] : rows_[r]) v(c) = val;
    out.push_back(std::move(v));
  }
  return out;
}

Mat Subspace::basis_matrix() const {
  Mat m = zeros<Rational>(rank(), ambient_);
  Index i = 0;
  for (size_t r : sorted_rows()) {
    for (const auto& [c, val] : rows_[r]) m(i, c) = val;
    ++i;
  }
  return m;
}

std::optional<Vec> Subspace::try_coordinates(const Vec& v) const {
  if (!contains(v)) return std::nullopt;
  std::vector<Index> p = pivots();
  Vec c(static_cast<Index>(p.size()));
  for (size_t i = 0; i < p.size(); ++i) c(static_cast<Index>(i)) = v(p[i]);
  return c;
}

Vec Subspace::coordinates(const Vec& v) const {
  auto c = try_coordinates(v);
  if (!c) throw std::invalid_argument("vector is not in the subspace");
  return *c;
}

std::optional<Vec> Subspace::try_chosen_coordinates(const Vec& v) const {
  if (!track_) throw std::logic_error("chosen coordinates need a tracking subspace");
  if (!contains(v)) return std::nullopt;
  Vec c = Vec::Constant(static_cast<Index>(chosen_.size()), Rational(0));
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rational& x = v(pivot_[r]);
    if (x.is_zero()) continue;
    for (const auto& [slot, val] : combo_[r]) c(slot) += x * val;
  }
  return c;
}

Vec Subspace::chosen_coordinates(const Vec& v) const {
  auto c = try_chosen_coordinates(v);
  if (!c) throw std::invalid_argument("vector is not in the subspace");
  return *c;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_ || a.rank() != b.rank()) return false;
  auto ra = a.sorted_rows(), rb = b.sorted_rows();
  for (size_t i = 0; i < ra.size(); ++i)
    if (a.pivot_[ra[i]] != b.pivot_[rb[i]] || a.rows_[ra[i]] != b.rows_[rb[i]]) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  Subspace s = a;
  for (const auto& v : b.basis()) s.insert(v);
  return s;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: dimension mismatch");
  auto ab = a.basis(), bb = b.basis();
  Index n = a.ambient(), ra = a.rank(), rb = b.rank();
  Mat m = zeros<Rational>(n, ra + rb);
  for (Index i = 0; i < ra; ++i) m.col(i) = ab[static_cast<size_t>(i)];
  for (Index j = 0; j < rb; ++j) m.col(ra + j) = -bb[static_cast<size_t>(j)];
  Subspace out(n);
  for (const auto& k : kernel_basis(m)) {
    Vec v = Vec::Constant(n, Rational(0));
    for (Index i = 0; i < ra; ++i)
      if (!k(i).is_zero()) v += k(i) * ab[static_cast<size_t>(i)];
    out.insert(v);
  }
  return out;
}

std::vector<Vec> kernel_basis(const Mat& m) {
  Subspace rs = Subspace::row_space(m);
  auto rows = rs.basis();
  auto piv = rs.pivots();
  std::vector<Vec> out;
  for (Index f : rs.non_pivots()) {
    Vec x = Vec::Constant(m.cols(), Rational(0));
    x(f) = 1;
    for (size_t r = 0; r < rows.size(); ++r)
      if (!rows[r](f).is_zero()) x(piv[r]) = -rows[r](f);
    out.push_back(std::move(x));
  }
  return out;
}

Index rank(const Mat& m) {
  if (m.rows() <= m.cols()) return Subspace::row_space(m).rank();
  return Subspace::column_space(m).rank();
}

SolveResult solve_linear(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
  Index n = a.cols();
  Subspace s(n + 1, true);
  Vec aug(n + 1);
  for (Index i = 0; i < a.rows(); ++i) {
    aug.head(n) = a.row(i).transpose();
    aug(n) = b(i);
    s.insert(aug);
  }
  auto rows = s.basis();
  auto piv = s.pivots();
  SolveResult res;
  for (size_t r = 0; r < rows.size(); ++r) {
    if (piv[r] != n) continue;
    Vec coords = s.chosen_coordinates(rows[r]);
    Vec y = Vec::Constant(a.rows(), Rational(0));
    for (Index k = 0; k < coords.size(); ++k) y(s.chosen()[static_cast<size_t>(k)]) = coords(k);
    res.certificate = y;
    return res;
  }
  Vec x = Vec::Constant(n, Rational(0));
  for (size_t r = 0; r < rows.size(); ++r) x(piv[r]) = rows[r](n);
  res.solution = x;
  return res;
}

std::vector<std::optional<Vec>> solve_columns(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_columns: shape mismatch");
  Index n = a.cols(), k = b.cols();
  Subspace s(n + k);
  Vec aug(n + k);
  for (Index i = 0; i < a.rows(); ++i) {
    aug.head(n) = a.row(i).transpose();
    aug.tail(k) = b.row(i).transpose();
    s.insert(aug);
  }
  auto rows = s.basis();
  auto piv = s.pivots();
  std::vector<bool> bad(static_cast<size_t>(k), false);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (piv[r] < n) continue;
    for (Index j = 0; j < k; ++j)
      if (!rows[r](n + j).is_zero()) bad[static_cast<size_t>(j)] = true;
  }
  std::vector<std::optional<Vec>> out(static_cast<size_t>(k));
  for (Index j = 0; j < k; ++j) {
    if (bad[static_cast<size_t>(j)]) continue;
    Vec x = Vec::Constant(n, Rational(0));
    for (size_t r = 0; r < rows.size(); ++r)
      if (piv[r] < n) x(piv[r]) = rows[r](n + j);
    out[static_cast<size_t>(j)] = x;
  }
  return out;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto cols = solve_columns(m, identity<Rational>(m.rows()));
  Mat inv(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j) {
    if (!cols[static_cast<size_t>(j)]) return std::nullopt;
    inv.col(j) = *cols[static_cast<size_t>(j)];
  }
  if (rank(m) != m.rows()) return std::nullopt;
  return inv;
}

std::optional<Mat> left_inverse(const Mat& m) {
  // Rows of a left inverse solve L m = I, i.e. m^T L^T = I.
  Mat mt = m.transpose();
  auto cols = solve_columns(mt, identity<Rational>(m.cols()));
  Mat l(m.cols(), m.rows());
  for (Index j = 0; j < m.cols(); ++j) {
    if (!cols[static_cast<size_t>(j)]) return std::nullopt;
    l.row(j) = cols[static_cast<size_t>(j)]->transpose();
  }
  return l;
}

Quotient quotient(const Subspace& rel) {
  Index n = rel.ambient();
  auto np = rel.non_pivots();
  Index q = static_cast<Index>(np.size());
  std::vector<Index> pos(static_cast<size_t>(n), -1);
  for (Index t = 0; t < q; ++t) pos[static_cast<size_t>(np[static_cast<size_t>(t)])] = t;
  Quotient out;
  out.section = zeros<Rational>(n, q);
  out.projection = zeros<Rational>(q, n);
  for (Index t = 0; t < q; ++t) {
    Index c = np[static_cast<size_t>(t)];
    out.section(c, t) = 1;
    out.projection(t, c) = 1;
    out.complement.push_back(unit_vector<Rational>(n, c));
  }
  auto rows = rel.basis();
  auto piv = rel.pivots();
  for (size_t r = 0; r < rows.size(); ++r)
    for (Index c = 0; c < n; ++c)
      if (c != piv[r] && !rows[r](c).is_zero()) out.projection(pos[static_cast<size_t>(c)], piv[r]) = -rows[r](c);
  return out;
}

Quotient quotient(const Subspace& ambient, const Subspace& rel) {
  if (!ambient.contains(rel)) throw std::invalid_argument("quotient: relations leave the ambient space");
  Index n = ambient.ambient();
  if (ambient.rank() == n) return quotient(rel);
  Subspace grow = rel;
  Quotient out;
  for (const auto& w : ambient.basis())
    if (grow.insert(w)) out.complement.push_back(w);
  Index q = static_cast<Index>(out.complement.size());
  Subspace t(n, true);
  for (const auto& r : rel.basis()) t.insert(r);
  for (const auto& c : out.complement) t.insert(c);
  Index rr = rel.rank();
  out.section = zeros<Rational>(n, q);
  for (Index j = 0; j < q; ++j) out.section.col(j) = out.complement[static_cast<size_t>(j)];
  // Coordinates over (rel basis, complement) depend only on pivot entries of t;
  // keep the complement part.
  out.projection = zeros<Rational>(q, n);
  auto trows = t.basis();
  auto tpiv = t.pivots();
  for (size_t r = 0; r < trows.size(); ++r) {
    Vec comb = t.chosen_coordinates(trows[r]);
    for (Index j = 0; j < q; ++j) out.projection(j, tpiv[r]) = comb(rr + j);
  }
  return out;
}

}  // namespace fmlab
