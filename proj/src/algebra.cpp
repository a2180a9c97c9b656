#include "fmlab/algebra.hpp"

#include <stdexcept>

namespace fmlab {

namespace {

SparseRow to_sparse(const Vec& v) {
  SparseRow r;
  for (Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) r.emplace_back(i, v(i));
  return r;
}

std::vector<Mat> trivial_action(int order, int dim) {
  return std::vector<Mat>(static_cast<size_t>(order), identity<Rational>(dim));
}

}  // namespace

Vec Algebra::product_vector(int i, int j) const {
  Vec v = Vec::Constant(dim, Rational(0));
  for (const auto& [k, c] : product(i, j)) v(k) = c;
  return v;
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  Vec r = Vec::Constant(dim, Rational(0));
  for (int i = 0; i < dim; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y(j).is_zero()) continue;
      Rational f = x(i) * y(j);
      for (const auto& [k, c] : product(i, j)) r(k) += f * c;
    }
  }
  return r;
}

Mat Algebra::left(int i) const {
  Mat m = zeros<Rational>(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (const auto& [k, c] : product(i, j)) m(k, j) = c;
  return m;
}

Mat Algebra::right(int j) const {
  Mat m = zeros<Rational>(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (const auto& [k, c] : product(i, j)) m(k, i) = c;
  return m;
}

Mat Algebra::left_mult(const Vec& a) const {
  Mat m = zeros<Rational>(dim, dim);
  for (int i = 0; i < dim; ++i)
    if (!a(i).is_zero()) m += a(i) * left(i);
  return m;
}

Mat Algebra::right_mult(const Vec& a) const {
  Mat m = zeros<Rational>(dim, dim);
  for (int j = 0; j < dim; ++j)
    if (!a(j).is_zero()) m += a(j) * right(j);
  return m;
}

AlgebraPtr make_algebra(int dim, const std::vector<Vec>& products, GroupPtr group, std::vector<Mat> action,
                        std::string name) {
  if (dim < 0) throw PreconditionError("algebra dimension must be non-negative");
  if (products.size() != static_cast<size_t>(dim * dim))
    throw PreconditionError("algebra needs dim^2 products, got " + std::to_string(products.size()));
  auto a = std::make_shared<Algebra>();
  a->dim = dim;
  a->table.reserve(products.size());
  for (const auto& p : products) {
    if (p.size() != dim) throw PreconditionError("product vector has the wrong length");
    a->table.push_back(to_sparse(p));
  }
  a->group = group ? std::move(group) : trivial_group();
  a->action = action.empty() ? trivial_action(a->group->order, dim) : std::move(action);
  a->name = std::move(name);
  return a;
}

Report validate(const Algebra& a) {
  Report r;
  int d = a.dim;
  bool shape = d >= 0 && a.table.size() == static_cast<size_t>(d * d);
  for (const auto& row : a.table)
    for (const auto& e : row) shape = shape && e.first >= 0 && e.first < d;
  if (!r.check("structure tensor shape", shape)) return r;
  bool assoc = true;
  std::string where;
  for (int i = 0; i < d && assoc; ++i)
    for (int j = 0; j < d && assoc; ++j) {
      Vec ij = a.product_vector(i, j);
      for (int k = 0; k < d && assoc; ++k) {
        Vec lhs = a.mul(ij, a.basis(k));
        Vec rhs = a.mul(a.basis(i), a.product_vector(j, k));
        if (lhs != rhs) {
          assoc = false;
          where = "(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" + std::to_string(k);
        }
      }
    }
  r.check("associative", assoc, where);
  Report gr = validate(*a.group);
  r.merge("group: ", gr);
  if (!gr.ok()) return r;
  const FinGroup& g = *a.group;
  bool ashape = a.action.size() == static_cast<size_t>(g.order);
  for (const auto& m : a.action) ashape = ashape && m.rows() == d && m.cols() == d;
  if (!r.check("action shape", ashape)) return r;
  r.check("identity acts trivially", same(a.action[static_cast<size_t>(g.identity)], identity<Rational>(d)));
  bool hom = true;
  for (int x = 0; x < g.order && hom; ++x)
    for (int y = 0; y < g.order && hom; ++y)
      hom = same(mul(a.action[static_cast<size_t>(x)], a.action[static_cast<size_t>(y)]),
                 a.action[static_cast<size_t>(g.mul(x, y))]);
  r.check("action is a group homomorphism", hom);
  bool autom = true;
  for (int x = 0; x < g.order && autom; ++x) {
    const Mat& m = a.action[static_cast<size_t>(x)];
    for (int i = 0; i < d && autom; ++i)
      for (int j = 0; j < d && autom; ++j)
        autom = mul(m, a.product_vector(i, j)) == a.mul(m.col(i), m.col(j));
  }
  r.check("group acts by algebra automorphisms", autom);
  return r;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
  if (a.dim != b.dim || !(*a.group == *b.group) || a.table != b.table) return false;
  for (size_t g = 0; g < a.action.size(); ++g)
    if (!same(a.action[g], b.action[g])) return false;
  return true;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_algebra(*a, *b);
}

AlgebraPtr with_group(const AlgebraPtr& a, GroupPtr g, std::vector<Mat> action) {
  auto out = std::make_shared<Algebra>(*a);
  out->group = std::move(g);
  out->action = action.empty() ? trivial_action(out->group->order, a->dim) : std::move(action);
  return out;
}

AlgebraPtr forget_group(const AlgebraPtr& a) { return with_group(a, trivial_group()); }

AlgebraPtr change_basis(const AlgebraPtr& a, const Mat& p, std::string name) {
  auto pinv = inverse(p);
  if (!pinv) throw PreconditionError("change of basis matrix is singular");
  int d = a->dim;
  std::vector<Vec> prods;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) prods.push_back(mul(*pinv, a->mul(p.col(i), p.col(j))));
  std::vector<Mat> act;
  for (const auto& m : a->action) act.push_back(mul(mul(*pinv, m), p));
  return make_algebra(d, prods, a->group, std::move(act), name.empty() ? a->name : std::move(name));
}

AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(*a->group == *b->group)) throw PreconditionError("tensor_algebra: groups differ");
  int da = a->dim, db = b->dim, d = da * db;
  std::vector<Vec> prods(static_cast<size_t>(d * d));
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k)
        for (int l = 0; l < db; ++l) {
          Vec v = Vec::Constant(d, Rational(0));
          for (const auto& [x, cx] : a->product(i, k))
            for (const auto& [y, cy] : b->product(j, l)) v(x * db + y) += cx * cy;
          prods[static_cast<size_t>((i * db + j) * d + (k * db + l))] = v;
        }
  std::vector<Mat> act;
  for (int g = 0; g < a->group->order; ++g)
    act.push_back(kron(a->action[static_cast<size_t>(g)], b->action[static_cast<size_t>(g)]));
  return make_algebra(d, prods, a->group, std::move(act), a->name + "(x)" + b->name);
}

AlgebraPtr matrix_algebra(const AlgebraPtr& a, int n, const std::vector<Mat>& coord_rep) {
  int d = a->dim, nn = n * n, dim = nn * d;
  auto idx = [&](int i, int j, int k) { return (i * n + j) * d + k; };
  std::vector<Vec> prods(static_cast<size_t>(dim * dim), Vec::Constant(dim, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        for (int k = 0; k < d; ++k)
          for (int m = 0; m < d; ++m) {
            Vec& v = prods[static_cast<size_t>(idx(i, j, k) * dim + idx(j, l, m))];
            for (const auto& [x, c] : a->product(k, m)) v(idx(i, l, x)) = c;
          }
  std::vector<Mat> act;
  const FinGroup& g = *a->group;
  for (int x = 0; x < g.order; ++x) {
    Mat ad = identity<Rational>(nn);
    if (!coord_rep.empty()) {
      const Mat& mu = coord_rep[static_cast<size_t>(x)];
      const Mat& mu_inv = coord_rep[static_cast<size_t>(g.inv(x))];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Mat e = zeros<Rational>(n, n);
          e(i, j) = 1;
          ad.col(i * n + j) = flatten(mul(mul(mu, e), mu_inv));
        }
    }
    act.push_back(kron(ad, a->action[static_cast<size_t>(x)]));
  }
  return make_algebra(dim, prods, a->group, std::move(act), "M" + std::to_string(n) + "(" + a->name + ")");
}

Mat regular_rep(const FinGroup& g, int h) {
  Mat p = zeros<Rational>(g.order, g.order);
  for (int x = 0; x < g.order; ++x) p(g.mul(h, x), x) = 1;
  return p;
}

std::string to_string(Side s) {
  switch (s) {
    case Side::left:
      return "left";
    case Side::right:
      return "right";
    default:
      return "two-sided";
  }
}

Side side_from_string(const std::string& s) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  if (s == "two" || s == "two_sided" || s == "two-sided") return Side::two_sided;
  throw PreconditionError("unknown side: " + s);
}

UnitResult find_unit(const Algebra& a, Side side) {
  int d = a.dim;
  std::vector<Mat> blocks;
  std::vector<Vec> rhs;
  // Column k of block i is the coordinate vector of b_k b_i (left) or b_i b_k (right).
  auto add = [&](bool left) {
    for (int i = 0; i < d; ++i) {
      Mat blk = zeros<Rational>(d, d);
      for (int k = 0; k < d; ++k)
        for (const auto& [l, c] : left ? a.product(k, i) : a.product(i, k)) blk(l, k) = c;
      blocks.push_back(blk);
      rhs.push_back(a.basis(i));
    }
  };
  if (side != Side::right) add(true);
  if (side != Side::left) add(false);
  UnitResult out;
  out.system = vstack(blocks, d);
  out.rhs = Vec(static_cast<Index>(rhs.size()) * d);
  for (size_t i = 0; i < rhs.size(); ++i) out.rhs.segment(static_cast<Index>(i) * d, d) = rhs[i];
  SolveResult s = solve_linear(out.system, out.rhs);
  out.unit = s.solution;
  out.certificate = s.certificate;
  return out;
}

bool is_unit(const Algebra& a, const Vec& u, Side side) {
  for (int i = 0; i < a.dim; ++i) {
    if (side != Side::right && a.mul(u, a.basis(i)) != a.basis(i)) return false;
    if (side != Side::left && a.mul(a.basis(i), u) != a.basis(i)) return false;
  }
  return true;
}

Report check_algebra_hom(const AlgebraHom& h, bool equivariant) {
  Report r;
  const Algebra& s = *h.source;
  const Algebra& t = *h.target;
  if (!r.check("matrix shape", h.matrix.rows() == t.dim && h.matrix.cols() == s.dim)) return r;
  bool multiplicative = true;
  std::string where;
  for (int i = 0; i < s.dim && multiplicative; ++i)
    for (int j = 0; j < s.dim && multiplicative; ++j) {
      Vec lhs = mul(h.matrix, s.product_vector(i, j));
      Vec rhs = t.mul(h.matrix.col(i), h.matrix.col(j));
      if (lhs != rhs) {
        multiplicative = false;
        where = "basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      }
    }
  r.check("multiplicative on basis pairs", multiplicative, where);
  if (equivariant) {
    bool groups = *s.group == *t.group;
    r.check("same group", groups);
    bool eq = groups;
    for (int g = 0; g < s.group->order && eq; ++g)
      eq = same(mul(h.matrix, s.action[static_cast<size_t>(g)]), mul(t.action[static_cast<size_t>(g)], h.matrix));
    r.check("equivariant", eq);
  }
  return r;
}

AlgebraHom compose(const AlgebraHom& second, const AlgebraHom& first) {
  if (!same_algebra(first.target, second.source)) throw PreconditionError("compose: algebras do not match");
  return {first.source, second.target, mul(second.matrix, first.matrix)};
}

bool injective(const AlgebraHom& h) { return rank(h.matrix) == h.source->dim; }

}  // namespace fmlab
