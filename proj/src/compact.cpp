#include "fmlab/compact.hpp"

namespace fmlab {

std::optional<Vec> CompactAlgebra::coordinates(const Mat& op) const {
  if (op.rows() != module->dim || op.cols() != module->dim) return std::nullopt;
  return span.try_chosen_coordinates(flatten(op));
}

Mat CompactAlgebra::op(const Vec& coords) const { return combine(coords, basis, module->dim, module->dim); }

CompactPtr kalgebra(const ModulePtr& m) {
  auto k = std::make_shared<CompactAlgebra>();
  k->module = m;
  int n = m->dim;
  k->span = Subspace(static_cast<Index>(n) * n, true);
  for (int i = 0; i < n; ++i) {
    Vec e = unit_vector<Rational>(n, i);
    for (Index w = 0; w < m->theta->dim(); ++w) {
      Mat t = theta_op(*m, e, m->theta->basis_word(w));
      if (k->span.insert(flatten(t))) {
        k->basis.push_back(t);
        k->terms.emplace_back(i, w);
      }
    }
  }
  int dim = k->dim();
  std::vector<Vec> prods;
  prods.reserve(static_cast<size_t>(dim * dim));
  for (int p = 0; p < dim; ++p)
    for (int q = 0; q < dim; ++q) {
      auto c = k->coordinates(mul(k->basis[static_cast<size_t>(p)], k->basis[static_cast<size_t>(q)]));
      if (!c) throw PreconditionError("kalgebra: span of theta operators is not closed under composition");
      prods.push_back(*c);
    }
  const FinGroup& g = m->group();
  std::vector<Mat> act;
  for (int x = 0; x < g.order; ++x) {
    Mat a(dim, dim);
    const Mat& s = m->gaction[static_cast<size_t>(x)];
    const Mat& sinv = m->gaction[static_cast<size_t>(g.inv(x))];
    for (int p = 0; p < dim; ++p) {
      auto c = k->coordinates(mul(mul(s, k->basis[static_cast<size_t>(p)]), sinv));
      if (!c) throw PreconditionError("kalgebra: span is not invariant under conjugation");
      a.col(p) = *c;
    }
    act.push_back(a);
  }
  k->algebra = make_algebra(dim, prods, m->coeff->group, std::move(act), "K(" + m->name + ")");
  return k;
}

Mat apply(const OperatorHom& h, const Vec& x) { return combine(x, h.images, h.target->dim, h.target->dim); }

Report check_operator_hom(const OperatorHom& h, bool equivariant) {
  Report r;
  const Algebra& s = *h.source;
  bool shape = h.images.size() == static_cast<size_t>(s.dim);
  for (const auto& im : h.images) shape = shape && im.rows() == h.target->dim && im.cols() == h.target->dim;
  if (!r.check("image shapes", shape)) return r;
  bool mult = true;
  std::string where;
  for (int i = 0; i < s.dim && mult; ++i)
    for (int j = 0; j < s.dim && mult; ++j) {
      if (!same(apply(h, s.product_vector(i, j)), mul(h.images[static_cast<size_t>(i)], h.images[static_cast<size_t>(j)]))) {
        mult = false;
        where = "basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      }
    }
  r.check("multiplicative on basis pairs", mult, where);
  if (equivariant) {
    bool groups = *s.group == h.target->group();
    r.check("same group", groups);
    bool eq = groups;
    const FinGroup& g = *s.group;
    for (int x = 0; x < g.order && eq; ++x) {
      const Mat& t = h.target->gaction[static_cast<size_t>(x)];
      const Mat& tinv = h.target->gaction[static_cast<size_t>(g.inv(x))];
      for (int i = 0; i < s.dim && eq; ++i)
        eq = same(apply(h, s.action[static_cast<size_t>(x)].col(i)), mul(mul(t, h.images[static_cast<size_t>(i)]), tinv));
    }
    r.check("equivariant", eq);
  }
  return r;
}

bool injective(const OperatorHom& h) {
  Subspace s(static_cast<Index>(h.target->dim) * h.target->dim);
  for (const auto& im : h.images) s.insert(flatten(im));
  return s.rank() == h.source->dim;
}

std::optional<AlgebraHom> to_algebra_hom(const OperatorHom& h, const CompactAlgebra& k) {
  if (!same_module(h.target, k.module)) return std::nullopt;
  Mat m(k.dim(), h.source->dim);
  for (int i = 0; i < h.source->dim; ++i) {
    auto c = k.coordinates(h.images[static_cast<size_t>(i)]);
    if (!c) return std::nullopt;
    m.col(i) = *c;
  }
  return AlgebraHom{h.source, k.algebra, m};
}

CornerEmbedding corner_embedding(const ModulePtr& e) {
  const AlgebraPtr& b = e->coeff;
  CornerEmbedding c;
  c.sum = direct_sum(e, standard_module(b, 1));
  c.k = kalgebra(c.sum);
  c.op.source = b;
  c.op.target = c.sum;
  for (int l = 0; l < b->dim; ++l)
    c.op.images.push_back(block_diag<Rational>({zeros<Rational>(e->dim, e->dim), b->left(l)}));
  auto h = to_algebra_hom(c.op, *c.k);
  if (!h) throw PreconditionError("corner_embedding: the corner is not inside K_B(E+B)");
  c.hom = *h;
  return c;
}

std::optional<Vec> LeftRegular::element(const Mat& block) const {
  Vec x = mul(left_inverse, flatten(block));
  if (!same(a->left_mult(x), block)) return std::nullopt;
  return x;
}

std::optional<LeftRegular> left_regular(const AlgebraPtr& a) {
  int d = a->dim;
  Mat lmap(d * d, d);
  for (int k = 0; k < d; ++k) lmap.col(k) = flatten(a->left(k));
  auto li = left_inverse(lmap);
  if (!li) return std::nullopt;
  return LeftRegular{a, *li};
}

MatrixIso matrix_iso(const ModulePtr& e) {
  if (!e->standard) throw PreconditionError("matrix_iso needs a standard module");
  const AlgebraPtr& a = e->coeff;
  auto lr = left_regular(a);
  if (!lr) throw PreconditionError("matrix_iso: left multiplication is not faithful on " + a->name);
  int n = e->standard->n, d = a->dim;
  MatrixIso out;
  out.k = kalgebra(e);
  auto decompose = [&](const Mat& op) -> std::optional<Vec> {
    Vec v = Vec::Constant(n * n * d, Rational(0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        auto x = lr->element(op.block(i * d, j * d, d, d));
        if (!x) return std::nullopt;
        v.segment((i * n + j) * d, d) = *x;
      }
    return v;
  };
  if (!e->standard->coord_rep.empty()) {
    out.matrices = matrix_algebra(a, n, e->standard->coord_rep);
  } else {
    AlgebraPtr plain = matrix_algebra(a, n);
    const FinGroup& g = *a->group;
    std::vector<Mat> act;
    int dim = n * n * d;
    for (int x = 0; x < g.order; ++x) {
      Mat m(dim, dim);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < d; ++k) {
            Mat eij = zeros<Rational>(n, n);
            eij(i, j) = 1;
            Mat op = kron(eij, a->left(k));
            auto c = decompose(mul(mul(e->gaction[static_cast<size_t>(x)], op), e->gaction[static_cast<size_t>(g.inv(x))]));
            if (!c) throw PreconditionError("matrix_iso: conjugation leaves M_n(A)");
            m.col((i * n + j) * d + k) = *c;
          }
      act.push_back(m);
    }
    out.matrices = with_group(plain, a->group, std::move(act));
  }
  Mat h(n * n * d, out.k->dim());
  bool blocks = true;
  for (int p = 0; p < out.k->dim(); ++p) {
    auto c = decompose(out.k->basis[static_cast<size_t>(p)]);
    if (!c) {
      blocks = false;
      break;
    }
    h.col(p) = *c;
  }
  out.report.check("operators split into left multiplication blocks", blocks);
  if (!blocks) return out;
  out.hom = AlgebraHom{out.k->algebra, out.matrices, h};
  out.report.check("bijective", h.rows() == h.cols() && rank(h) == h.rows(),
                   "dim K = " + std::to_string(h.cols()) + ", dim M_n(A) = " + std::to_string(h.rows()));
  out.report.merge("", check_algebra_hom(out.hom));
  return out;
}

}  // namespace fmlab
