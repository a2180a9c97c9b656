#include "fmlab/corner_module.hpp"

namespace fmlab {

namespace {

Mat restrict_to(const Mat& op, const Mat& basis, const Mat& left_inv, const char* what) {
  Mat img = mul(op, basis);
  Mat c = mul(left_inv, img);
  if (!same(mul(basis, c), img)) throw PreconditionError(std::string("corner part is not invariant under ") + what);
  return c;
}

// Coordinates of a map into a subspace given by an inclusion matrix.
Mat into(const Mat& inclusion, const Mat& map, const char* what) {
  auto li = left_inverse(inclusion);
  if (!li) throw PreconditionError("corner module: inclusion is not injective");
  Mat c = mul(*li, map);
  if (!same(mul(inclusion, c), map)) throw PreconditionError(std::string("corner module: image of ") + what + " leaves the corner part");
  return c;
}

}  // namespace

CornerPart corner_part(const ModulePtr& m, const AlgebraHom& e) {
  const Algebra& c = *m->coeff;
  if (!same_algebra(m->coeff, e.target)) throw PreconditionError("corner_part: hom does not land in the module algebra");
  const AlgebraPtr& b = e.source;
  auto einv = left_inverse(e.matrix);
  if (!einv) throw PreconditionError("corner_part: corner hom is not injective");
  Subspace s(m->dim);
  std::vector<Mat> acts;
  for (int l = 0; l < b->dim; ++l) {
    acts.push_back(m->right_action(e.matrix.col(l)));
    for (int j = 0; j < m->dim; ++j) s.insert(acts.back().col(j));
  }
  CornerPart out;
  auto basis = s.basis();
  out.inclusion = zeros<Rational>(m->dim, s.rank());
  for (Index j = 0; j < s.rank(); ++j) out.inclusion.col(j) = basis[static_cast<size_t>(j)];
  int r = static_cast<int>(s.rank());
  Mat li = r ? *left_inverse(out.inclusion) : Mat(0, m->dim);
  std::vector<Mat> ract, gact, funcs;
  for (int l = 0; l < b->dim; ++l) ract.push_back(restrict_to(acts[static_cast<size_t>(l)], out.inclusion, li, "the corner action"));
  for (const auto& g : m->gaction) gact.push_back(restrict_to(g, out.inclusion, li, "the group action"));
  for (const auto& phi : m->functionals)
    for (int l = 0; l < b->dim; ++l) {
      Mat val = mul(mul(c.left_mult(e.matrix.col(l)), phi), out.inclusion);
      Mat fb = mul(*einv, val);
      if (!same(mul(e.matrix, fb), val)) throw PreconditionError("corner_part: functional values leave the corner");
      funcs.push_back(fb);
    }
  out.module = make_module(b, r, std::move(ract), std::move(gact), std::move(funcs), std::nullopt, m->name + ".M_B");
  return out;
}

CornerModule corner_module_composition(const CornerEmbedding& corner, const FunPair& u0, const FunPair& v) {
  CornerModule out;
  out.corner = corner;
  const ModulePtr& e = u0.source;
  const AlgebraPtr& b = e->coeff;
  ModulePtr b1 = standard_module(b, 1);
  if (!same_module(corner.sum, direct_sum(e, b1))) throw PreconditionError("corner_module: corner embedding of another module");
  if (!u0.target->standard || u0.target->standard->coord_rep.empty())
    throw PreconditionError("corner_module: U0 must land in B^(n-1) with a coordinate representation");
  if (!same_algebra(v.source->coeff, corner.k->algebra)) throw PreconditionError("corner_module: F is not a module over K_B(E+B)");
  if (!v.target->standard || v.target->standard->coord_rep.empty())
    throw PreconditionError("corner_module: V must land in K^m with a coordinate representation");
  UnitResult bu = find_unit(*b, Side::two_sided);
  if (!bu.unit) throw PreconditionError("corner_module: " + b->name + " has no two-sided unit");
  const Vec& unit = *bu.unit;

  out.report.check("U0 is a functional extension", decide_functional_extension(u0).extension);
  out.report.check("V is a functional extension", decide_functional_extension(v).extension);

  out.u = direct_sum(u0, identity_funpair(b1));
  const FunctionalModule& bn = *out.u.target;
  int n = bn.standard->n, d = b->dim;
  int m = v.target->standard->n;
  const std::vector<Mat>& mu = bn.standard->coord_rep;
  const std::vector<Mat>& nu = v.target->standard->coord_rep;

  out.x = kalgebra(out.u.target);
  out.f = induced_compact_hom(out.u, corner.k);
  out.report.merge("f: ", out.f.report);
  auto fhom = to_algebra_hom(out.f.op, *out.x);
  if (!fhom) throw PreconditionError("corner_module: f does not land in K_B(B^n)");
  OperatorHom ex_op{b, out.u.target, {}};
  Mat last = zeros<Rational>(n, n);
  last(n - 1, n - 1) = 1;
  for (int l = 0; l < d; ++l) ex_op.images.push_back(kron(last, b->left(l)));
  auto ex = to_algebra_hom(ex_op, *out.x);
  if (!ex) throw PreconditionError("corner_module: the B corner of B^n is not compact");
  out.report.check("f o e = e_X", same(mul(fhom->matrix, corner.hom.matrix), ex->matrix));

  const Algebra& kalg = *corner.k->algebra;
  const Algebra& xalg = *out.x->algebra;
  Mat ek_inv = *left_inverse(corner.hom.matrix);
  Mat ex_inv = *left_inverse(ex->matrix);

  out.fm = corner_part(v.source, corner.hom);
  out.km = corner_part(v.target, corner.hom);
  ModulePtr xm_full = standard_module(out.x->algebra, m, nu);
  out.xm = corner_part(xm_full, *ex);

  // pi: F.M_B -> K^m.M_B, the restriction of V.
  out.pi = FunPair{out.fm.module, out.km.module, into(out.km.inclusion, mul(v.u, out.fm.inclusion), "V"), {}, "pi"};
  for (const auto& img : v.ustar)
    for (int l = 0; l < d; ++l)
      out.pi.ustar.push_back(mul(ek_inv, Mat(mul(mul(kalg.left_mult(corner.hom.matrix.col(l)), img), out.km.inclusion))));

  // sigma: K^m.M_B -> X^m.M_B, f applied in every coordinate.
  Mat fm_all = kron(identity<Rational>(m), fhom->matrix);
  out.sigma = FunPair{out.km.module, out.xm.module, into(out.xm.inclusion, mul(fm_all, out.km.inclusion), "sigma"), {}, "sigma"};
  int dk = kalg.dim, dx = xalg.dim;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < dk; ++k) {
      Mat chi = zeros<Rational>(dx, m * dx);
      chi.block(0, i * dx, dx, dx) = xalg.left_mult(fhom->matrix.col(k));
      for (int l = 0; l < d; ++l)
        out.sigma.ustar.push_back(mul(ex_inv, Mat(mul(mul(xalg.left_mult(ex->matrix.col(l)), chi), out.xm.inclusion))));
    }

  // kappa: T -> T(e_{n-1} (x) 1) in every coordinate; factor outer, coordinate inner.
  Vec probe = Vec::Constant(n * d, Rational(0));
  probe.segment((n - 1) * d, d) = unit;
  int r = static_cast<int>(out.xm.inclusion.cols());
  Mat kap = zeros<Rational>(m * n * d, r);
  for (int c = 0; c < r; ++c)
    for (int j = 0; j < m; ++j) {
      Vec zj = out.xm.inclusion.col(c).segment(j * dx, dx);
      kap.col(c).segment(j * n * d, n * d) = mul(out.x->op(zj), probe);
    }
  auto kinv = inverse(kap);
  out.report.check("kappa bijective", kinv.has_value());
  if (!kinv) return out;
  std::vector<Mat> rep;
  for (int g = 0; g < b->group_order(); ++g) rep.push_back(kron(nu[static_cast<size_t>(g)], mu[static_cast<size_t>(g)]));
  out.kappa = FunPair{out.xm.module, standard_module(b, n * m, rep), kap, {}, "kappa"};
  for (const auto& psi : out.xm.module->functionals) out.kappa.ustar.push_back(mul(psi, *kinv));

  out.report.merge("U: ", check_functional_hom(out.u));
  out.report.merge("pi: ", check_functional_hom(out.pi));
  out.report.merge("sigma: ", check_functional_hom(out.sigma));
  out.report.merge("kappa: ", check_functional_hom(out.kappa));
  if (!out.report.ok()) return out;
  out.w = compose(compose(out.kappa, out.sigma), out.pi);
  out.w.name = "W";
  out.report.merge("W: ", check_functional_hom(out.w));
  out.report.check("W is a functional extension", decide_functional_extension(out.w).extension);
  return out;
}

}  // namespace fmlab
