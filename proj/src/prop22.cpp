#include "fmlab/prop22.hpp"

namespace fmlab {

namespace {

Mat unit_matrix(int n, int i, int j) {
  Mat e = zeros<Rational>(n, n);
  e(i, j) = 1;
  return e;
}

}  // namespace

Prop22Certificate verify_prop22(const FunPair& v) {
  Prop22Certificate c;
  c.v = v;
  const ModulePtr& e = v.source;
  const AlgebraPtr& b = e->coeff;
  if (!v.target->standard || v.target->standard->coord_rep.empty())
    throw PreconditionError("verify_prop22: V must land in a standard module B^n");
  c.report.merge("V: ", check_functional_hom(v));
  if (!decide_functional_extension(v).extension) throw PreconditionError("verify_prop22: V is not a functional extension");
  int n = c.n = v.target->standard->n;
  int d = b->dim;

  c.corner = corner_embedding(e);
  c.m = c.corner.sum;
  const int dm = c.m->dim;
  const CompactAlgebra& k = *c.corner.k;
  c.report.merge("e: ", check_algebra_hom(c.corner.hom));

  ModulePtr b1 = standard_module(b, 1);
  c.big_f = direct_sum(v, identity_funpair(b1));
  c.big_f.name = "F";
  const std::vector<Mat>& tau = c.big_f.target->standard->coord_rep;
  c.f = induced_compact_hom(c.big_f, c.corner.k);
  c.report.merge("f: ", c.f.report);

  c.m_n1 = amplify(c.m, n + 1, tau);
  c.m_2 = amplify(c.m, 2);
  std::vector<Mat> tau2;
  for (const auto& t : tau) tau2.push_back(kron(identity<Rational>(2), t));
  c.m_2n2 = amplify(c.m, 2 * n + 2, tau2);

  // B^{n+1} sits in the B parts of M^{n+1}.
  Mat iota_b = zeros<Rational>(dm, d);
  iota_b.block(dm - d, 0, d, d) = identity<Rational>(d);
  Mat j0 = kron(identity<Rational>(n + 1), iota_b);
  Mat p0 = j0.transpose();
  Mat second = unit_vector<Rational>(2, 1);
  Mat lift_second = kron(second, j0);                   // B^{n+1} -> second half of M^{2n+2}
  Mat proj_second = lift_second.transpose();
  Mat copy_n = kron(Mat(unit_vector<Rational>(2 * n + 2, n)), identity<Rational>(dm));

  c.j = FunPair{c.m_2, c.m_2n2, hstack<Rational>({copy_n, mul(lift_second, c.big_f.u)}, c.m_2n2->dim), {}, "J"};
  for (const auto& phi : c.m->functionals) c.j.ustar.push_back(mul(phi, Mat(copy_n.transpose())));
  StarMap big_star(c.big_f);
  for (const auto& phi : c.big_f.source->functionals) {
    auto img = big_star(phi);
    c.j.ustar.push_back(mul(*img, proj_second));
  }
  c.report.merge("J: ", check_functional_hom(c.j));
  c.report.check("J is a functional extension", decide_functional_extension(c.j).extension);

  // (1) f o e = h
  c.fe = OperatorHom{b, c.big_f.target, {}};
  c.h = OperatorHom{b, c.big_f.target, {}};
  c.eh = OperatorHom{b, c.m_n1, {}};
  c.he = OperatorHom{b, c.m_n1, {}};
  Mat e_nn = unit_matrix(n + 1, n, n);
  for (int l = 0; l < d; ++l) {
    c.fe.images.push_back(apply(c.f.op, c.corner.hom.matrix.col(l)));
    c.h.images.push_back(kron(e_nn, b->left(l)));
    c.eh.images.push_back(mul(mul(j0, c.h.images.back()), p0));
    c.he.images.push_back(kron(e_nn, c.corner.op.images[static_cast<size_t>(l)]));
  }
  c.report.merge("h: ", check_operator_hom(c.h));
  bool one = true, two = true;
  for (size_t l = 0; l < c.h.images.size(); ++l) {
    one = one && same(c.fe.images[l], c.h.images[l]);
    two = two && same(c.eh.images[l], c.he.images[l]);
  }
  c.report.check("(1) f o e = h", one);
  c.report.merge("H o e: ", check_operator_hom(c.he));
  c.report.check("(2) E o h = H o e", two);

  // (3) and (5) on the basis theta_{e_i, w} of K.
  c.phi_z = OperatorHom{k.algebra, c.m_2n2, {}};
  c.xef = OperatorHom{k.algebra, c.m_2n2, {}};
  c.phi_zp = OperatorHom{k.algebra, c.m_2n2, {}};
  c.canon = OperatorHom{k.algebra, c.m_2n2, {}};
  Mat e11 = unit_matrix(2, 1, 1);
  Mat e_nn_big = unit_matrix(2 * n + 2, n, n);
  const ThetaSpace& th = *c.m->theta;
  StarMap j_star(c.j);
  for (size_t q = 0; q < k.terms.size(); ++q) {
    auto [i, w] = k.terms[q];
    const Mat& word = th.basis_word(w);
    Mat zero_w = zeros<Rational>(d, dm);
    auto low = j_star(hstack<Rational>({zero_w, word}, d));
    auto up = j_star(hstack<Rational>({word, zero_w}, d));
    if (!low || !up) throw PreconditionError("verify_prop22: J* undefined on a functional word");
    Vec ei = unit_vector<Rational>(dm, i);
    Vec low_v = Vec::Constant(2 * dm, Rational(0)), up_v = Vec::Constant(2 * dm, Rational(0));
    low_v.segment(dm, dm) = ei;
    up_v.segment(0, dm) = ei;
    c.phi_z.images.push_back(theta_op(*c.m_2n2, mul(c.j.u, low_v), *low));
    c.phi_zp.images.push_back(theta_op(*c.m_2n2, mul(c.j.u, up_v), *up));
    c.xef.images.push_back(kron(e11, Mat(mul(mul(j0, c.f.op.images[q]), p0))));
    c.canon.images.push_back(kron(e_nn_big, k.basis[q]));
  }
  bool three = true, five = true;
  for (size_t q = 0; q < k.terms.size(); ++q) {
    three = three && same(c.phi_z.images[q], c.xef.images[q]);
    five = five && same(c.phi_zp.images[q], c.canon.images[q]);
  }
  c.report.merge("phi o z: ", check_operator_hom(c.phi_z));
  c.report.check("(3) phi o z = x o E o f", three);
  c.report.merge("phi o z': ", check_operator_hom(c.phi_zp));
  c.report.check("(5) phi o z' is the corner at the distinguished copy", five);

  // (4) z ~ z' inside K(M^2), x ~ x' inside K(M^{2n+2}).
  RotMat rz = block_rotation(2, 0, 1, dm);
  Mat e00 = unit_matrix(2, 0, 0);
  c.z_path = rotation_path(
      c.m_2, k.basis.size(), [&](size_t q) { return kron(e11, k.basis[q]); },
      [&](size_t q) { return kron(e00, k.basis[q]); }, rz, RotMat(rz.transpose()));
  c.report.merge("(4) z ~ z': ", c.z_path.report);
  size_t nk = k.basis.size();
  int n1 = n + 1;
  auto x_src = [&](size_t q, const Mat& corner) {
    size_t t = q % nk, ij = q / nk;
    int i = static_cast<int>(ij) / n1, jj = static_cast<int>(ij) % n1;
    return kron(corner, kron(unit_matrix(n1, i, jj), k.basis[t]));
  };
  RotMat rx = block_rotation(2, 0, 1, n1 * dm);
  c.x_path = rotation_path(
      c.m_2n2, static_cast<size_t>(n1 * n1) * nk, [&](size_t q) { return x_src(q, e11); },
      [&](size_t q) { return x_src(q, e00); }, rx, RotMat(rx.transpose()));
  c.report.merge("(4) x ~ x': ", c.x_path.report);
  return c;
}

}  // namespace fmlab
