#include "fmlab/corner51.hpp"

namespace fmlab {

namespace {

Mat unit_matrix(int n, int i, int j) {
  Mat e = zeros<Rational>(n, n);
  e(i, j) = 1;
  return e;
}

Mat pad(const Mat& t, int extra) { return block_diag<Rational>({t, zeros<Rational>(extra, extra)}); }

// Image of an operator on the source module of an induced hom.
Mat push(const InducedHom& h, const Mat& op, const char* what) {
  auto c = h.source->coordinates(op);
  if (!c) throw PreconditionError(std::string("corner51: operator outside the compact algebra of ") + what);
  return apply(h.op, *c);
}

bool all_same(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!same(a[i], b[i])) return false;
  return true;
}

}  // namespace

std::vector<Mat> adjoint_action(const AlgebraPtr& a, int n, const std::vector<Mat>& gamma) {
  return matrix_iso(standard_module_with_action(a, n, gamma)).matrices->action;
}

CornerWitness51 corner51_witness(const AlgebraPtr& ap, int n, const std::vector<Mat>& gamma_action) {
  CornerWitness51 w;
  const Algebra& a = *ap;
  const FinGroup& g = *a.group;
  int d = a.dim;
  w.n = n;
  w.m = g.order;
  int m = w.m;
  w.matrices = with_group(matrix_algebra(ap, n), a.group, gamma_action);
  w.report.merge("Gamma: ", validate(*w.matrices));

  // First column E_{i0} (x) b_k at index (i n) d + k.
  auto col = [&](int i, int k) { return static_cast<Index>((i * n) * d + k); };
  int nd = n * d;
  for (int x = 0; x < m; ++x) {
    const Mat& gx = gamma_action[static_cast<size_t>(x)];
    Mat gm = zeros<Rational>(nd, nd);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < d; ++k) {
        Vec img = gx.col(col(i, k));
        Vec rest = img;
        for (int i2 = 0; i2 < n; ++i2)
          for (int k2 = 0; k2 < d; ++k2) {
            gm(i2 * d + k2, i * d + k) = img(col(i2, k2));
            rest(col(i2, k2)) = 0;
          }
        if (!is_zero_matrix(Mat(rest)))
          throw PreconditionError("corner51: the first column is not invariant under Gamma at g = " + std::to_string(x));
      }
    w.gamma.push_back(gm);
  }
  w.column = standard_module_with_action(ap, n, w.gamma);
  w.report.merge("(A^n, gamma): ", validate(*w.column));

  Mat em = zeros<Rational>(w.matrices->dim, d);
  for (int k = 0; k < d; ++k) em(col(0, k), k) = 1;
  w.e = AlgebraHom{ap, w.matrices, em};
  w.report.merge("e: ", check_algebra_hom(w.e));
  w.iso = matrix_iso(w.column);
  w.report.merge("K(A^n) = M_n(A): ", w.iso.report);
  w.report.check("Gamma = ad(gamma)", same_algebra(w.iso.matrices, w.matrices));

  w.ext = plain_module_extension(w.column);
  w.report.merge("Lemma 6.2: ", w.ext.report);
  w.f = induced_compact_hom(w.ext.pi);
  w.x = induced_compact_hom(w.ext.v);
  w.report.merge("f: ", w.f.report);
  w.report.merge("x: ", w.x.report);
  w.report.check("x bijective", w.x.source->dim() == kalgebra(w.ext.v.target)->dim() && injective(w.x.op));

  ModulePtr a1 = standard_module(ap, 1);
  w.v_plus = direct_sum(w.ext.v, identity_funpair(a1));
  w.big_x = induced_compact_hom(w.v_plus);
  w.report.merge("X: ", w.big_x.report);
  w.report.check("X bijective", w.big_x.source->dim() == kalgebra(w.v_plus.target)->dim() && injective(w.big_x.op));

  // x o f is the corner T -> E_00 (x) T.
  const CompactAlgebra& kc = *w.f.source;
  w.fx = OperatorHom{kc.algebra, w.ext.v.target, {}};
  w.canonical = OperatorHom{kc.algebra, w.ext.v.target, {}};
  Mat e00m = unit_matrix(m, 0, 0);
  for (size_t q = 0; q < kc.basis.size(); ++q) {
    w.fx.images.push_back(push(w.x, w.f.op.images[q], "A^{nm}"));
    w.canonical.images.push_back(kron(e00m, kc.basis[q]));
  }
  w.report.check("x o f is the canonical corner embedding", all_same(w.fx.images, w.canonical.images));

  // X o y = z o x on K(A^{nm}).
  const CompactAlgebra& kb = *w.x.source;
  w.xy = OperatorHom{kb.algebra, w.v_plus.target, {}};
  w.zx = OperatorHom{kb.algebra, w.v_plus.target, {}};
  for (size_t q = 0; q < kb.basis.size(); ++q) {
    w.xy.images.push_back(push(w.big_x, pad(kb.basis[q], d), "A^{nm+1}"));
    w.zx.images.push_back(pad(w.x.op.images[q], d));
  }
  w.report.check("X o y = z o x", all_same(w.xy.images, w.zx.images));

  int big = n * m + 1;
  Mat last = unit_matrix(big, big - 1, big - 1);
  w.big_f = OperatorHom{ap, w.v_plus.source, {}};
  w.r = OperatorHom{ap, w.v_plus.target, {}};
  w.xf = OperatorHom{ap, w.v_plus.target, {}};
  w.efxz = OperatorHom{ap, w.v_plus.target, {}};
  w.efy = OperatorHom{ap, w.v_plus.source, {}};
  Mat e00n = unit_matrix(n, 0, 0);
  for (int k = 0; k < d; ++k) {
    w.big_f.images.push_back(kron(last, a.left(k)));
    w.r.images.push_back(kron(last, a.left(k)));
    w.xf.images.push_back(push(w.big_x, w.big_f.images.back(), "A^{nm+1}"));
    Mat fe = push(w.f, kron(e00n, a.left(k)), "A^n");
    w.efy.images.push_back(pad(fe, d));
    w.efxz.images.push_back(pad(push(w.x, fe, "A^{nm}"), d));
  }
  w.report.merge("F: ", check_operator_hom(w.big_f));
  w.report.merge("e f y: ", check_operator_hom(w.efy));
  w.report.check("X o F = r", all_same(w.xf.images, w.r.images));

  w.efxz_r = find_rotation_path(w.v_plus.target, w.efxz.images, w.r.images, d);
  w.report.merge("e f x z ~ r: ", w.efxz_r.report);
  // Pull the same rotation back along the module isomorphism V (+) id.
  auto vinv = inverse(w.v_plus.u);
  if (!vinv) throw PreconditionError("corner51: V (+) id is not invertible");
  RotMat lv = lift(w.v_plus.u), lvi = lift(*vinv);
  RotMat conj = mul(mul(lvi, w.efxz_r.conj), lv), conj_inv = mul(mul(lvi, w.efxz_r.conj_inv), lv);
  w.efy_f = rotation_path(w.v_plus.source, w.efy.images, w.big_f.images, conj, conj_inv);
  w.report.merge("e f y ~ F: ", w.efy_f.report);

  // gamma = alpha (+) gamma' is forced by equivariance of e; then e is the
  // corner embedding of (A^{n-1}, gamma') moved to the first coordinate.
  if (n >= 2) {
    std::vector<Mat> rest;
    bool split = true;
    int rd = (n - 1) * d;
    for (int x = 0; x < m; ++x) {
      const Mat& gm = w.gamma[static_cast<size_t>(x)];
      split = split && same(Mat(gm.block(0, 0, d, d)), a.action[static_cast<size_t>(x)]) &&
              is_zero_matrix(Mat(gm.block(0, d, d, rd))) && is_zero_matrix(Mat(gm.block(d, 0, rd, d)));
      rest.push_back(gm.block(d, d, rd, rd));
    }
    w.report.check("gamma = alpha (+) gamma'", split);
    if (split) {
      ModulePtr tail = standard_module_with_action(ap, n - 1, rest);
      PlainExtension pe = plain_module_extension(tail);
      w.report.merge("tail extension: ", pe.report);
      w.invertibility = verify_prop22(pe.pi);
      w.report.merge("e invertible: ", w.invertibility->report);
      // Moving coordinate 0 to the end carries gamma to gamma' (+) alpha.
      Mat perm = zeros<Rational>(n, n);
      for (int i = 0; i < n; ++i) perm((i + n - 1) % n, i) = 1;
      Mat p = kron(perm, identity<Rational>(d));
      const FunctionalModule& sum = *w.invertibility->corner.sum;
      bool moved = true;
      for (int x = 0; x < m; ++x)
        moved = moved && same(mul(mul(p, w.gamma[static_cast<size_t>(x)]), Mat(p.transpose())), sum.gaction[static_cast<size_t>(x)]);
      for (int k = 0; k < d; ++k)
        moved = moved && same(mul(mul(p, Mat(kron(e00n, a.left(k)))), Mat(p.transpose())),
                              w.invertibility->corner.op.images[static_cast<size_t>(k)]);
      w.report.check("permuted e is the corner embedding of (A^{n-1}, gamma') (+) A", moved);
    }
  } else {
    w.report.check("n = 1: e is an isomorphism", rank(w.e.matrix) == w.matrices->dim);
  }
  return w;
}

}  // namespace fmlab
