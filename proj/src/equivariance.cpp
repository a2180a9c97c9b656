#include "fmlab/equivariance.hpp"

namespace fmlab {

namespace {

Mat shift(const FinGroup& g, int h, int dim) { return kron(regular_rep(g, h), identity<Rational>(dim)); }

}  // namespace

ModulePtr shifted_sum(const ModulePtr& e, const AlgebraPtr& a) {
  if (e->coeff->dim != a->dim || e->coeff->table != a->table)
    throw PreconditionError("shifted_sum: module is over a different algebra");
  const FinGroup& g = *a->group;
  int m = g.order, n = e->dim, d = a->dim;
  std::vector<Mat> ract, gact, funcs;
  for (int k = 0; k < d; ++k) {
    std::vector<Mat> blocks;
    for (int x = 0; x < m; ++x) blocks.push_back(e->right_action(a->action[static_cast<size_t>(g.inv(x))].col(k)));
    ract.push_back(block_diag(blocks));
  }
  for (int h = 0; h < m; ++h) gact.push_back(shift(g, h, n));
  for (int x = 0; x < m; ++x)
    for (Index w = 0; w < e->theta->dim(); ++w) {
      Mat f = zeros<Rational>(d, m * n);
      f.block(0, x * n, d, n) = mul(a->action[static_cast<size_t>(x)], e->theta->basis_word(w));
      funcs.push_back(f);
    }
  return make_module(a, m * n, std::move(ract), std::move(gact), std::move(funcs), std::nullopt, "shift(" + e->name + ")");
}

Report check_equivariance(const FunPair& p) {
  Report r;
  const FunctionalModule& e = *p.source;
  const FunctionalModule& f = *p.target;
  const Algebra& a = *e.coeff;
  bool u_ok = true, star_ok = true, lin_ok = true;
  std::string where;
  StarMap star(p);
  for (int g = 0; g < e.group_order(); ++g) {
    if (!same(mul(p.u, e.gaction[static_cast<size_t>(g)]), mul(f.gaction[static_cast<size_t>(g)], p.u))) {
      u_ok = false;
      where = "g = " + std::to_string(g);
    }
    for (size_t k = 0; k < e.functionals.size(); ++k) {
      auto lhs = star(translate(a, e.gaction, e.functionals[k], g));
      if (!lhs || !same(*lhs, translate(a, f.gaction, p.ustar[k], g))) star_ok = false;
    }
  }
  r.check("U S_g = T_g U for all g", u_ok, where);
  r.check("U*(g.phi) = g.U*(phi) for all g and generators", star_ok);
  for (size_t k = 0; k < e.functionals.size() && lin_ok; ++k)
    for (int b = 0; b < a.dim && lin_ok; ++b) {
      auto lhs = star(mul(a.left(b), e.functionals[k]));
      lin_ok = lhs && same(*lhs, mul(a.left(b), p.ustar[k]));
    }
  r.check("U* left A-linear on generators", lin_ok);
  return r;
}

Averaging average_extension(const ModulePtr& e) {
  const Algebra& a = *e->coeff;
  const FinGroup& g = *a.group;
  int m = g.order, n = e->dim;
  Averaging out;
  ModulePtr t = shifted_sum(e, e->coeff);
  Mat u = zeros<Rational>(m * n, n);
  for (int x = 0; x < m; ++x) u.block(x * n, 0, n, n) = e->gaction[static_cast<size_t>(g.inv(x))];
  out.pi = FunPair{e, t, u, {}, "avg(" + e->name + ")"};
  Rational inv_m(1, m);
  for (const auto& phi : e->functionals) {
    Mat f = zeros<Rational>(a.dim, m * n);
    for (int x = 0; x < m; ++x) f.block(0, x * n, a.dim, n) = mul(phi, e->gaction[static_cast<size_t>(x)]) * inv_m;
    out.pi.ustar.push_back(f);
  }
  out.report.merge("pi: ", check_functional_hom(out.pi));
  out.report.merge("pi: ", check_equivariance(out.pi));
  out.report.check("pi is a functional extension", decide_functional_extension(out.pi).extension);
  out.report.merge("", check_averaging_witness(out));
  return out;
}

Vec averaging_witness(const FunctionalModule& e, const Vec& eta) {
  int m = e.group_order(), n = e.dim;
  Vec xi = Vec::Constant(n, Rational(0));
  for (int x = 0; x < m; ++x) xi += mul(e.gaction[static_cast<size_t>(x)], Vec(eta.segment(x * n, n)));
  return xi * Rational(1, m);
}

Report check_averaging_witness(const Averaging& av) {
  Report r;
  const FunPair& p = av.pi;
  std::vector<Mat> imgs = star_words(p);
  const ThetaSpace& t = *p.source->theta;
  bool ok = true;
  std::string where;
  for (int j = 0; j < p.target->dim && ok; ++j) {
    Vec eta = unit_vector<Rational>(p.target->dim, j);
    Vec xi = averaging_witness(*p.source, eta);
    for (size_t w = 0; w < t.words.size() && ok; ++w)
      if (!same(Mat(mul(t.words[w], xi)), Mat(imgs[w].col(j)))) {
        ok = false;
        where = "eta = e_" + std::to_string(j) + ", word " + std::to_string(w);
      }
  }
  r.check("averaged witness solves every extension system", ok, where);
  return r;
}

Amplified amplify_nonequivariant(const FunPair& gamma, const AlgebraPtr& a) {
  Amplified out;
  out.report.merge("gamma: ", check_functional_hom(gamma));
  out.report.check("gamma is a functional extension", decide_functional_extension(gamma).extension);
  const FinGroup& g = *a->group;
  int m = g.order, d = a->dim;
  ModulePtr src = shifted_sum(gamma.source, a);
  ModulePtr tgt = shifted_sum(gamma.target, a);
  out.sigma = FunPair{src, tgt, kron(identity<Rational>(m), gamma.u), {}, "amp(" + gamma.name + ")"};
  const FunctionalModule& e = *gamma.source;
  int nf = gamma.target->dim;
  StarMap star(gamma);
  for (int x = 0; x < m; ++x)
    for (Index w = 0; w < e.theta->dim(); ++w) {
      auto img = star(e.theta->basis_word(w));
      if (!img) throw PreconditionError("amplify_nonequivariant: gamma* undefined on a functional word");
      Mat f = zeros<Rational>(d, m * nf);
      f.block(0, x * nf, d, nf) = mul(a->action[static_cast<size_t>(x)], *img);
      out.sigma.ustar.push_back(f);
    }
  out.report.merge("sigma: ", check_functional_hom(out.sigma));
  out.report.merge("sigma: ", check_equivariance(out.sigma));
  out.report.check("sigma is a functional extension", decide_functional_extension(out.sigma).extension);
  return out;
}

Mat averaging_basis(int m) {
  Mat x = zeros<Rational>(m, m);
  for (int j = 0; j < m; ++j) x(0, j) = Rational(1, m);
  for (int i = 1; i < m; ++i) {
    x(i, i) = 1;
    x(i, 0) = -1;
  }
  return x;
}

PlainExtension plain_module_extension(const ModulePtr& e) {
  if (!e->standard) throw PreconditionError("plain_module_extension: module is not of the form A^n");
  const AlgebraPtr& ap = e->coeff;
  const Algebra& a = *ap;
  const FinGroup& g = *a.group;
  int m = g.order, n = e->standard->n, d = a.dim, nd = n * d;
  auto alpha_n = [&](int x) { return kron(identity<Rational>(n), a.action[static_cast<size_t>(x)]); };
  PlainExtension out;
  out.source = e;

  std::vector<Mat> nu;
  for (int h = 0; h < m; ++h) nu.push_back(kron(regular_rep(g, h), identity<Rational>(n)));
  ModulePtr big = standard_module(ap, n * m, nu);
  Mat u = zeros<Rational>(m * nd, nd);
  for (int x = 0; x < m; ++x) u.block(x * nd, 0, nd, nd) = mul(alpha_n(x), e->gaction[static_cast<size_t>(g.inv(x))]);
  out.pi = FunPair{e, big, u, {}, "pi"};
  Rational inv_m(1, m);
  for (const auto& phi : e->functionals) {
    Mat f = zeros<Rational>(d, m * nd);
    for (int x = 0; x < m; ++x)
      f.block(0, x * nd, d, nd) = mul(mul(phi, e->gaction[static_cast<size_t>(x)]), alpha_n(g.inv(x))) * inv_m;
    out.pi.ustar.push_back(f);
  }
  out.report.merge("pi: ", check_functional_hom(out.pi));
  out.report.merge("pi: ", check_equivariance(out.pi));
  out.report.check("pi is a functional extension", decide_functional_extension(out.pi).extension);

  // The averaged witness, twisted back by alpha.
  {
    std::vector<Mat> imgs = star_words(out.pi);
    const ThetaSpace& t = *e->theta;
    bool ok = true;
    for (int j = 0; j < big->dim && ok; ++j) {
      // eta = e_j lives in copy x = j / nd only
      int x = j / nd;
      Vec xi = mul(mul(e->gaction[static_cast<size_t>(x)], alpha_n(g.inv(x))), unit_vector<Rational>(nd, j % nd)) * inv_m;
      for (size_t w = 0; w < t.words.size() && ok; ++w) ok = same(Mat(mul(t.words[w], xi)), Mat(imgs[w].col(j)));
    }
    out.report.check("averaged witness solves every extension system of pi", ok);
  }

  std::vector<Mat> tau;
  for (int h = 0; h < m; ++h) tau.push_back(regular_rep(g, h));
  ModulePtr shifted = amplify(e, m, tau);
  std::vector<Mat> blocks;
  for (int x = 0; x < m; ++x) blocks.push_back(mul(e->gaction[static_cast<size_t>(x)], alpha_n(g.inv(x))));
  Mat wm = block_diag(blocks);
  auto winv = inverse(wm);
  if (!winv) throw PreconditionError("plain_module_extension: S is not invertible");
  out.w = FunPair{big, shifted, wm, {}, "W"};
  bool formula = true;
  for (const auto& psi : big->functionals) {
    Mat f = zeros<Rational>(d, m * nd);
    for (int x = 0; x < m; ++x)
      f.block(0, x * nd, d, nd) =
          mul(mul(Mat(psi.block(0, x * nd, d, nd)), alpha_n(x)), e->gaction[static_cast<size_t>(g.inv(x))]);
    formula = formula && same(f, mul(psi, *winv));
    out.w.ustar.push_back(f);
  }
  out.report.check("W* blockwise formula equals composition with W^-1", formula);
  out.report.merge("W: ", check_functional_hom(out.w));
  out.report.merge("W: ", check_equivariance(out.w));

  out.x = averaging_basis(m);
  Mat xinv = *inverse(out.x);
  bool xeq = true;
  for (int h = 0; h < m; ++h) {
    out.mu.push_back(mul(mul(out.x, tau[static_cast<size_t>(h)]), xinv));
    xeq = xeq && same(mul(out.x, tau[static_cast<size_t>(h)]), mul(out.mu.back(), out.x));
  }
  Vec ones = Vec::Constant(m, Rational(1));
  out.report.check("X (1, ..., 1) = e_0", same(Mat(mul(out.x, ones)), Mat(unit_vector<Rational>(m, 0))));
  out.report.check("X tau_h = mu_h X", xeq);

  ModulePtr target = amplify(e, m, out.mu);
  Mat vm = mul(kron(out.x, identity<Rational>(nd)), wm);
  Mat vinv = *inverse(vm);
  out.v = FunPair{big, target, vm, {}, "V"};
  for (const auto& psi : big->functionals) out.v.ustar.push_back(mul(psi, vinv));
  out.report.merge("V: ", check_functional_hom(out.v));
  out.report.merge("V: ", check_equivariance(out.v));
  out.report.check("V is a functional extension", decide_functional_extension(out.v).extension);
  Mat first = kron(Mat(unit_vector<Rational>(m, 0)), identity<Rational>(nd));
  out.report.check("V o pi is the first-summand inclusion", same(mul(vm, u), first));
  return out;
}

}  // namespace fmlab
