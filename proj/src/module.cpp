#include "fmlab/module.hpp"

namespace fmlab {

namespace {

std::vector<Mat> left_mults(const Algebra& a) {
  std::vector<Mat> out;
  for (int i = 0; i < a.dim; ++i) out.push_back(a.left(i));
  return out;
}

std::shared_ptr<const ThetaSpace> build_theta(const Algebra& a, int dim, const std::vector<Mat>& gaction,
                                              const std::vector<Mat>& gens) {
  auto t = std::make_shared<ThetaSpace>();
  t->words = saturate(a, gaction, gens);
  t->span = Subspace(static_cast<Index>(a.dim) * dim, true);
  for (const auto& w : t->words) t->span.insert(flatten(w));
  return t;
}

Mat zero_functional(int d, int dim) { return zeros<Rational>(d, dim); }

}  // namespace

Mat FunctionalModule::right_action(const Vec& a) const {
  Mat m = zeros<Rational>(dim, dim);
  for (int k = 0; k < d(); ++k)
    if (!a(k).is_zero()) m += a(k) * raction[static_cast<size_t>(k)];
  return m;
}

Mat translate(const Algebra& a, const std::vector<Mat>& gaction, const Mat& phi, int g) {
  const FinGroup& G = *a.group;
  if (g == G.identity) return phi;
  return mul(mul(a.action[static_cast<size_t>(g)], phi), gaction[static_cast<size_t>(G.inv(g))]);
}

std::vector<Mat> saturate(const Algebra& a, const std::vector<Mat>& gaction, const std::vector<Mat>& generators) {
  std::vector<Mat> lm = left_mults(a);
  std::vector<Mat> words;
  words.reserve(generators.size() * static_cast<size_t>(a.group->order * (a.dim + 1)));
  for (const auto& phi : generators)
    for (int g = 0; g < a.group->order; ++g) {
      Mat w = translate(a, gaction, phi, g);
      words.push_back(w);
      for (int k = 0; k < a.dim; ++k) words.push_back(mul(lm[static_cast<size_t>(k)], w));
    }
  return words;
}

ModulePtr make_module(AlgebraPtr coeff, int dim, std::vector<Mat> raction, std::vector<Mat> gaction,
                      std::vector<Mat> functionals, std::optional<StandardInfo> standard, std::string name) {
  if (!coeff) throw PreconditionError("module needs a coefficient algebra");
  int d = coeff->dim;
  if (dim < 0) throw PreconditionError("module dimension must be non-negative");
  if (raction.size() != static_cast<size_t>(d)) throw PreconditionError("module needs one right action matrix per algebra basis element");
  for (const auto& r : raction)
    if (r.rows() != dim || r.cols() != dim) throw PreconditionError("right action matrix has the wrong shape");
  if (gaction.empty()) gaction.assign(static_cast<size_t>(coeff->group->order), identity<Rational>(dim));
  if (gaction.size() != static_cast<size_t>(coeff->group->order)) throw PreconditionError("module needs one action matrix per group element");
  for (const auto& s : gaction)
    if (s.rows() != dim || s.cols() != dim) throw PreconditionError("group action matrix has the wrong shape");
  for (const auto& f : functionals)
    if (f.rows() != d || f.cols() != dim) throw PreconditionError("functional matrix must be d x dim");
  auto m = std::make_shared<FunctionalModule>();
  m->coeff = std::move(coeff);
  m->dim = dim;
  m->raction = std::move(raction);
  m->gaction = std::move(gaction);
  m->functionals = std::move(functionals);
  m->standard = std::move(standard);
  m->name = std::move(name);
  m->theta = build_theta(*m->coeff, dim, m->gaction, m->functionals);
  return m;
}

Report validate(const FunctionalModule& m) {
  Report r;
  const Algebra& a = *m.coeff;
  const FinGroup& g = *a.group;
  int d = a.dim, n = m.dim;
  bool shape = m.raction.size() == static_cast<size_t>(d) && m.gaction.size() == static_cast<size_t>(g.order);
  for (const auto& x : m.raction) shape = shape && x.rows() == n && x.cols() == n;
  for (const auto& x : m.gaction) shape = shape && x.rows() == n && x.cols() == n;
  for (const auto& x : m.functionals) shape = shape && x.rows() == d && x.cols() == n;
  if (!r.check("shapes", shape)) return r;

  bool rmod = true;
  std::string where;
  for (int i = 0; i < d && rmod; ++i)
    for (int j = 0; j < d && rmod; ++j) {
      Mat lhs = m.right_action(a.product_vector(i, j));
      Mat rhs = mul(m.raction[static_cast<size_t>(j)], m.raction[static_cast<size_t>(i)]);
      if (!same(lhs, rhs)) {
        rmod = false;
        where = "(xi b" + std::to_string(i) + ") b" + std::to_string(j);
      }
    }
  r.check("right module axiom", rmod, where);

  r.check("identity acts trivially", same(m.gaction[static_cast<size_t>(g.identity)], identity<Rational>(n)));
  bool ghom = true;
  for (int x = 0; x < g.order && ghom; ++x)
    for (int y = 0; y < g.order && ghom; ++y)
      ghom = same(mul(m.gaction[static_cast<size_t>(x)], m.gaction[static_cast<size_t>(y)]), m.gaction[static_cast<size_t>(g.mul(x, y))]);
  r.check("group action is a homomorphism", ghom);
  bool semi = true;
  for (int x = 0; x < g.order && semi; ++x)
    for (int k = 0; k < d && semi; ++k) {
      Mat lhs = mul(m.gaction[static_cast<size_t>(x)], m.raction[static_cast<size_t>(k)]);
      Mat rhs = mul(m.right_action(a.action[static_cast<size_t>(x)].col(k)), m.gaction[static_cast<size_t>(x)]);
      semi = same(lhs, rhs);
    }
  r.check("group action is semilinear", semi);

  bool lin = true;
  for (size_t w = 0; w < m.theta->basis().size() && lin; ++w) {
    const Mat& phi = m.theta->basis_word(static_cast<Index>(w));
    for (int k = 0; k < d && lin; ++k) lin = same(mul(phi, m.raction[static_cast<size_t>(k)]), mul(a.right(k), phi));
  }
  r.check("functionals are A-linear", lin);

  bool closed = true;
  for (size_t w = 0; w < m.theta->basis().size() && closed; ++w) {
    const Mat& phi = m.theta->basis_word(static_cast<Index>(w));
    for (int x = 0; x < g.order && closed; ++x) closed = m.theta->span.contains(flatten(translate(a, m.gaction, phi, x)));
    for (int k = 0; k < d && closed; ++k) closed = m.theta->span.contains(flatten(mul(a.left(k), phi)));
  }
  r.check("functional space is G-invariant and a left A-submodule", closed);

  if (m.standard) {
    const StandardInfo& s = *m.standard;
    bool ok = s.n * d == n;
    for (int k = 0; k < d && ok; ++k) ok = same(m.raction[static_cast<size_t>(k)], kron(identity<Rational>(s.n), a.right(k)));
    r.check("standard module right action", ok);
    if (!s.coord_rep.empty()) {
      bool rep = s.coord_rep.size() == static_cast<size_t>(g.order);
      for (int x = 0; x < g.order && rep; ++x)
        rep = same(m.gaction[static_cast<size_t>(x)], kron(s.coord_rep[static_cast<size_t>(x)], a.action[static_cast<size_t>(x)]));
      r.check("standard module coordinate representation", rep);
    }
  }
  return r;
}

bool same_module(const FunctionalModule& a, const FunctionalModule& b) {
  if (&a == &b) return true;
  if (!same_algebra(a.coeff, b.coeff) || a.dim != b.dim) return false;
  for (size_t i = 0; i < a.raction.size(); ++i)
    if (!same(a.raction[i], b.raction[i])) return false;
  for (size_t i = 0; i < a.gaction.size(); ++i)
    if (!same(a.gaction[i], b.gaction[i])) return false;
  return a.theta->span == b.theta->span;
}

bool same_module(const ModulePtr& a, const ModulePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return same_module(*a, *b);
}

bool theta_contains(const FunctionalModule& m, const Mat& phi) {
  if (phi.rows() != m.d() || phi.cols() != m.dim) return false;
  return m.theta->span.contains(flatten(phi));
}

std::optional<Vec> theta_coordinates(const FunctionalModule& m, const Mat& phi) {
  if (phi.rows() != m.d() || phi.cols() != m.dim) return std::nullopt;
  return m.theta->span.try_chosen_coordinates(flatten(phi));
}

ModulePtr standard_module(const AlgebraPtr& a, int n, const std::vector<Mat>& coord_rep) {
  int d = a->dim;
  const FinGroup& g = *a->group;
  std::vector<Mat> rep = coord_rep;
  if (rep.empty()) rep.assign(static_cast<size_t>(g.order), identity<Rational>(n));
  if (rep.size() != static_cast<size_t>(g.order)) throw PreconditionError("coordinate representation needs one matrix per group element");
  std::vector<Mat> ract, gact, funcs;
  for (int k = 0; k < d; ++k) ract.push_back(kron(identity<Rational>(n), a->right(k)));
  for (int x = 0; x < g.order; ++x) {
    const Mat& mu = rep[static_cast<size_t>(x)];
    if (mu.rows() != n || mu.cols() != n) throw PreconditionError("coordinate representation matrix must be n x n");
    gact.push_back(kron(mu, a->action[static_cast<size_t>(x)]));
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k) {
      Mat f = zeros<Rational>(d, n * d);
      f.block(0, i * d, d, d) = a->left(k);
      funcs.push_back(f);
    }
  return make_module(a, n * d, std::move(ract), std::move(gact), std::move(funcs), StandardInfo{n, rep},
                     a->name + "^" + std::to_string(n));
}

ModulePtr standard_module_with_action(const AlgebraPtr& a, int n, const std::vector<Mat>& gaction) {
  ModulePtr base = standard_module(a, n);
  return make_module(a, base->dim, base->raction, gaction, base->functionals, StandardInfo{n, {}}, base->name + "(twisted)");
}

ModulePtr zero_module(const AlgebraPtr& a) {
  std::vector<Mat> ract(static_cast<size_t>(a->dim), Mat(0, 0));
  return make_module(a, 0, std::move(ract), {}, {}, StandardInfo{0, std::vector<Mat>(static_cast<size_t>(a->group->order), Mat(0, 0))}, "0");
}

ModulePtr direct_sum(const ModulePtr& e, const ModulePtr& f) {
  if (!same_algebra(e->coeff, f->coeff)) throw PreconditionError("direct_sum: coefficient algebras differ");
  int d = e->d(), m = e->dim, n = f->dim;
  std::vector<Mat> ract, gact, funcs;
  for (int k = 0; k < d; ++k) ract.push_back(block_diag<Rational>({e->raction[static_cast<size_t>(k)], f->raction[static_cast<size_t>(k)]}));
  for (int x = 0; x < e->group_order(); ++x)
    gact.push_back(block_diag<Rational>({e->gaction[static_cast<size_t>(x)], f->gaction[static_cast<size_t>(x)]}));
  for (const auto& phi : e->functionals) funcs.push_back(hstack<Rational>({phi, zero_functional(d, n)}, d));
  for (const auto& psi : f->functionals) funcs.push_back(hstack<Rational>({zero_functional(d, m), psi}, d));
  std::optional<StandardInfo> std_info;
  if (e->standard && f->standard && !e->standard->coord_rep.empty() && !f->standard->coord_rep.empty()) {
    StandardInfo s{e->standard->n + f->standard->n, {}};
    for (int x = 0; x < e->group_order(); ++x)
      s.coord_rep.push_back(block_diag<Rational>({e->standard->coord_rep[static_cast<size_t>(x)], f->standard->coord_rep[static_cast<size_t>(x)]}));
    std_info = s;
  }
  return make_module(e->coeff, m + n, std::move(ract), std::move(gact), std::move(funcs), std_info,
                     "(" + e->name + "+" + f->name + ")");
}

ModulePtr direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw PreconditionError("direct_sum of nothing");
  ModulePtr acc = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
  return acc;
}

ModulePtr amplify(const ModulePtr& m, int k, const std::vector<Mat>& rep) {
  const FinGroup& g = m->group();
  std::vector<Mat> r = rep;
  if (r.empty()) r.assign(static_cast<size_t>(g.order), identity<Rational>(k));
  if (r.size() != static_cast<size_t>(g.order)) throw PreconditionError("amplify: representation needs one matrix per group element");
  int d = m->d(), n = m->dim;
  std::vector<Mat> ract, gact, funcs;
  for (const auto& x : m->raction) ract.push_back(kron(identity<Rational>(k), x));
  for (int x = 0; x < g.order; ++x) gact.push_back(kron(r[static_cast<size_t>(x)], m->gaction[static_cast<size_t>(x)]));
  for (int j = 0; j < k; ++j)
    for (const auto& phi : m->functionals) {
      Mat f = zero_functional(d, k * n);
      f.block(0, j * n, d, n) = phi;
      funcs.push_back(f);
    }
  std::optional<StandardInfo> s;
  if (m->standard) {
    s = StandardInfo{k * m->standard->n, {}};
    if (!m->standard->coord_rep.empty())
      for (int x = 0; x < g.order; ++x) s->coord_rep.push_back(kron(r[static_cast<size_t>(x)], m->standard->coord_rep[static_cast<size_t>(x)]));
  }
  return make_module(m->coeff, k * n, std::move(ract), std::move(gact), std::move(funcs), s,
                     "Q^" + std::to_string(k) + "(x)" + m->name);
}

ModulePtr external_tensor(const ModulePtr& e, const ModulePtr& f) {
  AlgebraPtr c = tensor_algebra(e->coeff, f->coeff);
  std::vector<Mat> ract, gact, funcs;
  for (int a = 0; a < e->d(); ++a)
    for (int b = 0; b < f->d(); ++b) ract.push_back(kron(e->raction[static_cast<size_t>(a)], f->raction[static_cast<size_t>(b)]));
  for (int x = 0; x < e->group_order(); ++x) gact.push_back(kron(e->gaction[static_cast<size_t>(x)], f->gaction[static_cast<size_t>(x)]));
  for (const auto& phi : e->functionals)
    for (const auto& psi : f->functionals) funcs.push_back(kron(phi, psi));
  return make_module(c, e->dim * f->dim, std::move(ract), std::move(gact), std::move(funcs), std::nullopt,
                     e->name + "(x)" + f->name);
}

InternalTensor internal_tensor(const ModulePtr& e, const AlgebraHom& pi) {
  if (!same_algebra(e->coeff, pi.source)) throw PreconditionError("internal_tensor: hom source is not the module's algebra");
  Report hr = check_algebra_hom(pi);
  if (!hr.ok()) throw PreconditionError("internal_tensor: not an equivariant algebra hom: " + hr.summary());
  const Algebra& a = *e->coeff;
  const Algebra& b = *pi.target;
  int m = e->dim, da = a.dim, db = b.dim, amb = m * db;
  InternalTensor out;
  out.relations = Subspace(amb);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < da; ++k) {
      Vec xi_a = e->raction[static_cast<size_t>(k)].col(i);
      Vec pk = pi.matrix.col(k);
      for (int j = 0; j < db; ++j) {
        Vec r = kron<Rational>(Mat(xi_a), Mat(b.basis(j)));
        Vec pb = b.mul(pk, b.basis(j));
        for (int l = 0; l < db; ++l) r(i * db + l) -= pb(l);
        out.relations.insert(r);
      }
    }
  Quotient q = quotient(out.relations);
  out.projection = q.projection;
  out.section = q.section;
  int qd = static_cast<int>(q.complement.size());

  auto push = [&](const Mat& full_op, const char* what) {
    for (const auto& rv : out.relations.basis())
      if (!out.relations.contains(mul(full_op, rv))) throw PreconditionError(std::string("internal_tensor: relations not invariant under ") + what);
    return Mat(mul(mul(q.projection, full_op), q.section));
  };
  std::vector<Mat> ract, gact, funcs;
  for (int l = 0; l < db; ++l) ract.push_back(push(kron(identity<Rational>(m), b.right(l)), "the right action"));
  for (int x = 0; x < a.group->order; ++x)
    gact.push_back(push(kron(e->gaction[static_cast<size_t>(x)], b.action[static_cast<size_t>(x)]), "the group action"));
  for (const auto& phi : e->functionals) {
    Mat pphi = mul(pi.matrix, phi);  // db x m
    for (int j = 0; j < db; ++j) {
      Mat full = zeros<Rational>(db, amb);
      for (int i = 0; i < m; ++i) {
        Vec left = b.mul(b.basis(j), pphi.col(i));
        for (int l = 0; l < db; ++l) full.col(i * db + l) = b.mul(left, b.basis(l));
      }
      for (const auto& rv : out.relations.basis())
        if (!is_zero_matrix(Mat(mul(full, rv)))) throw PreconditionError("internal_tensor: functional does not vanish on relations");
      funcs.push_back(mul(full, q.section));
    }
  }
  out.module = make_module(pi.target, qd, std::move(ract), std::move(gact), std::move(funcs), std::nullopt,
                           e->name + "(x)_pi " + b.name);
  return out;
}

ModulePtr submodule(const ModulePtr& m, const Mat& basis, std::vector<Mat> functionals, std::string name) {
  auto li = left_inverse(basis);
  if (!li) throw PreconditionError("submodule basis is not independent");
  auto restrict_op = [&](const Mat& op, const char* what) {
    Mat img = mul(op, basis);
    Mat c = mul(*li, img);
    if (!same(mul(basis, c), img)) throw PreconditionError(std::string("subspace is not invariant under ") + what);
    return c;
  };
  std::vector<Mat> ract, gact;
  for (const auto& r : m->raction) ract.push_back(restrict_op(r, "the right action"));
  for (const auto& s : m->gaction) gact.push_back(restrict_op(s, "the group action"));
  return make_module(m->coeff, static_cast<int>(basis.cols()), std::move(ract), std::move(gact), std::move(functionals),
                     std::nullopt, name.empty() ? "sub(" + m->name + ")" : std::move(name));
}

ModulePtr forget_group(const ModulePtr& m) {
  AlgebraPtr a = fmlab::forget_group(m->coeff);
  std::vector<Mat> funcs;
  for (Index i = 0; i < m->theta->dim(); ++i) funcs.push_back(m->theta->basis_word(i));
  std::optional<StandardInfo> s;
  if (m->standard) s = StandardInfo{m->standard->n, {identity<Rational>(m->standard->n)}};
  return make_module(a, m->dim, m->raction, {identity<Rational>(m->dim)}, std::move(funcs), s, m->name);
}

bool is_cofull_module(const FunctionalModule& m) {
  if (m.dim == 0) return true;
  Subspace s(m.dim);
  for (Index w = 0; w < m.theta->dim(); ++w) {
    const Mat& phi = m.theta->basis_word(w);
    for (int eta = 0; eta < m.dim; ++eta) {
      Mat act = m.right_action(phi.col(eta));
      for (int xi = 0; xi < m.dim; ++xi) {
        s.insert(act.col(xi));
        if (s.rank() == m.dim) return true;
      }
    }
  }
  return false;
}

bool is_cofull_theta(const FunctionalModule& m) {
  Index target = m.theta->dim();
  if (target == 0) return true;
  const Algebra& a = *m.coeff;
  Subspace s(static_cast<Index>(a.dim) * m.dim);
  for (Index w = 0; w < target; ++w) {
    const Mat& phi = m.theta->basis_word(w);
    for (int xi = 0; xi < m.dim; ++xi) {
      Mat l = a.left_mult(phi.col(xi));
      for (Index t = 0; t < target; ++t) {
        s.insert(flatten(Mat(mul(l, m.theta->basis_word(t)))));
        if (s.rank() == target) return true;
      }
    }
  }
  return false;
}

Mat theta_op(const FunctionalModule& m, const Vec& eta, const Mat& phi) {
  Mat h(m.dim, m.d());
  for (int a = 0; a < m.d(); ++a) h.col(a) = mul(m.raction[static_cast<size_t>(a)], eta);
  return mul(h, phi);
}

}  // namespace fmlab
