#include "fmlab/funpair.hpp"

namespace fmlab {

std::vector<Mat> star_words(const FunPair& p) { return saturate(*p.source->coeff, p.target->gaction, p.ustar); }

Report check_functional_hom(const FunPair& p) {
  Report r;
  const FunctionalModule& e = *p.source;
  const FunctionalModule& f = *p.target;
  if (!r.check("same coefficient algebra", same_algebra(e.coeff, f.coeff))) return r;
  int d = e.d();
  bool shape = p.u.rows() == f.dim && p.u.cols() == e.dim && p.ustar.size() == e.functionals.size();
  for (const auto& x : p.ustar) shape = shape && x.rows() == d && x.cols() == f.dim;
  if (!r.check("shapes", shape)) return r;

  r.check("U injective", rank(p.u) == e.dim);
  bool lin = true;
  for (int k = 0; k < d && lin; ++k) lin = same(mul(p.u, e.raction[static_cast<size_t>(k)]), mul(f.raction[static_cast<size_t>(k)], p.u));
  r.check("U A-linear", lin);
  bool eq = true;
  for (int g = 0; g < e.group_order() && eq; ++g) eq = same(mul(p.u, e.gaction[static_cast<size_t>(g)]), mul(f.gaction[static_cast<size_t>(g)], p.u));
  r.check("U equivariant", eq);

  bool inside = true;
  for (size_t k = 0; k < p.ustar.size() && inside; ++k) inside = theta_contains(f, p.ustar[k]);
  r.check("U* lands in Theta(F)", inside);

  std::vector<Mat> imgs = star_words(p);
  const ThetaSpace& t = *e.theta;
  std::vector<Mat> chosen;
  for (Index q : t.basis()) chosen.push_back(imgs[static_cast<size_t>(q)]);
  bool welldef = true;
  std::string where;
  size_t next = 0;
  for (size_t w = 0; w < t.words.size() && welldef; ++w) {
    if (next < t.basis().size() && static_cast<size_t>(t.basis()[next]) == w) {
      ++next;
      continue;
    }
    Vec c = t.span.chosen_coordinates(flatten(t.words[w]));
    if (!same(combine(c, chosen, d, f.dim), imgs[w])) {
      welldef = false;
      where = "word " + std::to_string(w);
    }
  }
  r.check("U* well defined on the saturation", welldef, where);

  bool ident = true;
  for (size_t w = 0; w < t.words.size() && ident; ++w) {
    if (!same(mul(imgs[w], p.u), t.words[w])) {
      ident = false;
      where = "word " + std::to_string(w);
    }
  }
  r.check("U*(phi) o U = phi", ident, ident ? "" : where);
  return r;
}

StarMap::StarMap(const FunPair& p) : p_(&p) {
  std::vector<Mat> imgs = star_words(p);
  for (Index q : p.source->theta->basis()) chosen_.push_back(std::move(imgs[static_cast<size_t>(q)]));
}

std::optional<Mat> StarMap::operator()(const Mat& phi) const {
  auto c = theta_coordinates(*p_->source, phi);
  if (!c) return std::nullopt;
  return combine(*c, chosen_, p_->source->d(), p_->target->dim);
}

std::optional<Mat> apply_star(const FunPair& p, const Mat& phi) { return StarMap(p)(phi); }

ExtensionDecision decide_functional_extension(const FunPair& p) {
  const FunctionalModule& e = *p.source;
  const FunctionalModule& f = *p.target;
  std::vector<Mat> imgs = star_words(p);
  std::vector<Mat> words, images;
  for (Index q : e.theta->basis()) {
    words.push_back(e.theta->words[static_cast<size_t>(q)]);
    images.push_back(imgs[static_cast<size_t>(q)]);
  }
  ExtensionDecision out;
  Mat m = vstack(words, e.dim);
  Mat rhs = vstack(images, f.dim);
  auto cols = solve_columns(m, rhs);
  out.extension = true;
  for (int j = 0; j < f.dim; ++j) {
    if (!cols[static_cast<size_t>(j)]) {
      out.extension = false;
      out.failing_eta = j;
      out.system = m;
      out.rhs = rhs.col(j);
      out.certificate = solve_linear(m, out.rhs).certificate;
      out.witnesses.clear();
      return out;
    }
    out.witnesses.push_back(*cols[static_cast<size_t>(j)]);
  }
  return out;
}

FunPair identity_funpair(const ModulePtr& m) {
  return {m, m, identity<Rational>(m->dim), m->functionals, "id(" + m->name + ")"};
}

FunPair compose(const FunPair& second, const FunPair& first) {
  if (!same_module(first.target, second.source)) throw PreconditionError("compose: target of the first pair is not the source of the second");
  FunPair out{first.source, second.target, mul(second.u, first.u), {}, second.name + " o " + first.name};
  StarMap star(second);
  for (const auto& img : first.ustar) {
    auto s = star(img);
    if (!s) throw PreconditionError("compose: image functional is outside the middle functional space");
    out.ustar.push_back(*s);
  }
  return out;
}

FunPair direct_sum(const FunPair& p, const FunPair& q) {
  FunPair out{direct_sum(p.source, q.source), direct_sum(p.target, q.target), block_diag<Rational>({p.u, q.u}), {},
              "(" + p.name + "+" + q.name + ")"};
  int d = p.source->d();
  for (const auto& x : p.ustar) out.ustar.push_back(hstack<Rational>({x, zeros<Rational>(d, q.target->dim)}, d));
  for (const auto& y : q.ustar) out.ustar.push_back(hstack<Rational>({zeros<Rational>(d, p.target->dim), y}, d));
  return out;
}

FunPair external_tensor(const FunPair& p, const FunPair& q) {
  FunPair out{external_tensor(p.source, q.source), external_tensor(p.target, q.target), kron(p.u, q.u), {},
              p.name + "(x)" + q.name};
  for (const auto& x : p.ustar)
    for (const auto& y : q.ustar) out.ustar.push_back(kron(x, y));
  return out;
}

FunPair relabel(const ModulePtr& m, const Mat& perm, const ModulePtr& target) {
  auto inv = inverse(perm);
  if (!inv) throw PreconditionError("relabel: matrix is not invertible");
  FunPair out{m, target, perm, {}, "relabel"};
  for (const auto& phi : m->functionals) out.ustar.push_back(mul(phi, *inv));
  return out;
}

InducedHom induced_compact_hom(const FunPair& p, CompactPtr source) {
  ExtensionDecision dec = decide_functional_extension(p);
  if (!dec.extension) throw PreconditionError("induced_compact_hom: the pair is not a functional extension");
  InducedHom out;
  out.source = source ? std::move(source) : kalgebra(p.source);
  const CompactAlgebra& k = *out.source;
  if (!same_module(k.module, p.source)) throw PreconditionError("induced_compact_hom: compact algebra of another module");
  const FunctionalModule& e = *p.source;
  const FunctionalModule& f = *p.target;
  std::vector<Mat> imgs = star_words(p);
  auto image_of_basis_word = [&](Index w) -> const Mat& {
    return imgs[static_cast<size_t>(e.theta->basis()[static_cast<size_t>(w)])];
  };
  out.op.source = k.algebra;
  out.op.target = p.target;
  for (const auto& [i, w] : k.terms) out.op.images.push_back(theta_op(f, p.u.col(i), image_of_basis_word(w)));

  bool welldef = true;
  std::string where;
  for (int i = 0; i < e.dim && welldef; ++i) {
    Vec ei = unit_vector<Rational>(e.dim, i);
    for (Index w = 0; w < e.theta->dim() && welldef; ++w) {
      auto c = k.coordinates(theta_op(e, ei, e.theta->basis_word(w)));
      if (!c || !same(apply(out.op, *c), theta_op(f, p.u.col(i), image_of_basis_word(w)))) {
        welldef = false;
        where = "generator (" + std::to_string(i) + ", " + std::to_string(w) + ")";
      }
    }
  }
  out.report.check("well defined on all theta generators", welldef, where);
  out.report.check("injective", injective(out.op));
  out.report.merge("", check_operator_hom(out.op));
  return out;
}

}  // namespace fmlab
