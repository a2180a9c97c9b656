#include "fmlab/class_c.hpp"

namespace fmlab {

std::string to_string(TermKind k) {
  switch (k) {
    case TermKind::leaf: return "leaf";
    case TermKind::direct_sum: return "direct_sum";
    case TermKind::internal_tensor: return "internal_tensor";
    case TermKind::external_tensor: return "external_tensor";
    case TermKind::corner_module: return "corner_module";
  }
  return "leaf";
}

TermKind term_kind_from_string(const std::string& s) {
  for (TermKind k : {TermKind::leaf, TermKind::direct_sum, TermKind::internal_tensor, TermKind::external_tensor,
                     TermKind::corner_module})
    if (to_string(k) == s) return k;
  throw ParseError("unknown closure term kind '" + s + "'");
}

TermPtr leaf(AlgebraPtr a, int n, std::vector<Mat> coord_rep) {
  auto t = std::make_shared<ClosureTerm>();
  t->algebra = std::move(a);
  t->n = n;
  t->coord_rep = std::move(coord_rep);
  return t;
}

TermPtr leaf_with_action(AlgebraPtr a, int n, std::vector<Mat> gaction) {
  auto t = std::make_shared<ClosureTerm>();
  t->algebra = std::move(a);
  t->n = n;
  t->gaction = std::move(gaction);
  return t;
}

namespace {

TermPtr node(TermKind k, std::vector<TermPtr> children) {
  auto t = std::make_shared<ClosureTerm>();
  t->kind = k;
  t->children = std::move(children);
  return t;
}

// (A^n (x) C^m) with index (a dA + k)(m dC) + b dC + l onto (A (x) C)^{nm} with
// index (a m + b)(dA dC) + k dC + l.
Mat tensor_reorder(int n, int da, int m, int dc) {
  int dim = n * da * m * dc;
  Mat p = zeros<Rational>(dim, dim);
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < da; ++k)
      for (int b = 0; b < m; ++b)
        for (int l = 0; l < dc; ++l) p((a * m + b) * da * dc + k * dc + l, (a * da + k) * m * dc + b * dc + l) = 1;
  return p;
}

const std::vector<Mat>& coord_rep_of(const FunPair& p, const std::string& where) {
  if (!p.target->standard || p.target->standard->coord_rep.empty())
    throw PreconditionError(where + ": child extension does not land in a standard module with a coordinate representation");
  return p.target->standard->coord_rep;
}

ClassCNode certify(const TermPtr& tp, const std::string& path) {
  const ClosureTerm& t = *tp;
  ClassCNode out;
  out.path = path;
  out.kind = t.kind;
  auto need = [&](size_t k) {
    if (t.children.size() != k)
      throw PreconditionError(path + ": " + to_string(t.kind) + " takes " + std::to_string(k) + " children");
  };
  try {
    switch (t.kind) {
      case TermKind::leaf: {
        if (!t.algebra) throw PreconditionError("leaf without an algebra");
        need(0);
        if (!t.gaction.empty()) {
          out.module = standard_module_with_action(t.algebra, t.n, t.gaction);
          PlainExtension pe = plain_module_extension(out.module);
          out.report.merge("plain extension: ", pe.report);
          out.extension = pe.pi;
        } else {
          std::vector<Mat> rep = t.coord_rep;
          if (rep.empty()) rep.assign(static_cast<size_t>(t.algebra->group_order()), identity<Rational>(t.n));
          out.module = standard_module(t.algebra, t.n, rep);
          out.extension = identity_funpair(out.module);
        }
        break;
      }
      case TermKind::direct_sum: {
        need(2);
        out.children.push_back(certify(t.children[0], path + ".0"));
        out.children.push_back(certify(t.children[1], path + ".1"));
        out.extension = direct_sum(out.children[0].extension, out.children[1].extension);
        out.module = out.extension.source;
        break;
      }
      case TermKind::internal_tensor: {
        need(1);
        if (!t.pi) throw PreconditionError("internal_tensor without a coefficient hom");
        out.children.push_back(certify(t.children[0], path + ".0"));
        const ClassCNode& c = out.children[0];
        if (!find_unit(*t.pi->target, Side::two_sided).unit)
          throw PreconditionError("target algebra " + t.pi->target->name + " has no unit");
        ChangedCoefficients cc = change_coefficients(c.extension, *t.pi);
        out.report.merge("change of coefficients: ", cc.report);
        out.extension = cc.v;
        out.module = cc.v.source;
        out.transfer = approx_unit_transfer(c.module, *t.pi, Side::two_sided);
        out.report.check("unit transfer hypotheses", out.transfer->hypotheses);
        out.report.check("unit transfers to K(E (x)_pi B)", out.transfer->holds());
        break;
      }
      case TermKind::external_tensor: {
        need(2);
        out.children.push_back(certify(t.children[0], path + ".0"));
        out.children.push_back(certify(t.children[1], path + ".1"));
        const FunPair& p = out.children[0].extension;
        const FunPair& q = out.children[1].extension;
        const auto& rho = coord_rep_of(p, path);
        const auto& sig = coord_rep_of(q, path);
        FunPair pq = external_tensor(p, q);
        int n = p.target->standard->n, m = q.target->standard->n;
        std::vector<Mat> rep;
        for (size_t g = 0; g < rho.size(); ++g) rep.push_back(kron(rho[g], sig[g]));
        ModulePtr target = standard_module(tensor_algebra(p.target->coeff, q.target->coeff), n * m, rep);
        FunPair r = relabel(pq.target, tensor_reorder(n, p.target->d(), m, q.target->d()), target);
        out.report.merge("reorder to (A (x) C)^{nm}: ", check_functional_hom(r));
        out.extension = compose(r, pq);
        out.module = pq.source;
        // K(E (x) G) = K(E) (x) K(G): the product of the units is the unit.
        const ClassCNode& ce = out.children[0];
        const ClassCNode& cg = out.children[1];
        bool ok = false;
        if (ce.unit.unit && cg.unit.unit) {
          Mat ue = kalgebra(ce.module)->op(*ce.unit.unit);
          Mat ug = kalgebra(cg.module)->op(*cg.unit.unit);
          CompactPtr k = kalgebra(out.module);
          auto coords = k->coordinates(kron(ue, ug));
          ok = coords && is_unit(*k->algebra, *coords, Side::two_sided);
        }
        out.tensor_unit = ok;
        out.report.check("u_E (x) u_G is the unit of K(E (x) G)", ok);
        break;
      }
      case TermKind::corner_module: {
        need(1);
        out.children.push_back(certify(t.children[0], path + ".0"));
        const ClassCNode& c = out.children[0];
        const auto& rep = coord_rep_of(c.extension, path);
        CornerEmbedding ce = corner_embedding(c.module);
        std::vector<Mat> ids(rep.size(), identity<Rational>(t.n));
        ModulePtr km = standard_module(ce.k->algebra, t.n, ids);
        CornerModule cm = corner_module_composition(ce, c.extension, identity_funpair(km));
        out.report.merge("corner module: ", cm.report);
        out.extension = cm.w;
        out.module = cm.w.source;
        break;
      }
    }

    out.report.merge("extension: ", check_functional_hom(out.extension));
    out.is_extension = decide_functional_extension(out.extension).extension;
    out.report.check("functional extension into a standard module", out.is_extension);
    CompactPtr k = kalgebra(out.module);
    out.unit = find_unit(*k->algebra, Side::two_sided);
    out.report.check("K has a unit", out.unit.unit.has_value());
    out.module_cofull = is_cofull_module(*out.module);
    out.theta_cofull = is_cofull_theta(*out.module);
    out.report.check("module cofull", out.module_cofull);
    out.report.check("functional space cofull", out.theta_cofull);
    if (t.kind != TermKind::leaf) {
      out.prop22 = verify_prop22(out.extension);
      out.report.merge("corner embedding invertible: ", out.prop22->report);
    }
  } catch (const PreconditionError& e) {
    std::string msg = e.what();
    if (msg.rfind("at ", 0) == 0) throw;
    throw PreconditionError("at " + path + " (" + to_string(t.kind) + "): " + msg);
  }
  return out;
}

void collect(const ClassCNode& n, Report& r) {
  r.merge(n.path + ": ", n.report);
  for (const auto& c : n.children) collect(c, r);
}

}  // namespace

TermPtr sum_term(TermPtr a, TermPtr b) { return node(TermKind::direct_sum, {std::move(a), std::move(b)}); }

TermPtr internal_term(TermPtr e, AlgebraHom pi) {
  auto t = std::make_shared<ClosureTerm>();
  t->kind = TermKind::internal_tensor;
  t->pi = std::move(pi);
  t->children = {std::move(e)};
  return t;
}

TermPtr external_term(TermPtr e, TermPtr g) { return node(TermKind::external_tensor, {std::move(e), std::move(g)}); }

TermPtr corner_term(TermPtr e, int m) {
  auto t = std::make_shared<ClosureTerm>();
  t->kind = TermKind::corner_module;
  t->n = m;
  t->children = {std::move(e)};
  return t;
}

int depth(const ClosureTerm& t) {
  if (t.kind == TermKind::leaf) return 0;
  int d = 0;
  for (const auto& c : t.children) d = std::max(d, depth(*c));
  return d + 1;
}

ClassCNode certify_class_c(const TermPtr& t) { return certify(t, "root"); }

Report flatten(const ClassCNode& n) {
  Report r;
  collect(n, r);
  return r;
}

}  // namespace fmlab
