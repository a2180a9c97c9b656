#include "fmlab/coefficients.hpp"

namespace fmlab {

ChangedCoefficients change_coefficients(const FunPair& u, const AlgebraHom& pi) {
  const FunctionalModule& e = *u.source;
  const FunctionalModule& f = *u.target;
  if (!f.standard || f.standard->coord_rep.empty())
    throw PreconditionError("change_coefficients: target must be A^n with a coordinate representation");
  if (!same_algebra(e.coeff, pi.source)) throw PreconditionError("change_coefficients: hom source differs from the module algebra");
  if (!decide_functional_extension(u).extension) throw PreconditionError("change_coefficients: U is not a functional extension");
  const Algebra& a = *e.coeff;
  const Algebra& b = *pi.target;
  UnitResult ru = find_unit(a, Side::right);
  if (!ru.unit) throw PreconditionError("change_coefficients: " + a.name + " has no right unit");
  const Vec& unit = *ru.unit;
  int n = f.standard->n, m = e.dim, da = a.dim, db = b.dim;

  ChangedCoefficients out;
  out.source = internal_tensor(u.source, pi);
  Mat pit = kron(identity<Rational>(n), pi.matrix);  // A^n -> B^n coordinatewise

  // xi_i (x) b_j -> pi(U xi_i) . b_j
  Mat vfull = zeros<Rational>(n * db, m * db);
  for (int i = 0; i < m; ++i) {
    Vec img = mul(pit, Vec(u.u.col(i)));
    for (int j = 0; j < db; ++j) vfull.col(i * db + j) = mul(kron(identity<Rational>(n), b.right(j)), img);
  }
  bool kills = true;
  for (const auto& r : out.source.relations.basis()) kills = kills && is_zero_matrix(Mat(mul(vfull, r)));
  out.report.check("V vanishes on the tensor relations", kills);
  FunPair v;
  v.source = out.source.module;
  v.target = standard_module(pi.target, n, f.standard->coord_rep);
  v.u = mul(vfull, out.source.section);
  v.name = "V";
  bool rows = true;
  for (const auto& img : u.ustar) {
    std::vector<Vec> x;
    for (int i = 0; i < n; ++i) {
      Mat blk = img.block(0, i * da, da, da);
      Vec xi = mul(blk, unit);
      rows = rows && same(a.left_mult(xi), blk);
      x.push_back(mul(pi.matrix, xi));
    }
    for (int j = 0; j < db; ++j) {
      Mat fn = zeros<Rational>(db, n * db);
      for (int i = 0; i < n; ++i) fn.block(0, i * db, db, db) = b.left_mult(b.mul(b.basis(j), x[static_cast<size_t>(i)]));
      v.ustar.push_back(fn);
    }
  }
  out.report.check("U* images are left multiplications by rows", rows);
  out.v = v;
  out.report.merge("V: ", check_functional_hom(v));
  return out;
}

UnitTransfer approx_unit_transfer(const ModulePtr& e, const AlgebraHom& pi, Side side) {
  UnitTransfer t;
  t.side = side;
  CompactPtr k = kalgebra(e);
  t.k_source = find_unit(*k->algebra, side);
  t.k_unit = t.k_source.unit.has_value();
  t.e_cofull = is_cofull_module(*e);
  t.theta_cofull = is_cofull_theta(*e);
  t.a_left_unit = find_unit(*e->coeff, Side::left).unit.has_value();
  bool need_left = side != Side::right, need_right = side != Side::left;
  t.hypotheses = t.k_unit && (!need_left || t.e_cofull) && (!need_right || (t.theta_cofull && t.a_left_unit));
  InternalTensor it = internal_tensor(e, pi);
  CompactPtr kt = kalgebra(it.module);
  t.k_tensor = find_unit(*kt->algebra, side);
  return t;
}

}  // namespace fmlab
