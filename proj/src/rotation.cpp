#include "fmlab/rotation.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>

#include <Eigen/Sparse>
#include <numeric>

namespace fmlab {

RotMat block_rotation(int blocks, int i, int j, int block) {
  RotMat r = identity<RotScalar>(static_cast<Index>(blocks) * block);
  if (i == j) return r;
  RotScalar c = RotScalar::c(), s = RotScalar::s();
  for (int k = 0; k < block; ++k) {
    Index a = static_cast<Index>(i) * block + k, b = static_cast<Index>(j) * block + k;
    r(a, a) = c;
    r(b, b) = c;
    r(a, b) = s;
    r(b, a) = -s;
  }
  return r;
}

namespace {

// A matrix over the rotation ring stored as sum_{i,j} c^i s^j M_ij with j in {0, 1}
// and sparse rational M_ij. The conjugated images are very sparse, and this is much
// cheaper than multiplying RotScalar entries one by one.
using Sparse = Eigen::SparseMatrix<Rational>;

void drop_zeros(Sparse& m) {
  m.prune([](Index, Index, const Rational& v) { return !exactly_zero(v); });
}

Sparse sparse(const Mat& m) {
  Sparse out(m.rows(), m.cols());
  std::vector<Eigen::Triplet<Rational>> t;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!exactly_zero(m(i, j))) t.emplace_back(i, j, m(i, j));
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

struct PolyMat {
  Index rows = 0, cols = 0;
  std::map<std::pair<int, int>, Sparse> terms;

  void add(int i, int j, const Sparse& m) {
    if (j >= 2) {
      // s^2 = 1 - c^2
      add(i, j - 2, m);
      add(i + 2, j - 2, Sparse(-m));
      return;
    }
    auto it = terms.find({i, j});
    if (it == terms.end())
      terms.emplace(std::pair{i, j}, m);
    else
      it->second += m;
  }

  void prune() {
    for (auto it = terms.begin(); it != terms.end();) {
      drop_zeros(it->second);
      it = it->second.nonZeros() == 0 ? terms.erase(it) : std::next(it);
    }
  }
};

PolyMat to_poly(const RotMat& r) {
  PolyMat p;
  p.rows = r.rows();
  p.cols = r.cols();
  std::map<std::pair<int, int>, std::vector<Eigen::Triplet<Rational>>> t;
  for (Index a = 0; a < r.rows(); ++a)
    for (Index b = 0; b < r.cols(); ++b) {
      const RotScalar& x = r(a, b);
      for (size_t i = 0; i < x.a().size(); ++i)
        if (!exactly_zero(x.a()[i])) t[{static_cast<int>(i), 0}].emplace_back(a, b, x.a()[i]);
      for (size_t i = 0; i < x.b().size(); ++i)
        if (!exactly_zero(x.b()[i])) t[{static_cast<int>(i), 1}].emplace_back(a, b, x.b()[i]);
    }
  for (auto& [k, v] : t) {
    Sparse m(p.rows, p.cols);
    m.setFromTriplets(v.begin(), v.end());
    p.terms.emplace(k, std::move(m));
  }
  return p;
}

PolyMat constant(const Mat& m) {
  PolyMat p;
  p.rows = m.rows();
  p.cols = m.cols();
  p.terms.emplace(std::pair{0, 0}, sparse(m));
  p.prune();
  return p;
}

PolyMat pmul(const PolyMat& x, const PolyMat& y) {
  PolyMat p;
  p.rows = x.rows;
  p.cols = y.cols;
  for (const auto& [kx, mx] : x.terms)
    for (const auto& [ky, my] : y.terms) p.add(kx.first + ky.first, kx.second + ky.second, Sparse(mx * my));
  p.prune();
  return p;
}

bool psame(const PolyMat& x, const PolyMat& y) {
  if (x.rows != y.rows || x.cols != y.cols || x.terms.size() != y.terms.size()) return false;
  for (auto a = x.terms.begin(), b = y.terms.begin(); a != x.terms.end(); ++a, ++b) {
    if (a->first != b->first) return false;
    Sparse d = a->second - b->second;
    drop_zeros(d);
    if (d.nonZeros() != 0) return false;
  }
  return true;
}

Mat peval(const PolyMat& p, const Rational& c, const Rational& s) {
  Mat out = zeros<Rational>(p.rows, p.cols);
  for (const auto& [k, m] : p.terms) {
    Rational w(1);
    for (int i = 0; i < k.first; ++i) w = w * c;
    if (k.second) w = w * s;
    if (exactly_zero(w)) continue;
    for (Index j = 0; j < m.outerSize(); ++j)
      for (Sparse::InnerIterator it(m, j); it; ++it) out(it.row(), it.col()) += w * it.value();
  }
  return out;
}

// Fixed subset of {0, ..., n-1} of size k (Fisher-Yates with a constant LCG seed).
std::vector<size_t> subset(size_t n, size_t k) {
  std::vector<size_t> idx(n);
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  for (size_t i = 0; i < k; ++i) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    size_t j = i + static_cast<size_t>((state >> 33) % (n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

RotationPath rotation_path(const ModulePtr& module, size_t count, const ImageFn& source, const ImageFn& target,
                           const RotMat& conj, const RotMat& conj_inv) {
  RotationPath p;
  p.module = module;
  p.conj = conj;
  p.conj_inv = conj_inv;
  p.count = count;
  Index n = module->dim;
  if (conj.rows() != n || conj.cols() != n || conj_inv.rows() != n || conj_inv.cols() != n)
    throw PreconditionError("rotation_path: conjugator does not act on the module");
  PolyMat r = to_poly(conj), ri = to_poly(conj_inv);
  PolyMat id = constant(identity<Rational>(n));
  p.report.check("R R^-1 = 1 in the rotation ring", psame(pmul(r, ri), id));
  p.report.check("R^-1 R = 1 in the rotation ring", psame(pmul(ri, r), id));
  bool eq = true;
  for (const auto& s : module->gaction) {
    PolyMat ps = constant(s);
    eq = eq && psame(pmul(r, ps), pmul(ps, r));
  }
  p.report.check("R commutes with the group action", eq);

  auto path = [&](const Mat& x) { return pmul(pmul(r, constant(x)), ri); };
  std::vector<size_t> chosen = count <= kRotationSubset ? subset(count, count) : subset(count, kRotationSubset);
  p.exhaustive = count <= kRotationSubset;
  std::vector<Mat> src;
  std::vector<PolyMat> kept;
  bool start = true, end = true;
  std::string where;
  size_t next = 0;
  for (size_t k = 0; k < count; ++k) {
    Mat x = source(k);
    PolyMat pk = path(x);
    if (!same(peval(pk, 1, 0), x)) start = false;
    if (!same(peval(pk, 0, 1), target(k))) {
      if (end) where = "image " + std::to_string(k);
      end = false;
    }
    if (next < chosen.size() && chosen[next] == k) {
      src.push_back(std::move(x));
      kept.push_back(std::move(pk));
      ++next;
    }
  }
  p.report.check("path starts at the source", start);
  p.report.check("path ends at the target", end, where);

  bool mult = true;
  for (size_t a = 0; a < kept.size() && mult; ++a)
    for (size_t b = 0; b < kept.size() && mult; ++b) {
      ++p.pairs_checked;
      mult = psame(pmul(kept[a], kept[b]), path(mul(src[a], src[b])));
    }
  p.report.check("path multiplicative identically in c, s", mult,
                 std::to_string(p.pairs_checked) + (p.exhaustive ? " pairs (all)" : " pairs (fixed sample)"));
  return p;
}

RotationPath rotation_path(const ModulePtr& module, const std::vector<Mat>& source, const std::vector<Mat>& target,
                           const RotMat& conj, const RotMat& conj_inv) {
  if (source.size() != target.size()) throw PreconditionError("rotation_path: source and target image lists differ in length");
  return rotation_path(
      module, source.size(), [&](size_t k) { return source[k]; }, [&](size_t k) { return target[k]; }, conj, conj_inv);
}

RotationPath find_rotation_path(const ModulePtr& module, const std::vector<Mat>& source, const std::vector<Mat>& target,
                                int block) {
  int blocks = block > 0 ? module->dim / block : 0;
  if (block <= 0 || blocks * block != module->dim) throw PreconditionError("find_rotation_path: block size does not divide the module");
  auto ends_ok = [&](const RotMat& r) {
    Mat e = evaluate(r, 0, 1);
    Mat et = e.transpose();
    for (size_t k = 0; k < source.size(); ++k)
      if (!same(mul(mul(e, source[k]), et), target[k])) return false;
    return true;
  };
  RotMat id = identity<RotScalar>(module->dim);
  if (ends_ok(id)) return rotation_path(module, source, target, id, id);
  for (int i = 0; i < blocks; ++i)
    for (int j = i + 1; j < blocks; ++j) {
      for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        RotMat r = block_rotation(blocks, a, b, block);
        if (ends_ok(r)) return rotation_path(module, source, target, r, RotMat(r.transpose()));
      }
    }
  throw PreconditionError("find_rotation_path: no block rotation joins the two maps");
}

}  // namespace fmlab
