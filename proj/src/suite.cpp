#include "fmlab/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "fmlab/catalogue.hpp"
#include "fmlab/corner51.hpp"

namespace fmlab {

namespace {

// A nontrivial character G -> {1, -1}, if there is one (exhaustive on small groups).
std::optional<std::vector<int>> sign_character(const FinGroup& g) {
  if (g.order > 12) return std::nullopt;
  for (unsigned mask = 1; mask < (1u << g.order); ++mask) {
    std::vector<int> s(static_cast<size_t>(g.order));
    for (int x = 0; x < g.order; ++x) s[static_cast<size_t>(x)] = (mask >> x) & 1 ? -1 : 1;
    if (s[static_cast<size_t>(g.identity)] != 1) continue;
    bool hom = true;
    for (int x = 0; x < g.order && hom; ++x)
      for (int y = 0; y < g.order && hom; ++y)
        hom = s[static_cast<size_t>(g.mul(x, y))] == s[static_cast<size_t>(x)] * s[static_cast<size_t>(y)];
    if (hom) return s;
  }
  return std::nullopt;
}

// The regular representation restricted to span{e_g - e_1}.
Mat augmentation_block(const FinGroup& g, int h) {
  int m = g.order;
  std::vector<int> others;
  for (int x = 0; x < m; ++x)
    if (x != g.identity) others.push_back(x);
  auto pos = [&](int x) { return static_cast<Index>(std::find(others.begin(), others.end(), x) - others.begin()); };
  Mat out = zeros<Rational>(m - 1, m - 1);
  for (int x : others) {
    // e_x - e_1 -> e_{hx} - e_h = (e_{hx} - e_1) - (e_h - e_1)
    Index c = pos(x);
    int hx = g.mul(h, x);
    if (hx != g.identity) out(pos(hx), c) += 1;
    if (h != g.identity) out(pos(h), c) -= 1;
  }
  return out;
}

std::string quotient_name(const FinGroup& g) { return g.order == 1 ? "Q" : "Q^" + g.name; }

Json module_json(const std::string& alg, int n, const std::vector<Mat>& rep) {
  return Json{{"standard", {{"algebra", alg}, {"n", n}, {"coord_rep", mats_to_json(rep)}}}};
}

Json action_module_json(const std::string& alg, int n, const std::vector<Mat>& s) {
  return Json{{"standard_action", {{"algebra", alg}, {"n", n}, {"gaction", mats_to_json(s)}}}};
}

Json target_json(const std::string& alg, const ModulePtr& m) {
  if (m->standard && !m->standard->coord_rep.empty()) return module_json(alg, m->standard->n, m->standard->coord_rep);
  return to_json(*m);
}

Json funpair_json(const std::string& alg, const Json& source, const FunPair& p) {
  return Json{{"source", source}, {"target", target_json(alg, p.target)}, {"u", to_json(p.u)}, {"ustar", mats_to_json(p.ustar)}};
}

Json instance(Json body, const std::string& lemma, Json args) {
  body["format"] = kInstanceFormat;
  body["verify"] = Json{{lemma, std::move(args)}};
  return body;
}

Json leaf_json(const std::string& alg, int n, const std::vector<Mat>& rep = {}) {
  Json j;
  j["kind"] = "leaf";
  j["algebra"] = alg;
  j["n"] = n;
  if (!rep.empty()) j["coord_rep"] = mats_to_json(rep);
  return j;
}

Json node_json(const std::string& kind, std::vector<Json> children) {
  Json j;
  j["kind"] = kind;
  j["children"] = Json::array();
  for (auto& c : children) j["children"].push_back(std::move(c));
  return j;
}

struct SizeParams {
  std::vector<std::string> algebras;       // module families
  std::vector<std::string> small;          // prop22, lemma51, cor51
  int max_n = 2;
  int repeats = 1;
};

SizeParams params(SuiteSize s) {
  const auto& all = catalogue_names();
  switch (s) {
    case SuiteSize::smoke: return {{"Q", "Q^Z2", "Q[Z2]^Z2", "M2", "row"}, {"Q", "Q^Z2", "Q[Z2]^Z2"}, 2, 1};
    case SuiteSize::standard:
      return {all, {"Q", "Q^Z2", "Q^Z3", "Q[Z2]^Z2", "QxQ^Z2", "dual^Z2", "Q(r2)^Z2", "T2"}, 3, 1};
    case SuiteSize::deep:
      return {all, {"Q", "Q^Z2", "Q^Z3", "Q^S3", "Q[Z2]^Z2", "QxQ^Z2", "dual^Z2", "Q(r2)^Z2", "T2", "T2^Z2", "M2^Z2"}, 4, 2};
  }
  return {};
}

bool unital(const Algebra& a) { return find_unit(a, Side::two_sided).unit.has_value(); }

// Equivariant homs out of a: identity, augmentation-like rows onto Q^G.
std::vector<std::pair<std::string, Json>> homs_from(const std::string& name) {
  AlgebraPtr a = catalogue(name);
  std::vector<std::pair<std::string, Json>> out;
  out.push_back({"id", Json{{"identity", name}}});
  AlgebraPtr q = catalogue(quotient_name(*a->group));
  std::vector<Mat> rows;
  Mat ones = Mat::Constant(1, a->dim, Rational(1));
  rows.push_back(ones);
  Mat first = zeros<Rational>(1, a->dim);
  first(0, 0) = 1;
  rows.push_back(first);
  if (a->dim == 2) {
    Mat sg(1, 2);
    sg << 1, -1;
    rows.push_back(sg);
  }
  int k = 0;
  for (const auto& r : rows) {
    AlgebraHom h{a, q, r};
    if (check_algebra_hom(h).ok())
      out.push_back({"char" + std::to_string(k), Json{{"source", name}, {"target", quotient_name(*a->group)}, {"matrix", to_json(r)}}});
    ++k;
  }
  return out;
}

}  // namespace

Mat random_unimodular(Rng& rng, int n) {
  Mat m = identity<Rational>(n);
  if (n < 2) return m;
  for (int t = 0; t < n + 1; ++t) {
    int i = rng.range(0, n - 1), j = rng.range(0, n - 2);
    if (j >= i) ++j;
    Rational k(rng.range(-2, 2));
    m.row(i) += Mat(m.row(j) * k);
  }
  return m;
}

Vec random_element(Rng& rng, int d) {
  Vec v(d);
  for (int i = 0; i < d; ++i) v(i) = Rational(rng.range(-2, 2));
  return v;
}

std::vector<Mat> random_coord_rep(Rng& rng, const FinGroup& g, int n) {
  int m = g.order;
  std::vector<std::vector<Mat>> blocks;
  auto sign = sign_character(g);
  int left = n;
  while (left > 0) {
    int choice = static_cast<int>(rng.below(4));
    std::vector<Mat> b;
    if (choice == 1 && sign) {
      for (int h = 0; h < m; ++h) b.push_back(Mat::Constant(1, 1, Rational((*sign)[static_cast<size_t>(h)])));
    } else if (choice == 2 && m > 1 && m - 1 <= left) {
      for (int h = 0; h < m; ++h) b.push_back(augmentation_block(g, h));
    } else if (choice == 3 && m > 1 && m <= left) {
      for (int h = 0; h < m; ++h) b.push_back(regular_rep(g, h));
    } else {
      for (int h = 0; h < m; ++h) b.push_back(identity<Rational>(1));
    }
    left -= static_cast<int>(b[0].rows());
    blocks.push_back(std::move(b));
  }
  Mat p = random_unimodular(rng, n);
  Mat pi = *inverse(p);
  std::vector<Mat> rep;
  for (int h = 0; h < m; ++h) {
    std::vector<Mat> parts;
    for (const auto& b : blocks) parts.push_back(b[static_cast<size_t>(h)]);
    rep.push_back(mul(mul(p, block_diag<Rational>(parts)), pi));
  }
  return rep;
}

std::vector<Mat> random_semilinear_action(Rng& rng, const AlgebraPtr& a, int n) {
  int d = a->dim;
  std::vector<Mat> rho = random_coord_rep(rng, *a->group, n);
  Mat t = identity<Rational>(n * d);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat e = zeros<Rational>(n, n);
      e(i, j) = 1;
      t += kron(e, a->left_mult(random_element(rng, d)));
    }
  Mat ti = *inverse(t);
  std::vector<Mat> s;
  for (int h = 0; h < a->group_order(); ++h)
    s.push_back(mul(mul(t, kron(rho[static_cast<size_t>(h)], a->action[static_cast<size_t>(h)])), ti));
  return s;
}

FunPair random_extension(Rng& rng, const AlgebraPtr& a, int n, const std::vector<Mat>& rho) {
  ModulePtr e = standard_module(a, n, rho);
  int d = a->dim, g = a->group_order();
  int kind = static_cast<int>(rng.below(3));
  if (kind == 0 || n == 0) {
    Mat m = random_unimodular(rng, n);
    Mat mi = *inverse(m);
    std::vector<Mat> rho2;
    for (const auto& r : rho) rho2.push_back(mul(mul(m, r), mi));
    ModulePtr f = standard_module(a, n, rho2);
    FunPair p{e, f, kron(m, identity<Rational>(d)), {}, "basis change"};
    Mat ui = kron(mi, identity<Rational>(d));
    for (const auto& phi : e->functionals) p.ustar.push_back(mul(phi, ui));
    return p;
  }
  int k = rng.range(1, 2);
  std::vector<Mat> sigma = random_coord_rep(rng, *a->group, k);
  std::vector<Mat> both;
  for (int h = 0; h < g; ++h) both.push_back(block_diag<Rational>({rho[static_cast<size_t>(h)], sigma[static_cast<size_t>(h)]}));
  ModulePtr f = standard_module(a, n + k, both);
  Mat inc = zeros<Rational>((n + k) * d, n * d);
  inc.block(0, 0, n * d, n * d) = identity<Rational>(n * d);
  // P = [1, C (x) 1] with C intertwining sigma and rho; P o U = 1.
  Mat c = zeros<Rational>(n, k);
  if (kind == 2) {
    Mat c0(n, k);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < k; ++j) c0(i, j) = Rational(rng.range(-2, 2));
    for (int h = 0; h < g; ++h)
      c += mul(mul(rho[static_cast<size_t>(h)], c0), *inverse(sigma[static_cast<size_t>(h)]));
    c = c * Rational(1, g);
  }
  Mat proj = hstack<Rational>({identity<Rational>(n * d), kron(c, identity<Rational>(d))}, n * d);
  FunPair p{e, f, inc, {}, kind == 2 ? "shifted inclusion" : "inclusion"};
  for (const auto& phi : e->functionals) p.ustar.push_back(mul(phi, proj));
  return p;
}

SuiteSize suite_size_from_string(const std::string& s) {
  if (s == "smoke") return SuiteSize::smoke;
  if (s == "standard") return SuiteSize::standard;
  if (s == "deep") return SuiteSize::deep;
  throw ParseError("unknown suite size '" + s + "' (smoke, standard, deep)");
}

std::string to_string(SuiteSize s) {
  switch (s) {
    case SuiteSize::smoke: return "smoke";
    case SuiteSize::standard: return "standard";
    case SuiteSize::deep: return "deep";
  }
  return "standard";
}

std::vector<Json> suite_modules(std::uint64_t seed, SuiteSize size) {
  SizeParams sp = params(size);
  Rng rng(seed ^ 0x51ed270b27d4c3f1ull);
  std::vector<Json> out;
  for (int r = 0; r < sp.repeats; ++r)
    for (const auto& name : sp.algebras) {
      AlgebraPtr a = catalogue(name);
      int top = a->dim <= 2 ? sp.max_n : std::min(sp.max_n, 3);
      for (int n = 1; n <= top; ++n) out.push_back(module_json(name, n, random_coord_rep(rng, *a->group, n)));
      if (a->group_order() > 1 || a->dim > 1)
        out.push_back(action_module_json(name, 2, random_semilinear_action(rng, a, 2)));
    }
  return out;
}

std::vector<SuiteCase> generate_suite(std::uint64_t seed, SuiteSize size) {
  SizeParams sp = params(size);
  Rng rng(seed);
  std::vector<SuiteCase> cases;
  auto add = [&](const std::string& lemma, const std::string& name, Json body, Json args) {
    cases.push_back({lemma, name, instance(std::move(body), lemma, std::move(args))});
  };

  // Extensions out of every coordinate-represented suite module.
  std::vector<Json> mods = suite_modules(seed, size);
  std::map<std::string, std::vector<Json>> pairs_by_algebra;
  int idx = 0;
  for (const auto& mj : mods) {
    ++idx;
    std::string tag = "m" + std::to_string(idx);
    if (mj.contains("standard_action")) {
      const Json& s = mj.at("standard_action");
      std::string alg = s.at("algebra");
      add("lemma62", tag + ":" + alg, Json{{"modules", {{"E", mj}}}}, Json{{"module", "E"}});
      if (catalogue(alg)->group_order() > 1)
        add("lemma61", tag + ":" + alg + ":twisted", Json{{"modules", {{"E", mj}}}}, Json{{"module", "E"}});
      continue;
    }
    const Json& s = mj.at("standard");
    std::string alg = s.at("algebra");
    AlgebraPtr a = catalogue(alg);
    int n = s.at("n");
    std::vector<Mat> rho = mats_from_json(s.at("coord_rep"));
    FunPair p = random_extension(rng, a, n, rho);
    Json fp = funpair_json(alg, mj, p);
    std::string nm = tag + ":" + alg + ":n" + std::to_string(n) + ":" + p.name;
    add("def31", nm, Json{{"funpairs", {{"U", fp}}}}, Json{{"funpair", "U"}});
    add("def32", nm, Json{{"funpairs", {{"U", fp}}}}, Json{{"funpair", "U"}});
    add("lemma31", nm, Json{{"funpairs", {{"U", fp}}}}, Json{{"funpair", "U"}});
    pairs_by_algebra[alg].push_back(fp);
    if (a->group_order() > 1 && n <= 2) add("lemma61", nm, Json{{"modules", {{"E", mj}}}}, Json{{"module", "E"}});
    if (n <= 2) {
      for (const auto& [hn, hj] : homs_from(alg)) {
        add("lemma41", nm + ":" + hn, Json{{"funpairs", {{"U", fp}}}, {"homs", {{"pi", hj}}}},
            Json{{"funpair", "U"}, {"pi", "pi"}});
        Side side = static_cast<Side>(rng.below(3));
        add("lemma42", nm + ":" + hn + ":" + to_string(side), Json{{"modules", {{"E", mj}}}, {"homs", {{"pi", hj}}}},
            Json{{"module", "E"}, {"pi", "pi"}, {"side", to_string(side)}});
      }
    }
  }
  for (const auto& [alg, fps] : pairs_by_algebra)
    for (size_t i = 0; i + 1 < fps.size(); i += 2)
      add("lem22", alg + ":" + std::to_string(i), Json{{"funpairs", {{"P", fps[i]}, {"Q", fps[i + 1]}}}},
          Json{{"p", "P"}, {"q", "Q"}});

  // Prop 2.2, Lemma 5.1 and Cor 5.1 on the smaller algebras.
  for (int r = 0; r < sp.repeats; ++r)
    for (const auto& alg : sp.small) {
      AlgebraPtr a = catalogue(alg);
      int g = a->group_order();
      std::vector<Mat> ones(static_cast<size_t>(g), identity<Rational>(1));
      if (r == 0) {
        Json zero{{"zero", alg}};
        Json v0{{"source", zero}, {"target", module_json(alg, 0, std::vector<Mat>(static_cast<size_t>(g), Mat(0, 0)))},
                {"u", to_json(Mat(0, 0))}, {"ustar", Json::array()}};
        add("prop22", alg + ":E=0", Json{{"funpairs", {{"V", v0}}}}, Json{{"v", "V"}});
        add("prop22", alg + ":id", Json{{"funpairs", {{"V", {{"identity", module_json(alg, 1, ones)}}}}}}, Json{{"v", "V"}});
      }
      for (int n = 1; n <= 2; ++n) {
        std::vector<Mat> rho = random_coord_rep(rng, *a->group, n);
        FunPair p = random_extension(rng, a, n, rho);
        add("prop22", alg + ":n" + std::to_string(n) + ":" + p.name,
            Json{{"funpairs", {{"V", funpair_json(alg, module_json(alg, n, rho), p)}}}}, Json{{"v", "V"}});
      }
      if (g > 1 || a->dim > 1) {
        Json tw = action_module_json(alg, 1 + static_cast<int>(a->dim == 1), random_semilinear_action(rng, a, 1 + static_cast<int>(a->dim == 1)));
        add("prop22", alg + ":plain", Json{{"funpairs", {{"V", {{"plain_extension", tw}}}}}}, Json{{"v", "V"}});
      }
      if (unital(*a))
        for (int e = 0; e <= 1; ++e)
          for (int m = 1; m <= 2; ++m) {
            Json mj = e == 0 ? Json{{"zero", alg}} : module_json(alg, 1, random_coord_rep(rng, *a->group, 1));
            Json args{{"module", "E"}, {"m", m}};
            if (e == 0)
              args["u0"] = Json{{"source", "E"}, {"target", module_json(alg, 0, std::vector<Mat>(static_cast<size_t>(g), Mat(0, 0)))},
                                {"u", to_json(Mat(0, 0))}, {"ustar", Json::array()}};
            add("lemma51", alg + ":E" + std::to_string(e) + ":m" + std::to_string(m), Json{{"modules", {{"E", mj}}}}, args);
          }
      for (int n = 1; n <= (a->dim <= 2 ? 3 : 2); ++n) {
        int d = a->dim;
        std::vector<Mat> gamma;
        std::vector<Mat> rest = n > 1 ? (rng.coin() ? random_semilinear_action(rng, a, n - 1) : std::vector<Mat>{}) : std::vector<Mat>{};
        if (n > 1 && rest.empty()) {
          auto rho = random_coord_rep(rng, *a->group, n - 1);
          for (int h = 0; h < g; ++h) rest.push_back(kron(rho[static_cast<size_t>(h)], a->action[static_cast<size_t>(h)]));
        }
        for (int h = 0; h < g; ++h)
          gamma.push_back(n > 1 ? block_diag<Rational>({a->action[static_cast<size_t>(h)], rest[static_cast<size_t>(h)]})
                                : Mat(a->action[static_cast<size_t>(h)]));
        (void)d;
        add("cor51", alg + ":n" + std::to_string(n), Json::object(), Json{{"algebra", alg}, {"n", n}, {"gamma", mats_to_json(gamma)}});
      }
    }

  // Closure terms.
  {
    AlgebraPtr a = catalogue("Q[Z2]^Z2");
    std::vector<Mat> rho = random_coord_rep(rng, *a->group, 2);
    Mat sg(2, 2);
    sg << 1, 0, 0, -1;
    Json sign{{"source", "Q[Z2]^Z2"}, {"target", "Q[Z2]^Z2"}, {"matrix", to_json(sg)}};
    Json term = node_json("corner_module",
                          {node_json("direct_sum",
                                     {node_json("internal_tensor", {leaf_json("Q[Z2]^Z2", 2, rho)}),
                                      node_json("external_tensor", {leaf_json("Q[Z2]^Z2", 1), leaf_json("Q^Z2", 1)})})});
    term["m"] = 1;
    term["children"][0]["children"][0]["pi"] = sign;
    add("thm71", "depth3:Q[Z2]^Z2", Json{{"terms", {{"T", term}}}}, Json{{"term", "T"}});
    Mat aug(1, 2);
    aug << 1, 1;
    Json augj{{"source", "Q[Z2]"}, {"target", "Q"}, {"matrix", to_json(aug)}};
    Json it = node_json("internal_tensor", {leaf_json("Q[Z2]", 2)});
    it["pi"] = augj;
    add("thm71", "internal:augmentation", Json{{"terms", {{"T", it}}}}, Json{{"term", "T"}});
    Json cq = node_json("corner_module", {leaf_json("Q", 1)});
    cq["m"] = 1;
    add("thm71", "corner:Q", Json{{"terms", {{"T", cq}}}}, Json{{"term", "T"}});
    Json lf = leaf_json("M2", 2);
    add("thm71", "leaf:M2", Json{{"terms", {{"T", lf}}}}, Json{{"term", "T"}});
  }
  return cases;
}

bool SuiteResult::ok() const {
  for (const auto& o : outcomes)
    if (!o.passed && !o.hypothesis_unmet) return false;
  return true;
}

unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FMLAB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return hw;
}

SuiteResult run_suite(const std::vector<SuiteCase>& cases, unsigned threads) {
  SuiteResult res;
  res.outcomes.resize(cases.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < cases.size(); i = next++) {
      const SuiteCase& c = cases[i];
      SuiteOutcome& o = res.outcomes[i];
      o.lemma = c.lemma;
      o.name = c.name;
      try {
        Certificate cert = verify_lemma(c.lemma, c.instance);
        o.passed = cert.ok();
        bool hyp = false;
        for (const auto& ch : cert.report.checks())
          if (!ch.ok && ch.name.rfind("hypothesis: ", 0) == 0) hyp = true;
        o.hypothesis_unmet = !o.passed && hyp;
        if (!o.passed) {
          auto f = cert.report.failures();
          o.message = f.empty() ? std::string{} : f.front();
        }
        o.certificate = to_json(cert);
      } catch (const std::exception& e) {
        o.error = true;
        o.message = e.what();
      }
    }
  };
  unsigned t = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(1, cases.size()))));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < t; ++k) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  struct Row {
    int instances = 0, passed = 0, hypothesis = 0, failed = 0;
  };
  std::map<std::string, Row> rows;
  for (const auto& id : lemma_ids()) rows[id];
  Json failures = Json::array();
  for (const auto& o : res.outcomes) {
    Row& r = rows[o.lemma];
    ++r.instances;
    if (o.passed)
      ++r.passed;
    else if (o.hypothesis_unmet)
      ++r.hypothesis;
    else {
      ++r.failed;
      failures.push_back(Json{{"lemma", o.lemma}, {"instance", o.name}, {"message", o.message}});
    }
  }
  Json table = Json::array();
  std::ostringstream text;
  text << "lemma     instances  passed  hypothesis-unmet  failed\n";
  for (const auto& id : lemma_ids()) {
    const Row& r = rows[id];
    table.push_back(Json{{"lemma", id}, {"instances", r.instances}, {"passed", r.passed}, {"hypothesis_unmet", r.hypothesis},
                         {"failed", r.failed}});
    char line[128];
    std::snprintf(line, sizeof line, "%-9s %9d %7d %17d %7d\n", id.c_str(), r.instances, r.passed, r.hypothesis, r.failed);
    text << line;
  }
  Json digests = Json::array();
  for (const auto& o : res.outcomes)
    digests.push_back(o.certificate.is_null() ? Json(nullptr) : o.certificate.at("digest"));
  res.summary = Json{{"table", table}, {"failures", failures}, {"ok", res.ok()}, {"certificates", sha256_hex(digests.dump())}};
  res.table = text.str();
  return res;
}

}  // namespace fmlab
