#include "fmlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "fmlab/catalogue.hpp"

namespace fmlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) bad(std::string("expected an integer field '") + key + "'");
  return j.at(key).get<int>();
}

std::vector<Mat> optional_mats(const Json& j, const char* key) {
  return j.contains(key) ? mats_from_json(j.at(key)) : std::vector<Mat>{};
}

}  // namespace

Json to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) bad("expected a rational as a \"p/q\" string, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    bad("bad rational '" + j.get<std::string>() + "': " + e.what());
  }
}

Json to_json(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return Json{{"shape", {m.rows(), m.cols()}}};
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("shape") || !j.at("shape").is_array() || j.at("shape").size() != 2) bad("matrix object needs a 'shape'");
    Index r = j.at("shape")[0].get<Index>(), c = j.at("shape")[1].get<Index>();
    if (r != 0 && c != 0) bad("only empty matrices use the 'shape' form");
    return Mat(r, c);
  }
  if (!j.is_array() || j.empty()) bad("expected a matrix as a non-empty list of rows");
  Index r = static_cast<Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) bad("matrix rows must be non-empty lists");
  Index c = static_cast<Index>(j[0].size());
  Mat m(r, c);
  for (Index i = 0; i < r; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c) bad("matrix rows differ in length");
    for (Index k = 0; k < c; ++k) m(i, k) = rational_from_json(row[static_cast<size_t>(k)]);
  }
  return m;
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a vector as a list");
  Vec v(static_cast<Index>(j.size()));
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Index>(i)) = rational_from_json(j[i]);
  return v;
}

Json mats_to_json(const std::vector<Mat>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

std::vector<Mat> mats_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a list of matrices");
  std::vector<Mat> out;
  for (const auto& m : j) out.push_back(mat_from_json(m));
  return out;
}

Json to_json(const RotScalar& r) {
  Json a = Json::array(), b = Json::array();
  for (const auto& x : r.a()) a.push_back(x.str());
  for (const auto& x : r.b()) b.push_back(x.str());
  return Json{{"a", a}, {"b", b}};
}

// Sparse: only nonzero entries as [row, col, value].
Json to_json(const RotMat& m) {
  Json entries = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) entries.push_back(Json{i, j, to_json(m(i, j))});
  return Json{{"shape", {m.rows(), m.cols()}}, {"entries", entries}};
}

Json to_json(const FinGroup& g) { return Json{{"name", g.name}, {"cayley", g.cayley}}; }

Json to_json(const Algebra& a) {
  Json prods = Json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) prods.push_back(vec_to_json(a.product_vector(i, j)));
  return Json{{"name", a.name}, {"dim", a.dim}, {"products", prods}, {"group", to_json(*a.group)},
              {"action", mats_to_json(a.action)}};
}

Json to_json(const FunctionalModule& m) {
  Json j{{"name", m.name},
         {"algebra", to_json(*m.coeff)},
         {"dim", m.dim},
         {"raction", mats_to_json(m.raction)},
         {"gaction", mats_to_json(m.gaction)},
         {"functionals", mats_to_json(m.functionals)}};
  if (m.standard) j["standard"] = Json{{"n", m.standard->n}, {"coord_rep", mats_to_json(m.standard->coord_rep)}};
  return j;
}

Json to_json(const FunPair& p) {
  return Json{{"name", p.name},
              {"source", to_json(*p.source)},
              {"target", to_json(*p.target)},
              {"u", to_json(p.u)},
              {"ustar", mats_to_json(p.ustar)}};
}

Json to_json(const AlgebraHom& h) {
  return Json{{"source", to_json(*h.source)}, {"target", to_json(*h.target)}, {"matrix", to_json(h.matrix)}};
}

Json to_json(const ClosureTerm& t) {
  Json j{{"kind", to_string(t.kind)}};
  switch (t.kind) {
    case TermKind::leaf:
      j["algebra"] = to_json(*t.algebra);
      j["n"] = t.n;
      if (!t.gaction.empty()) j["gaction"] = mats_to_json(t.gaction);
      if (!t.coord_rep.empty()) j["coord_rep"] = mats_to_json(t.coord_rep);
      return j;
    case TermKind::internal_tensor: j["pi"] = to_json(*t.pi); break;
    case TermKind::corner_module: j["m"] = t.n; break;
    default: break;
  }
  Json ch = Json::array();
  for (const auto& c : t.children) ch.push_back(to_json(*c));
  j["children"] = ch;
  return j;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json e{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return Json{{"ok", r.ok()}, {"checks", checks}};
}

// ---------------------------------------------------------------------------

Instance::Instance(Json doc) : doc_(std::move(doc)) {
  if (!doc_.is_object()) bad("an instance file must be a JSON object");
  if (doc_.contains("format") && doc_.at("format") != kInstanceFormat)
    bad("unsupported instance format " + doc_.at("format").dump());
}

const Json& Instance::lookup(const char* section, const std::string& name) const {
  if (!doc_.contains(section) || !doc_.at(section).contains(name))
    bad(std::string("unresolved reference '") + name + "' in " + section);
  return doc_.at(section).at(name);
}

const Json& Instance::args(const std::string& lemma) const {
  if (!doc_.contains("verify") || !doc_.at("verify").contains(lemma))
    bad("instance has no 'verify." + lemma + "' arguments");
  return doc_.at("verify").at(lemma);
}

Instance::Active::Active(Instance& i, std::string k) : in(i), key(std::move(k)) {
  if (!in.active_.insert(key).second) bad("cyclic reference through " + key);
}

Instance::Active::~Active() { in.active_.erase(key); }

template <class T, class F>
static T resolve(std::map<std::string, T>& cache, const std::string& key, F&& build) {
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  T v = build();
  cache.emplace(key, v);
  return v;
}

GroupPtr Instance::group(const Json& ref) {
  if (!ref.is_string()) return parse_group(ref);
  std::string name = ref.get<std::string>();
  return resolve(groups_, name, [&] {
    if (doc_.contains("groups") && doc_.at("groups").contains(name)) {
      Active guard(*this, "groups:" + name);
      GroupPtr g = parse_group(doc_.at("groups").at(name));
      return g;
    }
    if (name == "1") return trivial_group();
    if (name == "S3") return symmetric_group3();
    if (name.size() > 1 && name[0] == 'Z') {
      int n = 0;
      try {
        n = std::stoi(name.substr(1));
      } catch (...) {
        bad("unknown group '" + name + "'");
      }
      if (n < 1 || n > 64) bad("cyclic group order out of range: " + name);
      return cyclic_group(n);
    }
    bad("unknown group '" + name + "'");
  });
}

GroupPtr Instance::parse_group(const Json& j) {
  if (j.is_string()) return group(j);  // alias
  if (!j.is_object() || !j.contains("cayley")) bad("group needs a 'cayley' table");
  try {
    return make_group(j.at("cayley").get<std::vector<std::vector<int>>>(), j.value("name", std::string{}));
  } catch (const PreconditionError& e) {
    bad(std::string("bad group: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("bad group: ") + e.what());
  }
}

AlgebraPtr Instance::algebra(const Json& ref) {
  if (!ref.is_string()) return parse_algebra(ref);
  std::string name = ref.get<std::string>();
  return resolve(algebras_, name, [&] {
    if (doc_.contains("algebras") && doc_.at("algebras").contains(name)) {
      Active guard(*this, "algebras:" + name);
      AlgebraPtr a = parse_algebra(doc_.at("algebras").at(name));
      return a;
    }
    const auto& names = catalogue_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) bad("unresolved algebra '" + name + "'");
    return catalogue(name);
  });
}

AlgebraPtr Instance::parse_algebra(const Json& j) {
  if (j.is_string()) return algebra(j);  // alias
  if (!j.is_object()) bad("algebra must be a name or an object");
  if (j.contains("catalogue")) return algebra(j.at("catalogue"));
  if (j.contains("matrix_algebra"))
    return matrix_algebra(algebra(j.at("matrix_algebra")), get_int(j, "n"), optional_mats(j, "coord_rep"));
  if (j.contains("tensor")) {
    const Json& t = j.at("tensor");
    if (!t.is_array() || t.size() != 2) bad("'tensor' takes two algebras");
    return tensor_algebra(algebra(t[0]), algebra(t[1]));
  }
  if (j.contains("kalgebra")) return kalgebra(module(j.at("kalgebra")))->algebra;
  if (j.contains("forget_group")) return forget_group(algebra(j.at("forget_group")));
  if (j.contains("with_group")) return with_group(algebra(j.at("with_group")), group(j.at("group")), optional_mats(j, "action"));
  int d = get_int(j, "dim");
  if (d < 0) bad("negative algebra dimension");
  if (!j.contains("products") || !j.at("products").is_array() || j.at("products").size() != static_cast<size_t>(d * d))
    bad("algebra needs dim^2 product vectors");
  std::vector<Vec> prods;
  for (const auto& v : j.at("products")) {
    prods.push_back(vec_from_json(v));
    if (prods.back().size() != d) bad("product vector of the wrong length");
  }
  GroupPtr g = j.contains("group") ? group(j.at("group")) : trivial_group();
  AlgebraPtr a = make_algebra(d, prods, g, optional_mats(j, "action"), j.value("name", std::string{}));
  Report r = validate(*a);
  if (!r.ok()) bad("algebra " + a->name + " is invalid: " + r.summary());
  return a;
}

ModulePtr Instance::module(const Json& ref) {
  if (!ref.is_string()) return parse_module(ref);
  std::string name = ref.get<std::string>();
  return resolve(modules_, name, [&] {
    Active guard(*this, "modules:" + name);
    ModulePtr m = parse_module(lookup("modules", name));
    return m;
  });
}

ModulePtr Instance::parse_module(const Json& j) {
  if (j.is_string()) return module(j);  // alias
  if (!j.is_object()) bad("module must be a name or an object");
  if (j.contains("standard") && !j.contains("dim")) {
    const Json& s = j.at("standard");
    return standard_module(algebra(s.at("algebra")), get_int(s, "n"), optional_mats(s, "coord_rep"));
  }
  if (j.contains("standard_action")) {
    const Json& s = j.at("standard_action");
    return standard_module_with_action(algebra(s.at("algebra")), get_int(s, "n"), optional_mats(s, "gaction"));
  }
  if (j.contains("zero")) return zero_module(algebra(j.at("zero")));
  if (j.contains("direct_sum")) {
    std::vector<ModulePtr> parts;
    for (const auto& p : j.at("direct_sum")) parts.push_back(module(p));
    if (parts.empty()) bad("'direct_sum' needs at least one module");
    return direct_sum(parts);
  }
  if (j.contains("amplify")) return amplify(module(j.at("amplify")), get_int(j, "k"), optional_mats(j, "rep"));
  if (j.contains("external_tensor")) {
    const Json& t = j.at("external_tensor");
    if (!t.is_array() || t.size() != 2) bad("'external_tensor' takes two modules");
    return external_tensor(module(t[0]), module(t[1]));
  }
  if (j.contains("internal_tensor")) return internal_tensor(module(j.at("internal_tensor")), hom(j.at("hom"))).module;
  if (j.contains("forget_group")) return forget_group(module(j.at("forget_group")));
  std::optional<StandardInfo> st;
  if (j.contains("standard")) st = StandardInfo{get_int(j.at("standard"), "n"), optional_mats(j.at("standard"), "coord_rep")};
  ModulePtr m = make_module(algebra(j.at("algebra")), get_int(j, "dim"), optional_mats(j, "raction"),
                            optional_mats(j, "gaction"), optional_mats(j, "functionals"), st, j.value("name", std::string{}));
  Report r = validate(*m);
  if (!r.ok()) bad("module " + m->name + " is invalid: " + r.summary());
  return m;
}

FunPair Instance::funpair(const Json& ref) {
  if (!ref.is_string()) return parse_funpair(ref);
  std::string name = ref.get<std::string>();
  return resolve(funpairs_, name, [&] {
    Active guard(*this, "funpairs:" + name);
    FunPair p = parse_funpair(lookup("funpairs", name));
    if (p.name.empty()) p.name = name;
    return p;
  });
}

FunPair Instance::parse_funpair(const Json& j) {
  if (j.is_string()) return funpair(j);  // alias
  if (!j.is_object()) bad("funpair must be a name or an object");
  auto pair_of = [&](const char* key) {
    const Json& t = j.at(key);
    if (!t.is_array() || t.size() != 2) bad(std::string("'") + key + "' takes two funpairs");
    return std::pair{funpair(t[0]), funpair(t[1])};
  };
  if (j.contains("identity")) return identity_funpair(module(j.at("identity")));
  if (j.contains("compose")) {
    auto [second, first] = pair_of("compose");
    return compose(second, first);
  }
  if (j.contains("direct_sum")) {
    auto [p, q] = pair_of("direct_sum");
    return direct_sum(p, q);
  }
  if (j.contains("external_tensor")) {
    auto [p, q] = pair_of("external_tensor");
    return external_tensor(p, q);
  }
  if (j.contains("average")) return average_extension(module(j.at("average"))).pi;
  if (j.contains("plain_extension")) return plain_module_extension(module(j.at("plain_extension"))).pi;
  FunPair p;
  p.source = module(j.at("source"));
  p.target = module(j.at("target"));
  p.u = mat_from_json(j.at("u"));
  p.ustar = optional_mats(j, "ustar");
  p.name = j.value("name", std::string{});
  if (p.u.rows() != p.target->dim || p.u.cols() != p.source->dim) bad("funpair '" + p.name + "': U has the wrong shape");
  if (p.ustar.size() != p.source->functionals.size()) bad("funpair '" + p.name + "': one U* image per source generator");
  for (const auto& f : p.ustar)
    if (f.rows() != p.target->d() || f.cols() != p.target->dim) bad("funpair '" + p.name + "': U* image of the wrong shape");
  return p;
}

AlgebraHom Instance::hom(const Json& ref) {
  if (!ref.is_string()) return parse_hom(ref);
  std::string name = ref.get<std::string>();
  return resolve(homs_, name, [&] {
    Active guard(*this, "homs:" + name);
    AlgebraHom h = parse_hom(lookup("homs", name));
    return h;
  });
}

AlgebraHom Instance::parse_hom(const Json& j) {
  if (j.is_string()) return hom(j);  // alias
  if (!j.is_object()) bad("hom must be a name or an object");
  if (j.contains("identity")) {
    AlgebraPtr a = algebra(j.at("identity"));
    return AlgebraHom{a, a, identity<Rational>(a->dim)};
  }
  AlgebraHom h{algebra(j.at("source")), algebra(j.at("target")), mat_from_json(j.at("matrix"))};
  if (h.matrix.rows() != h.target->dim || h.matrix.cols() != h.source->dim) bad("hom matrix has the wrong shape");
  return h;
}

TermPtr Instance::term(const Json& ref) {
  if (!ref.is_string()) return parse_term(ref);
  std::string name = ref.get<std::string>();
  return resolve(terms_, name, [&] {
    Active guard(*this, "terms:" + name);
    TermPtr t = parse_term(lookup("terms", name));
    return t;
  });
}

TermPtr Instance::parse_term(const Json& j) {
  if (j.is_string()) return term(j);  // alias
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) bad("closure term needs a 'kind'");
  TermKind k = term_kind_from_string(j.at("kind").get<std::string>());
  auto ch = [&](size_t n) {
    if (!j.contains("children") || !j.at("children").is_array() || j.at("children").size() != n)
      bad(to_string(k) + " term needs " + std::to_string(n) + " children");
    std::vector<TermPtr> out;
    for (const auto& c : j.at("children")) out.push_back(term(c));
    return out;
  };
  switch (k) {
    case TermKind::leaf: {
      AlgebraPtr a = algebra(j.at("algebra"));
      int n = get_int(j, "n");
      if (j.contains("gaction")) return leaf_with_action(a, n, mats_from_json(j.at("gaction")));
      return leaf(a, n, optional_mats(j, "coord_rep"));
    }
    case TermKind::direct_sum: {
      auto c = ch(2);
      return sum_term(c[0], c[1]);
    }
    case TermKind::internal_tensor: return internal_term(ch(1)[0], hom(j.at("pi")));
    case TermKind::external_tensor: {
      auto c = ch(2);
      return external_term(c[0], c[1]);
    }
    case TermKind::corner_module: return corner_term(ch(1)[0], j.contains("m") ? get_int(j, "m") : 1);
  }
  bad("unreachable term kind");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(1) << "\n";
}

}  // namespace fmlab
