#include "fmlab/certificate.hpp"

#include <functional>
#include <map>

#include <openssl/evp.h>

#include "fmlab/corner51.hpp"

namespace fmlab {

namespace {

using Verifier = std::function<void(Instance&, const Json&, Certificate&)>;

std::string hypothesis_of(const std::string& what) { return "hypothesis: " + what; }

Json decision_json(const ExtensionDecision& d) {
  Json j{{"extension", d.extension}};
  if (d.extension) {
    Json w = Json::array();
    for (const auto& x : d.witnesses) w.push_back(vec_to_json(x));
    j["witnesses"] = w;
  } else {
    j["failing_eta"] = d.failing_eta;
    if (d.certificate) j["certificate"] = vec_to_json(*d.certificate);
  }
  return j;
}

// Def 3.1 and Def 3.2 checks for one pair, merged under a prefix.
ExtensionDecision check_extension(const FunPair& p, const std::string& prefix, Certificate& c) {
  c.report.merge(prefix, check_functional_hom(p));
  ExtensionDecision d = decide_functional_extension(p);
  c.report.check(prefix + "functional extension", d.extension,
                 d.extension ? std::string{} : "no solution for target basis vector " + std::to_string(d.failing_eta));
  return d;
}

Json dims(const FunPair& p) { return Json{{"source_dim", p.source->dim}, {"target_dim", p.target->dim}}; }

Json unit_json(const UnitResult& u) {
  if (u.unit) return Json{{"unit", vec_to_json(*u.unit)}};
  Json j{{"unit", nullptr}};
  if (u.certificate) j["infeasibility"] = vec_to_json(*u.certificate);
  return j;
}

Json rotation_json(const RotationPath& r) {
  return Json{{"conjugator", to_json(r.conj)},
              {"images", r.count},
              {"pairs_checked", r.pairs_checked},
              {"exhaustive", r.exhaustive}};
}

Json prop22_json(const Prop22Certificate& p) {
  return Json{{"n", p.n},
              {"k_dim", p.corner.k->dim()},
              {"m_dim", p.m->dim},
              {"z_path", rotation_json(p.z_path)},
              {"x_path", rotation_json(p.x_path)},
              {"checks", p.report.checks().size()}};
}

Json node_json(const ClassCNode& n) {
  Json ch = Json::array();
  for (const auto& c : n.children) ch.push_back(node_json(c));
  Json j{{"path", n.path},
         {"kind", to_string(n.kind)},
         {"module_dim", n.module->dim},
         {"extension", dims(n.extension)},
         {"extension_u", to_json(n.extension.u)},
         {"k_unit", unit_json(n.unit)},
         {"module_cofull", n.module_cofull},
         {"theta_cofull", n.theta_cofull},
         {"children", ch}};
  if (n.transfer) j["unit_transfer"] = Json{{"hypotheses", n.transfer->hypotheses}, {"holds", n.transfer->holds()}};
  if (n.tensor_unit) j["tensor_unit"] = *n.tensor_unit;
  if (n.prop22) j["prop22"] = prop22_json(*n.prop22);
  return j;
}

void def31(Instance& in, const Json& a, Certificate& c) {
  FunPair p = in.funpair(a.at("funpair"));
  c.report.merge("", check_functional_hom(p));
  c.data = dims(p);
}

void def32(Instance& in, const Json& a, Certificate& c) {
  FunPair p = in.funpair(a.at("funpair"));
  ExtensionDecision d = check_extension(p, "", c);
  c.data = dims(p);
  c.data["decision"] = decision_json(d);
}

void lem22(Instance& in, const Json& a, Certificate& c) {
  FunPair p = in.funpair(a.at("p")), q = in.funpair(a.at("q"));
  check_extension(p, "p: ", c);
  check_extension(q, "q: ", c);
  FunPair s = direct_sum(p, q);
  check_extension(s, "p (+) q: ", c);
  c.data = Json{{"direct_sum", dims(s)}};
  if (same_module(p.target, q.source)) {
    FunPair qp = compose(q, p);
    check_extension(qp, "q o p: ", c);
    c.data["composition"] = dims(qp);
  }
}

void lemma31(Instance& in, const Json& a, Certificate& c) {
  FunPair p = in.funpair(a.at("funpair"));
  check_extension(p, "U: ", c);
  if (!c.report.ok()) return;
  InducedHom f = induced_compact_hom(p);
  c.report.merge("f: ", f.report);
  c.report.merge("f: ", check_operator_hom(f.op));
  c.report.check("f injective", injective(f.op));
  c.data = Json{{"k_dim", f.source->dim()}, {"target_module_dim", p.target->dim}};
}

void prop22(Instance& in, const Json& a, Certificate& c) {
  Prop22Certificate p = verify_prop22(in.funpair(a.at("v")));
  c.report.merge("", p.report);
  c.data = prop22_json(p);
}

void lemma41(Instance& in, const Json& a, Certificate& c) {
  FunPair u = in.funpair(a.at("funpair"));
  AlgebraHom pi = in.hom(a.at("pi"));
  const Algebra& alg = *u.source->coeff;
  UnitResult ru = find_unit(alg, Side::right);
  c.data = Json{{"right_unit", unit_json(ru)}};
  if (!c.report.check(hypothesis_of(alg.name + " has a right unit"), ru.unit.has_value(),
                      "find_unit(right) is infeasible"))
    return;
  check_extension(u, "U: ", c);
  c.report.merge("pi: ", check_algebra_hom(pi));
  if (!c.report.ok()) return;
  ChangedCoefficients cc = change_coefficients(u, pi);
  c.report.merge("", cc.report);
  ExtensionDecision d = check_extension(cc.v, "V: ", c);
  c.data["v"] = dims(cc.v);
  c.data["decision"] = decision_json(d);
}

void lemma42(Instance& in, const Json& a, Certificate& c) {
  ModulePtr e = in.module(a.at("module"));
  AlgebraHom pi = in.hom(a.at("pi"));
  Side side = side_from_string(a.value("side", std::string("two_sided")));
  UnitTransfer t = approx_unit_transfer(e, pi, side);
  bool need_left = side != Side::right, need_right = side != Side::left;
  c.report.check(hypothesis_of("K_A(E) has a " + to_string(side) + " unit"), t.k_unit);
  if (need_left) c.report.check(hypothesis_of("E cofull"), t.e_cofull);
  if (need_right) {
    c.report.check(hypothesis_of("Theta_A(E) cofull"), t.theta_cofull);
    c.report.check(hypothesis_of("A has a left unit"), t.a_left_unit);
  }
  c.report.check("K_B(E (x)_pi B) has a " + to_string(side) + " unit", t.k_tensor.unit.has_value());
  c.data = Json{{"side", to_string(side)}, {"k_source", unit_json(t.k_source)}, {"k_tensor", unit_json(t.k_tensor)}};
}

void lemma51(Instance& in, const Json& a, Certificate& c) {
  ModulePtr e = in.module(a.at("module"));
  FunPair u0 = a.contains("u0") ? in.funpair(a.at("u0")) : identity_funpair(e);
  int m = a.value("m", 1);
  if (m < 1) throw ParseError("lemma51: m must be positive");
  const Algebra& b = *e->coeff;
  bool unital = find_unit(b, Side::two_sided).unit.has_value();
  if (!c.report.check(hypothesis_of(b.name + " has a unit"), unital)) return;
  CornerEmbedding ce = corner_embedding(e);
  ModulePtr km = standard_module(ce.k->algebra, m, std::vector<Mat>(static_cast<size_t>(b.group_order()), identity<Rational>(m)));
  CornerModule cm = corner_module_composition(ce, u0, identity_funpair(km));
  c.report.merge("", cm.report);
  ExtensionDecision d = check_extension(cm.w, "W: ", c);
  c.data = Json{{"k_dim", ce.k->dim()}, {"corner_module_dim", cm.w.source->dim}, {"w", dims(cm.w)}, {"w_u", to_json(cm.w.u)},
                {"decision", decision_json(d)}};
}

void lemma61(Instance& in, const Json& a, Certificate& c) {
  ModulePtr e = in.module(a.at("module"));
  Averaging av = average_extension(e);
  c.report.merge("pi: ", av.report);
  c.report.merge("pi: ", check_equivariance(av.pi));
  c.report.merge("witness: ", check_averaging_witness(av));
  check_extension(av.pi, "pi: ", c);
  FunPair gamma = a.contains("gamma") ? in.funpair(a.at("gamma")) : identity_funpair(forget_group(e));
  Amplified am = amplify_nonequivariant(gamma, e->coeff);
  c.report.merge("sigma: ", am.report);
  c.report.merge("sigma: ", check_equivariance(am.sigma));
  check_extension(am.sigma, "sigma: ", c);
  if (same_module(am.sigma.source, av.pi.target)) check_extension(compose(am.sigma, av.pi), "sigma o pi: ", c);
  c.data = Json{{"pi", dims(av.pi)}, {"sigma", dims(am.sigma)}};
}

void lemma62(Instance& in, const Json& a, Certificate& c) {
  ModulePtr e = in.module(a.at("module"));
  PlainExtension pe = plain_module_extension(e);
  c.report.merge("", pe.report);
  c.report.merge("pi: ", check_equivariance(pe.pi));
  check_extension(pe.pi, "pi: ", c);
  check_extension(pe.v, "V: ", c);
  c.data = Json{{"x", to_json(pe.x)}, {"mu", mats_to_json(pe.mu)}, {"pi", dims(pe.pi)}};
}

void cor51(Instance& in, const Json& a, Certificate& c) {
  AlgebraPtr alg = in.algebra(a.at("algebra"));
  int n = a.at("n").get<int>();
  if (n < 1) throw ParseError("cor51: n must be positive");
  std::vector<Mat> big = a.contains("Gamma") ? mats_from_json(a.at("Gamma"))
                                             : adjoint_action(alg, n, mats_from_json(a.at("gamma")));
  CornerWitness51 w = corner51_witness(alg, n, big);
  c.report.merge("", w.report);
  c.data = Json{{"m", w.m},
                {"gamma", mats_to_json(w.gamma)},
                {"efxz_r", rotation_json(w.efxz_r)},
                {"efy_f", rotation_json(w.efy_f)}};
}

void thm71(Instance& in, const Json& a, Certificate& c) {
  TermPtr t = in.term(a.at("term"));
  ClassCNode root = certify_class_c(t);
  c.report.merge("", flatten(root));
  c.data = Json{{"depth", depth(*t)}, {"tree", node_json(root)}};
}

const std::map<std::string, Verifier>& verifiers() {
  static const std::map<std::string, Verifier> v = {
      {"def31", def31},     {"def32", def32},     {"lem22", lem22},     {"lemma31", lemma31},
      {"prop22", prop22},   {"lemma41", lemma41}, {"lemma42", lemma42}, {"lemma51", lemma51},
      {"lemma61", lemma61}, {"lemma62", lemma62}, {"cor51", cor51},     {"thm71", thm71}};
  return v;
}

}  // namespace

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids = {"def31",   "def32",   "lem22",   "lemma31", "prop22", "lemma41",
                                               "lemma42", "lemma51", "lemma61", "lemma62", "cor51",  "thm71"};
  return ids;
}

Certificate verify_lemma(const std::string& lemma, const Json& instance) {
  auto it = verifiers().find(lemma);
  if (it == verifiers().end()) throw ParseError("unknown lemma id '" + lemma + "'");
  Certificate c;
  c.lemma = lemma;
  c.instance = instance;
  c.data = Json::object();
  Instance in(instance);
  const Json& args = in.args(lemma);
  try {
    it->second(in, args, c);
  } catch (const PreconditionError& e) {
    c.report.check(hypothesis_of("construction preconditions"), false, e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(lemma + " arguments: " + e.what());
  }
  return c;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

std::string certificate_digest(const Json& cert) {
  Json body = cert;
  body.erase("digest");
  return "sha256:" + sha256_hex(body.dump());
}

Json to_json(const Certificate& c) {
  Json j{{"format", kCertificateFormat},
         {"lemma", c.lemma},
         {"instance", c.instance},
         {"ok", c.ok()},
         {"report", to_json(c.report)},
         {"data", c.data}};
  j["digest"] = certificate_digest(j);
  return j;
}

Validation validate_certificate(const Json& cert) {
  Validation v;
  if (!cert.is_object() || cert.value("format", std::string{}) != kCertificateFormat || !cert.contains("lemma") ||
      !cert.contains("instance") || !cert.contains("digest")) {
    v.parsed = false;
    v.message = "not a certificate document";
    return v;
  }
  if (cert.at("digest") != certificate_digest(cert)) {
    v.message = "digest mismatch";
    return v;
  }
  Json again = to_json(verify_lemma(cert.at("lemma").get<std::string>(), cert.at("instance")));
  if (again.dump() != cert.dump()) {
    v.message = "re-verification produced a different certificate";
    return v;
  }
  v.ok = cert.at("ok").get<bool>();
  v.message = v.ok ? "certificate re-verified (" + cert.at("digest").get<std::string>() + ")"
                   : "certificate re-verified but records failed checks";
  return v;
}

Validation validate_document(const Json& doc) {
  if (doc.is_object() && doc.contains("format") && doc.at("format") == kCertificateFormat) return validate_certificate(doc);
  Validation v;
  try {
    Instance in(doc);
    size_t count = 0;
    Report r;
    auto each = [&](const char* section, auto&& build) {
      if (!doc.contains(section)) return;
      for (const auto& [name, _] : doc.at(section).items()) {
        build(Json(name));
        ++count;
      }
    };
    each("groups", [&](const Json& n) { r.check("group " + n.get<std::string>(), validate(*in.group(n)).ok()); });
    each("algebras", [&](const Json& n) { r.check("algebra " + n.get<std::string>(), validate(*in.algebra(n)).ok()); });
    each("modules", [&](const Json& n) { r.check("module " + n.get<std::string>(), validate(*in.module(n)).ok()); });
    each("funpairs", [&](const Json& n) {
      r.check("funpair " + n.get<std::string>(), check_functional_hom(in.funpair(n)).ok());
    });
    each("homs", [&](const Json& n) { r.check("hom " + n.get<std::string>(), check_algebra_hom(in.hom(n)).ok()); });
    each("terms", [&](const Json& n) { in.term(n); });
    v.ok = r.ok();
    v.message = v.ok ? "instance valid (" + std::to_string(count) + " objects)" : r.summary();
  } catch (const ParseError& e) {
    v.parsed = false;
    v.message = e.what();
  } catch (const nlohmann::json::exception& e) {
    v.parsed = false;
    v.message = e.what();
  } catch (const PreconditionError& e) {
    v.message = e.what();
  }
  return v;
}

}  // namespace fmlab
