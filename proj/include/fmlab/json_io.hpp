#pragma once

#include <map>
#include <set>
#include <string>

#include <json.hpp>

#include "fmlab/class_c.hpp"

namespace fmlab {

// Keys are sorted, so dump() is canonical.
using Json = nlohmann::json;

inline constexpr const char* kInstanceFormat = "fmlab-instance/1";

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
// Row list of "p/q" strings; empty shapes use {"shape": [rows, cols]}.
Json to_json(const Mat& m);
Mat mat_from_json(const Json& j);
Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);
Json mats_to_json(const std::vector<Mat>& ms);
std::vector<Mat> mats_from_json(const Json& j);
// a(c) + s b(c) as {"a": [...], "b": [...]}.
Json to_json(const RotScalar& r);
Json to_json(const RotMat& m);

Json to_json(const FinGroup& g);
Json to_json(const Algebra& a);
Json to_json(const FunctionalModule& m);
Json to_json(const FunPair& p);
Json to_json(const AlgebraHom& h);
Json to_json(const ClosureTerm& t);
Json to_json(const Report& r);

// Named objects of an instance file, resolved on first use. Any place that takes
// a reference also accepts an inline object of the same kind.
class Instance {
 public:
  explicit Instance(Json doc);
  const Json& doc() const { return doc_; }

  GroupPtr group(const Json& ref);
  AlgebraPtr algebra(const Json& ref);
  ModulePtr module(const Json& ref);
  FunPair funpair(const Json& ref);
  AlgebraHom hom(const Json& ref);
  TermPtr term(const Json& ref);

  // Arguments for a lemma: doc["verify"][lemma].
  const Json& args(const std::string& lemma) const;

 private:
  const Json& lookup(const char* section, const std::string& name) const;
  GroupPtr parse_group(const Json& j);
  AlgebraPtr parse_algebra(const Json& j);
  ModulePtr parse_module(const Json& j);
  FunPair parse_funpair(const Json& j);
  AlgebraHom parse_hom(const Json& j);
  TermPtr parse_term(const Json& j);
  // Marks a named object as under construction for cycle detection.
  struct Active {
    Active(Instance& in, std::string key);
    ~Active();
    Instance& in;
    std::string key;
  };

  Json doc_;
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, AlgebraPtr> algebras_;
  std::map<std::string, ModulePtr> modules_;
  std::map<std::string, FunPair> funpairs_;
  std::map<std::string, AlgebraHom> homs_;
  std::map<std::string, TermPtr> terms_;
  std::set<std::string> active_;
};

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace fmlab
