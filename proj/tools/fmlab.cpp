// fmlab: validate instance and certificate files, build objects, verify
// lemmas and run the seeded suite.
//
// Exit status: 0 all checks passed, 1 usage, 2 parse or reference error,
// 3 a check failed.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "fmlab/suite.hpp"

using namespace fmlab;

namespace {

constexpr int kOk = 0, kUsage = 1, kParse = 2, kFailed = 3;

Json load_args(const std::string& text) {
  if (!text.empty() && text[0] == '@') return read_json_file(text.substr(1));
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("--args: ") + e.what());
  }
}

int cmd_validate(const std::vector<std::string>& files) {
  int status = kOk;
  for (const auto& f : files) {
    Validation v;
    try {
      v = validate_document(read_json_file(f));
    } catch (const ParseError& e) {
      v.parsed = false;
      v.message = e.what();
    }
    std::cout << (v.ok ? "ok     " : v.parsed ? "FAILED " : "PARSE  ") << f << ": " << v.message << "\n";
    if (!v.parsed)
      status = kParse;
    else if (!v.ok && status == kOk)
      status = kFailed;
  }
  return status;
}

// Result stored under one section so the artifact is itself an instance file.
Json artifact(const char* section, Json value, const Report* r = nullptr) {
  Json out{{"format", kInstanceFormat}};
  out[section] = Json{{"result", std::move(value)}};
  if (r) out["report"] = to_json(*r);
  return out;
}

int cmd_construct(const std::string& op, const std::string& args_text, const std::string& out) {
  Json args = load_args(args_text);
  Instance in(args);
  auto arg = [&](const char* key) -> const Json& {
    if (!args.contains(key)) throw ParseError("construct " + op + ": missing argument '" + key + "'");
    return args.at(key);
  };
  Json result;
  Report report;
  if (op == "standard_module") {
    result = artifact("modules", to_json(*standard_module(in.algebra(arg("algebra")), arg("n").get<int>(),
                                                           args.contains("coord_rep") ? mats_from_json(args.at("coord_rep"))
                                                                                      : std::vector<Mat>{})));
  } else if (op == "direct_sum") {
    result = artifact("modules", to_json(*direct_sum(in.module(arg("e")), in.module(arg("f")))));
  } else if (op == "external_tensor") {
    result = artifact("modules", to_json(*external_tensor(in.module(arg("e")), in.module(arg("f")))));
  } else if (op == "internal_tensor") {
    result = artifact("modules", to_json(*internal_tensor(in.module(arg("module")), in.hom(arg("pi"))).module));
  } else if (op == "kalgebra") {
    result = artifact("algebras", to_json(*kalgebra(in.module(arg("module")))->algebra));
  } else if (op == "matrix_iso") {
    MatrixIso iso = matrix_iso(in.module(arg("module")));
    report = iso.report;
    result = artifact("homs", to_json(iso.hom), &report);
  } else if (op == "corner_embedding") {
    CornerEmbedding ce = corner_embedding(in.module(arg("module")));
    report = check_algebra_hom(ce.hom);
    result = artifact("homs", to_json(ce.hom), &report);
  } else if (op == "induced_compact_hom") {
    InducedHom f = induced_compact_hom(in.funpair(arg("funpair")));
    report = f.report;
    auto h = to_algebra_hom(f.op, *kalgebra(f.op.target));
    if (!h) throw PreconditionError("induced map does not land in the compact algebra of the target");
    result = artifact("homs", to_json(*h), &report);
  } else if (op == "change_coefficients") {
    ChangedCoefficients cc = change_coefficients(in.funpair(arg("funpair")), in.hom(arg("pi")));
    report = cc.report;
    result = artifact("funpairs", to_json(cc.v), &report);
  } else if (op == "average_extension") {
    Averaging av = average_extension(in.module(arg("module")));
    report = av.report;
    result = artifact("funpairs", to_json(av.pi), &report);
  } else if (op == "plain_module_extension") {
    PlainExtension pe = plain_module_extension(in.module(arg("module")));
    report = pe.report;
    result = artifact("funpairs", to_json(pe.pi), &report);
  } else if (op == "compose") {
    FunPair p = compose(in.funpair(arg("second")), in.funpair(arg("first")));
    report = check_functional_hom(p);
    result = artifact("funpairs", to_json(p), &report);
  } else if (op == "funpair_direct_sum") {
    FunPair p = direct_sum(in.funpair(arg("p")), in.funpair(arg("q")));
    report = check_functional_hom(p);
    result = artifact("funpairs", to_json(p), &report);
  } else {
    throw CLI::ValidationError("construct", "unknown op '" + op + "'");
  }
  write_json_file(out, result);
  std::cout << op << ": wrote " << out << (report.checks().empty() ? "" : " (" + report.summary() + ")") << "\n";
  return report.ok() ? kOk : kFailed;
}

int cmd_verify(const std::string& lemma, const std::string& file, const std::string& out) {
  Certificate c = verify_lemma(lemma, read_json_file(file));
  Json j = to_json(c);
  if (!out.empty()) write_json_file(out, j);
  std::cout << lemma << ": " << c.report.summary() << "\n";
  if (!out.empty()) std::cout << "certificate " << out << " " << j.at("digest").get<std::string>() << "\n";
  return c.ok() ? kOk : kFailed;
}

int cmd_suite(std::uint64_t seed, const std::string& size, const std::string& summary, const std::string& dir) {
  auto cases = generate_suite(seed, suite_size_from_string(size));
  SuiteResult r = run_suite(cases, thread_count());
  std::cout << "seed " << seed << ", size " << size << ", " << cases.size() << " instances\n" << r.table;
  for (const auto& f : r.summary.at("failures"))
    std::cout << "FAILED " << f.at("lemma").get<std::string>() << " " << f.at("instance").get<std::string>() << ": "
              << f.at("message").get<std::string>() << "\n";
  std::cout << "certificates digest " << r.summary.at("certificates").get<std::string>() << "\n";
  Json s = r.summary;
  s["seed"] = seed;
  s["size"] = size;
  if (!summary.empty()) write_json_file(summary, s);
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    for (size_t i = 0; i < r.outcomes.size(); ++i)
      if (!r.outcomes[i].certificate.is_null())
        write_json_file(dir + "/" + std::to_string(i) + "_" + r.outcomes[i].lemma + ".json", r.outcomes[i].certificate);
  }
  return r.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact functional-module laboratory"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  auto* validate = app.add_subcommand("validate", "Check instance files and re-verify certificates");
  validate->add_option("files", files, "JSON files")->required();

  std::string op, args_text, out;
  auto* construct = app.add_subcommand("construct", "Build an object and write it as an instance file");
  construct->add_option("op", op, "standard_module, direct_sum, external_tensor, internal_tensor, kalgebra, matrix_iso, "
                                  "corner_embedding, induced_compact_hom, change_coefficients, average_extension, "
                                  "plain_module_extension, compose, funpair_direct_sum")
      ->required();
  construct->add_option("--args", args_text, "JSON arguments, or @file")->required();
  construct->add_option("-o,--output", out, "Output file")->required();

  std::string lemma, instance_file, cert_out;
  auto* verify = app.add_subcommand("verify", "Run one lemma verifier and emit a certificate");
  verify->add_option("lemma", lemma, "Lemma id")->required()->check(CLI::IsMember(lemma_ids()));
  verify->add_option("instance", instance_file, "Instance file")->required();
  verify->add_option("-o,--output", cert_out, "Certificate file");

  std::uint64_t seed = 42;
  std::string size = "standard", summary, cert_dir;
  auto* suite = app.add_subcommand("suite", "Generate and verify the seeded instance suite");
  suite->add_option("--seed", seed, "Seed");
  suite->add_option("--size", size, "smoke, standard or deep")->check(CLI::IsMember({"smoke", "standard", "deep"}));
  suite->add_option("--summary", summary, "Write the summary JSON here");
  suite->add_option("--certificates", cert_dir, "Write every certificate into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(files);
    if (*construct) return cmd_construct(op, args_text, out);
    if (*verify) return cmd_verify(lemma, instance_file, cert_out);
    if (*suite) return cmd_suite(seed, size, summary, cert_dir);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "fmlab: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "fmlab: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "fmlab: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "fmlab: check failed: " << e.what() << "\n";
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "fmlab: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
