#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fmlab/catalogue.hpp"
#include "fmlab/certificate.hpp"

using namespace fmlab;

namespace {

Json prop22_instance() {
  return Json::parse(R"({
    "format": "fmlab-instance/1",
    "funpairs": {"V": {"identity": {"standard": {"algebra": "Q", "n": 1}}}},
    "verify": {"prop22": {"v": "V"}}
  })");
}

}  // namespace

TEST_CASE("rationals and matrices round-trip") {
  CHECK(to_json(Rational(-3, 4)) == "-3/4");
  CHECK(to_json(Rational(5)) == "5");
  CHECK(rational_from_json(Json("10/4")) == Rational(5, 2));
  CHECK(rational_from_json(Json(7)) == Rational(7));
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json::array()), ParseError);

  Mat m(2, 3);
  m << Rational(1, 2), 0, -1, 3, Rational(-7, 3), 0;
  CHECK(same(mat_from_json(to_json(m)), m));
  Mat empty(0, 4);
  Mat back = mat_from_json(to_json(empty));
  CHECK(back.rows() == 0);
  CHECK(back.cols() == 4);
  CHECK_THROWS_AS(mat_from_json(Json::parse(R"([["1", "2"], ["3"]])")), ParseError);
}

TEST_CASE("rotation scalars serialize as coefficient lists") {
  RotScalar r = RotScalar::s() * RotScalar::c() + RotScalar(Rational(1, 2));
  Json j = to_json(r);
  CHECK(j.at("a") == Json::parse(R"(["1/2"])"));
  CHECK(j.at("b") == Json::parse(R"(["0", "1"])"));
}

TEST_CASE("algebras and modules resolve from an instance") {
  Json doc = Json::parse(R"({
    "format": "fmlab-instance/1",
    "algebras": {
      "A": "Q[Z2]",
      "B": {"dim": 1, "products": [["1"]]},
      "T": {"tensor": ["A", "B"]}
    },
    "modules": {
      "E": {"standard": {"algebra": "A", "n": 2}},
      "F": {"direct_sum": ["E", {"standard": {"algebra": "A", "n": 1}}]}
    },
    "homs": {"aug": {"source": "A", "target": "B", "matrix": [["1", "1"]]}}
  })");
  Instance in(doc);
  CHECK(in.algebra(Json("A"))->dim == 2);
  CHECK(in.algebra(Json("T"))->dim == 2);
  CHECK(in.module(Json("F"))->dim == 6);
  CHECK(check_algebra_hom(in.hom(Json("aug"))).ok());
  CHECK(validate_document(doc).ok);
}

TEST_CASE("objects survive serialization") {
  AlgebraPtr a = catalogue("T2^Z2");
  Json doc{{"format", kInstanceFormat}, {"algebras", {{"A", to_json(*a)}}}};
  Instance in(doc);
  CHECK(same_algebra(*in.algebra(Json("A")), *a));

  ModulePtr e = standard_module(catalogue("Q[Z3]^Z2"), 2);
  Json md{{"format", kInstanceFormat}, {"modules", {{"E", to_json(*e)}}}};
  Instance im(md);
  CHECK(same_module(*im.module(Json("E")), *e));
}

TEST_CASE("reference errors are parse errors") {
  Json cyc = Json::parse(R"({"format": "fmlab-instance/1", "modules": {"X": {"direct_sum": ["X", "X"]}}})");
  Instance in(cyc);
  CHECK_THROWS_AS(in.module(Json("X")), ParseError);
  Json missing = Json::parse(R"({"format": "fmlab-instance/1", "modules": {"X": {"standard": {"algebra": "nope", "n": 1}}}})");
  Instance im(missing);
  CHECK_THROWS_AS(im.module(Json("X")), ParseError);
  // a failed parse must not leave the name marked as under construction
  try {
    im.module(Json("X"));
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("cyclic") == std::string::npos);
  }
  Json alias = Json::parse(R"({"algebras": {"A": "B", "B": "A"}})");
  Instance ia(alias);
  CHECK_THROWS_AS(ia.algebra(Json("A")), ParseError);
  CHECK_THROWS_AS(verify_lemma("lemma99", prop22_instance()), ParseError);
}

TEST_CASE("certificates are canonical and re-verify") {
  Certificate c = verify_lemma("prop22", prop22_instance());
  CHECK(c.ok());
  Json j = to_json(c);
  CHECK(j.at("format") == kCertificateFormat);
  std::string digest = j.at("digest");
  CHECK(digest.rfind("sha256:", 0) == 0);
  CHECK(digest.size() == 7 + 64);
  CHECK(certificate_digest(j) == digest);
  // same input, same bytes
  CHECK(to_json(verify_lemma("prop22", prop22_instance())).dump() == j.dump());
  Validation v = validate_certificate(j);
  CHECK(v.ok);

  Json tampered = j;
  tampered["ok"] = false;
  CHECK_FALSE(validate_certificate(tampered).ok);
  Json resigned = tampered;
  resigned["digest"] = certificate_digest(resigned);
  Validation w = validate_certificate(resigned);
  CHECK_FALSE(w.ok);
  CHECK(w.message.find("different") != std::string::npos);
}

TEST_CASE("sha256 of known strings") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("a missing right unit is reported as a hypothesis") {
  Json doc = Json::parse(R"({
    "format": "fmlab-instance/1",
    "funpairs": {"U": {"identity": {"standard": {"algebra": "row", "n": 1}}}},
    "homs": {"pi": {"identity": "row"}},
    "verify": {"lemma41": {"funpair": "U", "pi": "pi"}}
  })");
  Certificate c = verify_lemma("lemma41", doc);
  CHECK_FALSE(c.ok());
  bool named = false;
  for (const auto& f : c.report.failures()) named = named || f.rfind("hypothesis: ", 0) == 0;
  CHECK(named);
}

TEST_CASE("every lemma id has a verifier") {
  CHECK(lemma_ids().size() == 12);
  for (const auto& id : {"def31", "def32", "lem22", "lemma31", "prop22", "lemma41", "lemma42", "lemma51", "lemma61",
                         "lemma62", "cor51", "thm71"})
    CHECK(std::find(lemma_ids().begin(), lemma_ids().end(), id) != lemma_ids().end());
}
