#pragma once

#include <string>
#include <vector>

#include "fmlab/json_io.hpp"

namespace fmlab {

inline constexpr const char* kCertificateFormat = "fmlab-certificate/1";

// Lemma identifiers accepted by verify_lemma.
const std::vector<std::string>& lemma_ids();

// Output of one verifier. A hypothesis that fails is recorded as a failing
// check named "hypothesis: ..." rather than thrown.
struct Certificate {
  std::string lemma;
  Json instance;  // the input document, embedded verbatim
  Json data;      // witnesses
  Report report;
  bool ok() const { return report.ok(); }
};

// Throws ParseError on malformed or unresolvable input and on unknown lemmas.
Certificate verify_lemma(const std::string& lemma, const Json& instance);

// Versioned document with a SHA-256 digest of the canonical dump of every other field.
Json to_json(const Certificate& c);

std::string sha256_hex(const std::string& bytes);
std::string certificate_digest(const Json& cert);

struct Validation {
  bool ok = false;
  bool parsed = true;  // false when the document itself is malformed
  std::string message;
};

// Digest intact, the embedded instance re-verifies to a byte-identical
// certificate, and every check passes.
Validation validate_certificate(const Json& cert);

// Certificates are re-verified; instance files have every named object built
// and validated.
Validation validate_document(const Json& doc);

}  // namespace fmlab
