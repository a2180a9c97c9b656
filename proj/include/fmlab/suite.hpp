#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fmlab/certificate.hpp"

namespace fmlab {

// Seeded source of small integers. mt19937_64 output is fixed by the standard,
// and reduction is done here so results do not depend on the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : g_() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[static_cast<size_t>(below(v.size()))]; }

 private:
  std::mt19937_64 g_;
};

// Representation of G on Q^n built from trivial, sign, augmentation and regular
// blocks, conjugated by a random unimodular matrix.
std::vector<Mat> random_coord_rep(Rng& rng, const FinGroup& g, int n);

// T (rho_g (x) alpha_g) T^-1 for a random unipotent T in M_n(A).
std::vector<Mat> random_semilinear_action(Rng& rng, const AlgebraPtr& a, int n);

// Random unimodular n x n matrix and a random small algebra element.
Mat random_unimodular(Rng& rng, int n);
Vec random_element(Rng& rng, int d);

// Functional extensions out of (A^n, rho) into a standard module: a change of
// basis, an inclusion into a larger A^N, or a shifted inclusion whose U* picks
// up a term vanishing on the image.
FunPair random_extension(Rng& rng, const AlgebraPtr& a, int n, const std::vector<Mat>& rho);

enum class SuiteSize { smoke, standard, deep };
SuiteSize suite_size_from_string(const std::string& s);
std::string to_string(SuiteSize s);

struct SuiteCase {
  std::string lemma;
  std::string name;
  Json instance;
};

// Instances for every lemma verifier. Deterministic in (seed, size).
std::vector<SuiteCase> generate_suite(std::uint64_t seed, SuiteSize size);

// The (A, n, action) modules the suite draws from, as inline module JSON.
std::vector<Json> suite_modules(std::uint64_t seed, SuiteSize size);

struct SuiteOutcome {
  std::string lemma, name;
  bool passed = false;
  bool hypothesis_unmet = false;  // only "hypothesis: ..." checks failed
  bool error = false;             // the verifier threw
  std::string message;
  Json certificate;
};

struct SuiteResult {
  std::vector<SuiteOutcome> outcomes;
  Json summary;       // per lemma: instances, passed, hypothesis_unmet, failed
  std::string table;  // the same as text
  bool ok() const;
};

// Thread cap from FMLAB_THREADS, else the hardware concurrency.
unsigned thread_count();

// Runs every case on up to `threads` workers; outcomes keep the case order.
SuiteResult run_suite(const std::vector<SuiteCase>& cases, unsigned threads);

}  // namespace fmlab
