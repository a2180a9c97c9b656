#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fmlab {

// Raised when an operation is called outside its stated preconditions.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the JSON layer on malformed input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Check {
  std::string name;
  bool ok = true;
  std::string detail;
};

// Ordered list of named checks. Passing means every check passed.
class Report {
 public:
  bool check(const std::string& name, bool ok, const std::string& detail = {}) {
    checks_.push_back({name, ok, detail});
    return ok;
  }
  void merge(const std::string& prefix, const Report& other) {
    for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.ok, c.detail});
  }
  bool ok() const {
    for (const auto& c : checks_)
      if (!c.ok) return false;
    return true;
  }
  const std::vector<Check>& checks() const { return checks_; }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks_)
      if (!c.ok) out.push_back(c.detail.empty() ? c.name : c.name + ": " + c.detail);
    return out;
  }
  std::string summary() const {
    auto f = failures();
    if (f.empty()) return "ok (" + std::to_string(checks_.size()) + " checks)";
    std::string s = std::to_string(f.size()) + " failed:";
    for (const auto& x : f) s += "\n  " + x;
    return s;
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace fmlab
