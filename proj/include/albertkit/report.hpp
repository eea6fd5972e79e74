#pragma once

// Machine-readable verification reports: each assertion names the statement it
// checks and carries a pass/fail/skipped verdict plus supporting data.

#include <chrono>
#include <string>
#include <vector>

#include "albertkit/serialize.hpp"

namespace albertkit {

enum class Verdict { pass, fail, skipped };

const char* to_string(Verdict v);

struct Assertion {
  std::string name;
  std::string anchor;  // the claim being verified, in words
  Verdict verdict = Verdict::skipped;
  json data = json::object();
};

class Report {
 public:
  explicit Report(std::string command);

  json& parameters() { return parameters_; }
  // Command-specific result fields, merged into the top level of the JSON.
  json& results() { return results_; }

  void check(std::string name, std::string anchor, bool ok, json data = json::object());
  void skip(std::string name, std::string anchor, json data = json::object());

  const std::vector<Assertion>& assertions() const { return assertions_; }
  bool failed() const;
  int exit_code() const { return failed() ? 1 : 0; }

  // Stops the clock; later calls keep the first reading.
  void finish();
  long elapsed_ms() const { return elapsed_ms_; }

  json to_json() const;
  std::string summary() const;

 private:
  std::string command_;
  json parameters_ = json::object();
  json results_ = json::object();
  std::vector<Assertion> assertions_;
  std::chrono::steady_clock::time_point start_;
  long elapsed_ms_ = -1;
};

}  // namespace albertkit
