#include "albertkit/report.hpp"

#include <algorithm>

namespace albertkit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

Report::Report(std::string command) : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

void Report::check(std::string name, std::string anchor, bool ok, json data) {
  assertions_.push_back({std::move(name), std::move(anchor), ok ? Verdict::pass : Verdict::fail, std::move(data)});
}

void Report::skip(std::string name, std::string anchor, json data) {
  assertions_.push_back({std::move(name), std::move(anchor), Verdict::skipped, std::move(data)});
}

bool Report::failed() const {
  return std::any_of(assertions_.begin(), assertions_.end(),
                     [](const Assertion& a) { return a.verdict == Verdict::fail; });
}

void Report::finish() {
  if (elapsed_ms_ >= 0) return;
  elapsed_ms_ = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count());
}

json Report::to_json() const {
  json j = results_;
  j["command"] = command_;
  j["parameters"] = parameters_;
  j["assertions"] = json::array();
  for (const auto& a : assertions_) {
    j["assertions"].push_back({{"name", a.name}, {"paper_anchor", a.anchor}, {"verdict", to_string(a.verdict)}, {"data", a.data}});
  }
  j["elapsed_ms"] = std::max(elapsed_ms_, 0L);
  return j;
}

std::string Report::summary() const {
  std::size_t pass = 0, fail = 0, skipped = 0;
  std::string lines;
  for (const auto& a : assertions_) {
    switch (a.verdict) {
      case Verdict::pass: ++pass; break;
      case Verdict::fail: ++fail; break;
      case Verdict::skipped: ++skipped; break;
    }
    lines += "  [" + std::string(to_string(a.verdict)) + "] " + a.name + ": " + a.anchor + "\n";
  }
  return command_ + ": " + std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " +
         std::to_string(skipped) + " skipped (" + std::to_string(std::max(elapsed_ms_, 0L)) + " ms)\n" + lines;
}

}  // namespace albertkit
