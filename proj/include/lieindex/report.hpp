#pragma once

// Outcome of one theorem check: a status, the first failure (if any) and
// the numbers the check computed.

#include <json.hpp>
#include <string>

namespace lieindex {

using Json = nlohmann::json;

enum class Status { Pass, Fail, Skipped, Reported };

const char* to_string(Status s);

struct CheckReport {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  Json values = Json::object();

  explicit CheckReport(std::string n = {}) : name(std::move(n)) {}

  // Records an asserted condition; the first failure sets the detail.
  bool expect(bool ok, const std::string& what);
  // Records a conjecture-level comparison; never changes the status.
  void report(const std::string& key, bool holds);
  bool failed() const { return status == Status::Fail; }
  Json to_json() const;
};

}  // namespace lieindex
