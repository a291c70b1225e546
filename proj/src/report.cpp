#include "lieindex/report.hpp"

namespace lieindex {

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::Reported: return "reported";
  }
  return "fail";
}

bool CheckReport::expect(bool ok, const std::string& what) {
  if (!ok && status != Status::Fail) {
    status = Status::Fail;
    detail = what;
  }
  return ok;
}

void CheckReport::report(const std::string& key, bool holds) {
  values[key] = holds;
}

Json CheckReport::to_json() const {
  Json j = values;
  j["status"] = to_string(status);
  j["detail"] = detail;
  return j;
}

}  // namespace lieindex
