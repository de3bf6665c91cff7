#include "cmlab/lab/report.hpp"

#include "cmlab/errors.hpp"

namespace cmlab::lab {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::budget_exceeded:
      return "budget_exceeded";
  }
  return "fail";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "budget_exceeded") return Status::budget_exceeded;
  throw DomainError("unknown status '" + s + "'");
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["params"] = r.params;
  j["status"] = status_name(r.status);
  j["details"] = r.details;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

VerificationReport from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.check_id = j.at("check_id").get<std::string>();
  r.params = j.at("params");
  r.status = parse_status(j.at("status").get<std::string>());
  r.details = j.at("details").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<long long>();
  return r;
}

VerificationReport run_check(const std::string& check_id, nlohmann::ordered_json params,
                             const std::function<void(VerificationReport&)>& body) {
  VerificationReport r;
  r.check_id = check_id;
  r.params = std::move(params);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
    if (r.status == Status::pass && !r.offending.empty()) r.status = Status::fail;
  } catch (const BudgetExceeded&) {
    r.status = Status::budget_exceeded;
    r.details = "time budget exceeded";
    r.offending.clear();
  } catch (const Error& e) {
    r.status = Status::fail;
    r.details = e.what();
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return r;
}

}  // namespace cmlab::lab
