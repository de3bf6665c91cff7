#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cmlab::lab {

enum class Status { pass, fail, budget_exceeded };

std::string status_name(Status s);
Status parse_status(const std::string& s);

struct VerificationReport {
  std::string check_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Status status = Status::fail;
  std::string details;
  long long elapsed_ms = 0;
  /// Generators (or identities) that failed; must be empty on pass.
  std::vector<std::string> offending;

  bool passed() const { return status == Status::pass; }
};

/// Keys in schema order: check_id, params, status, details, elapsed_ms.
nlohmann::ordered_json to_json(const VerificationReport& r);
VerificationReport from_json(const nlohmann::ordered_json& j);

/// Runs `body`, timing it. BudgetExceeded becomes status budget_exceeded;
/// any other cmlab error becomes a fail carrying the message.
VerificationReport run_check(const std::string& check_id, nlohmann::ordered_json params,
                             const std::function<void(VerificationReport&)>& body);

}  // namespace cmlab::lab
