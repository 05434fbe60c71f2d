#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace g2hom {

using Json = nlohmann::ordered_json;

/// One named pass/fail check with an optional counterexample.
struct Check {
  std::string name;
  bool passed = false;
  Json witness;  // null unless the check failed or carries data worth keeping

  Json to_json() const {
    Json j;
    j["check"] = name;
    j["status"] = passed ? "pass" : "fail";
    if (!witness.is_null()) j["witness"] = witness;
    return j;
  }
};

struct Report {
  std::vector<Check> checks;
  Json extra;  // command-specific payload merged into the JSON body

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return &c;
    return nullptr;
  }
  void add(std::string name, bool ok, Json witness = Json()) {
    checks.push_back(Check{std::move(name), ok, std::move(witness)});
  }

  Json to_json() const {
    Json j;
    j["status"] = passed() ? "pass" : "fail";
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(c.to_json());
    j["checks"] = cs;
    if (extra.is_object())
      for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    return j;
  }
};

}  // namespace g2hom
