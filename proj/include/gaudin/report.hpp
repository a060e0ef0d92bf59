#pragma once

// Structured verification reports: {check, spec, trials, pass, witnesses[], seed, details}.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace gaudin {

using Json = nlohmann::json;

struct Report {
  std::string check;
  std::string spec;
  int trials = 0;
  bool pass = true;
  /// A skipped check carries a reason in details["skipped"] and does not fail its parent.
  bool skipped = false;
  std::uint64_t seed = 0;
  std::vector<Json> witnesses;
  /// Failures beyond the stored witnesses are only counted.
  int failures = 0;
  Json details = Json::object();
  std::vector<Report> parts;

  static constexpr std::size_t kMaxWitnesses = 8;

  Report() = default;
  explicit Report(std::string check_name, std::string spec_name = "")
      : check(std::move(check_name)), spec(std::move(spec_name)) {}

  void fail(Json witness);
  void skip(const std::string& reason);
  /// Appends a sub-report; the parent passes only if every non-skipped part passes.
  void add(Report part);

  Json to_json() const;
  std::string summary() const;
};

}  // namespace gaudin
