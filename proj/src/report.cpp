#include "gaudin/report.hpp"

namespace gaudin {

void Report::fail(Json witness) {
  pass = false;
  ++failures;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

void Report::skip(const std::string& reason) {
  skipped = true;
  details["skipped"] = reason;
}

void Report::add(Report part) {
  if (!part.skipped && !part.pass) pass = false;
  parts.push_back(std::move(part));
}

Json Report::to_json() const {
  Json j;
  j["check"] = check;
  j["spec"] = spec;
  j["trials"] = trials;
  j["pass"] = pass;
  j["seed"] = seed;
  j["witnesses"] = witnesses;
  j["details"] = details;
  if (skipped) j["skipped"] = true;
  if (failures > static_cast<int>(witnesses.size())) j["failures"] = failures;
  if (!parts.empty()) {
    Json arr = Json::array();
    for (const auto& p : parts) arr.push_back(p.to_json());
    j["parts"] = std::move(arr);
  }
  return j;
}

std::string Report::summary() const {
  std::string s = check;
  if (!spec.empty()) s += " [" + spec + "]";
  s += skipped ? ": SKIP" : (pass ? ": PASS" : ": FAIL");
  return s;
}

}  // namespace gaudin
