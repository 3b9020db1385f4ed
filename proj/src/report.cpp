#include "brauer/report.hpp"

#include <algorithm>
#include <sstream>

namespace brauer {

void VerificationReport::add(std::string id, std::string inputs, bool pass, std::string detail) {
  records.push_back({std::move(id), std::move(inputs), pass, std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
  wall_seconds += other.wall_seconds;
}

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; }));
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& r : records)
    checks.push_back({{"id", r.id}, {"inputs", r.inputs}, {"pass", r.pass}, {"detail", r.detail}});
  nlohmann::json j = {{"suite", suite},
                      {"checks", checks},
                      {"totals", {{"total", records.size()}, {"passed", passed()}, {"failed", failed()}}}};
  if (with_timing) j["wall_seconds"] = wall_seconds;
  return j;
}

std::string VerificationReport::to_text(bool with_timing) const {
  std::ostringstream out;
  for (const auto& r : records) {
    out << (r.pass ? "PASS " : "FAIL ") << r.id;
    if (!r.inputs.empty()) out << " [" << r.inputs << "]";
    if (!r.detail.empty()) out << " : " << r.detail;
    out << '\n';
  }
  out << "suite " << suite << ": " << passed() << "/" << records.size() << " passed";
  if (with_timing) out << " in " << wall_seconds << " s";
  out << '\n';
  return out.str();
}

}  // namespace brauer
