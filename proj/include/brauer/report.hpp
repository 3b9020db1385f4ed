#pragma once

#include "json.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace brauer {

struct CheckRecord {
  std::string id;
  std::string inputs;
  bool pass = false;
  std::string detail;
};

/// Ordered list of named checks produced by a verification suite.
struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> records;
  double wall_seconds = 0.0;

  void add(std::string id, std::string inputs, bool pass, std::string detail = {});
  void append(const VerificationReport& other);

  std::size_t passed() const;
  std::size_t failed() const { return records.size() - passed(); }
  bool ok() const { return failed() == 0; }

  nlohmann::json to_json(bool with_timing = false) const;
  std::string to_text(bool with_timing = false) const;
};

}  // namespace brauer
