#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kac/report.hpp"

namespace kac {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CampaignConfig {
  std::vector<std::string> algebras = {"group:Z2"};  // builtin names or structure-constant files
  std::vector<int> ms = {3};
  std::vector<std::string> checks = {"all"};
  std::string backend = "exact";  // exact | float
  double tolerance = 1e-9;
  uint64_t seed = 1;
  size_t max_dim = 16384;
  size_t exhaustive_limit = 256;  // weak Hopf axioms: exhaustive up to this dimension
  size_t samples = 500;           // seeded samples per axiom above it
};

struct CheckRecord {
  std::string id, anchor, algebra;
  int m = 0;  // 0 for checks that do not depend on m
  std::string status;  // pass | fail | skipped-budget
  std::vector<std::pair<std::string, long long>> dims;
  std::vector<std::pair<std::string, std::string>> values;
  double residual = 0;
  std::string note;
  AxiomReport items;
};

struct Report {
  static constexpr int schema_version = 1;
  CampaignConfig config;
  std::vector<CheckRecord> records;

  size_t count(const std::string& status) const;
  int exit_code() const { return count("fail") == 0 ? 0 : 1; }
};

// Check ids in report order.
const std::vector<std::string>& check_ids();
bool check_uses_m(const std::string& id);
const std::string& check_anchor(const std::string& id);

// Expands "all", validates ids, m values, backend and algebras; throws ConfigError.
CampaignConfig normalize(CampaignConfig cfg);

Report run_campaign(const CampaignConfig& cfg);

// format: json | text. Output depends only on the report, so equal configs give equal bytes.
std::string format_report(const Report& r, const std::string& format);
void emit_report(const Report& r, const std::string& format, const std::string& path);

}  // namespace kac
