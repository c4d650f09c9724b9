#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kac/campaign.hpp"

using namespace kac;

namespace {

CampaignConfig cfg(std::vector<std::string> checks, std::vector<std::string> algebras = {"group:Z2"},
                   std::vector<int> ms = {3}) {
  CampaignConfig c;
  c.checks = std::move(checks);
  c.algebras = std::move(algebras);
  c.ms = std::move(ms);
  return c;
}

}  // namespace

TEST(Campaign, CheckTableIsComplete) {
  EXPECT_EQ(check_ids().size(), 25u);
  for (const auto& id : check_ids()) EXPECT_FALSE(check_anchor(id).empty()) << id;
  EXPECT_EQ(check_anchor("depth-two"), "Theorem depth");
  EXPECT_TRUE(check_uses_m("k-m-axioms"));
  EXPECT_FALSE(check_uses_m("fourier"));
}

TEST(Campaign, NormalizeOrdersAndValidates) {
  auto c = normalize(cfg({"fourier", "kac-axioms", "fourier"}, {"group:Z2"}, {4, 3, 4}));
  EXPECT_EQ(c.checks, (std::vector<std::string>{"kac-axioms", "fourier"}));
  EXPECT_EQ(c.ms, (std::vector<int>{3, 4}));
  EXPECT_EQ(normalize(cfg({"all"})).checks, check_ids());
  EXPECT_THROW(normalize(cfg({"q-dims"}, {"group:Z2"}, {2})), ConfigError);
  EXPECT_NO_THROW(normalize(cfg({"fourier"}, {"group:Z2"}, {2})));
  EXPECT_THROW(normalize(cfg({"nope"})), ConfigError);
  EXPECT_THROW(normalize(cfg({"fourier"}, {"group:Z9"})), ConfigError);
  auto bad = cfg({"fourier"});
  bad.backend = "fast";
  EXPECT_THROW(normalize(bad), ConfigError);
}

TEST(Campaign, EmptyCampaignIsHeaderOnly) {
  auto r = run_campaign(cfg({}));
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.exit_code(), 0);
  auto j = nlohmann::json::parse(format_report(r, "json"));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_TRUE(j["records"].empty());
  EXPECT_EQ(j["summary"]["records"], 0);
}

TEST(Campaign, FullZ2RecordCountAndAnchors) {
  auto r = run_campaign(cfg({"all"}));
  ASSERT_EQ(r.records.size(), check_ids().size());
  for (size_t i = 0; i < r.records.size(); ++i) {
    EXPECT_EQ(r.records[i].id, check_ids()[i]);
    EXPECT_EQ(r.records[i].anchor, check_anchor(r.records[i].id));
    EXPECT_EQ(r.records[i].status, "pass") << r.records[i].id << ": " << r.records[i].items.failures();
  }
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Campaign, QDimsReportsThreeLevels) {
  auto r = run_campaign(cfg({"q-dims"}));
  ASSERT_EQ(r.records.size(), 1u);
  std::map<std::string, long long> d(r.records[0].dims.begin(), r.records[0].dims.end());
  EXPECT_EQ(d["dim_q1"], 2);
  EXPECT_EQ(d["dim_q2"], 16);
  EXPECT_EQ(d["dim_q3"], 128);
}

TEST(Campaign, BudgetSkipsInsteadOfFailing) {
  auto c = cfg({"q-dims", "k-m-axioms", "fourier"});
  c.max_dim = 16;
  auto r = run_campaign(c);
  ASSERT_EQ(r.records.size(), 3u);
  EXPECT_EQ(r.records[0].id, "fourier");
  EXPECT_EQ(r.records[0].status, "pass");
  EXPECT_EQ(r.records[1].id, "q-dims");
  EXPECT_EQ(r.records[1].status, "skipped-budget");
  EXPECT_EQ(r.records[2].id, "k-m-axioms");
  EXPECT_EQ(r.records[2].status, "skipped-budget");
  EXPECT_NE(r.records[2].note.find("32 > max-dim 16"), std::string::npos);
  EXPECT_EQ(r.exit_code(), 0);
}

TEST(Campaign, TightFloatToleranceFails) {
  auto c = cfg({"fourier"}, {"group:S3"});
  c.backend = "float";
  c.tolerance = 1e-300;
  auto r = run_campaign(c);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].status, "fail");
  EXPECT_GT(r.records[0].residual, 0.0);
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_NE(format_report(r, "text").find("fail  fourier"), std::string::npos);
  c.tolerance = 1e-9;
  EXPECT_EQ(run_campaign(c).records[0].status, "pass");
}

TEST(Campaign, FileAlgebraMatchesBuiltin) {
  auto path = std::string(KAC_DATA_DIR) + "/s3.kac";
  auto a = run_campaign(cfg({"kac-axioms", "double"}, {path}));
  auto b = run_campaign(cfg({"kac-axioms", "double"}, {"group:S3"}));
  ASSERT_EQ(a.records.size(), 2u);
  for (size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(a.records[i].status, "pass");
    EXPECT_EQ(a.records[i].dims, b.records[i].dims);
  }
}

TEST(Campaign, MalformedAlgebraFileIsConfigError) {
  auto path = std::filesystem::temp_directory_path() / "kac_bad.kac";
  {
    std::ifstream in(std::string(KAC_DATA_DIR) + "/s3.kac");
    std::stringstream s;
    s << in.rdbuf();
    std::string text = s.str();
    text.replace(text.find("\n3 4 ", text.find("antipode")), 5, "\n3 3 ");
    std::ofstream(path) << text;
  }
  EXPECT_THROW(normalize(cfg({"fourier"}, {path.string()})), ConfigError);
  std::filesystem::remove(path);
}

TEST(Campaign, ReportsAreDeterministic) {
  auto c = cfg({"k-m-axioms", "psi-iso"}, {"group:Z3"});
  c.exhaustive_limit = 0;
  c.seed = 3;
  auto a = format_report(run_campaign(c), "json");
  EXPECT_EQ(a, format_report(run_campaign(c), "json"));
  EXPECT_EQ(format_report(run_campaign(c), "text"), format_report(run_campaign(c), "text"));
  c.seed = 4;
  EXPECT_NE(a, format_report(run_campaign(c), "json"));
}

TEST(Campaign, EmitReportWritesFileAndRejectsBadPath) {
  auto r = run_campaign(cfg({"fourier"}));
  auto path = std::filesystem::temp_directory_path() / "kac_report_test.json";
  emit_report(r, "json", path.string());
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  EXPECT_EQ(s.str(), format_report(r, "json"));
  std::filesystem::remove(path);
  EXPECT_THROW(emit_report(r, "json", "/nonexistent/dir/x.json"), IoError);
  EXPECT_THROW(format_report(r, "yaml"), ConfigError);
}
