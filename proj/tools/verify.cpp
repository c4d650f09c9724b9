#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "kac/campaign.hpp"

int main(int argc, char** argv) {
  kac::CampaignConfig cfg;
  std::string report = "-", format = "json";
  bool list = false;

  CLI::App app{"Verification campaigns for Kac algebras, their doubles, relative commutants and K_m"};
  app.add_option("--algebra", cfg.algebras, "Builtin name (group:Z2, fn:S3, ...) or structure-constant file; repeatable")
      ->capture_default_str();
  app.add_option("--m", cfg.ms, "Tower parameter m > 2; repeatable")->capture_default_str();
  app.add_option("--checks", cfg.checks, "Check ids, comma separated, or all")->delimiter(',')->capture_default_str();
  app.add_option("--backend", cfg.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance, "Residual threshold for the float backend")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
  app.add_option("--max-dim", cfg.max_dim, "Largest ambient dimension a check may build")->capture_default_str();
  app.add_option("--exhaustive-limit", cfg.exhaustive_limit, "Weak Hopf axioms are exhaustive up to this dimension")
      ->capture_default_str();
  app.add_option("--samples", cfg.samples, "Samples per weak Hopf axiom above the exhaustive limit")->capture_default_str();
  app.add_option("--report", report, "Output path, - for stdout")->capture_default_str();
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_flag("--list-checks", list, "Print check ids with their anchors and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (list) {
    for (const auto& id : kac::check_ids())
      std::cout << id << (kac::check_uses_m(id) ? "  (per m)" : "") << "  [" << kac::check_anchor(id) << "]\n";
    return 0;
  }

  try {
    auto r = kac::run_campaign(cfg);
    kac::emit_report(r, format, report);
    if (report != "-")
      std::fprintf(stderr, "%zu pass, %zu fail, %zu skipped-budget\n", r.count("pass"), r.count("fail"),
                   r.count("skipped-budget"));
    return r.exit_code();
  } catch (const kac::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const kac::IoError& e) {
    std::fprintf(stderr, "io error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
}
