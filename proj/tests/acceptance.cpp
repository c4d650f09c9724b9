#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "kac/campaign.hpp"

using namespace kac;

namespace {

const std::vector<std::string> kBuiltins = {"group:Z2", "group:Z3",    "group:Z4", "group:Z2xZ2", "group:S3",
                                            "fn:Z2",    "fn:Z3",       "fn:Z4",    "fn:Z2xZ2",    "fn:S3"};

CampaignConfig config(std::vector<std::string> algebras, std::vector<int> ms, std::vector<std::string> checks,
                      const std::string& backend = "exact") {
  CampaignConfig c;
  c.algebras = std::move(algebras);
  c.ms = std::move(ms);
  c.checks = std::move(checks);
  c.backend = backend;
  c.max_dim = 1u << 16;
  return c;
}

long long dim_of(const CheckRecord& r, const std::string& key) {
  for (const auto& [k, v] : r.dims)
    if (k == key) return v;
  return -1;
}

std::string value_of(const CheckRecord& r, const std::string& key) {
  for (const auto& [k, v] : r.values)
    if (k == key) return v;
  return "";
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int n_of(const std::string& alg) { return alg == "group:Z2" ? 2 : alg == "group:Z3" ? 3 : 0; }

// problem is empty on success.
struct Outcome {
  std::string problem;
  std::string detail;
};

std::string all_pass(const std::vector<Report>& reps) {
  for (const auto& r : reps) {
    if (r.records.empty()) return "no records";
    for (const auto& rec : r.records)
      if (rec.status != "pass")
        return rec.id + " " + rec.algebra + (rec.m ? " m=" + std::to_string(rec.m) : "") + " " + rec.status + ": " +
               (rec.items.failures().empty() ? rec.note : rec.items.failures());
  }
  return "";
}

Outcome campaign(std::vector<CampaignConfig> cfgs, std::function<std::string(const CheckRecord&)> extra = {}) {
  std::vector<Report> reps;
  for (const auto& c : cfgs) reps.push_back(run_campaign(c));
  Outcome o{all_pass(reps), ""};
  size_t n = 0;
  for (const auto& r : reps) {
    n += r.records.size();
    if (extra && o.problem.empty())
      for (const auto& rec : r.records)
        if (auto p = extra(rec); !p.empty()) {
          o.problem = p;
          break;
        }
  }
  o.detail = std::to_string(n) + " records";
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> cs = {
      {1, "Kac axioms and integrals for all built-ins and duals", 5,
       [] { return campaign({config(kBuiltins, {3}, {"kac-axioms", "integrals"})}); }},
      {2, "F_{H*} F_H = S for all built-ins", 1, [] { return campaign({config(kBuiltins, {3}, {"fourier"})}); }},
      {3, "even chains up to length 6 over Z2, Z3 are matrix algebras", 30,
       [] {
         return campaign({config({"group:Z2", "group:Z3"}, {3}, {"matrixalg"})}, [](const CheckRecord& r) {
           for (int len : {2, 4, 6})
             if (dim_of(r, "center_dim_length_" + std::to_string(len)) != 1)
               return "missing length " + std::to_string(len) + " for " + r.algebra;
           return std::string();
         });
       }},
      {4, "finite-window commutants over Z2", 60,
       [] {
         return campaign({config({"group:Z2"}, {3}, {"commutants-lemma"})}, [](const CheckRecord& r) {
           return dim_of(r, "max_window_length") == 6 ? std::string() : std::string("windows below length 6");
         });
       }},
      {5, "S has dimension n^2 and is spanned by the parametrized elements", 30,
       [] {
         return campaign({config({"group:Z2", "group:Z3"}, {3}, {"s-space"})}, [](const CheckRecord& r) {
           long long n = n_of(r.algebra);
           return dim_of(r, "dim_s") == n * n ? std::string() : "dim S wrong for " + r.algebra;
         });
       }},
      {6, "dim Q^m_1 = n^(m-2), dim Q^m_2 = n^(2(m-1)) for {Z2,Z3} x {3,4}", 120,
       [] {
         return campaign({config({"group:Z2", "group:Z3"}, {3, 4}, {"q-dims"})}, [](const CheckRecord& r) {
           long long n = n_of(r.algebra);
           if (dim_of(r, "dim_q1") != ipow(n, r.m - 2) || dim_of(r, "dim_q2") != ipow(n, 2 * (r.m - 1)))
             return "dimension mismatch for " + r.algebra + " m=" + std::to_string(r.m);
           return std::string();
         });
       }},
      {7, "alpha fixed space equals Q^3_k, k = 1,2,3 over Z2", 120,
       [] {
         return campaign({config({"group:Z2"}, {3}, {"alpha-equivalence"})}, [](const CheckRecord& r) {
           return dim_of(r, "dim_q3") > 0 ? std::string() : std::string("level 3 not reached");
         });
       }},
      {8, "closed-form conditional expectation is the trace projection", 120,
       [] { return campaign({config({"group:Z2"}, {3}, {"cond-exp-lemma-exp"})}); }},
      {9, "depth two: Z2 m=3 exact, m=4 float", 600,
       [] {
         auto check = [](const CheckRecord& r) {
           return dim_of(r, "dim_basic") == dim_of(r, "dim_q3") ? std::string() : std::string("basic dim mismatch");
         };
         return campaign({config({"group:Z2"}, {3}, {"depth-two"}), config({"group:Z2"}, {4}, {"depth-two"}, "float")},
                         check);
       }},
      {10, "Markov trace of modulus n^m, Z2 m=3,4", 60,
       [] { return campaign({config({"group:Z2"}, {3, 4}, {"markov"})}); }},
      {11, "D(H), D(H)* dual; H* (x) H* form of D(H)*; nu onto *Q2", 300,
       [] {
         return campaign({config(kBuiltins, {3}, {"double", "double-dual"}),
                          config({"group:Z2", "group:Z3"}, {3}, {"lemma-dr", "nu-iso"})});
       }},
      {12, "omega_R = omega_L scalar, omega = 1 for {Z2,Z3} x {3,4}", 60,
       [] {
         return campaign({config({"group:Z2", "group:Z3"}, {3, 4}, {"omega"})}, [](const CheckRecord& r) {
           return value_of(r, "z_r_scalar") == std::to_string(ipow(n_of(r.algebra), r.m - 2))
                      ? std::string()
                      : "z_R scalar " + value_of(r, "z_r_scalar");
         });
       }},
      {13, "K_m weak Hopf axioms: Z2 m=3,4 exhaustive, Z3 m=3 sampled", 600,
       [] {
         std::vector<std::string> ids = {"k-m-axioms", "counit", "psi-iso", "separability", "antipode-involutive"};
         auto z3 = config({"group:Z3"}, {3}, ids);
         z3.exhaustive_limit = 0;
         z3.samples = 500;
         return campaign({config({"group:Z2"}, {3, 4}, ids), z3}, [](const CheckRecord& r) {
           if (r.id != "k-m-axioms") return std::string();
           bool exhaustive = r.algebra == "group:Z2";
           if (value_of(r, "mode") != (exhaustive ? "exhaustive" : "sampled")) return "wrong mode for " + r.algebra;
           if (!exhaustive)
             for (const auto& i : r.items.items)
               if (i.name != "weak_unit" && i.checked < 500) return "fewer than 500 samples for " + i.name;
           return std::string();
         });
       }},
      {14, "comultiplication cross-check, Z2 m=3,4", 300,
       [] { return campaign({config({"group:Z2"}, {3, 4}, {"comult-crosscheck"})}); }},
      {15, "identical config and seed give byte-identical reports", 120,
       [] {
         CampaignConfig def;
         auto sampled = config({"group:Z3"}, {3}, {"k-m-axioms"});
         sampled.exhaustive_limit = 0;
         sampled.seed = 7;
         Outcome o;
         for (const auto& c : {def, sampled}) {
           auto a = format_report(run_campaign(c), "json");
           auto b = format_report(run_campaign(c), "json");
           if (a != b) o.problem = "reports differ";
           o.detail += (o.detail.empty() ? "" : ", ") + std::to_string(a.size()) + " bytes";
         }
         return o;
       }},
  };

  int failed = 0;
  for (const auto& c : cs) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.problem = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.problem.empty() && s > c.limit_s) o.problem = "over time limit";
    bool pass = o.problem.empty();
    failed += !pass;
    std::printf("%s  %2d  %s  (%.1f s, limit %.0f s; %s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), s,
                c.limit_s, o.detail.c_str(), pass ? "" : "  ", o.problem.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(cs.size()) - failed, cs.size());
  return failed == 0 ? 0 : 1;
}
