#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace kac {

struct AxiomResult {
  std::string name;
  bool pass = true;
  double residual = 0;  // largest absolute coordinate of the defect
  long checked = 0;     // number of instances evaluated
};

struct AxiomReport {
  std::vector<AxiomResult> items;

  void add(const std::string& name, bool pass, double residual, long checked) {
    items.push_back({name, pass, residual, checked});
  }
  bool all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const AxiomResult& r) { return r.pass; });
  }
  const AxiomResult* find(const std::string& name) const {
    for (const auto& r : items)
      if (r.name == name) return &r;
    return nullptr;
  }
  bool passed(const std::string& name) const {
    const AxiomResult* r = find(name);
    return r && r->pass;
  }
  std::string failures() const {
    std::string s;
    for (const auto& r : items)
      if (!r.pass) s += (s.empty() ? "" : ", ") + r.name;
    return s;
  }
};

}  // namespace kac
