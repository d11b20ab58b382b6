#include "lsc/report.hpp"

#include <algorithm>

namespace lsc {

void CheckResult::record(std::vector<std::size_t> indices, const Element& value) {
  if (value.is_zero()) return;
  pass = false;
  residuals.push_back({std::move(indices), value.c});
}

void CheckResult::record(std::vector<std::size_t> indices, const Poly& value) {
  if (value.is_zero()) return;
  pass = false;
  residuals.push_back({std::move(indices), {value}});
}

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

CheckResult& Report::add(std::string name) {
  checks.push_back(CheckResult{std::move(name), true, {}});
  return checks.back();
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace lsc
