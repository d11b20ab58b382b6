#pragma once

#include <string>
#include <vector>

#include "lsc/conformal.hpp"

namespace lsc {

/// A nonzero residual found by a checker, tagged with the basis tuple it was
/// evaluated on.
struct Residual {
  std::vector<std::size_t> indices;
  std::vector<Poly> value;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::vector<Residual> residuals;

  void record(std::vector<std::size_t> indices, const Element& value);
  void record(std::vector<std::size_t> indices, const Poly& value);
};

/// Several named sub-checks; passes iff all pass.
struct Report {
  std::vector<CheckResult> checks;

  bool pass() const;
  CheckResult& add(std::string name);
  const CheckResult* find(const std::string& name) const;
};

}  // namespace lsc
