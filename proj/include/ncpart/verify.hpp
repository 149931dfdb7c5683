#pragma once

#include "ncpart/common.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace ncpart {

// Small runs the ranges every release must pass; Full widens them.
enum class Scale { Small, Full };

struct SuiteResult {
  std::string name;
  std::string title;
  bool passed = true;
  long checks = 0;
  std::string counterexample;  // first failing case
  double seconds = 0;

  nlohmann::json to_json() const;
};

// Names in run order: decomp, relations, blocks, collapses, fm, intervals,
// exceptional, bijections, inversion.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, Scale scale, const Config& cfg = {});

}  // namespace ncpart
