#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "permutoria/common.hpp"

namespace permutoria {

struct SuiteOptions {
  int box_rows = 4;
  int box_cols = 4;
  int letters = 4;
  int n = -1;  // size override; -1 keeps the suite default
  std::uint64_t seed = 0;
};

struct CheckTally {
  Int passed = 0;
  Int failed = 0;
};

struct SuiteReport {
  std::string suite;
  std::string universe;
  Int passed = 0;
  Int failed = 0;
  std::string first_counterexample;
  bool conjecture = false;
  double seconds = 0;
  std::map<std::string, CheckTally> checks;  // per named property
  std::vector<std::string> notes;

  bool ok() const { return failed == 0; }
  // Counts one instance of a named property; the message is only built on failure.
  void record(const std::string& check, bool ok, const std::function<std::string()>& example);
  void note(std::string text) { notes.push_back(std::move(text)); }
};

struct SuiteInfo {
  std::string name;
  std::string title;
  bool conjecture = false;
  std::function<void(const SuiteOptions&, SuiteReport&)> run;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo& find_suite(const std::string& name);
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

std::string report_to_json(const SuiteReport& r, bool with_checks = true);
std::string report_to_text(const SuiteReport& r);

}  // namespace permutoria
