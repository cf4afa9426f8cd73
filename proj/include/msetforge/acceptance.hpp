#pragma once

// The reproduction suite: one result line per criterion.

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace msetforge {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

struct AcceptanceOptions {
  unsigned threads = 1;
  std::set<int> only;  // empty means all
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "PASS [3] title: detail"
std::string format_result(const CriterionResult& r);

}  // namespace msetforge
