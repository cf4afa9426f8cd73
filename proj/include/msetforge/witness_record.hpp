#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msetforge/common.hpp"
#include "msetforge/polycyc.hpp"

namespace msetforge {

enum class WitnessRoute { cond3, cond4, cond5, resultant, zsigmondy };

const char* to_string(WitnessRoute r);
/// Throws DomainError on an unknown name.
WitnessRoute parse_route(const std::string& name);

struct Check {
  std::string name;
  bool ok = false;
};

/// Certificate that m is the number of residues of the recurrence with
/// characteristic polynomial g and initial terms 1, a, ..., a^(r-1) mod p.
struct Witness {
  std::uint64_t m = 0;
  Int p;
  Int a;
  IntPoly g;
  WitnessRoute route = WitnessRoute::resultant;
  std::vector<Check> checks;

  bool all_checks_pass() const;
};

}  // namespace msetforge
