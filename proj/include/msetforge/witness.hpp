#pragma once

// Membership certificates for quadratic seeds f = X^2 - tX + c, c = +-1:
// the mapping to Lehmer parameters, the equivalent criteria, and witness
// construction.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "msetforge/lehmer.hpp"
#include "msetforge/nt_core.hpp"
#include "msetforge/polycyc.hpp"
#include "msetforge/witness_record.hpp"

namespace msetforge {

class QuadraticSeed {
 public:
  /// Throws DomainError unless c = +-1 and alpha/beta is not a root of
  /// unity (t != 0 for c = -1, |t| >= 3 for c = +1).
  QuadraticSeed(Int t, int c);

  const Int& t() const { return t_; }
  int c() const { return c_; }
  /// X^2 - tX + c
  IntPoly f() const;
  /// (alpha - beta)^2 = t^2 - 4c
  Int discriminant() const { return t_ * t_ - 4 * c_; }

 private:
  Int t_;
  int c_;
};

struct Theorem2Mapping {
  LehmerParams params;
  int c;

  /// Lehmer index attached to m: m / gcd(m, 2) for c = -1, m for c = +1.
  std::uint64_t n_of_m(std::uint64_t m) const;
};

Theorem2Mapping mapping(const QuadraticSeed& seed);

/// p | Res(f, Phi_m) and p = 1 mod m.
bool criterion_resultant(const QuadraticSeed& seed, std::uint64_t m, const Int& p);

/// p is a primitive divisor of u_{n(m)} and p = 1 mod m.
bool condition2(const QuadraticSeed& seed, std::uint64_t m, const Int& p, const FactorBudget& budget = {});

enum class SufficientRoute { cond3, cond4, cond5, none };
const char* to_string(SufficientRoute r);

/// First of the three sufficient conditions that holds literally.
SufficientRoute sufficient_route(const QuadraticSeed& seed, std::uint64_t m, const Int& p,
                                 const FactorBudget& budget = {});

/// Roots of f modulo a prime p, ascending.
std::vector<Int> roots_mod_p(const QuadraticSeed& seed, const Int& p);

/// Smallest a in [0, p) with f(a) = 0 mod p and ord_p(a) = m.
/// Throws InvariantViolation when none exists.
Int find_a(const QuadraticSeed& seed, std::uint64_t m, const Int& p, const FactorBudget& budget = {});

struct NotCovered {
  std::string reason;
  bool budget_exhausted = false;
};

using WitnessOutcome = std::variant<Witness, NotCovered>;

/// Throws DomainError when f does not divide g.
WitnessOutcome find_witness(const QuadraticSeed& seed, const IntPoly& g, std::uint64_t m,
                            const FactorBudget& budget = {});

struct ZsigmondyResult {
  std::optional<Int> prime;
  std::string exception;  // set when no prime exists
};

/// A prime p with ord_p(a) = m, or the name of the exceptional case.
/// Throws DomainError for a in {-1, 0, 1} or m = 0.
ZsigmondyResult zsigmondy_witness(const Int& a, std::uint64_t m, const FactorBudget& budget = {});

/// Witness for m from the linear factor X - a of g (route zsigmondy).
WitnessOutcome find_linear_witness(const Int& a, const IntPoly& g, std::uint64_t m,
                                   const FactorBudget& budget = {});

struct EquivalenceReport {
  bool brute_force = false;  // some root a of f mod p has order m
  bool lehmer = false;       // condition2
  bool agree() const { return brute_force == lehmer; }
};

/// Compares the residue scan against the Lehmer criterion for one (m, p).
EquivalenceReport equivalence_harness(const QuadraticSeed& seed, std::uint64_t m, const Int& p,
                                      const FactorBudget& budget = {});

}  // namespace msetforge
