#pragma once

// Integer number-theory kernel: primality, factorization, arithmetic
// functions, symbols and multiplicative orders.

#include <cstdint>
#include <optional>
#include <vector>

#include "msetforge/common.hpp"

namespace msetforge {

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// value = sign * prod prime^exponent, primes strictly increasing.
struct Factorization {
  Int value;
  int sign = 1;
  std::vector<PrimePower> factors;

  Int product() const;
  std::vector<Int> primes() const;
};

/// Work limit for the rho stage of factorize().
struct FactorBudget {
  std::uint64_t rho_iterations = 2'000'000;

  /// Default budget, overridden by MSETFORGE_FACTOR_BUDGET when set.
  static FactorBudget from_environment();
};

/// Outcome of a budgeted factorization. When `complete` is false,
/// `unfactored` holds the composite cofactors the budget could not split;
/// `partial` then lists only the primes that were found.
struct FactorResult {
  Factorization partial;
  std::vector<Int> unfactored;

  bool complete() const { return unfactored.empty(); }
  /// Returns the factorization or throws DomainError if incomplete.
  const Factorization& value() const&;
  Factorization value() &&;
};

struct SquarefreeSplit {
  Int d0;  // squarefree, carries the sign of the input
  Int d1;  // >= 1
};

/// Strong-pseudoprime test: deterministic below 2^64, 40 seeded random
/// rounds above. Operates on |n|.
bool is_prime(const Int& n);

/// Trial division to 10^6 followed by Brent-Pollard rho.
/// Throws DomainError for n == 0.
FactorResult factorize(const Int& n, const FactorBudget& budget = {});

/// n = d0 * d1^2 with d0 squarefree. Throws if factoring does not finish.
SquarefreeSplit squarefree_split(const Int& n, const FactorBudget& budget = {});

/// True iff n != 0 and no square of a prime divides n.
bool is_squarefree(const Int& n, const FactorBudget& budget = {});

int moebius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Factorization of a machine-sized positive integer by trial division.
std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Legendre symbol (a/p). Throws DomainError unless p is an odd prime.
int legendre(const Int& a, const Int& p);

/// Least k >= 1 with a^k = 1 (mod M). Throws DomainError if gcd(a, M) != 1
/// or M < 2. Scans directly for M < 10^6, otherwise reduces the Carmichael
/// exponent of M.
Int mult_order(const Int& a, const Int& M, const FactorBudget& budget = {});

/// Square root of a modulo an odd prime p (Tonelli-Shanks), or nullopt if
/// a is a non-residue. Result lies in [0, p).
std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p);

/// Removes from n every prime factor it shares with `support`.
Int strip_common_factors(Int n, const Int& support);

/// Primes below 10^6, computed once.
const std::vector<std::uint32_t>& small_primes();

}  // namespace msetforge
