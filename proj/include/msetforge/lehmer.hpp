#pragma once

// Lehmer sequences u_n(gamma, delta) handled entirely through the integer
// invariants R = (gamma + delta)^2 and Q = gamma * delta.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "msetforge/common.hpp"
#include "msetforge/nt_core.hpp"

namespace msetforge {

class LehmerParams {
 public:
  /// Throws DomainError unless R, Q are nonzero and coprime and
  /// gamma/delta is not a root of unity.
  LehmerParams(Int R, Int Q);

  const Int& R() const { return R_; }
  const Int& Q() const { return Q_; }
  /// (gamma^2 - delta^2)^2 = R (R - 4Q)
  Int discriminant_product() const { return R_ * (R_ - 4 * Q_); }

  static bool valid(const Int& R, const Int& Q);

 private:
  Int R_;
  Int Q_;
};

/// u_n, exact. Uses u_{n+4} = (R - 2Q) u_{n+2} - Q^2 u_n.
Int lehmer_u(const LehmerParams& params, std::uint64_t n);

/// All of u_0 .. u_n.
std::vector<Int> lehmer_u_prefix(const LehmerParams& params, std::uint64_t n);

/// u_n mod M in [0, M), logarithmic in n.
Int lehmer_u_mod(const LehmerParams& params, const Int& n, const Int& M);

/// v_n = (gamma^n + delta^n) / (gamma + delta) for odd n.
Int lehmer_v_odd(const LehmerParams& params, std::uint64_t n);

/// Phi_n(gamma, delta) for n >= 3, as prod_{d | n} u_d^mu(n/d).
Int phi_value(const LehmerParams& params, std::uint64_t n);

/// Least k >= 1 with p | u_k, or nullopt when p | Q.
std::optional<Int> rank_of_appearance(const LehmerParams& params, const Int& p,
                                      const FactorBudget& budget = {});

enum class PrimitivityReason {
  primitive,
  divides_q,              // p never divides a term
  divides_discriminant,   // p | (gamma^2 - delta^2)^2
  rank_mismatch,
};

std::string to_string(PrimitivityReason r);

struct PrimitivityReport {
  std::uint64_t n = 0;
  Int prime;
  bool is_primitive = false;
  std::optional<Int> rank;
  PrimitivityReason reason = PrimitivityReason::rank_mismatch;
};

PrimitivityReport is_primitive_divisor(const LehmerParams& params, const Int& p, std::uint64_t n,
                                       const FactorBudget& budget = {});

/// Primitive prime divisors of u_n. Every prime factor of the stripped
/// cofactor is primitive; `unfactored` lists composite pieces of it that
/// the budget could not split.
struct PrimitiveDivisors {
  std::uint64_t n = 0;
  Int phi;          // Phi_n(gamma, delta)
  Int cofactor;     // primitive part of phi, up to sign
  std::set<Int> primes;
  std::vector<Int> unfactored;

  bool complete() const { return unfactored.empty(); }
  /// Some primitive divisor exists (|cofactor| > 1), factored or not.
  bool exists() const { return abs(cofactor) > 1; }
};

PrimitiveDivisors primitive_divisors(const LehmerParams& params, std::uint64_t n,
                                     const FactorBudget& budget = {});

/// Whether u_n has a primitive divisor. With `use_fast_path`, Q = 1 and n
/// outside {1, 2, 3, 4, 5, 6, 10, 12} answers true without computation.
bool has_primitive_divisor(const LehmerParams& params, std::uint64_t n, bool use_fast_path = true,
                           const FactorBudget& budget = {});

}  // namespace msetforge
