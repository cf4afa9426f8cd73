#pragma once

// Aurifeuillian identities Phi_n(X, Y) = F^2 - k (XY)^q G^2, the
// common-divisor check on their values and the sum-of-two-squares split of
// Phi_l(gamma, delta).

#include <cstdint>
#include <vector>

#include "msetforge/common.hpp"
#include "msetforge/lehmer.hpp"
#include "msetforge/polycyc.hpp"

namespace msetforge {

/// Homogeneous polynomial in X, Y; coeffs[i] multiplies X^i Y^(degree - i).
class HomogPoly {
 public:
  HomogPoly() = default;
  HomogPoly(std::size_t degree, std::vector<Int> coeffs);
  /// Homogenization of f to the given degree (>= deg f).
  static HomogPoly homogenize(const IntPoly& f, std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  /// Dehomogenized form f(X, 1).
  IntPoly dehomogenize() const { return IntPoly(coeffs_); }

  /// F(Y, X)
  HomogPoly swapped() const;
  /// +1 symmetric, -1 antisymmetric, 0 neither.
  int symmetry_type() const;
  Int evaluate(const Int& x, const Int& y) const;
  /// F(X^q, Y^q)
  HomogPoly inflate(std::size_t q) const;
  /// (XY)^q F
  HomogPoly times_xy_pow(std::size_t q) const;

  friend HomogPoly operator*(const HomogPoly& a, const HomogPoly& b);
  friend HomogPoly operator*(HomogPoly a, const Int& c);
  friend HomogPoly operator-(const HomogPoly& a, const HomogPoly& b);
  friend bool operator==(const HomogPoly& a, const HomogPoly& b) = default;

 private:
  std::size_t degree_ = 0;
  std::vector<Int> coeffs_;
};

enum class AuriCondition { c1, c2, none };

const char* to_string(AuriCondition c);

/// prod over odd p^v || n of p^(v-1)
std::uint64_t q_of(std::uint64_t n);

/// Which of the two conditions holds for (n, k). Divisibility uses |k|;
/// k = -5 with n = 10 is c2. Throws DomainError if k is not squarefree
/// or n < 3.
AuriCondition applicable(std::uint64_t n, const Int& k);

struct AuriPair {
  std::uint64_t n = 0;
  Int k;
  std::uint64_t q = 1;
  HomogPoly F;
  HomogPoly G;
  int sF = 1;  // symmetry types required for (n, k)
  int sG = 1;
};

/// Symmetry type of F required for (n, k).
int expected_symmetry_f(std::uint64_t n, const Int& k);

/// Builds (F, G) with F's leading X-coefficient positive and G's first
/// nonzero coefficient from the top positive. Throws DomainError when no
/// condition applies.
AuriPair aurifeuillian_pair(std::uint64_t n, const Int& k);

/// Re-expands the identity exactly and checks degrees and symmetry types.
bool verify_pair(const AuriPair& pair);

/// Every common prime divisor of F(x, y) and G(x, y) divides 2 n x y.
bool common_divisor_check(const AuriPair& pair, const Int& x, const Int& y);
bool common_divisor_check(std::uint64_t n, const Int& k, const Int& x, const Int& y);

/// Value at (X, Y) of a symmetric homogeneous polynomial, given only
/// e1 = X + Y and e2 = XY.
Int evaluate_symmetric(const HomogPoly& f, const Int& e1, const Int& e2);

struct TwoSquares {
  std::uint64_t ell = 0;
  Int A;
  Int B;
  // Decomposition data, useful for reporting.
  unsigned v = 0;          // ell = 2^v n
  std::uint64_t n = 0;
};

/// Phi_ell(gamma, delta) = A^2 + B^2 for Q = 1, where
/// R (R - 4) = d0 d1^2 with d0 squarefree, d0 >= 5, d0 = 1 mod 4 and
/// 4 d0 | ell.
TwoSquares two_squares(const LehmerParams& params, std::uint64_t ell, const Int& d0, const Int& d1);

}  // namespace msetforge
