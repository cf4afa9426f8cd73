#pragma once

// Dense univariate polynomials over Z, cyclotomic polynomials and
// resultants.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "msetforge/common.hpp"

namespace msetforge {

/// Dense polynomial with integer coefficients; coeffs[i] multiplies X^i.
/// Canonical form keeps no trailing zeros, so the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly monomial(const Int& c, std::size_t degree);
  /// X^d - 1
  static IntPoly x_pow_minus_one(std::size_t d);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Int& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }

  Int evaluate(const Int& x) const;
  /// f(-X)
  IntPoly negate_variable() const;
  /// f(X^k)
  IntPoly inflate(std::size_t k) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const Int& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Int& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division by a monic divisor; exact over Z.
PolyDivision divmod_monic(const IntPoly& dividend, const IntPoly& divisor);

/// Quotient of an exact division by a monic polynomial; throws
/// InvariantViolation when a remainder is left.
IntPoly divide_exact(const IntPoly& dividend, const IntPoly& divisor);

IntPoly power(const IntPoly& base, unsigned exponent);

/// Text format shared with the CLI: comma-separated coefficients, constant
/// term first, e.g. X^2 - X - 1 is "-1,-1,1".
IntPoly parse_poly(const std::string& text);
std::string format_poly(const IntPoly& f);
/// Human-readable rendering such as "X^2 - X - 1".
std::string pretty_poly(const IntPoly& f, const std::string& var = "X");

/// Phi_n via the Moebius product of (X^d - 1)^mu(n/d).
IntPoly cyclotomic(std::uint64_t n);

/// Resultant of two monic nonconstant polynomials, computed by the
/// subresultant pseudo-remainder sequence. The sign follows the Sylvester
/// determinant convention, so Res(f, g) = prod over roots a of f of g(a).
/// Throws DomainError on constant or non-monic input.
Int resultant(const IntPoly& f, const IntPoly& g);

/// Res(f(eps X), Phi_m(X)) for a monic quadratic f and eps = +-1.
Int res_eps(const IntPoly& f, std::uint64_t m, int eps);

struct ReflectionSides {
  IntPoly lhs;    // Phi_m(X) Phi_m(-X)
  IntPoly rhs;    // (-1)^phi(m) Phi_{m/(m,2)}(X^2)^e
  unsigned e = 1; // 2 when 4 | m
};

/// Both sides of the reflection identity for Phi_m, computed independently.
ReflectionSides reflect_identity(std::uint64_t m);

/// f(a) mod M in [0, M), Horner with reduction at each step.
Int eval_mod(const IntPoly& f, const Int& a, const Int& M);

/// Value of a homogenized cyclotomic polynomial Phi_n(X, Y) at an integer
/// point.
struct HomogValue {
  std::uint64_t n = 0;
  Int value;
};

/// Phi_n(x, y) = Phi_n(x / y) y^phi(n) at integers x, y.
HomogValue cyclotomic_homog_value(std::uint64_t n, const Int& x, const Int& y);

}  // namespace msetforge
