#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace msetforge {

/// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

/// Raised when an argument lies outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an internal mathematical invariant fails. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses a signed decimal integer; throws DomainError on malformed input.
Int parse_int(const std::string& text);

inline std::string to_string(const Int& v) { return v.get_str(); }

/// Nonnegative remainder of a modulo m (m > 0).
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int powmod(const Int& base, const Int& exp, const Int& m) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Int abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline bool divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Converts to uint64_t; throws DomainError when out of range.
std::uint64_t to_u64(const Int& v);

}  // namespace msetforge
