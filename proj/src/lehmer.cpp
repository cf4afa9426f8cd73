#include "msetforge/lehmer.hpp"

#include <algorithm>
#include <array>

namespace msetforge {

LehmerParams::LehmerParams(Int R, Int Q) : R_(std::move(R)), Q_(std::move(Q)) {
  if (!valid(R_, Q_)) {
    throw DomainError("invalid Lehmer parameters (R=" + R_.get_str() + ", Q=" + Q_.get_str() + ")");
  }
}

bool LehmerParams::valid(const Int& R, const Int& Q) {
  if (R == 0 || Q == 0 || gcd(R, Q) != 1) return false;
  // gamma/delta + delta/gamma = (R - 2Q)/Q; it is 2cos of a rational angle
  // exactly when gamma/delta is a root of unity.
  const Int trace = R - 2 * Q;
  if (divides(Q, trace)) {
    const Int t = trace / Q;
    if (t >= -2 && t <= 2) return false;
  }
  return true;
}

std::vector<Int> lehmer_u_prefix(const LehmerParams& params, std::uint64_t n) {
  std::vector<Int> u{0, 1, 1, params.R() - params.Q()};
  const Int a = params.R() - 2 * params.Q();
  const Int b = params.Q() * params.Q();
  u.reserve(n + 1);
  while (u.size() <= n) {
    const std::size_t k = u.size();
    u.push_back(a * u[k - 2] - b * u[k - 4]);
  }
  u.resize(n + 1);
  return u;
}

Int lehmer_u(const LehmerParams& params, std::uint64_t n) { return lehmer_u_prefix(params, n)[n]; }

namespace {

using Mat = std::array<Int, 4>;  // row-major 2x2

Mat mat_mul(const Mat& x, const Mat& y, const Int& M) {
  return {mod(x[0] * y[0] + x[1] * y[2], M), mod(x[0] * y[1] + x[1] * y[3], M),
          mod(x[2] * y[0] + x[3] * y[2], M), mod(x[2] * y[1] + x[3] * y[3], M)};
}

// Scans u_k mod p for k in [1, limit].
std::optional<Int> scan_rank(const LehmerParams& params, const Int& p, std::uint64_t limit) {
  const Int a = mod(params.R() - 2 * params.Q(), p);
  const Int b = mod(params.Q() * params.Q(), p);
  std::array<Int, 4> w{Int(0), Int(1), Int(1), mod(params.R() - params.Q(), p)};
  for (std::uint64_t k = 1; k <= limit; ++k) {
    if (k >= 4) {
      const Int next = mod(a * w[(k - 2) % 4] - b * w[(k - 4) % 4], p);
      w[k % 4] = next;
    }
    if (w[k % 4] == 0) return Int(static_cast<unsigned long>(k));
  }
  return std::nullopt;
}

}  // namespace

Int lehmer_u_mod(const LehmerParams& params, const Int& n, const Int& M) {
  if (M < 1) throw DomainError("lehmer_u_mod: modulus must be positive");
  if (n < 0) throw DomainError("lehmer_u_mod: index must be nonnegative");
  // (u_k, u_{k+2}) -> (u_{k+2}, u_{k+4})
  Mat step{Int(0), Int(1), mod(-params.Q() * params.Q(), M), mod(params.R() - 2 * params.Q(), M)};
  const bool odd = mpz_odd_p(n.get_mpz_t()) != 0;
  Int first = odd ? Int(1) : Int(0);
  Int second = odd ? mod(params.R() - params.Q(), M) : mod(Int(1), M);
  Int steps = odd ? Int((n - 1) / 2) : Int(n / 2);
  Mat acc{Int(1), Int(0), Int(0), Int(1)};
  while (steps > 0) {
    if (mpz_odd_p(steps.get_mpz_t())) acc = mat_mul(acc, step, M);
    step = mat_mul(step, step, M);
    steps /= 2;
  }
  return mod(acc[0] * first + acc[1] * second, M);
}

Int lehmer_v_odd(const LehmerParams& params, std::uint64_t n) {
  if (n % 2 == 0) throw DomainError("lehmer_v_odd: index must be odd");
  const Int a = params.R() - 2 * params.Q();
  const Int b = params.Q() * params.Q();
  Int prev = 1, cur = params.R() - 3 * params.Q();
  if (n == 1) return prev;
  for (std::uint64_t k = 3; k < n; k += 2) {
    Int next = a * cur - b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Int phi_value(const LehmerParams& params, std::uint64_t n) {
  if (n < 3) throw DomainError("phi_value: n must be at least 3");
  const auto u = lehmer_u_prefix(params, n);
  Int num = 1, den = 1;
  for (std::uint64_t d : divisors(n)) {
    const int mu = moebius(n / d);
    if (mu == 1) num *= u[d];
    if (mu == -1) den *= u[d];
  }
  if (den == 0 || !divides(den, num)) {
    throw InvariantViolation("phi_value: Moebius product is not integral for n=" + std::to_string(n));
  }
  Int out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

std::optional<Int> rank_of_appearance(const LehmerParams& params, const Int& p, const FactorBudget& budget) {
  if (!is_prime(p) || p < 0) throw DomainError("rank_of_appearance: p must be a prime");
  if (divides(p, params.Q())) return std::nullopt;

  const Int disc = params.discriminant_product();
  if (p == 2 || divides(p, 2 * params.R() * disc)) {
    // Ranks here are at most 2p.
    if (p < 1'000'000) {
      const auto r = scan_rank(params, p, 2 * p.get_ui() + 2);
      if (!r) throw InvariantViolation("rank_of_appearance: scan found no rank for p=" + p.get_str());
      return r;
    }
    if (lehmer_u_mod(params, p, p) == 0) return p;
    if (lehmer_u_mod(params, 2 * p, p) == 0) return Int(2 * p);
    throw InvariantViolation("rank_of_appearance: rank outside {p, 2p} for p=" + p.get_str());
  }

  // p does not divide 2QR(R-4Q): the rank divides p - (disc / p).
  Int order = p - legendre(disc, p);
  if (lehmer_u_mod(params, order, p) != 0) {
    throw InvariantViolation("rank_of_appearance: p does not divide u_{p - (D/p)}");
  }
  const Factorization fo = factorize(order, budget).value();
  for (const auto& [q, e] : fo.factors) {
    for (unsigned i = 0; i < e; ++i) {
      const Int candidate = order / q;
      if (lehmer_u_mod(params, candidate, p) != 0) break;
      order = candidate;
    }
  }
  return order;
}

std::string to_string(PrimitivityReason r) {
  switch (r) {
    case PrimitivityReason::primitive: return "primitive";
    case PrimitivityReason::divides_q: return "divides-Q";
    case PrimitivityReason::divides_discriminant: return "divides-discriminant";
    case PrimitivityReason::rank_mismatch: return "rank-mismatch";
  }
  return "unknown";
}

PrimitivityReport is_primitive_divisor(const LehmerParams& params, const Int& p, std::uint64_t n,
                                       const FactorBudget& budget) {
  if (n == 0) throw DomainError("is_primitive_divisor: n must be positive");
  PrimitivityReport report;
  report.n = n;
  report.prime = p;
  report.rank = rank_of_appearance(params, p, budget);
  if (!report.rank) {
    report.reason = PrimitivityReason::divides_q;
  } else if (divides(p, params.discriminant_product())) {
    report.reason = PrimitivityReason::divides_discriminant;
  } else if (*report.rank != n) {
    report.reason = PrimitivityReason::rank_mismatch;
  } else {
    report.reason = PrimitivityReason::primitive;
    report.is_primitive = true;
  }
  return report;
}

PrimitiveDivisors primitive_divisors(const LehmerParams& params, std::uint64_t n, const FactorBudget& budget) {
  PrimitiveDivisors out;
  out.n = n;
  out.phi = phi_value(params, n);
  // A prime factor of Phi_n not dividing n has rank exactly n, so only the
  // primes of n and of the discriminant need removing.
  out.cofactor = strip_common_factors(out.phi, Int(static_cast<unsigned long>(n)));
  out.cofactor = strip_common_factors(out.cofactor, params.discriminant_product());
  if (abs(out.cofactor) <= 1) return out;

  const FactorResult fr = factorize(out.cofactor, budget);
  for (const auto& pp : fr.partial.factors) {
    const Int r = mod(pp.prime, Int(static_cast<unsigned long>(n)));
    if (r != 1 && r != n - 1) {
      throw InvariantViolation("primitive_divisors: " + pp.prime.get_str() + " is not +-1 mod " +
                               std::to_string(n));
    }
    out.primes.insert(pp.prime);
  }
  out.unfactored = fr.unfactored;
  return out;
}

bool has_primitive_divisor(const LehmerParams& params, std::uint64_t n, bool use_fast_path,
                           const FactorBudget& budget) {
  if (n == 0) throw DomainError("has_primitive_divisor: n must be positive");
  if (n <= 2) return false;  // u_1 = u_2 = 1
  if (use_fast_path && params.Q() == 1) {
    constexpr std::array<std::uint64_t, 4> kExceptional{3, 4, 5, 6};
    if (n != 10 && n != 12 && std::find(kExceptional.begin(), kExceptional.end(), n) == kExceptional.end()) {
      return true;
    }
  }
  return primitive_divisors(params, n, budget).exists();
}

}  // namespace msetforge
