#include "msetforge/nt_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>

namespace msetforge {

Int parse_int(const std::string& text) {
  Int v;
  std::string s = text;
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty() || v.set_str(s, 10) != 0) {
    throw DomainError("not an integer: '" + text + "'");
  }
  return v;
}

std::uint64_t to_u64(const Int& v) {
  if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) {
    throw DomainError("value out of 64-bit range: " + v.get_str());
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

Int from_u64(std::uint64_t v) {
  Int r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

bool strong_probable_prime(const Int& n, const Int& base) {
  Int d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  Int x = powmod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor or 0 when the
// iteration allowance runs out.
Int rho_split(const Int& n, std::uint64_t& allowance) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1; allowance > 0; ++c) {
    Int y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t steps = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(Int(x - y)) % n;
        }
        g = gcd(q, n);
        k += steps;
        allowance = allowance > steps ? allowance - steps : 0;
        if (allowance == 0 && g == 1) return 0;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(Int(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
  return 0;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool is_prime(const Int& n) {
  const Int m = abs(n);
  if (m < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (m == p) return true;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) return false;
  }
  if (mpz_sizeinbase(m.get_mpz_t(), 2) <= 64) {
    // These bases are deterministic for every n < 3.3 * 10^24.
    for (unsigned long b : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
      if (!strong_probable_prime(m, b)) return false;
    }
    return true;
  }
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x6d736574ul);
  const Int span = m - 3;
  for (int round = 0; round < 40; ++round) {
    const Int base = rng.get_z_range(span) + 2;
    if (!strong_probable_prime(m, base)) return false;
  }
  return true;
}

Int Factorization::product() const {
  Int v = sign;
  for (const auto& f : factors) v *= pow(f.prime, f.exponent);
  return v;
}

std::vector<Int> Factorization::primes() const {
  std::vector<Int> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

FactorBudget FactorBudget::from_environment() {
  FactorBudget b;
  if (const char* env = std::getenv("MSETFORGE_FACTOR_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') b.rho_iterations = v;
  }
  return b;
}

const Factorization& FactorResult::value() const& {
  if (!complete()) {
    throw DomainError("factorization incomplete: cofactor " + unfactored.front().get_str() +
                      " exceeds the factoring budget");
  }
  return partial;
}

Factorization FactorResult::value() && {
  static_cast<const FactorResult&>(*this).value();
  return std::move(partial);
}

FactorResult factorize(const Int& n, const FactorBudget& budget) {
  if (n == 0) throw DomainError("factorize: zero has no factorization");
  FactorResult result;
  result.partial.value = n;
  result.partial.sign = n < 0 ? -1 : 1;
  Int m = abs(n);

  std::map<Int, unsigned> found;
  for (std::uint32_t p : small_primes()) {
    if (m == 1) break;
    if (Int(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++found[Int(p)];
    }
  }

  std::vector<Int> pending;
  if (m > 1) pending.push_back(m);
  std::uint64_t allowance = budget.rho_iterations;
  const Int trial_sq = Int(kTrialLimit) * kTrialLimit;
  while (!pending.empty()) {
    Int c = pending.back();
    pending.pop_back();
    if (c < trial_sq || is_prime(c)) {
      ++found[c];
      continue;
    }
    if (mpz_perfect_square_p(c.get_mpz_t())) {
      const Int s = sqrt(c);
      pending.push_back(s);
      pending.push_back(s);
      continue;
    }
    const Int d = rho_split(c, allowance);
    if (d == 0) {
      result.unfactored.push_back(c);
      continue;
    }
    pending.push_back(d);
    pending.push_back(c / d);
  }
  for (auto& [p, e] : found) result.partial.factors.push_back({p, e});
  std::sort(result.unfactored.begin(), result.unfactored.end());
  return result;
}

SquarefreeSplit squarefree_split(const Int& n, const FactorBudget& budget) {
  const Factorization f = factorize(n, budget).value();
  SquarefreeSplit out{Int(f.sign), Int(1)};
  for (const auto& [p, e] : f.factors) {
    if (e % 2 == 1) out.d0 *= p;
    out.d1 *= pow(p, e / 2);
  }
  return out;
}

bool is_squarefree(const Int& n, const FactorBudget& budget) {
  if (n == 0) return false;
  const Factorization f = factorize(n, budget).value();
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_small(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factor_small(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int moebius(std::uint64_t n) {
  if (n == 0) throw DomainError("moebius: n must be positive");
  int mu = 1;
  for (const auto& [p, e] : factor_small(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi: n must be positive");
  std::uint64_t phi = n;
  for (const auto& [p, e] : factor_small(n)) phi = phi / p * (p - 1);
  return phi;
}

int legendre(const Int& a, const Int& p) {
  if (p < 3 || !is_prime(p)) throw DomainError("legendre: modulus must be an odd prime");
  return mpz_legendre(mod(a, p).get_mpz_t(), p.get_mpz_t());
}

Int mult_order(const Int& a, const Int& M, const FactorBudget& budget) {
  if (M < 2) throw DomainError("mult_order: modulus must be at least 2");
  const Int base = mod(a, M);
  if (gcd(base, M) != 1) throw DomainError("mult_order: a is not a unit modulo M");

  if (M < kTrialLimit) {
    const std::uint64_t m = M.get_ui();
    const std::uint64_t b = base.get_ui();
    std::uint64_t x = b % m;
    std::uint64_t k = 1;
    while (x != 1) {
      x = x * b % m;
      ++k;
    }
    return from_u64(k);
  }

  // Carmichael exponent lambda(M), then strip superfluous prime factors.
  Int lambda = 1;
  const Factorization fm = factorize(M, budget).value();
  for (const auto& [p, e] : fm.factors) {
    Int part = pow(p, e - 1) * (p - 1);
    if (p == 2 && e >= 3) part /= 2;
    lambda = lcm(lambda, part);
  }
  Int order = lambda;
  const Factorization fl = factorize(lambda, budget).value();
  for (const auto& [q, e] : fl.factors) {
    for (unsigned i = 0; i < e; ++i) {
      const Int candidate = order / q;
      if (powmod(base, candidate, M) != 1) break;
      order = candidate;
    }
  }
  return order;
}

std::optional<Int> sqrt_mod_prime(const Int& a, const Int& p) {
  const Int r0 = mod(a, p);
  if (p == 2 || r0 == 0) return r0;
  if (mpz_legendre(r0.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;

  Int q = p - 1;
  unsigned s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Int z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

  Int c = powmod(z, q, p);
  Int x = powmod(r0, (q + 1) / 2, p);
  Int t = powmod(r0, q, p);
  unsigned m = s;
  while (t != 1) {
    unsigned i = 0;
    Int t2 = t;
    while (t2 != 1) {
      t2 = t2 * t2 % p;
      ++i;
    }
    Int b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
    x = x * b % p;
    c = b * b % p;
    t = t * c % p;
    m = i;
  }
  if (x * x % p != r0) throw InvariantViolation("sqrt_mod_prime: root does not square back");
  return x;
}

Int strip_common_factors(Int n, const Int& support) {
  if (n == 0) return n;
  Int g = gcd(n, support);
  while (g > 1) {
    n /= g;
    g = gcd(n, g);
  }
  return n;
}

}  // namespace msetforge
