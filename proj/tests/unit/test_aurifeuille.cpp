#include "doctest.h"
#include "msetforge/aurifeuille.hpp"
#include "msetforge/nt_core.hpp"
#include "oracles.hpp"

using namespace msetforge;

namespace {

HomogPoly hp(std::vector<long> c) {
  std::vector<Int> v(c.begin(), c.end());
  const std::size_t d = v.size() - 1;
  return HomogPoly(d, std::move(v));
}

std::vector<std::pair<std::uint64_t, long>> applicable_grid() {
  std::vector<std::pair<std::uint64_t, long>> out;
  for (std::uint64_t n = 3; n <= 60; ++n) {
    for (long k = -15; k <= 15; ++k) {
      if (k == 0 || !is_squarefree(Int(k))) continue;
      if (applicable(n, Int(k)) != AuriCondition::none) out.emplace_back(n, k);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("q_of") {
  CHECK(q_of(20) == 1);
  CHECK(q_of(9) == 3);
  CHECK(q_of(45) == 3);
  CHECK(q_of(8) == 1);
  CHECK(q_of(3 * 3 * 3 * 25) == 45);
}

TEST_CASE("applicable") {
  CHECK(applicable(5, Int(5)) == AuriCondition::c1);
  CHECK(applicable(10, Int(-5)) == AuriCondition::c2);
  CHECK(applicable(20, Int(5)) == AuriCondition::none);
  CHECK(applicable(6, Int(3)) == AuriCondition::c2);
  CHECK(applicable(12, Int(3)) == AuriCondition::none);
  CHECK(applicable(6, Int(-1)) == AuriCondition::c2);
  CHECK(applicable(4, Int(-1)) == AuriCondition::none);
  CHECK_THROWS_AS(applicable(12, Int(12)), DomainError);
  CHECK_THROWS_AS(applicable(2, Int(-1)), DomainError);
}

TEST_CASE("pair examples") {
  const AuriPair a = aurifeuillian_pair(5, Int(5));
  CHECK(a.F == hp({1, 3, 1}));
  CHECK(a.G == hp({1, 1}));
  CHECK(a.q == 1);
  CHECK(verify_pair(a));
  const AuriPair b = aurifeuillian_pair(10, Int(-5));
  CHECK(b.F == hp({1, -3, 1}));
  CHECK(b.G == hp({-1, 1}));
  CHECK(verify_pair(b));
  CHECK(aurifeuillian_pair(13, Int(13)).F.degree() == 6);
  CHECK_THROWS_AS(aurifeuillian_pair(20, Int(5)), DomainError);
}

TEST_CASE("verify_pair rejects corruption and ignores the sign of G") {
  AuriPair b = aurifeuillian_pair(10, Int(-5));
  AuriPair negated = b;
  negated.G = negated.G * Int(-1);
  CHECK(verify_pair(negated));
  AuriPair corrupted = b;
  std::vector<Int> c = corrupted.F.coeffs();
  c[1] += 1;
  corrupted.F = HomogPoly(corrupted.F.degree(), c);
  CHECK_FALSE(verify_pair(corrupted));
  AuriPair wrong_k = b;
  wrong_k.k = 3;
  CHECK_FALSE(verify_pair(wrong_k));
}

TEST_CASE("every applicable pair on the grid satisfies the identity") {
  const auto cases = applicable_grid();
  CHECK(cases.size() > 50);
  for (const auto& [n, k] : cases) {
    const AuriPair pair = aurifeuillian_pair(n, Int(k));
    REQUIRE_MESSAGE(verify_pair(pair), "n=" << n << " k=" << k);
    // Independent re-expansion against the oracle cyclotomic polynomial.
    const std::vector<Int> phi = oracle::cyclotomic(n);
    const HomogPoly lhs = pair.F * pair.F - (pair.G * pair.G).times_xy_pow(pair.q) * Int(k);
    REQUIRE(lhs == HomogPoly(phi.size() - 1, phi));
    REQUIRE(pair.F.degree() == euler_phi(n) / 2);
    REQUIRE(pair.G.degree() == euler_phi(n) / 2 - q_of(n));
    REQUIRE(pair.F.symmetry_type() == pair.sF);
    REQUIRE(pair.G.symmetry_type() == pair.sG);
    REQUIRE(pair.sG == (k > 0 ? 1 : -1) * pair.sF);
    REQUIRE(pair.sF == expected_symmetry_f(n, Int(k)));
  }
}

TEST_CASE("pairs inflate from the q-free index") {
  for (const auto& [n, k] : applicable_grid()) {
    const std::uint64_t q = q_of(n);
    if (q == 1) continue;
    const std::uint64_t m = n / q;
    if (applicable(m, Int(k)) == AuriCondition::none) continue;
    const AuriPair big = aurifeuillian_pair(n, Int(k));
    const AuriPair small = aurifeuillian_pair(m, Int(k));
    REQUIRE_MESSAGE(big.F == small.F.inflate(q), "n=" << n << " k=" << k);
    REQUIRE((big.G == small.G.inflate(q) || big.G == small.G.inflate(q) * Int(-1)));
  }
  const AuriPair p45 = aurifeuillian_pair(45, Int(5));
  CHECK(p45.F == aurifeuillian_pair(15, Int(5)).F.inflate(3));
}

TEST_CASE("common divisor check") {
  const AuriPair a = aurifeuillian_pair(5, Int(5));
  CHECK(a.F.evaluate(Int(2), Int(1)) == 11);
  CHECK(a.G.evaluate(Int(2), Int(1)) == 3);
  CHECK(common_divisor_check(5, Int(5), Int(2), Int(1)));
  CHECK(common_divisor_check(5, Int(5), Int(1), Int(1)));
  CHECK(common_divisor_check(10, Int(-5), Int(3), Int(1)));
  for (const auto& [n, k] : applicable_grid()) {
    const AuriPair pair = aurifeuillian_pair(n, Int(k));
    for (long x = -5; x <= 5; ++x) {
      for (long y = -5; y <= 5; ++y) {
        const Int f = pair.F.evaluate(Int(x), Int(y)), g = pair.G.evaluate(Int(x), Int(y));
        const Int common = gcd(f, g);
        const Int support = Int(2 * static_cast<long>(n) * x * y);
        bool expect = true;
        if (support != 0) expect = common != 0 && abs(strip_common_factors(common, support)) == 1;
        REQUIRE(common_divisor_check(pair, Int(x), Int(y)) == expect);
        REQUIRE(expect);
      }
    }
  }
}

TEST_CASE("evaluate_symmetric matches direct evaluation") {
  for (const auto& [n, k] : applicable_grid()) {
    const AuriPair pair = aurifeuillian_pair(n, Int(k));
    if (pair.F.symmetry_type() != 1 || pair.F.degree() % 2) continue;
    for (long x = -4; x <= 4; ++x) {
      for (long y = -4; y <= 4; ++y) {
        REQUIRE(evaluate_symmetric(pair.F, Int(x + y), Int(x * y)) == pair.F.evaluate(Int(x), Int(y)));
      }
    }
  }
}

TEST_CASE("two squares examples") {
  const LehmerParams five(Int(5), Int(1));
  const TwoSquares a = two_squares(five, 20, Int(5), Int(1));
  CHECK(abs(a.A) == 4);
  CHECK(abs(a.B) == 5);
  CHECK(a.v == 1);
  CHECK(a.n == 10);
  const TwoSquares b = two_squares(five, 40, Int(5), Int(1));
  const Int phi40 = phi_value(five, 40);
  CHECK(phi40 == oracle::lehmer_u(Int(5), Int(1), 40) * oracle::lehmer_u(Int(5), Int(1), 4) /
                     (oracle::lehmer_u(Int(5), Int(1), 20) * oracle::lehmer_u(Int(5), Int(1), 8)));
  CHECK(b.A * b.A + b.B * b.B == phi40);
  CHECK_THROWS_AS(two_squares(five, 20, Int(3), Int(1)), DomainError);
  CHECK_THROWS_AS(two_squares(five, 10, Int(5), Int(1)), DomainError);
  CHECK_THROWS_AS(two_squares(LehmerParams(Int(5), Int(-1)), 20, Int(5), Int(1)), DomainError);
}

TEST_CASE("two squares across parameters with a valid split") {
  int tested = 0;
  for (long R = -30; R <= 30; ++R) {
    if (!LehmerParams::valid(Int(R), Int(1))) continue;
    const LehmerParams params(Int(R), Int(1));
    const SquarefreeSplit s = squarefree_split(params.discriminant_product());
    if (s.d0 < 5 || mod(s.d0, Int(4)) != 1 || s.d0 > 30) continue;
    const std::uint64_t base = 4 * s.d0.get_ui();
    for (std::uint64_t ell = base; ell <= 3 * base && ell <= 120; ell += base) {
      const TwoSquares ts = two_squares(params, ell, s.d0, s.d1);
      const Int phi = phi_value(params, ell);
      REQUIRE(ts.A * ts.A + ts.B * ts.B == phi);
      const FactorResult fr = factorize(phi);
      for (const auto& pp : fr.partial.factors) {
        if (pp.prime != 2 && !divides(pp.prime, ts.A)) REQUIRE(mod(pp.prime, Int(4)) == 1);
      }
      ++tested;
    }
  }
  CHECK(tested >= 8);
}

TEST_CASE("odd primitive divisors are 1 mod 4 for R = 5") {
  const LehmerParams five(Int(5), Int(1));
  for (std::uint64_t ell : {20, 40, 60}) {
    const auto pd = primitive_divisors(five, ell);
    REQUIRE(pd.complete());
    REQUIRE_FALSE(pd.primes.empty());
    for (const Int& p : pd.primes) {
      if (p != 2) CHECK(mod(p, Int(4)) == 1);
    }
  }
}
