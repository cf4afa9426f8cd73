#include "msetforge/acceptance.hpp"

#include <functional>
#include <sstream>

#include "msetforge/aurifeuille.hpp"
#include "msetforge/lehmer.hpp"
#include "msetforge/nt_core.hpp"
#include "msetforge/polycyc.hpp"
#include "msetforge/recsim.hpp"
#include "msetforge/witness.hpp"

namespace msetforge {

namespace {

struct Tally {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok) failures.push_back(what);
  }
  bool pass() const { return failures.empty(); }
  std::string summary() const {
    std::ostringstream os;
    os << cases << " cases, " << failures.size() << " failures";
    for (std::size_t i = 0; i < failures.size() && i < 12; ++i) os << (i ? "; " : ": ") << failures[i];
    if (failures.size() > 12) os << "; ...";
    return os.str();
  }
};

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint32_t p : small_primes()) {
    if (p > bound) break;
    out.push_back(p);
  }
  return out;
}

struct WitnessCase {
  Int t;
  int c;
  std::uint64_t m;
  Witness w;
};

std::string label(const Int& t, int c, std::uint64_t m) {
  return "(t=" + t.get_str() + ",c=" + std::to_string(c) + ",m=" + std::to_string(m) + ")";
}

std::optional<Witness> witness_for(const Int& t, int c, std::uint64_t m, Tally& tally) {
  const QuadraticSeed seed(t, c);
  try {
    const auto out = find_witness(seed, seed.f(), m);
    if (const auto* w = std::get_if<Witness>(&out)) {
      tally.check(verify_witness(*w) && w->all_checks_pass(), label(t, c, m) + " verification");
      return *w;
    }
    tally.check(false, label(t, c, m) + " not covered: " + std::get<NotCovered>(out).reason);
  } catch (const std::exception& e) {
    tally.check(false, label(t, c, m) + " " + e.what());
  }
  return std::nullopt;
}

CriterionResult criterion1(std::vector<WitnessCase>& found) {
  Tally tally;
  for (std::uint64_t m = 7; m <= 120; ++m) {
    if (m == 10 || m % 4 == 0) continue;
    if (auto w = witness_for(Int(1), -1, m, tally)) found.push_back({Int(1), -1, m, *w});
  }
  return {1, "witnesses for X^2-X-1, 7 <= m <= 120, m != 10, 4 does not divide m", tally.pass(), tally.summary()};
}

CriterionResult criterion2(std::vector<WitnessCase>& found) {
  Tally tally;
  const std::vector<std::pair<int, std::vector<std::uint64_t>>> grid{{-1, {40, 80, 120}}, {1, {20, 40, 60}}};
  for (const auto& [c, ms] : grid) {
    const Int t = c == -1 ? 1 : 3;
    for (std::uint64_t m : ms) {
      auto w = witness_for(t, c, m, tally);
      if (!w) continue;
      tally.check(mod(w->p, Int(4)) == 1, label(t, c, m) + " p = " + w->p.get_str() + " is not 1 mod 4");
      found.push_back({t, c, m, *w});
      if (c == -1 && m == 40) tally.check(w->p == 41 && w->a == 7, "spot value p=41, a=7");
      if (c == 1 && m == 20) tally.check(w->p == 41 && w->a == 8, "spot value p=41, a=8");
    }
  }
  return {2, "witnesses with p = 1 mod 4 for D0 = 5", tally.pass(), tally.summary()};
}

CriterionResult criterion3() {
  Tally tally;
  Tally large_n;  // the part of the grid where n(m) >= 3
  const auto primes = primes_up_to(600);
  for (int c : {-1, 1}) {
    for (int t = -5; t <= 5; ++t) {
      if ((c == -1 && t == 0) || (c == 1 && std::abs(t) < 3)) continue;
      const QuadraticSeed seed(t, c);
      const Theorem2Mapping mp = mapping(seed);
      const IntPoly f = seed.f();
      for (std::uint64_t pv : primes) {
        const Int p(static_cast<unsigned long>(pv));
        // Orders of all roots of f mod p, found by scanning every residue.
        std::set<Int> orders;
        for (Int a = 1; a < p; ++a) {
          if (eval_mod(f, a, p) == 0) orders.insert(mult_order(a, p));
        }
        for (std::uint64_t m = 1; m <= 40; ++m) {
          const bool brute = orders.count(Int(static_cast<unsigned long>(m))) != 0;
          const bool lehmer = condition2(seed, m, p);
          const std::string what = label(Int(t), c, m) + ",p=" + std::to_string(pv) +
                                   " scan=" + (brute ? "yes" : "no") + " criterion=" + (lehmer ? "yes" : "no");
          tally.check(brute == lehmer, what);
          if (mp.n_of_m(m) >= 3) large_n.check(brute == lehmer, what);
        }
      }
    }
  }
  std::string detail = tally.summary() + " | restricted to n >= 3: " + large_n.summary();
  return {3, "equivalence of the root-order scan and the Lehmer criterion", tally.pass(), detail};
}

CriterionResult criterion4() {
  Tally tally;
  for (std::uint64_t m = 1; m <= 200; ++m) {
    const auto sides = reflect_identity(m);
    tally.check(sides.lhs == sides.rhs, "reflection m=" + std::to_string(m));
  }
  std::size_t pairs = 0;
  for (std::uint64_t n = 3; n <= 60; ++n) {
    for (int kv = -15; kv <= 15; ++kv) {
      const Int k(kv);
      if (kv == 0 || !is_squarefree(k)) continue;
      if (applicable(n, k) == AuriCondition::none) continue;
      const std::string tag = "(n=" + std::to_string(n) + ",k=" + std::to_string(kv) + ")";
      try {
        const AuriPair pair = aurifeuillian_pair(n, k);
        ++pairs;
        tally.check(verify_pair(pair), tag + " identity");
        for (int x = -5; x <= 5; ++x) {
          for (int y = -5; y <= 5; ++y) {
            tally.check(common_divisor_check(pair, Int(x), Int(y)),
                        tag + " gcd at (" + std::to_string(x) + "," + std::to_string(y) + ")");
          }
        }
      } catch (const std::exception& e) {
        tally.check(false, tag + " " + e.what());
      }
    }
  }
  return {4, "reflection identity, Aurifeuillian pairs and their common divisors", tally.pass(),
          tally.summary() + " (" + std::to_string(pairs) + " pairs)"};
}

CriterionResult criterion5() {
  Tally tally;
  const LehmerParams params(Int(5), Int(1));
  for (std::uint64_t ell : {20, 40, 60}) {
    const std::string tag = "ell=" + std::to_string(ell);
    try {
      const TwoSquares ts = two_squares(params, ell, Int(5), Int(1));
      const Int phi = phi_value(params, ell);
      tally.check(ts.A * ts.A + ts.B * ts.B == phi, tag + " A^2 + B^2");
      if (ell == 20) {
        tally.check(phi == 41 && abs(ts.A) == 4 && abs(ts.B) == 5, "spot value 41 = 4^2 + 5^2");
      }
      const PrimitiveDivisors pd = primitive_divisors(params, ell);
      tally.check(pd.complete(), tag + " primitive part fully factored");
      for (const Int& p : pd.primes) {
        if (p != 2) tally.check(mod(p, Int(4)) == 1, tag + " primitive divisor " + p.get_str());
      }
    } catch (const std::exception& e) {
      tally.check(false, tag + " " + e.what());
    }
  }
  return {5, "sum of two squares for R=5, Q=1", tally.pass(), tally.summary()};
}

CriterionResult criterion6() {
  Tally tally;
  const std::set<std::uint64_t> skip{3, 4, 5, 6, 10, 12};
  for (int R = -20; R <= 20; ++R) {
    if (!LehmerParams::valid(Int(R), Int(1))) continue;
    const LehmerParams params(Int(R), Int(1));
    for (std::uint64_t n = 3; n <= 40; ++n) {
      if (skip.count(n)) continue;
      tally.check(has_primitive_divisor(params, n, false),
                  "R=" + std::to_string(R) + ",n=" + std::to_string(n) + " has none");
    }
  }
  const std::vector<std::pair<int, std::uint64_t>> exceptional{{5, 6}, {5, 10}, {5, 12}, {-2, 3}, {-2, 4}, {-1, 5}};
  for (const auto& [R, n] : exceptional) {
    tally.check(!has_primitive_divisor(LehmerParams(Int(R), Int(1)), n, false),
                "R=" + std::to_string(R) + ",n=" + std::to_string(n) + " unexpectedly has one");
  }
  return {6, "primitive divisors for Q=1 and their listed exceptions", tally.pass(), tally.summary()};
}

CriterionResult criterion7() {
  Tally tally;
  auto stated_exception = [](int a, std::uint64_t m) {
    if (m == 2) {
      for (int v = 1; v <= 4; ++v) {
        if (a == (1 << v) - 1 || a == -(1 << v) - 1) return true;
      }
    }
    return (a == -2 && m == 3) || (a == 2 && m == 6);
  };
  for (int a = -10; a <= 10; ++a) {
    if (a >= -1 && a <= 1) continue;
    for (std::uint64_t m = 1; m <= 30; ++m) {
      const std::string tag = "(a=" + std::to_string(a) + ",m=" + std::to_string(m) + ")";
      try {
        const ZsigmondyResult z = zsigmondy_witness(Int(a), m);
        bool verified = false;
        if (z.prime) verified = is_prime(*z.prime) && mult_order(Int(a), *z.prime) == Int(static_cast<unsigned long>(m));
        if (stated_exception(a, m)) {
          tally.check(!verified, tag + " listed as exception but p=" + z.prime.value_or(0).get_str());
        } else {
          tally.check(verified, tag + " no prime of order m (" + z.exception + ")");
        }
      } catch (const std::exception& e) {
        tally.check(false, tag + " " + e.what());
      }
    }
  }
  return {7, "primes of exact order m match the stated exception set", tally.pass(), tally.summary()};
}

CriterionResult criterion8(const std::vector<WitnessCase>& found, unsigned threads) {
  Tally tally;
  const IntPoly g = parse_poly("-1,-1,1");
  const ScanResult scan = mset_scan(g, 60, {}, threads);
  tally.check(!scan.partial && scan.max_modulus == 60, "scan incomplete");
  for (const auto& wc : found) {
    if (!(wc.w.g == g) || wc.w.p > 60) continue;
    const std::uint64_t M = to_u64(wc.w.p);
    tally.check(scan.realizes(wc.m, M), "m=" + std::to_string(wc.m) + " not seen at M=" + std::to_string(M));
  }
  return {8, "exhaustive scan agrees with witnesses at p <= 60", tally.pass(), tally.summary()};
}

CriterionResult criterion9() {
  Tally tally;
  const auto primes = primes_up_to(100);
  for (int q : {-1, 1}) {
    const Int Q(q);
    for (int r = -20; r <= 20; ++r) {
      const Int R(r);
      if (!LehmerParams::valid(R, Q)) continue;
      const LehmerParams params(R, Q);
      const std::string tag = "(R=" + std::to_string(r) + ",Q=" + std::to_string(q) + ")";
      const auto u = lehmer_u_prefix(params, 60);

      for (std::uint64_t n = 1; n <= 40; ++n) {
        Int product = 1;
        for (std::uint64_t d : divisors(n)) {
          if (d > (n % 2 == 1 ? 1u : 2u)) product *= phi_value(params, d);
        }
        tally.check(product == u[n], tag + " product formula n=" + std::to_string(n));
      }
      for (std::uint64_t n = 1; n <= 39; n += 2) {
        const Int v = lehmer_v_odd(params, n);
        tally.check(R * v * v - (R - 4 * Q) * u[n] * u[n] == 4 * pow(Q, n), tag + " odd identity n=" + std::to_string(n));
      }
      if (std::abs(r) > 12) continue;

      if (R % 2 != 0 && (R - 4 * Q) % 2 != 0) {
        tally.check(rank_of_appearance(params, Int(2)) == Int(3), tag + " rank of 2");
      }
      for (std::uint64_t pv : primes) {
        const Int p(static_cast<unsigned long>(pv));
        const auto rank = rank_of_appearance(params, p);
        const std::string ptag = tag + ",p=" + std::to_string(pv);
        tally.check(rank.has_value() == !divides(p, Q), ptag + " rank exists iff p does not divide Q");
        for (std::uint64_t n = 1; n <= 60; ++n) {
          const bool lhs = divides(p, u[n]);
          const bool rhs = rank && divides(*rank, Int(static_cast<unsigned long>(n)));
          tally.check(lhs == rhs, ptag + " divisibility n=" + std::to_string(n));
        }
        if (rank && !divides(p, 2 * Q * R)) {
          const int eps = legendre(params.discriminant_product(), p);
          tally.check(divides(*rank, p - eps), ptag + " rank divides p - (disc/p)");
        }
        for (std::uint64_t n = 3; n <= 60; ++n) {
          const bool prim = is_primitive_divisor(params, p, n).is_primitive;
          const Int nn(static_cast<unsigned long>(n));
          const Int pm = mod(p, nn);
          const bool via_phi = divides(p, phi_value(params, n)) && (pm == 1 || pm == nn - 1);
          tally.check(prim == via_phi, ptag + " primitivity n=" + std::to_string(n));
        }
      }
    }
  }
  return {9, "Lehmer sequence consistency", tally.pass(), tally.summary()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  auto wanted = [&](int id) { return options.only.empty() || options.only.count(id) != 0; };
  std::vector<CriterionResult> out;
  std::vector<WitnessCase> found;
  const bool need_witnesses = wanted(8);
  if (wanted(1) || need_witnesses) {
    auto r = criterion1(found);
    if (wanted(1)) out.push_back(std::move(r));
  }
  if (wanted(2) || need_witnesses) {
    auto r = criterion2(found);
    if (wanted(2)) out.push_back(std::move(r));
  }
  if (wanted(3)) out.push_back(criterion3());
  if (wanted(4)) out.push_back(criterion4());
  if (wanted(5)) out.push_back(criterion5());
  if (wanted(6)) out.push_back(criterion6());
  if (wanted(7)) out.push_back(criterion7());
  if (wanted(8)) out.push_back(criterion8(found, options.threads));
  if (wanted(9)) out.push_back(criterion9());
  return out;
}

std::string format_result(const CriterionResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.title + ": " + r.detail;
}

}  // namespace msetforge
