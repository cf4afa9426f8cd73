#include "msetforge/witness.hpp"

#include <algorithm>

#include "msetforge/recsim.hpp"

namespace msetforge {

const char* to_string(WitnessRoute r) {
  switch (r) {
    case WitnessRoute::cond3: return "cond3";
    case WitnessRoute::cond4: return "cond4";
    case WitnessRoute::cond5: return "cond5";
    case WitnessRoute::resultant: return "resultant";
    case WitnessRoute::zsigmondy: return "zsigmondy";
  }
  return "resultant";
}

WitnessRoute parse_route(const std::string& name) {
  for (auto r : {WitnessRoute::cond3, WitnessRoute::cond4, WitnessRoute::cond5, WitnessRoute::resultant,
                 WitnessRoute::zsigmondy}) {
    if (name == to_string(r)) return r;
  }
  throw DomainError("unknown witness route '" + name + "'");
}

bool Witness::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

const char* to_string(SufficientRoute r) {
  switch (r) {
    case SufficientRoute::cond3: return "cond3";
    case SufficientRoute::cond4: return "cond4";
    case SufficientRoute::cond5: return "cond5";
    case SufficientRoute::none: return "none";
  }
  return "none";
}

QuadraticSeed::QuadraticSeed(Int t, int c) : t_(std::move(t)), c_(c) {
  if (c_ != 1 && c_ != -1) throw DomainError("quadratic seed: c must be +1 or -1");
  if (c_ == -1 && t_ == 0) throw DomainError("quadratic seed: t = 0 gives alpha/beta = -1");
  if (c_ == 1 && abs(t_) < 3) throw DomainError("quadratic seed: |t| < 3 gives a root of unity ratio");
}

IntPoly QuadraticSeed::f() const { return IntPoly(std::vector<Int>{Int(c_), Int(-t_), Int(1)}); }

std::uint64_t Theorem2Mapping::n_of_m(std::uint64_t m) const {
  if (m == 0) throw DomainError("n_of_m: m must be positive");
  return c == -1 && m % 2 == 0 ? m / 2 : m;
}

Theorem2Mapping mapping(const QuadraticSeed& seed) {
  // c = -1: gamma = alpha, delta = -beta, so (gamma + delta)^2 = t^2 + 4.
  // c = +1: gamma = alpha^(1/2), delta = alpha^(-1/2), (gamma + delta)^2 = t + 2.
  Int R = seed.c() == -1 ? Int(seed.t() * seed.t() + 4) : Int(seed.t() + 2);
  return Theorem2Mapping{LehmerParams(std::move(R), Int(1)), seed.c()};
}

namespace {

bool one_mod(const Int& p, std::uint64_t m) { return mod(p, Int(static_cast<unsigned long>(m))) == 1; }

bool primitive_for(const Theorem2Mapping& mp, const Int& p, std::uint64_t n, const FactorBudget& budget) {
  return is_primitive_divisor(mp.params, p, n, budget).is_primitive;
}

}  // namespace

bool criterion_resultant(const QuadraticSeed& seed, std::uint64_t m, const Int& p) {
  if (m == 0) throw DomainError("criterion_resultant: m must be positive");
  if (!is_prime(p) || p < 0) return false;
  return divides(p, resultant(seed.f(), cyclotomic(m))) && one_mod(p, m);
}

bool condition2(const QuadraticSeed& seed, std::uint64_t m, const Int& p, const FactorBudget& budget) {
  if (!is_prime(p) || p < 0) return false;
  const Theorem2Mapping mp = mapping(seed);
  return one_mod(p, m) && primitive_for(mp, p, mp.n_of_m(m), budget);
}

SufficientRoute sufficient_route(const QuadraticSeed& seed, std::uint64_t m, const Int& p,
                                 const FactorBudget& budget) {
  if (m == 0) throw DomainError("sufficient_route: m must be positive");
  if (!is_prime(p) || p < 0) return SufficientRoute::none;
  const Theorem2Mapping mp = mapping(seed);
  const bool p1mod4 = mod(p, Int(4)) == 1;
  if (seed.c() == -1) {
    if (m % 4 != 0 && m != 3 && m != 6 && primitive_for(mp, p, mp.n_of_m(m), budget)) return SufficientRoute::cond3;
    if (m % 8 == 0 && p1mod4 && primitive_for(mp, p, m / 2, budget)) return SufficientRoute::cond4;
  } else {
    if (m % 4 == 0 && p1mod4 && primitive_for(mp, p, m, budget)) return SufficientRoute::cond5;
  }
  return SufficientRoute::none;
}

std::vector<Int> roots_mod_p(const QuadraticSeed& seed, const Int& p) {
  if (!is_prime(p) || p < 0) throw DomainError("roots_mod_p: p must be prime");
  const IntPoly f = seed.f();
  std::vector<Int> roots;
  if (p == 2) {
    for (int a = 0; a < 2; ++a) {
      if (eval_mod(f, Int(a), p) == 0) roots.emplace_back(a);
    }
    return roots;
  }
  const auto s = sqrt_mod_prime(seed.discriminant(), p);
  if (!s) return roots;
  const Int half = (p + 1) / 2;  // inverse of 2
  for (const Int& r : {mod((seed.t() + *s) * half, p), mod((seed.t() - *s) * half, p)}) {
    if (eval_mod(f, r, p) != 0) throw InvariantViolation("roots_mod_p: computed root does not vanish");
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Int find_a(const QuadraticSeed& seed, std::uint64_t m, const Int& p, const FactorBudget& budget) {
  const Int target(static_cast<unsigned long>(m));
  for (const Int& a : roots_mod_p(seed, p)) {
    if (a == 0) continue;
    if (mult_order(a, p, budget) == target) return a;
  }
  throw InvariantViolation("find_a: no root of f mod " + p.get_str() + " has order " + std::to_string(m));
}

namespace {

Witness assemble(const IntPoly& f, const IntPoly& g, std::uint64_t m, const Int& p, const Int& a,
                 WitnessRoute route, std::vector<Check> extra, const FactorBudget& budget) {
  Witness w;
  w.m = m;
  w.p = p;
  w.a = a;
  w.g = g;
  w.route = route;
  w.checks.push_back({"f divides g", divmod_monic(g, f).remainder.is_zero()});
  w.checks.push_back({"p is prime", is_prime(p)});
  w.checks.push_back({"p = 1 mod m", one_mod(p, m)});
  w.checks.push_back({"p divides f(a)", eval_mod(f, a, p) == 0});
  w.checks.push_back({"p divides g(a)", eval_mod(g, a, p) == 0});
  w.checks.push_back({"ord_p(a) = m", mult_order(a, p, budget) == Int(static_cast<unsigned long>(m))});
  for (auto& c : extra) w.checks.push_back(std::move(c));
  w.checks.push_back({"recurrence has exactly m residues", verify_witness(w)});
  if (!w.all_checks_pass()) {
    for (const auto& c : w.checks) {
      if (!c.ok) throw InvariantViolation("witness check failed: " + c.name);
    }
  }
  return w;
}

WitnessOutcome via_primitive_divisors(const QuadraticSeed& seed, const IntPoly& g, std::uint64_t m,
                                      std::uint64_t n, WitnessRoute route, const FactorBudget& budget) {
  const Theorem2Mapping mp = mapping(seed);
  const PrimitiveDivisors pd = primitive_divisors(mp.params, n, budget);
  const bool need_1mod4 = route != WitnessRoute::cond3;
  for (const Int& p : pd.primes) {
    if (need_1mod4 && mod(p, Int(4)) != 1) continue;
    const SufficientRoute sr = sufficient_route(seed, m, p, budget);
    if (std::string(to_string(sr)) != to_string(route)) continue;
    std::vector<Check> extra{
        {"p is a primitive divisor of u_" + std::to_string(n), primitive_for(mp, p, n, budget)},
        {"sufficient condition " + std::string(to_string(route)), true},
        {"p divides Res(f, Phi_m)", criterion_resultant(seed, m, p)},
    };
    if (need_1mod4) extra.push_back({"p = 1 mod 4", true});
    return assemble(seed.f(), g, m, p, find_a(seed, m, p, budget), route, std::move(extra), budget);
  }
  if (!pd.complete()) {
    return NotCovered{"primitive part of u_" + std::to_string(n) + " not factored within budget", true};
  }
  return NotCovered{"no qualifying primitive divisor of u_" + std::to_string(n), false};
}

WitnessOutcome via_resultant(const QuadraticSeed& seed, const IntPoly& g, std::uint64_t m,
                             const std::string& preface, const FactorBudget& budget) {
  const Int res = resultant(seed.f(), cyclotomic(m));
  if (res == 0) return NotCovered{preface + "Res(f, Phi_m) = 0", false};
  if (abs(res) == 1) return NotCovered{preface + "Res(f, Phi_m) = +-1 has no prime factor", false};
  const FactorResult fr = factorize(res, budget);
  for (const auto& pp : fr.partial.factors) {
    if (!one_mod(pp.prime, m)) continue;
    std::vector<Check> extra{{"p divides Res(f, Phi_m)", true}};
    return assemble(seed.f(), g, m, pp.prime, find_a(seed, m, pp.prime, budget), WitnessRoute::resultant,
                    std::move(extra), budget);
  }
  if (!fr.complete()) return NotCovered{preface + "Res(f, Phi_m) not factored within budget", true};
  return NotCovered{preface + "no prime factor of Res(f, Phi_m) is 1 mod m", false};
}

}  // namespace

WitnessOutcome find_witness(const QuadraticSeed& seed, const IntPoly& g, std::uint64_t m,
                            const FactorBudget& budget) {
  if (m == 0) throw DomainError("find_witness: m must be positive");
  if (!g.is_monic()) throw DomainError("find_witness: g must be monic");
  if (!divmod_monic(g, seed.f()).remainder.is_zero()) throw DomainError("find_witness: f does not divide g");

  std::string preface;
  if (seed.c() == -1 && m >= 7 && m != 10 && m % 4 != 0) {
    auto out = via_primitive_divisors(seed, g, m, mapping(seed).n_of_m(m), WitnessRoute::cond3, budget);
    if (std::holds_alternative<Witness>(out)) return out;
    preface = std::get<NotCovered>(out).reason + "; ";
  }

  const Int D = seed.discriminant();
  const FactorResult fd = factorize(D, budget);
  if (fd.complete()) {
    const SquarefreeSplit split = squarefree_split(D, budget);
    const Int& d0 = split.d0;
    if (d0 >= 5 && mod(d0, Int(4)) == 1) {
      const Int M(static_cast<unsigned long>(m));
      if (seed.c() == -1 && divides(8 * d0, M)) {
        auto out = via_primitive_divisors(seed, g, m, m / 2, WitnessRoute::cond4, budget);
        if (std::holds_alternative<Witness>(out)) return out;
        preface += std::get<NotCovered>(out).reason + "; ";
      }
      if (seed.c() == 1 && divides(4 * d0, M)) {
        auto out = via_primitive_divisors(seed, g, m, m, WitnessRoute::cond5, budget);
        if (std::holds_alternative<Witness>(out)) return out;
        preface += std::get<NotCovered>(out).reason + "; ";
      }
    }
  }

  auto out = via_resultant(seed, g, m, preface, budget);
  if (auto* nc = std::get_if<NotCovered>(&out)) {
    nc->reason = "not covered by implemented theorems: " + nc->reason;
  }
  return out;
}

ZsigmondyResult zsigmondy_witness(const Int& a, std::uint64_t m, const FactorBudget& budget) {
  if (a >= -1 && a <= 1) throw DomainError("zsigmondy_witness: a must not be -1, 0 or 1");
  if (m == 0) throw DomainError("zsigmondy_witness: m must be positive");
  // Primes of order exactly m divide Phi_m(a) and never divide m.
  const Int value = cyclotomic(m).evaluate(a);
  const Int primitive = strip_common_factors(value, Int(static_cast<unsigned long>(m)));
  const Int target(static_cast<unsigned long>(m));
  ZsigmondyResult out;
  if (abs(primitive) > 1) {
    const FactorResult fr = factorize(primitive, budget);
    for (const auto& pp : fr.partial.factors) {
      if (mult_order(a, pp.prime, budget) != target) {
        throw InvariantViolation("zsigmondy_witness: factor of the primitive part has the wrong order");
      }
      out.prime = pp.prime;
      return out;
    }
    out.exception = "primitive part " + primitive.get_str() + " not factored within budget";
    return out;
  }
  const Int up = abs(Int(a + 1));
  const bool power_of_two = up > 0 && mpz_popcount(up.get_mpz_t()) == 1;
  if (m == 1) {
    out.exception = "m = 1 with a - 1 = 1";
  } else if (m == 2 && power_of_two) {
    out.exception = "m = 2 with a + 1 = +-2^v";
  } else if (m == 3 && a == -2) {
    out.exception = "m = 3 with a = -2";
  } else if (m == 6 && a == 2) {
    out.exception = "m = 6 with a = 2";
  } else {
    throw InvariantViolation("zsigmondy_witness: no primitive prime outside the known exceptions");
  }
  return out;
}

WitnessOutcome find_linear_witness(const Int& a, const IntPoly& g, std::uint64_t m, const FactorBudget& budget) {
  const IntPoly linear(std::vector<Int>{Int(-a), Int(1)});
  if (!g.is_monic() || !divmod_monic(g, linear).remainder.is_zero()) {
    throw DomainError("find_linear_witness: X - a does not divide g");
  }
  const ZsigmondyResult z = zsigmondy_witness(a, m, budget);
  if (!z.prime) return NotCovered{"no prime of order m: " + z.exception, false};
  const Int& p = *z.prime;
  std::vector<Check> extra{{"ord_p(a) = m by Zsigmondy", true}};
  return assemble(linear, g, m, p, mod(a, p), WitnessRoute::zsigmondy, std::move(extra), budget);
}

EquivalenceReport equivalence_harness(const QuadraticSeed& seed, std::uint64_t m, const Int& p,
                                      const FactorBudget& budget) {
  if (!is_prime(p) || p < 0) throw DomainError("equivalence_harness: p must be prime");
  EquivalenceReport report;
  const IntPoly f = seed.f();
  const Int target(static_cast<unsigned long>(m));
  for (Int a = 1; a < p; ++a) {
    if (eval_mod(f, a, p) == 0 && mult_order(a, p, budget) == target) {
      report.brute_force = true;
      break;
    }
  }
  report.lehmer = condition2(seed, m, p, budget);
  return report;
}

}  // namespace msetforge
