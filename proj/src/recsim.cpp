#include "msetforge/recsim.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <ostream>

#include "msetforge/nt_core.hpp"

namespace msetforge {

RecurrenceSpec spec_from_poly(const IntPoly& g, std::vector<Int> init, const Int& M) {
  if (!g.is_monic() || g.degree() < 1) throw DomainError("spec_from_poly: g must be monic and nonconstant");
  if (init.size() != static_cast<std::size_t>(g.degree())) {
    throw DomainError("spec_from_poly: need exactly deg g initial terms");
  }
  if (M < 2) throw DomainError("spec_from_poly: modulus must be at least 2");
  const std::size_t r = init.size();
  RecurrenceSpec spec;
  spec.coeffs.resize(r);
  // Coefficient of X^{r-i} in g is -c_i.
  for (std::size_t i = 1; i <= r; ++i) spec.coeffs[i - 1] = -g.coeff(r - i);
  spec.init = std::move(init);
  spec.M = M;
  return spec;
}

namespace {

Int next_term(const RecurrenceSpec& spec, const std::vector<Int>& state) {
  const std::size_t r = state.size();
  Int acc = 0;
  for (std::size_t i = 1; i <= r; ++i) acc += spec.coeffs[i - 1] * state[r - i];
  return mod(acc, spec.M);
}

}  // namespace

OrbitSummary orbit(const RecurrenceSpec& spec, std::uint64_t max_steps) {
  std::vector<Int> state;
  for (const auto& s : spec.init) state.push_back(mod(s, spec.M));
  std::map<std::vector<Int>, std::uint64_t> seen;
  std::set<Int> residues;
  for (std::uint64_t step = 0;; ++step) {
    if (step > max_steps) throw DomainError("orbit: step limit exceeded");
    const auto [it, inserted] = seen.emplace(state, step);
    if (!inserted) {
      OrbitSummary out;
      out.tail_length = it->second;
      out.period = step - it->second;
      out.residues.assign(residues.begin(), residues.end());
      return out;
    }
    residues.insert(state.front());
    Int next = next_term(spec, state);
    state.erase(state.begin());
    state.push_back(std::move(next));
  }
}

std::vector<Int> sequence_terms(const RecurrenceSpec& spec, std::uint64_t count) {
  std::vector<Int> out;
  std::vector<Int> state;
  for (const auto& s : spec.init) state.push_back(mod(s, spec.M));
  while (out.size() < count) {
    out.push_back(state.front());
    Int next = next_term(spec, state);
    state.erase(state.begin());
    state.push_back(std::move(next));
  }
  return out;
}

RecurrenceSpec lemma1_spec(const IntPoly& g, const Int& a, const Int& p) {
  if (eval_mod(g, a, p) != 0) throw DomainError("lemma1_spec: p does not divide g(a)");
  std::vector<Int> init;
  Int power = 1;
  for (long i = 0; i < g.degree(); ++i) {
    init.push_back(mod(power, p));
    power = mod(power * a, p);
  }
  return spec_from_poly(g, std::move(init), p);
}

bool power_congruence_holds(const RecurrenceSpec& spec, const Int& a, std::uint64_t count) {
  const auto terms = sequence_terms(spec, count);
  Int power = mod(Int(1), spec.M);
  for (const auto& s : terms) {
    if (s != power) return false;
    power = mod(power * a, spec.M);
  }
  return true;
}

bool verify_witness(const Witness& w) {
  if (w.m == 0 || w.p < 2) return false;
  RecurrenceSpec spec;
  try {
    spec = lemma1_spec(w.g, w.a, w.p);
  } catch (const DomainError&) {
    return false;
  }
  OrbitSummary summary;
  try {
    summary = orbit(spec, 4 * w.m + 16);
  } catch (const DomainError&) {
    return false;
  }
  if (summary.distinct() != w.m) return false;
  std::vector<Int> expected;
  Int power = 1;
  for (std::uint64_t i = 0; i < w.m; ++i) {
    expected.push_back(mod(power, w.p));
    power = mod(power * w.a, w.p);
  }
  std::sort(expected.begin(), expected.end());
  return expected == summary.residues;
}

namespace {

struct ModulusScan {
  std::uint64_t M = 0;
  std::vector<ScanHit> hits;  // one per state, in state order
};

// Functional-graph walk over all M^r states of one modulus. A state's
// residue set is its first term plus the set of its successor, so every
// state is processed once.
ModulusScan scan_modulus(const std::vector<std::int64_t>& coeffs, std::uint64_t M) {
  const std::size_t r = coeffs.size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < r; ++i) count *= M;

  std::vector<std::uint64_t> c(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t v = coeffs[i] % static_cast<std::int64_t>(M);
    c[i] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(M) : v);
  }
  // State (s_0, ..., s_{r-1}) is encoded with s_0 most significant, so the
  // encoding order is lexicographic in the initial tuple.
  std::uint64_t top = count / M;
  auto decode = [&](std::uint64_t code) {
    std::vector<std::uint64_t> s(r);
    for (std::size_t i = r; i-- > 0;) {
      s[i] = code % M;
      code /= M;
    }
    return s;
  };
  auto successor = [&](std::uint64_t code) {
    const auto s = decode(code);
    std::uint64_t next = 0;
    for (std::size_t i = 1; i <= r; ++i) next = (next + c[i - 1] * s[r - i]) % M;
    return (code % top) * M + next;
  };
  auto first_term = [&](std::uint64_t code) { return code / top; };

  const std::size_t words = (M + 63) / 64;
  std::vector<std::uint64_t> bits(count * words, 0);
  std::vector<std::uint64_t> tail(count, 0), period(count, 0);
  std::vector<std::uint8_t> color(count, 0);  // 0 new, 1 on stack, 2 done
  std::vector<std::uint64_t> path;
  std::vector<std::uint64_t> pos(count, 0);

  auto set_bit = [&](std::uint64_t state, std::uint64_t residue) {
    bits[state * words + residue / 64] |= std::uint64_t{1} << (residue % 64);
  };
  auto merge_bits = [&](std::uint64_t dst, std::uint64_t src) {
    for (std::size_t w = 0; w < words; ++w) bits[dst * words + w] |= bits[src * words + w];
  };

  for (std::uint64_t start = 0; start < count; ++start) {
    if (color[start] != 0) continue;
    path.clear();
    std::uint64_t cur = start;
    while (color[cur] == 0) {
      color[cur] = 1;
      pos[cur] = path.size();
      path.push_back(cur);
      cur = successor(cur);
    }
    std::size_t unwind_from = path.size();
    if (color[cur] == 1) {
      // Cycle path[pos[cur]..]: shared residue set, tail 0.
      const std::size_t begin = pos[cur];
      const std::uint64_t len = path.size() - begin;
      const std::uint64_t head = path[begin];
      for (std::size_t i = begin; i < path.size(); ++i) set_bit(head, first_term(path[i]));
      for (std::size_t i = begin; i < path.size(); ++i) {
        const std::uint64_t s = path[i];
        if (s != head) merge_bits(s, head);
        tail[s] = 0;
        period[s] = len;
        color[s] = 2;
      }
      unwind_from = begin;
    }
    for (std::size_t i = unwind_from; i-- > 0;) {
      const std::uint64_t s = path[i];
      const std::uint64_t nx = successor(s);
      merge_bits(s, nx);
      set_bit(s, first_term(s));
      tail[s] = tail[nx] + 1;
      period[s] = period[nx];
      color[s] = 2;
    }
  }

  ModulusScan out;
  out.M = M;
  out.hits.reserve(count);
  for (std::uint64_t s = 0; s < count; ++s) {
    std::uint64_t distinct = 0;
    for (std::size_t w = 0; w < words; ++w) distinct += std::popcount(bits[s * words + w]);
    out.hits.push_back({M, decode(s), distinct, tail[s], period[s]});
  }
  return out;
}

}  // namespace

bool ScanResult::realizes(std::uint64_t m, std::uint64_t M) const {
  const auto it = counts_by_modulus.find(M);
  return it != counts_by_modulus.end() && it->second.count(m) != 0;
}

ScanResult mset_scan(const IntPoly& g, std::uint64_t max_modulus, const ScanBudget& budget, unsigned threads,
                     bool keep_all_states) {
  if (!g.is_monic() || g.degree() < 1) throw DomainError("mset_scan: g must be monic and nonconstant");
  const std::size_t r = static_cast<std::size_t>(g.degree());
  std::vector<std::int64_t> coeffs(r);
  for (std::size_t i = 1; i <= r; ++i) {
    const Int c = -g.coeff(r - i);
    if (!c.fits_slong_p()) throw DomainError("mset_scan: coefficient too large");
    coeffs[i - 1] = c.get_si();
  }

  ScanResult result;
  // Moduli admitted by the state budget, in order.
  std::vector<std::uint64_t> moduli;
  std::uint64_t total = 0;
  for (std::uint64_t M = 2; M <= max_modulus; ++M) {
    Int states = pow(Int(static_cast<unsigned long>(M)), r);
    if (states > budget.max_states || total + to_u64(states) > budget.max_states) {
      result.partial = true;
      break;
    }
    total += to_u64(states);
    moduli.push_back(M);
  }

  if (threads == 0) threads = 1;
  std::vector<ModulusScan> scans(moduli.size());
  if (threads == 1) {
    for (std::size_t i = 0; i < moduli.size(); ++i) scans[i] = scan_modulus(coeffs, moduli[i]);
  } else {
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.push_back(std::async(std::launch::async, [&, t] {
        for (std::size_t i = t; i < moduli.size(); i += threads) scans[i] = scan_modulus(coeffs, moduli[i]);
      }));
    }
    for (auto& w : workers) w.get();
  }

  for (auto& scan : scans) {
    auto& counts = result.counts_by_modulus[scan.M];
    for (auto& hit : scan.hits) {
      counts.insert(hit.distinct);
      if (!result.first_hit.count(hit.distinct)) result.first_hit.emplace(hit.distinct, hit);
      if (keep_all_states) result.all_states.push_back(hit);
    }
    result.max_modulus = scan.M;
  }
  return result;
}

void write_scan_csv(std::ostream& out, const ScanResult& result, bool all_states) {
  out << "M,init,distinct_count,tail,period\n";
  auto row = [&](const ScanHit& h) {
    out << h.M << ',';
    for (std::size_t i = 0; i < h.init.size(); ++i) out << (i ? ";" : "") << h.init[i];
    out << ',' << h.distinct << ',' << h.tail << ',' << h.period << '\n';
  };
  if (all_states) {
    for (const auto& h : result.all_states) row(h);
  } else {
    for (const auto& [m, h] : result.first_hit) row(h);
  }
}

}  // namespace msetforge
