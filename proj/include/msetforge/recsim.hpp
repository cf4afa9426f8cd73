#pragma once

// Integer linear recurrences modulo M: orbit simulation, the construction
// behind witness certificates, and exhaustive residue-count scans.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <vector>

#include "msetforge/common.hpp"
#include "msetforge/polycyc.hpp"
#include "msetforge/witness_record.hpp"

namespace msetforge {

/// s_n = c_1 s_{n-1} + ... + c_r s_{n-r} taken modulo M.
struct RecurrenceSpec {
  std::vector<Int> coeffs;  // c_1 .. c_r
  std::vector<Int> init;    // s_0 .. s_{r-1}
  Int M;
};

/// g = X^r - c_1 X^{r-1} - ... - c_r. Throws DomainError for non-monic g,
/// len(init) != deg g or M < 2.
RecurrenceSpec spec_from_poly(const IntPoly& g, std::vector<Int> init, const Int& M);

struct OrbitSummary {
  std::vector<Int> residues;  // sorted, distinct
  std::uint64_t tail_length = 0;
  std::uint64_t period = 0;

  std::size_t distinct() const { return residues.size(); }
};

/// Iterates state vectors until the first repeat. Throws DomainError when
/// more than `max_steps` states are visited.
OrbitSummary orbit(const RecurrenceSpec& spec, std::uint64_t max_steps = 50'000'000);

/// s_0 .. s_{count-1} mod M.
std::vector<Int> sequence_terms(const RecurrenceSpec& spec, std::uint64_t count);

/// Initial terms 1, a, ..., a^{r-1} mod p. Throws DomainError unless p | g(a).
RecurrenceSpec lemma1_spec(const IntPoly& g, const Int& a, const Int& p);

/// The recurrence from lemma1_spec(w.g, w.a, w.p) has exactly the residues
/// 1, a, ..., a^{m-1} mod p.
bool verify_witness(const Witness& w);

/// s_n = a^n (mod p) for every n < count.
bool power_congruence_holds(const RecurrenceSpec& spec, const Int& a, std::uint64_t count);

struct ScanHit {
  std::uint64_t M = 0;
  std::vector<std::uint64_t> init;
  std::uint64_t distinct = 0;
  std::uint64_t tail = 0;
  std::uint64_t period = 0;
};

struct ScanBudget {
  std::uint64_t max_states = 50'000'000;  // summed over all moduli
};

struct ScanResult {
  std::uint64_t max_modulus = 0;       // last modulus fully scanned
  bool partial = false;                // budget stopped the scan early
  std::map<std::uint64_t, ScanHit> first_hit;  // m -> smallest (M, init)
  std::map<std::uint64_t, std::set<std::uint64_t>> counts_by_modulus;
  std::vector<ScanHit> all_states;     // only filled when requested

  bool realizes(std::uint64_t m, std::uint64_t M) const;
};

/// Every initial tuple in [0, M)^r for 2 <= M <= max_modulus. Moduli are
/// split across `threads` workers; the merged result does not depend on it.
ScanResult mset_scan(const IntPoly& g, std::uint64_t max_modulus, const ScanBudget& budget = {},
                     unsigned threads = 1, bool keep_all_states = false);

/// CSV with header M,init,distinct_count,tail,period; init is
/// semicolon-separated. Writes first hits, or every state when recorded.
void write_scan_csv(std::ostream& out, const ScanResult& result, bool all_states = false);

}  // namespace msetforge
