#ifndef TEMPOREPAIR_ORACLE_HPP
#define TEMPOREPAIR_ORACLE_HPP

// Slow reference decision procedure for bounded-domain consistency, used to
// cross-check the grounding pipeline. It encodes the semantics directly: one
// propositional variable per (concept name, element, time index) and per
// (role name, element pair, time index), one constraint instance per (GCI,
// element, time index), converted to clauses by negation normal form and
// distribution. No auxiliary variables, no witness elements, no assertion
// selectors; the time window and rigid-concept persistence are recomputed
// here rather than taken from the translation.
//
// Domain handling: named individuals are pairwise distinct; candidate domain
// sizes |named|..max(|named|, max_domain_size) are tried in ascending order
// (satisfiability is not monotone in the domain size, so each is checked).
//
// Global roles: Forward keeps an edge once present at every later index,
// matching what the translated pipeline enforces. Equality makes the edge
// relation identical at all indices.

#include <cstdint>
#include <optional>
#include <string>

#include "temporepair/kb.hpp"
#include "temporepair/reason.hpp"
#include "temporepair/solver.hpp"

namespace temporepair {

enum class Rigidity : unsigned char { Forward, Equality };

struct OracleOptions {
  std::size_t max_domain_size = 4;
  bool strict_future = false;
  Rigidity rigidity = Rigidity::Forward;
  std::uint64_t max_decisions = UINT64_MAX;  // per candidate domain size
  std::uint64_t max_clauses = 5'000'000;     // distribution safety cap
  /// Last encoded time index. Defaults to the computed requirement (latest
  /// ABox timestamp plus the temporal depth); an explicit value must still
  /// cover every ABox timestamp. Narrower-than-required windows make the
  /// check an under-approximation.
  std::optional<unsigned> horizon;
};

struct OracleResult {
  Verdict verdict = Verdict::Consistent;
  std::size_t domain_size = 0;  // satisfying size when Consistent
  SolveStats stats;             // last solver run
};

OracleResult oracle_check(const TemporalKb& kb, const OracleOptions& options = {});

}  // namespace temporepair

#endif  // TEMPOREPAIR_ORACLE_HPP
