#ifndef TEMPOREPAIR_REPAIR_HPP
#define TEMPOREPAIR_REPAIR_HPP

// Best temporal repair: remove a low-cost set of assertions so the KB
// becomes consistent, preferring to keep assertions that are expensive in
// the temporal weighting, then restore any removal the final state tolerates.
//
// Weighting: an assertion's cost is its timestamp, plus a per-predicate
// lifetime bonus when the predicate is rigid (a rigid concept or a global
// role) and the assertion is positive, because such an assertion constrains
// every later time point too. The bonus comes from the sigma map, else
// default_sigma, else the observed ABox span (max - min timestamp + 1).
//
// Removal is a greedy weighted vertex cover of the conflict graph: pick the
// assertion in the most conflicts, prefer cheaper weights on ties, settle
// remaining ties by (predicate, arguments, timestamp) order or by a seeded
// shuffle. Conflicts can hide behind other conflicts when the enumeration
// budget truncates, so detection and covering repeat in rounds until the
// remainder verifies consistent. A final pass walks the removed assertions
// in descending weight and reinstates every one the repaired ABox accepts,
// making the result maximal.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "temporepair/explain.hpp"
#include "temporepair/kb.hpp"

namespace temporepair {

/// The terminology is inconsistent with an empty ABox; no removal helps.
struct RepairError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RepairConfig {
  std::map<std::string, unsigned> sigma;  // per-predicate lifetime bonus
  std::optional<unsigned> default_sigma;  // bonus for unlisted rigid predicates
  std::optional<std::uint64_t> tie_seed;  // randomize the final tie-break
  ExplainOptions explain;
};

unsigned temporal_weight(const Assertion& assertion, const RepairConfig& config,
                         const TemporalKb& kb);

struct CoverStep {
  std::size_t vertex = 0;         // index into graph.vertices
  std::size_t degree = 0;         // live conflicts when picked
  std::size_t edges_covered = 0;  // conflicts settled by this pick
};

/// Greedy cover of every edge, self-loop vertices first (nothing else can
/// cover them). `weights` is indexed like graph.vertices.
std::vector<CoverStep> greedy_cover(const InconsistencyGraph& graph,
                                    const std::vector<unsigned>& weights,
                                    const RepairConfig& config);

struct RemovalStep {
  Assertion assertion;
  std::size_t step = 0;   // 1-based across the whole run
  std::size_t round = 0;  // detection round that removed it
  std::size_t degree = 0;
  unsigned weight = 0;
  std::size_t edges_covered = 0;
};

struct RepairResult {
  /// Removal order; entries reinstated by the restoration pass are dropped,
  /// surviving step numbers keep their original values.
  std::vector<RemovalStep> removed;
  std::vector<Assertion> repaired;  // surviving assertions, input order
  std::size_t iterations = 0;       // rounds that removed something
  /// False only when a restoration check ran out of budget, leaving some
  /// candidate undecided.
  bool maximal = true;
};

/// Throws RepairError when the terminology alone is inconsistent and
/// BudgetError when conflict detection exhausts the solver budget.
/// Invariant: removed and repaired partition the input ABox.
RepairResult repair(const TemporalKb& kb, const RepairConfig& config = {});

}  // namespace temporepair

#endif  // TEMPOREPAIR_REPAIR_HPP
