#ifndef TEMPOREPAIR_EXPLAIN_HPP
#define TEMPOREPAIR_EXPLAIN_HPP

// Minimal conflict extraction and the inconsistency graph.
//
// A conflict set is an inclusion-minimal inconsistent subset of the ABox
// (the TBox is treated as fixed). Extraction shrinks a known-inconsistent
// seed by deletion in ascending (timestamp, symbol, arguments) order; the
// result is re-verified against per-subset consistency checks, so the fast
// selector-based path cannot leak an unminimal or spurious answer.
// Enumeration explores removal sets in breadth-first order, reusing known
// conflicts and pruning supersets of removal sets already known to repair
// the ABox; it stops early once the conflict budget is hit and reports the
// enumeration as incomplete.
//
// Each conflict carries a label naming the terminological side of the
// clash: the first constraint whose removal resolves it, stamped with the
// latest member timestamp, plus "[rigid: X]" notes for every persistence
// constraint involved, e.g. "Minor & Adult <= Bot @3 [rigid: Adult]".

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "temporepair/kb.hpp"
#include "temporepair/reason.hpp"

namespace temporepair {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExplainOptions {
  ReasonOptions reason;
  std::size_t mus_budget = 256;  // conflicts kept before giving up on the rest
};

struct ConflictSet {
  std::vector<Assertion> members;  // ascending (timestamp, symbol, arguments)
  std::string label;

  friend bool operator==(const ConflictSet&, const ConflictSet&) = default;
};

struct MusEnumeration {
  std::vector<ConflictSet> conflicts;
  bool complete = true;
};

/// Shrinks an inconsistent seed (a subset of kb's ABox) to one minimal
/// conflict. Throws std::invalid_argument if the seed is consistent or not
/// drawn from the ABox, BudgetError if the solver budget runs out.
std::vector<Assertion> shrink_mus(const TemporalKb& kb,
                                  const std::vector<Assertion>& seed,
                                  const ExplainOptions& options = {});

/// All minimal conflicts of kb's ABox, up to the budget. Empty iff the KB is
/// consistent.
MusEnumeration enumerate_muses(const TemporalKb& kb,
                               const ExplainOptions& options = {});

/// Label for one minimal conflict; see the header comment for the format.
std::string conflict_label(const TemporalKb& kb,
                           const std::vector<Assertion>& mus,
                           const ReasonOptions& options = {});

struct GraphVertex {
  Assertion assertion;
  std::size_t degree = 0;  // number of conflicts the assertion belongs to
};

struct GraphEdge {
  std::vector<std::size_t> members;  // vertex indices, ascending; size 1 = self-loop
  std::string label;
};

struct InconsistencyGraph {
  std::vector<GraphVertex> vertices;  // one per ABox assertion, ABox order
  std::vector<GraphEdge> edges;       // one per conflict, enumeration order
  bool complete = true;
};

InconsistencyGraph build_graph(const TemporalKb& kb,
                               const ExplainOptions& options = {});
InconsistencyGraph build_graph(const TemporalKb& kb,
                               const MusEnumeration& enumeration);

/// Graphviz rendering; conflicts of three or more assertions appear as a
/// point node connected to every member.
std::string graph_to_dot(const InconsistencyGraph& graph);

}  // namespace temporepair

#endif  // TEMPOREPAIR_EXPLAIN_HPP
