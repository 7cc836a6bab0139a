#ifndef TEMPOREPAIR_REASON_HPP
#define TEMPOREPAIR_REASON_HPP

// Bounded-domain propositional grounding of a time-grounded KB.
//
// Domain = named individuals occurring in the grounded ABox, plus one fresh
// witness element per (role base name, direction) occurring under an
// existential in the grounded TBox (replicated witness_depth times), plus a
// root element when no individual occurs. Witness elements carry an `active`
// guard: GCI instances on a witness and every role edge touching it are
// conditioned on the guard, so satisfiability is decided over named
// individuals plus ANY subset of the witnesses.
//
// Encoding per domain element d (and pair (d, e) for roles):
//  - a variable per (time-indexed concept, d) and per (time-indexed role,
//    d, e); existentials become a disjunction over all fillers, with
//    auxiliary definition variables introduced per distinct subtree;
//  - each grounded GCI yields an implication per element;
//  - functionality yields pairwise at-most-one exclusions, witnesses
//    included, with no selector guard;
//  - role inclusions yield edge-wise implications;
//  - every ABox assertion gets a selector variable; the assertion's literal
//    is enforced only when its selector is assumed, so consistency of any
//    ABox subset is one incremental solver call.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "temporepair/kb.hpp"
#include "temporepair/solver.hpp"
#include "temporepair/translate.hpp"

namespace temporepair {

enum class Verdict : unsigned char { Consistent, Inconsistent, BudgetExceeded };

const char* to_string(Verdict verdict);

struct CheckResult {
  Verdict verdict = Verdict::Consistent;
  SolveStats stats;
};

struct GroundingOptions {
  unsigned witness_depth = 1;
};

struct ReasonOptions {
  GroundingOptions grounding;
  TranslateOptions translate;
  std::uint64_t max_decisions = UINT64_MAX;
};

struct Domain {
  std::vector<std::string> elements;  // named, then root (if any), then witnesses
  std::size_t always_active_count = 0;  // prefix without an active guard

  std::size_t size() const { return elements.size(); }
};

Domain build_domain(const GroundKb& kb, const GroundingOptions& options = {});

struct GroundingStats {
  std::size_t gci_clauses = 0;
  std::size_t funct_clauses = 0;
  std::size_t role_inclusion_clauses = 0;
  std::size_t guard_clauses = 0;
  std::size_t selector_clauses = 0;
  std::size_t definition_clauses = 0;
};

/// Clause set for one grounded KB over one domain; reusable across many
/// ABox-subset consistency queries via selector assumptions.
class Grounding {
 public:
  Grounding(const GroundKb& kb, const Domain& domain,
            const GroundingOptions& options = {});

  /// Consistency of the ABox subset marked true in `enabled` (indexed like
  /// the grounded ABox). On Inconsistent, core_indices() names an enabled
  /// subset sufficient for the conflict.
  CheckResult solve(const std::vector<bool>& enabled,
                    std::uint64_t max_decisions = UINT64_MAX);

  const std::vector<std::size_t>& core_indices() const { return core_indices_; }
  const Domain& domain() const { return domain_; }
  const GroundingStats& clause_stats() const { return clause_stats_; }
  std::size_t variable_count() const { return solver_.num_vars(); }
  std::size_t clause_count() const { return solver_.num_clauses(); }

 private:
  Lit encode(const Concept& c, std::size_t element);
  Lit concept_literal(const TimeIndexedName& name, std::size_t element);
  Lit role_literal(const TimeIndexedName& name, std::size_t from, std::size_t to);
  std::uint32_t intern(const Concept& c);

  Solver solver_;
  Domain domain_;
  Lit true_lit_ = 0;
  std::map<TimeIndexedName, std::uint32_t> concept_ids_;
  std::map<TimeIndexedName, std::uint32_t> role_ids_;
  std::vector<Var> concept_vars_;  // concept id * |domain| + element
  std::vector<Var> role_vars_;     // (role id * |domain| + from) * |domain| + to
  std::vector<Var> active_vars_;   // per element; UINT32_MAX when always active
  std::map<std::string, std::uint32_t> intern_keys_;
  std::map<std::pair<std::uint32_t, std::size_t>, Lit> definition_cache_;
  std::vector<Var> selectors_;
  std::vector<std::size_t> core_indices_;
  GroundingStats clause_stats_;
};

/// One-shot satisfiability of a grounded KB restricted to an ABox subset.
CheckResult check_sat(const GroundKb& kb, const std::vector<bool>& enabled,
                      const ReasonOptions& options = {});

/// Consistency of (kb's TBox and symbols, abox_subset): translates the pair
/// with the horizon recomputed from the subset, grounds, and solves with
/// every assertion enabled.
CheckResult check_consistency(const TemporalKb& kb,
                              const std::vector<Assertion>& abox_subset,
                              const ReasonOptions& options = {});

/// Consistency of the KB with its own full ABox.
CheckResult check_consistency(const TemporalKb& kb,
                              const ReasonOptions& options = {});

}  // namespace temporepair

#endif  // TEMPOREPAIR_REASON_HPP
