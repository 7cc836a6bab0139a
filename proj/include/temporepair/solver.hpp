#ifndef TEMPOREPAIR_SOLVER_HPP
#define TEMPOREPAIR_SOLVER_HPP

// Self-contained propositional engine: unit propagation over two watched
// literals, first-UIP clause learning with backjumping, and assumption
// handling that yields an assumption core on unsatisfiable outcomes.
//
// Everything is deterministic: decisions take the lowest-indexed unassigned
// variable, trying false first, and there are no restarts and no random
// seeds. Budgets cap the number of decisions; exceeding the budget is a
// distinct outcome, never a wrong answer.

#include <cstdint>
#include <vector>

namespace temporepair {

using Var = std::uint32_t;
using Lit = std::uint32_t;  // 2 * var + (negated ? 1 : 0)

inline Lit make_lit(Var var, bool negated = false) {
  return var * 2 + (negated ? 1u : 0u);
}
inline Var lit_var(Lit lit) { return lit >> 1; }
inline bool lit_negated(Lit lit) { return (lit & 1u) != 0; }
inline Lit lit_not(Lit lit) { return lit ^ 1u; }

enum class SolveVerdict : unsigned char { Sat, Unsat, BudgetExceeded };

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::size_t variables = 0;
  std::size_t clauses = 0;  // problem clauses, excluding learnt ones
};

class Solver {
 public:
  Var new_var();
  std::size_t num_vars() const { return assign_.size(); }
  std::size_t num_clauses() const { return problem_clauses_; }

  /// Adds a problem clause. Duplicate literals collapse, tautologies are
  /// dropped, the empty clause marks the formula unsatisfiable.
  void add_clause(std::vector<Lit> lits);

  /// Solves under the given assumptions. Statistics for this call are
  /// available via stats(); on Unsat, core() holds a subset of the
  /// assumptions sufficient for the conflict (empty when the formula is
  /// unsatisfiable on its own).
  SolveVerdict solve(const std::vector<Lit>& assumptions,
                     std::uint64_t max_decisions = UINT64_MAX);

  /// Value of a variable in the model found by the last Sat outcome.
  bool model_value(Var var) const { return model_[var] == 1; }

  const std::vector<Lit>& core() const { return core_; }
  const SolveStats& stats() const { return stats_; }

 private:
  static constexpr std::uint32_t kNoReason = UINT32_MAX;

  bool value_is_true(Lit lit) const {
    const std::int8_t v = assign_[lit_var(lit)];
    return v >= 0 && (v == 1) != lit_negated(lit);
  }
  bool value_is_false(Lit lit) const {
    const std::int8_t v = assign_[lit_var(lit)];
    return v >= 0 && (v == 1) == lit_negated(lit);
  }
  bool unassigned(Lit lit) const { return assign_[lit_var(lit)] < 0; }

  void enqueue(Lit lit, std::uint32_t reason);
  std::uint32_t propagate();  // kNoReason when no conflict, else clause index
  void new_level() { trail_limits_.push_back(trail_.size()); }
  std::size_t level() const { return trail_limits_.size(); }
  void backtrack(std::size_t target_level);
  std::uint32_t attach_clause(std::vector<Lit> lits);  // size >= 2
  void analyze(std::uint32_t conflict, std::vector<Lit>& learnt,
               std::size_t& backjump_level);
  void analyze_final(std::uint32_t conflict_clause, Lit failed_assumption);

  std::vector<std::vector<Lit>> clauses_;
  std::vector<std::vector<std::uint32_t>> watches_;  // indexed by literal
  std::vector<std::int8_t> assign_;                  // -1 / 0 / 1 per variable
  std::vector<std::uint32_t> var_level_;
  std::vector<std::uint32_t> var_reason_;
  std::vector<Lit> trail_;
  std::vector<std::size_t> trail_limits_;
  std::size_t propagation_head_ = 0;
  std::vector<Lit> unit_clauses_;
  std::vector<std::int8_t> model_;
  std::vector<bool> seen_;  // analyze scratch
  std::vector<Lit> core_;
  SolveStats stats_;
  std::size_t problem_clauses_ = 0;
  bool ok_ = true;
};

}  // namespace temporepair

#endif  // TEMPOREPAIR_SOLVER_HPP
