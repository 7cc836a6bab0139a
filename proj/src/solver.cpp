#include "temporepair/solver.hpp"

#include <algorithm>

namespace temporepair {

Var Solver::new_var() {
  const Var var = static_cast<Var>(assign_.size());
  assign_.push_back(-1);
  var_level_.push_back(0);
  var_reason_.push_back(kNoReason);
  seen_.push_back(false);
  watches_.emplace_back();
  watches_.emplace_back();
  return var;
}

void Solver::add_clause(std::vector<Lit> lits) {
  if (!ok_) return;
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i + 1 < lits.size(); ++i) {
    if (lits[i + 1] == lit_not(lits[i])) return;  // tautology
  }
  ++problem_clauses_;
  if (lits.empty()) {
    ok_ = false;
    return;
  }
  if (lits.size() == 1) {
    unit_clauses_.push_back(lits[0]);
    return;
  }
  attach_clause(std::move(lits));
}

std::uint32_t Solver::attach_clause(std::vector<Lit> lits) {
  const std::uint32_t index = static_cast<std::uint32_t>(clauses_.size());
  watches_[lit_not(lits[0])].push_back(index);
  watches_[lit_not(lits[1])].push_back(index);
  clauses_.push_back(std::move(lits));
  return index;
}

void Solver::enqueue(Lit lit, std::uint32_t reason) {
  const Var var = lit_var(lit);
  assign_[var] = lit_negated(lit) ? 0 : 1;
  var_level_[var] = static_cast<std::uint32_t>(level());
  var_reason_[var] = reason;
  trail_.push_back(lit);
}

void Solver::backtrack(std::size_t target_level) {
  if (level() <= target_level) return;
  const std::size_t keep = trail_limits_[target_level];
  for (std::size_t i = trail_.size(); i-- > keep;) {
    assign_[lit_var(trail_[i])] = -1;
  }
  trail_.resize(keep);
  trail_limits_.resize(target_level);
  propagation_head_ = keep;
}

std::uint32_t Solver::propagate() {
  while (propagation_head_ < trail_.size()) {
    const Lit p = trail_[propagation_head_++];
    ++stats_.propagations;
    std::vector<std::uint32_t>& watch_list = watches_[p];
    std::size_t kept = 0;
    for (std::size_t wi = 0; wi < watch_list.size(); ++wi) {
      const std::uint32_t ci = watch_list[wi];
      std::vector<Lit>& clause = clauses_[ci];
      const Lit false_lit = lit_not(p);
      if (clause[0] == false_lit) std::swap(clause[0], clause[1]);
      // clause[1] == false_lit now.
      if (value_is_true(clause[0])) {
        watch_list[kept++] = ci;
        continue;
      }
      bool moved = false;
      for (std::size_t k = 2; k < clause.size(); ++k) {
        if (!value_is_false(clause[k])) {
          std::swap(clause[1], clause[k]);
          watches_[lit_not(clause[1])].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;
      if (unassigned(clause[0])) {
        enqueue(clause[0], ci);
        watch_list[kept++] = ci;
        continue;
      }
      // Conflict: clause is fully false. Keep the remaining watches intact.
      for (std::size_t rest = wi; rest < watch_list.size(); ++rest) {
        watch_list[kept++] = watch_list[rest];
      }
      watch_list.resize(kept);
      return ci;
    }
    watch_list.resize(kept);
  }
  return kNoReason;
}

void Solver::analyze(std::uint32_t conflict, std::vector<Lit>& learnt,
                     std::size_t& backjump_level) {
  learnt.clear();
  learnt.push_back(0);  // placeholder for the asserting literal
  std::size_t unresolved_at_level = 0;
  Lit pivot = 0;
  std::size_t trail_index = trail_.size();
  bool have_pivot = false;

  for (;;) {
    const std::vector<Lit>& clause = clauses_[conflict];
    for (const Lit q : clause) {
      if (have_pivot && lit_var(q) == lit_var(pivot)) continue;
      const Var var = lit_var(q);
      if (seen_[var] || var_level_[var] == 0) continue;
      seen_[var] = true;
      if (var_level_[var] >= level()) {
        ++unresolved_at_level;
      } else {
        learnt.push_back(q);
      }
    }
    while (!seen_[lit_var(trail_[trail_index - 1])]) --trail_index;
    --trail_index;
    pivot = lit_not(trail_[trail_index]);
    have_pivot = true;
    seen_[lit_var(pivot)] = false;
    --unresolved_at_level;
    if (unresolved_at_level == 0) break;
    conflict = var_reason_[lit_var(pivot)];
  }
  learnt[0] = pivot;

  backjump_level = 0;
  std::size_t max_index = 1;
  for (std::size_t i = 1; i < learnt.size(); ++i) {
    const std::size_t lit_level = var_level_[lit_var(learnt[i])];
    if (lit_level > backjump_level) {
      backjump_level = lit_level;
      max_index = i;
    }
  }
  if (learnt.size() > 1) std::swap(learnt[1], learnt[max_index]);
  for (std::size_t i = 1; i < learnt.size(); ++i) {
    seen_[lit_var(learnt[i])] = false;
  }
}

// Collects the assumptions responsible for a conflict that occurred before
// any real decision was made. Either a clause went fully false during the
// assumption phase or an assumption literal itself was already false.
void Solver::analyze_final(std::uint32_t conflict_clause, Lit failed_assumption) {
  core_.clear();
  std::vector<Var> to_clear;
  if (conflict_clause != kNoReason) {
    for (const Lit q : clauses_[conflict_clause]) {
      const Var var = lit_var(q);
      if (var_level_[var] > 0 && !seen_[var]) {
        seen_[var] = true;
        to_clear.push_back(var);
      }
    }
  } else {
    core_.push_back(failed_assumption);
    const Var var = lit_var(failed_assumption);
    if (var_level_[var] > 0 && !seen_[var]) {
      seen_[var] = true;
      to_clear.push_back(var);
    }
  }
  const std::size_t floor =
      trail_limits_.empty() ? trail_.size() : trail_limits_[0];
  for (std::size_t i = trail_.size(); i-- > floor;) {
    const Lit lit = trail_[i];
    const Var var = lit_var(lit);
    if (!seen_[var]) continue;
    const std::uint32_t reason = var_reason_[var];
    if (reason == kNoReason) {
      core_.push_back(lit);  // an assumption
    } else {
      for (const Lit q : clauses_[reason]) {
        const Var qv = lit_var(q);
        if (qv != var && var_level_[qv] > 0 && !seen_[qv]) {
          seen_[qv] = true;
          to_clear.push_back(qv);
        }
      }
    }
  }
  for (const Var var : to_clear) seen_[var] = false;
  std::sort(core_.begin(), core_.end());
  core_.erase(std::unique(core_.begin(), core_.end()), core_.end());
}

SolveVerdict Solver::solve(const std::vector<Lit>& assumptions,
                           std::uint64_t max_decisions) {
  stats_.decisions = 0;
  stats_.propagations = 0;
  stats_.conflicts = 0;
  stats_.variables = num_vars();
  stats_.clauses = problem_clauses_;
  core_.clear();

  if (!ok_) return SolveVerdict::Unsat;
  backtrack(0);
  propagation_head_ = 0;  // replay level-0 propagation for new clauses
  for (const Lit unit : unit_clauses_) {
    if (value_is_false(unit)) return SolveVerdict::Unsat;
    if (unassigned(unit)) enqueue(unit, kNoReason);
  }
  if (propagate() != kNoReason) {
    ok_ = false;
    return SolveVerdict::Unsat;
  }

  std::size_t placed_assumptions = 0;
  Var search_hint = 0;
  std::vector<Lit> learnt;

  for (;;) {
    // Place pending assumptions, then branch.
    Lit branch = 0;
    bool have_branch = false;
    while (placed_assumptions < assumptions.size()) {
      const Lit a = assumptions[placed_assumptions];
      if (value_is_true(a)) {
        new_level();  // keep level <-> assumption-index mapping stable
        ++placed_assumptions;
        continue;
      }
      if (value_is_false(a)) {
        analyze_final(kNoReason, a);
        backtrack(0);
        return SolveVerdict::Unsat;
      }
      branch = a;
      have_branch = true;
      ++placed_assumptions;
      break;
    }
    if (!have_branch) {
      while (search_hint < num_vars() && assign_[search_hint] >= 0) {
        ++search_hint;
      }
      if (search_hint == num_vars()) {
        model_ = assign_;
        backtrack(0);
        return SolveVerdict::Sat;
      }
      if (stats_.decisions >= max_decisions) {
        backtrack(0);
        return SolveVerdict::BudgetExceeded;
      }
      ++stats_.decisions;
      branch = make_lit(search_hint, true);  // try false first
    }
    new_level();
    enqueue(branch, kNoReason);

    std::uint32_t conflict;
    while ((conflict = propagate()) != kNoReason) {
      ++stats_.conflicts;
      if (level() == 0) {
        ok_ = false;
        return SolveVerdict::Unsat;
      }
      if (level() <= placed_assumptions) {
        analyze_final(conflict, 0);
        backtrack(0);
        return SolveVerdict::Unsat;
      }
      std::size_t backjump_level = 0;
      analyze(conflict, learnt, backjump_level);
      // Never jump into the middle of the assumption prefix without
      // replaying it: clamp to the assumption boundary is implicit since
      // backjump_level derives from literal levels.
      backtrack(backjump_level);
      if (backjump_level < placed_assumptions) {
        placed_assumptions = backjump_level;
      }
      search_hint = 0;
      if (learnt.size() == 1) {
        unit_clauses_.push_back(learnt[0]);
        if (level() > 0) {
          backtrack(0);
          placed_assumptions = 0;
        }
        if (value_is_false(learnt[0])) {
          ok_ = false;
          return SolveVerdict::Unsat;
        }
        if (unassigned(learnt[0])) enqueue(learnt[0], kNoReason);
      } else {
        const std::uint32_t ci = attach_clause(learnt);
        enqueue(learnt[0], ci);
      }
    }
  }
}

}  // namespace temporepair
