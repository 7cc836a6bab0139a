#include "temporepair/reason.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "temporepair/log.hpp"

namespace temporepair {

namespace {

void collect_concept_names(const Concept& c, std::set<TimeIndexedName>& concepts,
                           std::set<TimeIndexedName>& roles) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return;
    case ConceptKind::Name:
      if (!c.time_index().has_value()) {
        throw std::invalid_argument("grounding requires time-indexed concept names");
      }
      concepts.insert({c.base(), *c.time_index()});
      return;
    case ConceptKind::Exists: {
      const RoleExpr& role = c.role();
      if (!role.index.has_value()) {
        throw std::invalid_argument("grounding requires time-indexed roles");
      }
      roles.insert({role.name, *role.index});
      return;
    }
    case ConceptKind::Not:
      collect_concept_names(c.operand(), concepts, roles);
      return;
    case ConceptKind::SometimeF:
    case ConceptKind::AlwaysF:
      throw std::invalid_argument("grounding requires future-free concepts");
    case ConceptKind::And:
    case ConceptKind::Or:
      collect_concept_names(c.lhs(), concepts, roles);
      collect_concept_names(c.rhs(), concepts, roles);
      return;
  }
}

void collect_witness_roles(const Concept& c,
                           std::set<std::pair<std::string, bool>>& out) {
  switch (c.kind()) {
    case ConceptKind::Exists:
      out.insert({c.role().name, c.role().inverted});
      return;
    case ConceptKind::Not:
      collect_witness_roles(c.operand(), out);
      return;
    case ConceptKind::And:
    case ConceptKind::Or:
      collect_witness_roles(c.lhs(), out);
      collect_witness_roles(c.rhs(), out);
      return;
    default:
      return;
  }
}

}  // namespace

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Consistent:
      return "consistent";
    case Verdict::Inconsistent:
      return "inconsistent";
    case Verdict::BudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

Domain build_domain(const GroundKb& kb, const GroundingOptions& options) {
  Domain domain;

  std::set<std::string> named;
  for (const GroundAssertion& assertion : kb.abox) {
    named.insert(assertion.subject);
    if (assertion.is_role) named.insert(assertion.object);
  }
  domain.elements.assign(named.begin(), named.end());
  if (domain.elements.empty()) {
    // Keep one anchor element so concept satisfiability is meaningful.
    domain.elements.push_back("~root");
  }
  domain.always_active_count = domain.elements.size();

  std::set<std::pair<std::string, bool>> witness_roles;
  for (const GroundGci& gci : kb.gcis) {
    collect_witness_roles(gci.lhs, witness_roles);
    collect_witness_roles(gci.rhs, witness_roles);
  }
  for (unsigned level = 0; level < options.witness_depth; ++level) {
    for (const auto& [base, inverted] : witness_roles) {
      std::string name = "~w" + std::to_string(level) + ":" + base;
      if (inverted) name += "^-";
      domain.elements.push_back(std::move(name));
    }
  }
  return domain;
}

Grounding::Grounding(const GroundKb& kb, const Domain& domain,
                     const GroundingOptions&)
    : domain_(domain) {
  const std::size_t n = domain_.size();

  std::set<TimeIndexedName> concept_names;
  std::set<TimeIndexedName> role_names;
  for (const GroundGci& gci : kb.gcis) {
    collect_concept_names(gci.lhs, concept_names, role_names);
    collect_concept_names(gci.rhs, concept_names, role_names);
  }
  for (const RoleInclusion& inclusion : kb.role_inclusions) {
    role_names.insert(inclusion.sub);
    role_names.insert(inclusion.super);
  }
  for (const GroundFunct& funct : kb.functionality) {
    role_names.insert(funct.role);
  }
  for (const GroundAssertion& assertion : kb.abox) {
    if (assertion.is_role) {
      role_names.insert(assertion.predicate);
    } else {
      concept_names.insert(assertion.predicate);
    }
  }

  const Var true_var = solver_.new_var();
  true_lit_ = make_lit(true_var);
  solver_.add_clause({true_lit_});

  active_vars_.assign(n, UINT32_MAX);
  for (std::size_t elem = domain_.always_active_count; elem < n; ++elem) {
    active_vars_[elem] = solver_.new_var();
  }

  for (const TimeIndexedName& name : concept_names) {
    concept_ids_.emplace(name, static_cast<std::uint32_t>(concept_ids_.size()));
  }
  concept_vars_.resize(concept_ids_.size() * n);
  for (Var& var : concept_vars_) var = solver_.new_var();

  for (const TimeIndexedName& name : role_names) {
    role_ids_.emplace(name, static_cast<std::uint32_t>(role_ids_.size()));
  }
  role_vars_.resize(role_ids_.size() * n * n);
  for (Var& var : role_vars_) var = solver_.new_var();

  // Edges may touch a witness only while it is active.
  for (std::uint32_t rid = 0; rid < role_ids_.size(); ++rid) {
    for (std::size_t from = 0; from < n; ++from) {
      for (std::size_t to = 0; to < n; ++to) {
        const Lit edge = make_lit(role_vars_[(rid * n + from) * n + to]);
        for (std::size_t endpoint : {from, to}) {
          if (active_vars_[endpoint] == UINT32_MAX) continue;
          solver_.add_clause({lit_not(edge), make_lit(active_vars_[endpoint])});
          ++clause_stats_.guard_clauses;
          if (from == to) break;  // one guard is enough for a self edge
        }
      }
    }
  }

  for (const GroundGci& gci : kb.gcis) {
    for (std::size_t elem = 0; elem < n; ++elem) {
      const Lit lhs = encode(gci.lhs, elem);
      const Lit rhs = encode(gci.rhs, elem);
      if (rhs == true_lit_ || lhs == lit_not(true_lit_) || lhs == rhs) continue;
      std::vector<Lit> clause;
      if (active_vars_[elem] != UINT32_MAX) {
        clause.push_back(make_lit(active_vars_[elem], true));
      }
      clause.push_back(lit_not(lhs));
      clause.push_back(rhs);
      solver_.add_clause(std::move(clause));
      ++clause_stats_.gci_clauses;
    }
  }

  for (const RoleInclusion& inclusion : kb.role_inclusions) {
    if (inclusion.sub == inclusion.super) continue;
    const std::uint32_t sub = role_ids_.at(inclusion.sub);
    const std::uint32_t super = role_ids_.at(inclusion.super);
    for (std::size_t from = 0; from < n; ++from) {
      for (std::size_t to = 0; to < n; ++to) {
        solver_.add_clause({make_lit(role_vars_[(sub * n + from) * n + to], true),
                            make_lit(role_vars_[(super * n + from) * n + to])});
        ++clause_stats_.role_inclusion_clauses;
      }
    }
  }

  for (const GroundFunct& funct : kb.functionality) {
    const std::uint32_t rid = role_ids_.at(funct.role);
    // funct(R): per source at most one filler; funct(R^-): per filler at
    // most one source.
    for (std::size_t fixed = 0; fixed < n; ++fixed) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
          const std::size_t first =
              funct.inverse ? (rid * n + a) * n + fixed : (rid * n + fixed) * n + a;
          const std::size_t second =
              funct.inverse ? (rid * n + b) * n + fixed : (rid * n + fixed) * n + b;
          solver_.add_clause({make_lit(role_vars_[first], true),
                              make_lit(role_vars_[second], true)});
          ++clause_stats_.funct_clauses;
        }
      }
    }
  }

  std::map<std::string, std::size_t> element_index;
  for (std::size_t elem = 0; elem < n; ++elem) {
    element_index.emplace(domain_.elements[elem], elem);
  }
  selectors_.reserve(kb.abox.size());
  for (const GroundAssertion& assertion : kb.abox) {
    const Var selector = solver_.new_var();
    selectors_.push_back(selector);
    const std::size_t subject = element_index.at(assertion.subject);
    Lit lit;
    if (assertion.is_role) {
      lit = role_literal(assertion.predicate, subject,
                         element_index.at(assertion.object));
    } else {
      lit = concept_literal(assertion.predicate, subject);
    }
    if (!assertion.positive) lit = lit_not(lit);
    solver_.add_clause({make_lit(selector, true), lit});
    ++clause_stats_.selector_clauses;
  }

  log(LogLevel::Debug,
      "grounding: " + std::to_string(solver_.num_vars()) + " vars, " +
          std::to_string(solver_.num_clauses()) + " clauses, domain " +
          std::to_string(n));
}

std::uint32_t Grounding::intern(const Concept& c) {
  const auto [it, inserted] =
      intern_keys_.emplace(to_string(c), intern_keys_.size());
  return static_cast<std::uint32_t>(it->second);
}

Lit Grounding::concept_literal(const TimeIndexedName& name, std::size_t element) {
  return make_lit(concept_vars_[concept_ids_.at(name) * domain_.size() + element]);
}

Lit Grounding::role_literal(const TimeIndexedName& name, std::size_t from,
                            std::size_t to) {
  const std::size_t n = domain_.size();
  return make_lit(role_vars_[(role_ids_.at(name) * n + from) * n + to]);
}

Lit Grounding::encode(const Concept& c, std::size_t element) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return true_lit_;
    case ConceptKind::Bottom:
      return lit_not(true_lit_);
    case ConceptKind::Name:
      return concept_literal({c.base(), *c.time_index()}, element);
    case ConceptKind::Not:
      return lit_not(encode(c.operand(), element));
    default:
      break;
  }

  const std::pair<std::uint32_t, std::size_t> key{intern(c), element};
  if (const auto it = definition_cache_.find(key); it != definition_cache_.end()) {
    return it->second;
  }

  Lit result;
  if (c.kind() == ConceptKind::Exists) {
    const RoleExpr& role = c.role();
    const TimeIndexedName name{role.name, *role.index};
    const std::size_t n = domain_.size();
    std::vector<Lit> fillers;
    fillers.reserve(n);
    for (std::size_t other = 0; other < n; ++other) {
      fillers.push_back(role.inverted ? role_literal(name, other, element)
                                      : role_literal(name, element, other));
    }
    const Lit aux = make_lit(solver_.new_var());
    std::vector<Lit> closure{lit_not(aux)};
    closure.insert(closure.end(), fillers.begin(), fillers.end());
    solver_.add_clause(std::move(closure));
    ++clause_stats_.definition_clauses;
    for (const Lit filler : fillers) {
      solver_.add_clause({aux, lit_not(filler)});
      ++clause_stats_.definition_clauses;
    }
    result = aux;
  } else {
    const bool is_and = c.kind() == ConceptKind::And;
    const Lit a = encode(c.lhs(), element);
    const Lit b = encode(c.rhs(), element);
    const Lit absorbing = is_and ? lit_not(true_lit_) : true_lit_;
    if (a == b) {
      result = a;
    } else if (a == lit_not(b) || a == absorbing || b == absorbing) {
      result = absorbing;
    } else if (a == lit_not(absorbing)) {
      result = b;
    } else if (b == lit_not(absorbing)) {
      result = a;
    } else {
      const Lit aux = make_lit(solver_.new_var());
      if (is_and) {
        solver_.add_clause({lit_not(aux), a});
        solver_.add_clause({lit_not(aux), b});
        solver_.add_clause({aux, lit_not(a), lit_not(b)});
      } else {
        solver_.add_clause({lit_not(aux), a, b});
        solver_.add_clause({aux, lit_not(a)});
        solver_.add_clause({aux, lit_not(b)});
      }
      clause_stats_.definition_clauses += 3;
      result = aux;
    }
  }

  definition_cache_.emplace(key, result);
  return result;
}

CheckResult Grounding::solve(const std::vector<bool>& enabled,
                             std::uint64_t max_decisions) {
  if (enabled.size() != selectors_.size()) {
    throw std::invalid_argument("enabled mask does not match the abox");
  }
  core_indices_.clear();

  std::vector<Lit> assumptions;
  for (std::size_t i = 0; i < selectors_.size(); ++i) {
    if (enabled[i]) assumptions.push_back(make_lit(selectors_[i]));
  }

  CheckResult result;
  switch (solver_.solve(assumptions, max_decisions)) {
    case SolveVerdict::Sat:
      result.verdict = Verdict::Consistent;
      break;
    case SolveVerdict::Unsat:
      result.verdict = Verdict::Inconsistent;
      for (const Lit lit : solver_.core()) {
        core_indices_.push_back(lit_var(lit) - selectors_.front());
      }
      std::sort(core_indices_.begin(), core_indices_.end());
      break;
    case SolveVerdict::BudgetExceeded:
      result.verdict = Verdict::BudgetExceeded;
      break;
  }
  result.stats = solver_.stats();
  return result;
}

CheckResult check_sat(const GroundKb& kb, const std::vector<bool>& enabled,
                      const ReasonOptions& options) {
  Grounding grounding(kb, build_domain(kb, options.grounding), options.grounding);
  return grounding.solve(enabled, options.max_decisions);
}

CheckResult check_consistency(const TemporalKb& kb,
                              const std::vector<Assertion>& abox_subset,
                              const ReasonOptions& options) {
  TemporalKb scoped = kb;
  scoped.abox = abox_subset;
  const GroundKb ground = translate_kb(scoped, options.translate);
  return check_sat(ground, std::vector<bool>(ground.abox.size(), true), options);
}

CheckResult check_consistency(const TemporalKb& kb, const ReasonOptions& options) {
  return check_consistency(kb, kb.abox, options);
}

}  // namespace temporepair
