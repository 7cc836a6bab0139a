#include "temporepair/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "temporepair/log.hpp"

namespace temporepair {

namespace {

// Clauses in conjunction; an empty list is "true", a list holding an empty
// clause is "false".
using Cnf = std::vector<std::vector<Lit>>;

struct ClauseBudgetHit {};

unsigned future_nesting(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
    case ConceptKind::Name:
    case ConceptKind::Exists:
      return 0;
    case ConceptKind::Not:
      return future_nesting(c.operand());
    case ConceptKind::And:
    case ConceptKind::Or:
      return std::max(future_nesting(c.lhs()), future_nesting(c.rhs()));
    case ConceptKind::SometimeF:
    case ConceptKind::AlwaysF:
      return 1 + future_nesting(c.operand());
  }
  return 0;
}

class Encoder {
 public:
  Encoder(const TemporalKb& kb, const std::vector<std::string>& named,
          std::size_t domain_size, unsigned window_start, unsigned window_width,
          const OracleOptions& options)
      : kb_(kb),
        options_(options),
        size_(domain_size),
        start_(window_start),
        width_(window_width),
        clause_budget_(options.max_clauses) {
    for (const auto& [name, decl] : kb_.symbols.concepts) {
      concept_ids_.emplace(name, concept_ids_.size());
    }
    for (const auto& [name, decl] : kb_.symbols.roles) {
      role_ids_.emplace(name, role_ids_.size());
    }
    for (std::size_t i = 0; i < named.size(); ++i) {
      element_ids_.emplace(named[i], i);
    }

    const std::size_t total =
        static_cast<std::size_t>(width_) *
        (concept_ids_.size() * size_ + role_ids_.size() * size_ * size_);
    for (std::size_t i = 0; i < total; ++i) solver_.new_var();

    encode_abox();
    encode_rigidity();
    encode_functionality();
    for (const Gci& gci : kb_.gcis) {
      for (std::size_t d = 0; d < size_; ++d) {
        for (unsigned t = 0; t < width_; ++t) {
          emit(disjoin(cnf(gci.lhs, d, t, false), cnf(gci.rhs, d, t, true)));
        }
      }
    }
  }

  CheckResult solve() {
    CheckResult result;
    switch (solver_.solve({}, options_.max_decisions)) {
      case SolveVerdict::Sat:
        result.verdict = Verdict::Consistent;
        break;
      case SolveVerdict::Unsat:
        result.verdict = Verdict::Inconsistent;
        break;
      case SolveVerdict::BudgetExceeded:
        result.verdict = Verdict::BudgetExceeded;
        break;
    }
    result.stats = solver_.stats();
    return result;
  }

 private:
  Var concept_var(unsigned t, std::size_t cid, std::size_t d) const {
    return static_cast<Var>((static_cast<std::size_t>(t) * concept_ids_.size() + cid) * size_ + d);
  }

  Var role_var(unsigned t, std::size_t rid, std::size_t from, std::size_t to) const {
    const std::size_t base = static_cast<std::size_t>(width_) * concept_ids_.size() * size_;
    return static_cast<Var>(
        base + ((static_cast<std::size_t>(t) * role_ids_.size() + rid) * size_ + from) * size_ + to);
  }

  std::vector<Lit> charge(std::vector<Lit> clause) {
    if (clause_budget_ == 0) throw ClauseBudgetHit{};
    --clause_budget_;
    return clause;
  }

  // Pairwise union of the two clause sets; drops tautologies.
  Cnf disjoin(const Cnf& a, const Cnf& b) {
    Cnf out;
    for (const std::vector<Lit>& ca : a) {
      for (const std::vector<Lit>& cb : b) {
        std::vector<Lit> merged = ca;
        merged.insert(merged.end(), cb.begin(), cb.end());
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        bool tautology = false;
        for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
          if (lit_var(merged[i]) == lit_var(merged[i + 1])) {
            tautology = true;
            break;
          }
        }
        if (!tautology) out.push_back(charge(std::move(merged)));
      }
    }
    return out;
  }

  // Clauses equivalent to c holding (or failing) for element d at window
  // offset t.
  Cnf cnf(const Concept& c, std::size_t d, unsigned t, bool positive) {
    switch (c.kind()) {
      case ConceptKind::Top:
        return positive ? Cnf{} : Cnf{charge({})};
      case ConceptKind::Bottom:
        return positive ? Cnf{charge({})} : Cnf{};
      case ConceptKind::Name:
        return {charge({make_lit(concept_var(t, concept_ids_.at(c.base()), d),
                                 !positive)})};
      case ConceptKind::Not:
        return cnf(c.operand(), d, t, !positive);
      case ConceptKind::Exists: {
        const std::size_t rid = role_ids_.at(c.role().name);
        const bool inv = c.role().inverted;
        if (positive) {
          std::vector<Lit> clause;
          clause.reserve(size_);
          for (std::size_t e = 0; e < size_; ++e) {
            clause.push_back(make_lit(inv ? role_var(t, rid, e, d)
                                          : role_var(t, rid, d, e)));
          }
          return {charge(std::move(clause))};
        }
        Cnf out;
        for (std::size_t e = 0; e < size_; ++e) {
          out.push_back(charge({make_lit(
              inv ? role_var(t, rid, e, d) : role_var(t, rid, d, e), true)}));
        }
        return out;
      }
      case ConceptKind::And:
      case ConceptKind::Or: {
        const bool conjunctive = (c.kind() == ConceptKind::And) == positive;
        Cnf a = cnf(c.lhs(), d, t, positive);
        Cnf b = cnf(c.rhs(), d, t, positive);
        if (conjunctive) {
          a.insert(a.end(), b.begin(), b.end());
          return a;
        }
        return disjoin(a, b);
      }
      case ConceptKind::SometimeF:
      case ConceptKind::AlwaysF: {
        const unsigned first = options_.strict_future ? t + 1 : t;
        const bool conjunctive = (c.kind() == ConceptKind::AlwaysF) == positive;
        Cnf out = conjunctive ? Cnf{} : Cnf{charge({})};
        for (unsigned k = first; k < width_; ++k) {
          Cnf part = cnf(c.operand(), d, k, positive);
          if (conjunctive) {
            out.insert(out.end(), part.begin(), part.end());
          } else {
            out = disjoin(out, part);
          }
        }
        return out;
      }
    }
    return {};
  }

  void emit(const Cnf& clauses) {
    for (const std::vector<Lit>& clause : clauses) {
      solver_.add_clause(clause);
    }
  }

  void encode_abox() {
    for (const Assertion& assertion : kb_.abox) {
      const unsigned t = assertion.timestamp - start_;
      Lit lit;
      if (assertion.is_role) {
        lit = make_lit(role_var(t, role_ids_.at(assertion.predicate),
                                element_ids_.at(assertion.subject),
                                element_ids_.at(assertion.object)));
      } else {
        lit = make_lit(concept_var(t, concept_ids_.at(assertion.predicate),
                                   element_ids_.at(assertion.subject)));
      }
      if (!assertion.positive) lit = lit_not(lit);
      solver_.add_clause({lit});
    }
  }

  // Rigid concepts persist forward under both rigidity modes; global roles
  // persist forward, or hold at every index alike under Equality. Adjacent
  // links suffice, later indices follow by chaining.
  void encode_rigidity() {
    for (const auto& [name, decl] : kb_.symbols.concepts) {
      if (!decl.rigid) continue;
      const std::size_t cid = concept_ids_.at(name);
      for (std::size_t d = 0; d < size_; ++d) {
        for (unsigned t = 0; t + 1 < width_; ++t) {
          solver_.add_clause({make_lit(concept_var(t, cid, d), true),
                              make_lit(concept_var(t + 1, cid, d))});
        }
      }
    }
    for (const auto& [name, decl] : kb_.symbols.roles) {
      if (!decl.global) continue;
      const std::size_t rid = role_ids_.at(name);
      for (std::size_t from = 0; from < size_; ++from) {
        for (std::size_t to = 0; to < size_; ++to) {
          for (unsigned t = 0; t + 1 < width_; ++t) {
            solver_.add_clause({make_lit(role_var(t, rid, from, to), true),
                                make_lit(role_var(t + 1, rid, from, to))});
            if (options_.rigidity == Rigidity::Equality) {
              solver_.add_clause({make_lit(role_var(t + 1, rid, from, to), true),
                                  make_lit(role_var(t, rid, from, to))});
            }
          }
        }
      }
    }
  }

  void encode_functionality() {
    for (const FunctDecl& funct : kb_.funct_decls()) {
      const std::size_t rid = role_ids_.at(funct.role);
      for (unsigned t = 0; t < width_; ++t) {
        for (std::size_t fixed = 0; fixed < size_; ++fixed) {
          for (std::size_t a = 0; a < size_; ++a) {
            for (std::size_t b = a + 1; b < size_; ++b) {
              const Var first = funct.inverse ? role_var(t, rid, a, fixed)
                                              : role_var(t, rid, fixed, a);
              const Var second = funct.inverse ? role_var(t, rid, b, fixed)
                                               : role_var(t, rid, fixed, b);
              solver_.add_clause({make_lit(first, true), make_lit(second, true)});
            }
          }
        }
      }
    }
  }

  const TemporalKb& kb_;
  const OracleOptions& options_;
  std::size_t size_;
  unsigned start_;
  unsigned width_;
  std::uint64_t clause_budget_;
  Solver solver_;
  std::map<std::string, std::size_t> concept_ids_;
  std::map<std::string, std::size_t> role_ids_;
  std::map<std::string, std::size_t> element_ids_;
};

}  // namespace

OracleResult oracle_check(const TemporalKb& kb, const OracleOptions& options) {
  std::set<std::string> named_set;
  unsigned lo = 0;
  unsigned hi = 0;
  bool first = true;
  for (const Assertion& assertion : kb.abox) {
    named_set.insert(assertion.subject);
    if (assertion.is_role) named_set.insert(assertion.object);
    lo = first ? assertion.timestamp : std::min(lo, assertion.timestamp);
    hi = first ? assertion.timestamp : std::max(hi, assertion.timestamp);
    first = false;
  }
  const std::vector<std::string> named(named_set.begin(), named_set.end());

  unsigned depth = 0;
  for (const Gci& gci : kb.gcis) {
    depth = std::max(depth,
                     std::max(future_nesting(gci.lhs), future_nesting(gci.rhs)));
  }
  for (const auto& [name, decl] : kb.symbols.concepts) {
    if (decl.rigid) depth = std::max(depth, 1u);  // persistence spans one step
  }
  unsigned last = hi + depth;
  if (options.horizon) {
    if (*options.horizon < hi)
      throw std::invalid_argument(
          "the horizon must cover every assertion timestamp");
    last = *options.horizon;
  }
  const unsigned width = last - lo + 1;

  const std::size_t smallest = std::max<std::size_t>(1, named.size());
  const std::size_t largest = std::max(smallest, options.max_domain_size);

  OracleResult result;
  for (std::size_t size = smallest; size <= largest; ++size) {
    result.domain_size = size;
    log(LogLevel::Debug, "oracle: trying domain size " + std::to_string(size));
    try {
      Encoder encoder(kb, named, size, lo, width, options);
      const CheckResult check = encoder.solve();
      result.stats = check.stats;
      result.verdict = check.verdict;
    } catch (const ClauseBudgetHit&) {
      result.verdict = Verdict::BudgetExceeded;
      result.stats = {};
    }
    if (result.verdict != Verdict::Inconsistent) return result;
  }
  result.verdict = Verdict::Inconsistent;
  return result;
}

}  // namespace temporepair
