#include "temporepair/explain.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "temporepair/log.hpp"
#include "temporepair/translate.hpp"

namespace temporepair {

namespace {

bool persistence_shape(const Gci& gci, std::string* base = nullptr) {
  if (gci.lhs.kind() != ConceptKind::Name) return false;
  if (gci.rhs.kind() != ConceptKind::AlwaysF) return false;
  const Concept inner = gci.rhs.operand();
  if (inner.kind() != ConceptKind::Name) return false;
  if (inner.base() != gci.lhs.base()) return false;
  if (base) *base = gci.lhs.base();
  return true;
}

std::vector<std::size_t> sorted_by_time(const std::vector<Assertion>& abox,
                                        std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) {
    if (time_order_less(abox[a], abox[b])) return true;
    if (time_order_less(abox[b], abox[a])) return false;
    return a < b;
  });
  return indices;
}

// Shared machinery: one selector grounding over the whole ABox for the quick
// subset checks, per-subset translations for the binding ones.
class ExplainContext {
 public:
  ExplainContext(const TemporalKb& kb, const ExplainOptions& options)
      : kb_(kb),
        options_(options),
        ground_(translate_kb(kb, options.reason.translate)),
        grounding_(ground_, build_domain(ground_, options.reason.grounding),
                   options.reason.grounding) {}

  const TemporalKb& kb() const { return kb_; }

  std::vector<Assertion> select(const std::vector<std::size_t>& indices) const {
    std::vector<Assertion> subset;
    subset.reserve(indices.size());
    for (const std::size_t i : indices) subset.push_back(kb_.abox[i]);
    return subset;
  }

  // Bounded check against the whole-ABox grounding; remembers conflict cores.
  bool fast_consistent(const std::vector<std::size_t>& indices) {
    std::vector<bool> enabled(kb_.abox.size(), false);
    for (const std::size_t i : indices) enabled[i] = true;
    const CheckResult result =
        grounding_.solve(enabled, options_.reason.max_decisions);
    if (result.verdict == Verdict::BudgetExceeded) {
      throw BudgetError("decision budget exceeded while isolating conflicts");
    }
    if (result.verdict == Verdict::Inconsistent) {
      remember_core(grounding_.core_indices());
      return false;
    }
    return true;
  }

  bool official_consistent(const std::vector<std::size_t>& indices) {
    const CheckResult result =
        check_consistency(kb_, select(indices), options_.reason);
    if (result.verdict == Verdict::BudgetExceeded) {
      throw BudgetError("decision budget exceeded while isolating conflicts");
    }
    return result.verdict == Verdict::Consistent;
  }

  const std::vector<std::size_t>* last_core() const {
    return cores_.empty() ? nullptr : &cores_.back();
  }

  // Deletion pass in ascending (timestamp, symbol, arguments) order; each
  // member stays only if dropping it restores consistency.
  std::vector<std::size_t> shrink_fast(const std::vector<std::size_t>& seed) {
    std::vector<std::size_t> current(seed);
    std::sort(current.begin(), current.end());
    for (const std::size_t victim : sorted_by_time(kb_.abox, current)) {
      std::vector<std::size_t> candidate;
      candidate.reserve(current.size() - 1);
      for (const std::size_t i : current) {
        if (i != victim) candidate.push_back(i);
      }
      if (known_inconsistent(candidate) || !fast_consistent(candidate)) {
        current = std::move(candidate);
      }
    }
    return current;
  }

  std::vector<std::size_t> shrink_official(const std::vector<std::size_t>& seed) {
    std::vector<std::size_t> current(seed);
    std::sort(current.begin(), current.end());
    for (const std::size_t victim : sorted_by_time(kb_.abox, current)) {
      std::vector<std::size_t> candidate;
      candidate.reserve(current.size() - 1);
      for (const std::size_t i : current) {
        if (i != victim) candidate.push_back(i);
      }
      if (!official_consistent(candidate)) current = std::move(candidate);
    }
    return current;
  }

  // Fast shrink whose result is re-verified subset by subset; any
  // disagreement falls back to the slow pass over the original seed.
  std::vector<std::size_t> shrink_verified(const std::vector<std::size_t>& seed) {
    const std::vector<std::size_t> fast = shrink_fast(seed);
    if (officially_minimal(fast)) return fast;
    log(LogLevel::Warn,
        "quick conflict extraction disagreed with per-subset checks, redoing slowly");
    return shrink_official(seed);
  }

  bool officially_minimal(const std::vector<std::size_t>& mus) {
    if (official_consistent(mus)) return false;
    for (const std::size_t victim : mus) {
      std::vector<std::size_t> candidate;
      for (const std::size_t i : mus) {
        if (i != victim) candidate.push_back(i);
      }
      if (!official_consistent(candidate)) return false;
    }
    return true;
  }

 private:
  void remember_core(std::vector<std::size_t> core) {
    cores_.push_back(std::move(core));
  }

  bool known_inconsistent(const std::vector<std::size_t>& candidate) const {
    for (const std::vector<std::size_t>& core : cores_) {
      if (std::includes(candidate.begin(), candidate.end(), core.begin(),
                        core.end())) {
        return true;
      }
    }
    return false;
  }

  const TemporalKb& kb_;
  ExplainOptions options_;
  GroundKb ground_;
  Grounding grounding_;
  std::vector<std::vector<std::size_t>> cores_;  // index sets, each inconsistent
};

std::vector<std::size_t> resolve_seed(const TemporalKb& kb,
                                      const std::vector<Assertion>& seed) {
  std::map<std::string, std::size_t> positions;
  for (std::size_t i = 0; i < kb.abox.size(); ++i) {
    positions.emplace(to_string(kb.abox[i]), i);
  }
  std::set<std::size_t> indices;
  for (const Assertion& assertion : seed) {
    const auto it = positions.find(to_string(assertion));
    if (it == positions.end()) {
      throw std::invalid_argument("seed assertion '" + to_string(assertion) +
                                  "' is not in the ABox");
    }
    indices.insert(it->second);
  }
  return {indices.begin(), indices.end()};
}

}  // namespace

std::vector<Assertion> shrink_mus(const TemporalKb& kb,
                                  const std::vector<Assertion>& seed,
                                  const ExplainOptions& options) {
  ExplainContext context(kb, options);
  const std::vector<std::size_t> indices = resolve_seed(kb, seed);
  if (context.official_consistent(indices)) {
    throw std::invalid_argument("seed is consistent, nothing to shrink");
  }
  const std::vector<std::size_t> mus = context.shrink_verified(indices);
  return context.select(sorted_by_time(kb.abox, mus));
}

std::string conflict_label(const TemporalKb& kb,
                           const std::vector<Assertion>& mus,
                           const ReasonOptions& options) {
  const auto resolves = [&](const TemporalKb& weakened) {
    const CheckResult result = check_consistency(weakened, mus, options);
    if (result.verdict == Verdict::BudgetExceeded) {
      throw BudgetError("decision budget exceeded while labelling a conflict");
    }
    return result.verdict == Verdict::Consistent;
  };

  std::string primary;
  for (std::size_t i = 0; i < kb.gcis.size() && primary.empty(); ++i) {
    if (persistence_shape(kb.gcis[i])) continue;
    TemporalKb weakened = kb;
    weakened.gcis.erase(weakened.gcis.begin() + static_cast<std::ptrdiff_t>(i));
    if (resolves(weakened)) primary = to_string(kb.gcis[i]);
  }
  for (const FunctDecl& funct : kb.funct_decls()) {
    if (!primary.empty()) break;
    TemporalKb weakened = kb;
    RoleDecl& decl = weakened.symbols.roles.at(funct.role);
    (funct.inverse ? decl.inverse_functional : decl.functional) = false;
    if (resolves(weakened)) primary = to_string(funct);
  }

  // Persistence involvement: dropping a concept's rigidity means clearing the
  // flag and its persistence axioms together, since either alone would be
  // restored by the other.
  std::set<std::string> rigid_notes;
  std::set<std::string> rigid_concepts;
  for (const auto& [name, decl] : kb.symbols.concepts) {
    if (decl.rigid) rigid_concepts.insert(name);
  }
  for (const Gci& gci : kb.gcis) {
    std::string base;
    if (persistence_shape(gci, &base)) rigid_concepts.insert(base);
  }
  for (const std::string& name : rigid_concepts) {
    TemporalKb weakened = kb;
    weakened.symbols.concepts.at(name).rigid = false;
    std::erase_if(weakened.gcis, [&](const Gci& gci) {
      std::string base;
      return persistence_shape(gci, &base) && base == name;
    });
    if (resolves(weakened)) rigid_notes.insert(name);
  }
  for (const auto& [name, decl] : kb.symbols.roles) {
    if (!decl.global) continue;
    TemporalKb weakened = kb;
    weakened.symbols.roles.at(name).global = false;
    if (resolves(weakened)) rigid_notes.insert(name);
  }

  unsigned latest = 0;
  for (const Assertion& assertion : mus) {
    latest = std::max(latest, assertion.timestamp);
  }

  std::string label = primary;
  if (!label.empty()) label += ' ';
  label += '@' + std::to_string(latest);
  for (const std::string& name : rigid_notes) {
    label += " [rigid: " + name + "]";
  }
  return label;
}

MusEnumeration enumerate_muses(const TemporalKb& kb,
                               const ExplainOptions& options) {
  if (options.mus_budget == 0) {
    throw std::invalid_argument("the conflict budget must be positive");
  }
  ExplainContext context(kb, options);

  if (!context.official_consistent({})) {
    throw std::invalid_argument(
        "the terminology is inconsistent without any assertions");
  }

  std::vector<std::size_t> everything(kb.abox.size());
  for (std::size_t i = 0; i < everything.size(); ++i) everything[i] = i;
  const bool root_consistent = context.official_consistent(everything);
  if (root_consistent) return {};

  MusEnumeration out;
  std::vector<std::vector<std::size_t>> found;  // index sets, ascending
  std::vector<std::vector<std::size_t>> repairs;  // removal sets that work
  std::set<std::vector<std::size_t>> visited;
  std::deque<std::vector<std::size_t>> queue;
  queue.push_back({});
  visited.insert({});

  const std::size_t node_cap = options.mus_budget * 64;
  std::size_t nodes = 0;

  while (!queue.empty()) {
    if (++nodes > node_cap) {
      out.complete = false;
      break;
    }
    const std::vector<std::size_t> removed = std::move(queue.front());
    queue.pop_front();

    const auto subsumed = [&](const std::vector<std::size_t>& repair) {
      return std::includes(removed.begin(), removed.end(), repair.begin(),
                           repair.end());
    };
    if (std::any_of(repairs.begin(), repairs.end(), subsumed)) continue;

    std::vector<std::size_t> remaining;
    remaining.reserve(kb.abox.size() - removed.size());
    std::set_difference(everything.begin(), everything.end(), removed.begin(),
                        removed.end(), std::back_inserter(remaining));

    const std::vector<std::size_t>* conflict = nullptr;
    for (const std::vector<std::size_t>& mus : found) {
      std::vector<std::size_t> overlap;
      std::set_intersection(mus.begin(), mus.end(), removed.begin(),
                            removed.end(), std::back_inserter(overlap));
      if (overlap.empty()) {
        conflict = &mus;
        break;
      }
    }
    if (conflict == nullptr) {
      if (context.fast_consistent(remaining)) {
        repairs.push_back(removed);
        continue;
      }
      if (found.size() >= options.mus_budget) {
        out.complete = false;
        continue;
      }
      // The solver names a small inconsistent subset; shrinking that instead
      // of the whole remainder keeps the deletion pass short. Copied, since
      // the shrink records further cores and may relocate this one.
      const std::vector<std::size_t>* core = context.last_core();
      const std::vector<std::size_t> seed = core != nullptr ? *core : remaining;
      std::vector<std::size_t> mus = context.shrink_verified(seed);
      std::sort(mus.begin(), mus.end());
      found.push_back(std::move(mus));
      conflict = &found.back();
    }

    for (const std::size_t member : *conflict) {
      std::vector<std::size_t> child(removed);
      child.insert(std::lower_bound(child.begin(), child.end(), member),
                   member);
      if (visited.insert(child).second) queue.push_back(std::move(child));
    }
  }

  if (found.empty()) {
    // The bounded subset checks contradicted the binding one on the full
    // ABox; nothing trustworthy can be reported.
    throw std::logic_error("conflict search lost an inconsistency, this is a bug");
  }

  out.conflicts.reserve(found.size());
  for (const std::vector<std::size_t>& mus : found) {
    ConflictSet conflict;
    conflict.members = context.select(sorted_by_time(kb.abox, mus));
    conflict.label = conflict_label(kb, conflict.members, options.reason);
    out.conflicts.push_back(std::move(conflict));
  }
  return out;
}

InconsistencyGraph build_graph(const TemporalKb& kb,
                               const MusEnumeration& enumeration) {
  InconsistencyGraph graph;
  graph.complete = enumeration.complete;
  graph.vertices.reserve(kb.abox.size());
  std::map<std::string, std::size_t> positions;
  for (const Assertion& assertion : kb.abox) {
    positions.emplace(to_string(assertion), graph.vertices.size());
    graph.vertices.push_back({assertion, 0});
  }
  for (const ConflictSet& conflict : enumeration.conflicts) {
    GraphEdge edge;
    edge.label = conflict.label;
    for (const Assertion& member : conflict.members) {
      edge.members.push_back(positions.at(to_string(member)));
    }
    std::sort(edge.members.begin(), edge.members.end());
    for (const std::size_t v : edge.members) ++graph.vertices[v].degree;
    graph.edges.push_back(std::move(edge));
  }
  return graph;
}

InconsistencyGraph build_graph(const TemporalKb& kb,
                               const ExplainOptions& options) {
  return build_graph(kb, enumerate_muses(kb, options));
}

std::string graph_to_dot(const InconsistencyGraph& graph) {
  const auto escaped = [](const std::string& text) {
    std::string out;
    for (const char ch : text) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out;
  };

  std::string dot = "graph inconsistency {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
    const GraphVertex& vertex = graph.vertices[i];
    dot += "  v" + std::to_string(i) + " [label=\"" +
           escaped(to_string(vertex.assertion)) + "\\ndeg " +
           std::to_string(vertex.degree) + "\"];\n";
  }
  std::size_t hyper = 0;
  for (const GraphEdge& edge : graph.edges) {
    if (edge.members.size() == 1) {
      const std::string v = "v" + std::to_string(edge.members[0]);
      dot += "  " + v + " -- " + v + " [label=\"" + escaped(edge.label) +
             "\"];\n";
    } else if (edge.members.size() == 2) {
      dot += "  v" + std::to_string(edge.members[0]) + " -- v" +
             std::to_string(edge.members[1]) + " [label=\"" +
             escaped(edge.label) + "\"];\n";
    } else {
      const std::string hub = "c" + std::to_string(hyper++);
      dot += "  " + hub + " [shape=point, xlabel=\"" + escaped(edge.label) +
             "\"];\n";
      for (const std::size_t member : edge.members) {
        dot += "  " + hub + " -- v" + std::to_string(member) + ";\n";
      }
    }
  }
  dot += "}\n";
  return dot;
}

}  // namespace temporepair
