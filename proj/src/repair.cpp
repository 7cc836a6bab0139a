#include "temporepair/repair.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "temporepair/gen.hpp"
#include "temporepair/log.hpp"
#include "temporepair/reason.hpp"

namespace temporepair {

unsigned temporal_weight(const Assertion& assertion, const RepairConfig& config,
                         const TemporalKb& kb) {
  if (!assertion.positive ||
      !kb.symbols.is_rigid_predicate(assertion.predicate, assertion.is_role))
    return assertion.timestamp;

  unsigned sigma;
  if (auto it = config.sigma.find(assertion.predicate);
      it != config.sigma.end()) {
    sigma = it->second;
  } else if (config.default_sigma) {
    sigma = *config.default_sigma;
  } else {
    // Observed ABox span. An empty ABox has no weighted assertions anyway.
    unsigned lo = std::numeric_limits<unsigned>::max();
    unsigned hi = 0;
    for (const Assertion& a : kb.abox) {
      lo = std::min(lo, a.timestamp);
      hi = std::max(hi, a.timestamp);
    }
    sigma = kb.abox.empty() ? 1 : hi - lo + 1;
  }
  return assertion.timestamp + sigma;
}

std::vector<CoverStep> greedy_cover(const InconsistencyGraph& graph,
                                    const std::vector<unsigned>& weights,
                                    const RepairConfig& config) {
  const std::size_t n = graph.vertices.size();
  if (weights.size() != n)
    throw std::invalid_argument("one weight per vertex required");

  std::vector<bool> alive(graph.edges.size(), true);
  std::vector<std::size_t> degree(n, 0);
  std::vector<std::size_t> self_loops(n, 0);
  std::size_t live_edges = 0;
  std::size_t live_self_loops = 0;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& members = graph.edges[e].members;
    for (std::size_t v : members) {
      if (v >= n) throw std::invalid_argument("edge member out of range");
      ++degree[v];
    }
    if (members.size() == 1) {
      ++self_loops[members.front()];
      ++live_self_loops;
    }
    ++live_edges;
  }

  std::optional<Rng> rng;
  if (config.tie_seed) rng.emplace(*config.tie_seed);

  // Strictly better pick: more live conflicts, then cheaper.
  const auto better = [&](std::size_t v, std::size_t u) {
    if (degree[v] != degree[u]) return degree[v] > degree[u];
    return weights[v] < weights[u];
  };

  std::vector<CoverStep> steps;
  while (live_edges > 0) {
    // Candidates: self-loop carriers while any self-loop lives (they are
    // the only way to cover those edges), otherwise anything still in a
    // live conflict.
    std::vector<std::size_t> tied;
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 0) continue;
      if (live_self_loops > 0 && self_loops[v] == 0) continue;
      if (tied.empty() || better(v, tied.front())) {
        tied.assign(1, v);
      } else if (!better(tied.front(), v)) {
        tied.push_back(v);
      }
    }

    std::size_t pick;
    if (tied.size() == 1) {
      pick = tied.front();
    } else if (rng) {
      pick = tied[rng->below(tied.size())];
    } else {
      pick = *std::min_element(
          tied.begin(), tied.end(), [&](std::size_t a, std::size_t b) {
            return symbol_order_less(graph.vertices[a].assertion,
                                     graph.vertices[b].assertion);
          });
    }

    CoverStep step;
    step.vertex = pick;
    step.degree = degree[pick];
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
      if (!alive[e]) continue;
      const auto& members = graph.edges[e].members;
      if (std::find(members.begin(), members.end(), pick) == members.end())
        continue;
      alive[e] = false;
      --live_edges;
      ++step.edges_covered;
      for (std::size_t v : members) --degree[v];
      if (members.size() == 1) {
        --self_loops[members.front()];
        --live_self_loops;
      }
    }
    steps.push_back(step);
  }
  return steps;
}

namespace {

std::vector<Assertion> masked_abox(const TemporalKb& kb,
                                   const std::vector<bool>& kept) {
  std::vector<Assertion> out;
  out.reserve(kb.abox.size());
  for (std::size_t i = 0; i < kb.abox.size(); ++i)
    if (kept[i]) out.push_back(kb.abox[i]);
  return out;
}

}  // namespace

RepairResult repair(const TemporalKb& kb, const RepairConfig& config) {
  {
    const CheckResult tbox_only =
        check_consistency(kb, std::vector<Assertion>{}, config.explain.reason);
    if (tbox_only.verdict == Verdict::Inconsistent)
      throw RepairError(
          "the terminology is inconsistent without any assertions; removing "
          "assertions cannot repair it");
    if (tbox_only.verdict == Verdict::BudgetExceeded)
      throw BudgetError("the terminology satisfiability check ran out of "
                        "decision budget");
  }

  std::vector<unsigned> weight(kb.abox.size());
  for (std::size_t i = 0; i < kb.abox.size(); ++i)
    weight[i] = temporal_weight(kb.abox[i], config, kb);

  std::vector<bool> kept(kb.abox.size(), true);
  RepairResult result;
  std::vector<std::size_t> removed_index;  // parallel to result.removed
  std::size_t step_counter = 0;

  // Detection and covering repeat because a truncated enumeration can hide
  // conflicts behind the ones already covered.
  for (;;) {
    TemporalKb current = kb;
    current.abox = masked_abox(kb, kept);

    const MusEnumeration enumeration = enumerate_muses(current, config.explain);
    if (enumeration.conflicts.empty()) break;

    ++result.iterations;
    const InconsistencyGraph graph = build_graph(current, enumeration);

    // Graph vertices index the current ABox; map them back to the input.
    std::vector<std::size_t> to_input;
    to_input.reserve(current.abox.size());
    for (std::size_t i = 0; i < kb.abox.size(); ++i)
      if (kept[i]) to_input.push_back(i);

    std::vector<unsigned> vertex_weight(graph.vertices.size());
    for (std::size_t v = 0; v < graph.vertices.size(); ++v)
      vertex_weight[v] = weight[to_input[v]];

    const std::vector<CoverStep> cover =
        greedy_cover(graph, vertex_weight, config);
    for (const CoverStep& cs : cover) {
      const std::size_t input_index = to_input[cs.vertex];
      kept[input_index] = false;
      RemovalStep removal;
      removal.assertion = kb.abox[input_index];
      removal.step = ++step_counter;
      removal.round = result.iterations;
      removal.degree = cs.degree;
      removal.weight = vertex_weight[cs.vertex];
      removal.edges_covered = cs.edges_covered;
      result.removed.push_back(std::move(removal));
      removed_index.push_back(input_index);
    }
    log(LogLevel::Info,
        "round " + std::to_string(result.iterations) + " removed " +
            std::to_string(cover.size()) + " of " +
            std::to_string(graph.vertices.size()) + " assertions");
  }

  // Reinstate what the repaired state tolerates, most valuable first.
  std::vector<std::size_t> restore_order(result.removed.size());
  std::iota(restore_order.begin(), restore_order.end(), std::size_t{0});
  std::stable_sort(restore_order.begin(), restore_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (result.removed[a].weight != result.removed[b].weight)
                       return result.removed[a].weight >
                              result.removed[b].weight;
                     return symbol_order_less(result.removed[a].assertion,
                                              result.removed[b].assertion);
                   });
  std::vector<bool> restored(result.removed.size(), false);
  for (std::size_t r : restore_order) {
    kept[removed_index[r]] = true;
    const CheckResult check =
        check_consistency(kb, masked_abox(kb, kept), config.explain.reason);
    if (check.verdict == Verdict::Consistent) {
      restored[r] = true;
      log(LogLevel::Info,
          "restored " + to_string(result.removed[r].assertion));
      continue;
    }
    kept[removed_index[r]] = false;
    if (check.verdict == Verdict::BudgetExceeded) {
      result.maximal = false;
      log(LogLevel::Warn,
          "restoration check ran out of budget for " +
              to_string(result.removed[r].assertion) +
              "; the repair may not be maximal");
    }
  }
  if (std::find(restored.begin(), restored.end(), true) != restored.end()) {
    std::vector<RemovalStep> still_removed;
    for (std::size_t i = 0; i < result.removed.size(); ++i)
      if (!restored[i]) still_removed.push_back(std::move(result.removed[i]));
    result.removed = std::move(still_removed);
  }

  result.repaired = masked_abox(kb, kept);
  return result;
}

}  // namespace temporepair
