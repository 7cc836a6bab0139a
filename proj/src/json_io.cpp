#include "temporepair/json_io.hpp"

#include "temporepair/repair.hpp"

namespace temporepair {

namespace {

Json name_json(const TimeIndexedName& name) {
  return Json{{"base", name.base}, {"index", name.index}};
}

Json concept_json(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return Json{{"kind", "top"}};
    case ConceptKind::Bottom:
      return Json{{"kind", "bottom"}};
    case ConceptKind::Name: {
      Json out{{"kind", "name"}, {"base", c.base()}};
      if (c.time_index()) out["index"] = *c.time_index();
      return out;
    }
    case ConceptKind::Exists: {
      Json role{{"name", c.role().name}, {"inverted", c.role().inverted}};
      if (c.role().index) role["index"] = *c.role().index;
      return Json{{"kind", "exists"}, {"role", std::move(role)}};
    }
    case ConceptKind::Not:
      return Json{{"kind", "not"}, {"operand", concept_json(c.operand())}};
    case ConceptKind::And:
    case ConceptKind::Or:
      return Json{{"kind", c.kind() == ConceptKind::And ? "and" : "or"},
                  {"lhs", concept_json(c.lhs())},
                  {"rhs", concept_json(c.rhs())}};
    case ConceptKind::SometimeF:
      return Json{{"kind", "sometime"},
                  {"operand", concept_json(c.operand())}};
    case ConceptKind::AlwaysF:
      return Json{{"kind", "always"}, {"operand", concept_json(c.operand())}};
  }
  return Json();
}

}  // namespace

Json stats_json(const SolveStats& stats) {
  return Json{{"decisions", stats.decisions},
              {"propagations", stats.propagations},
              {"conflicts", stats.conflicts},
              {"variables", stats.variables},
              {"clauses", stats.clauses}};
}

Json check_report(const CheckResult& result) {
  return Json{{"verdict", to_string(result.verdict)},
              {"stats", stats_json(result.stats)}};
}

Json oracle_report(const OracleResult& result) {
  return Json{{"verdict", to_string(result.verdict)},
              {"domain_size", result.domain_size},
              {"stats", stats_json(result.stats)}};
}

Json translate_report(const GroundKb& kb) {
  return Json{{"horizon",
               Json{{"l", kb.horizon.l},
                    {"n", kb.horizon.n},
                    {"m", kb.horizon.m},
                    {"H", kb.horizon.H}}},
              {"gcis", kb.gcis.size()},
              {"role_inclusions", kb.role_inclusions.size()},
              {"functionality", kb.functionality.size()},
              {"abox", kb.abox.size()}};
}

Json ground_kb_json(const GroundKb& kb) {
  Json gcis = Json::array();
  for (const GroundGci& gci : kb.gcis)
    gcis.push_back(Json{{"lhs", concept_json(gci.lhs)},
                        {"rhs", concept_json(gci.rhs)}});
  Json inclusions = Json::array();
  for (const RoleInclusion& inc : kb.role_inclusions)
    inclusions.push_back(
        Json{{"sub", name_json(inc.sub)}, {"super", name_json(inc.super)}});
  Json functs = Json::array();
  for (const GroundFunct& funct : kb.functionality)
    functs.push_back(
        Json{{"role", name_json(funct.role)}, {"inverse", funct.inverse}});
  Json abox = Json::array();
  for (const GroundAssertion& a : kb.abox) {
    Json entry{{"positive", a.positive},
               {"is_role", a.is_role},
               {"predicate", name_json(a.predicate)},
               {"subject", a.subject}};
    if (a.is_role) entry["object"] = a.object;
    abox.push_back(std::move(entry));
  }
  return Json{{"horizon",
               Json{{"l", kb.horizon.l},
                    {"n", kb.horizon.n},
                    {"m", kb.horizon.m},
                    {"H", kb.horizon.H}}},
              {"gcis", std::move(gcis)},
              {"role_inclusions", std::move(inclusions)},
              {"functionality", std::move(functs)},
              {"abox", std::move(abox)}};
}

Json explain_report(const TemporalKb& kb, const MusEnumeration& enumeration,
                    const InconsistencyGraph& graph) {
  const RepairConfig defaults;
  Json muses = Json::array();
  for (const ConflictSet& conflict : enumeration.conflicts) {
    Json members = Json::array();
    for (const Assertion& a : conflict.members) members.push_back(to_string(a));
    muses.push_back(
        Json{{"members", std::move(members)}, {"label", conflict.label}});
  }
  Json vertices = Json::array();
  for (const GraphVertex& v : graph.vertices)
    vertices.push_back(Json{{"assertion", to_string(v.assertion)},
                            {"I_d", v.degree},
                            {"w_t", temporal_weight(v.assertion, defaults, kb)}});
  Json edges = Json::array();
  for (const GraphEdge& e : graph.edges)
    edges.push_back(Json{{"members", e.members}, {"label", e.label}});
  return Json{{"muses", std::move(muses)},
              {"graph",
               Json{{"vertices", std::move(vertices)},
                    {"edges", std::move(edges)}}},
              {"complete", enumeration.complete}};
}

Json repair_report(const RepairResult& result) {
  Json removed = Json::array();
  for (const RemovalStep& step : result.removed)
    removed.push_back(Json{{"assertion", to_string(step.assertion)},
                           {"I_d", step.degree},
                           {"w_t", step.weight},
                           {"step", step.step},
                           {"round", step.round},
                           {"edges_covered", step.edges_covered}});
  Json repaired = Json::array();
  for (const Assertion& a : result.repaired) repaired.push_back(to_string(a));
  return Json{{"removed", std::move(removed)},
              {"repaired", std::move(repaired)},
              {"iterations", result.iterations},
              {"maximal", result.maximal}};
}

Json gen_report(const GenConfig& config,
                const std::vector<std::string>& files) {
  return Json{{"config",
               Json{{"seed", config.seed},
                    {"name_count", config.name_count},
                    {"gci_count", config.gci_count},
                    {"concept_length", config.concept_length},
                    {"temporal_prob", config.temporal_prob},
                    {"global_prob", config.global_prob},
                    {"abox_size", config.abox_size},
                    {"max_time", config.max_time},
                    {"negative_prob", config.negative_prob},
                    {"batch", config.batch}}},
              {"files", files}};
}

std::string to_text(const Json& value) { return value.dump(2) + "\n"; }

}  // namespace temporepair
