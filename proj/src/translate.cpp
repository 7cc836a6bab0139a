#include "temporepair/translate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace temporepair {

std::string to_string(const TimeIndexedName& name) {
  return name.base + "@" + std::to_string(name.index);
}

std::string to_string(const GroundAssertion& assertion) {
  std::string out;
  if (!assertion.positive) out += '-';
  out += to_string(assertion.predicate);
  out += '(';
  out += assertion.subject;
  if (assertion.is_role) {
    out += ',';
    out += assertion.object;
  }
  out += ')';
  return out;
}

Horizon compute_horizon(const TemporalKb& kb) {
  Horizon h;
  h.m = temporal_depth(kb.gcis);
  if (!kb.abox.empty()) {
    unsigned lo = kb.abox.front().timestamp;
    unsigned hi = kb.abox.front().timestamp;
    for (const Assertion& a : kb.abox) {
      lo = std::min(lo, a.timestamp);
      hi = std::max(hi, a.timestamp);
    }
    h.l = lo;
    h.n = hi;
  }
  h.H = h.n + h.m;
  return h;
}

Concept translate_concept(const Concept& c, unsigned index,
                          const Horizon& horizon,
                          const TranslateOptions& options) {
  if (index < horizon.l || index > horizon.H) {
    throw TranslateError("translation index " + std::to_string(index) +
                         " outside window [" + std::to_string(horizon.l) + ", " +
                         std::to_string(horizon.H) + "]");
  }
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return c;
    case ConceptKind::Name:
      return Concept::name(c.base(), index);
    case ConceptKind::Exists: {
      RoleExpr role = c.role();
      role.index = index;
      return Concept::exists(std::move(role));
    }
    case ConceptKind::Not:
      return Concept::negation(
          translate_concept(c.operand(), index, horizon, options));
    case ConceptKind::And:
      return Concept::conj(
          translate_concept(c.lhs(), index, horizon, options),
          translate_concept(c.rhs(), index, horizon, options));
    case ConceptKind::Or:
      return Concept::disj(
          translate_concept(c.lhs(), index, horizon, options),
          translate_concept(c.rhs(), index, horizon, options));
    case ConceptKind::SometimeF:
    case ConceptKind::AlwaysF: {
      const unsigned from = options.strict_future ? index + 1 : index;
      std::vector<Concept> parts;
      for (unsigned k = from; k <= horizon.H; ++k) {
        parts.push_back(translate_concept(c.operand(), k, horizon, options));
      }
      // Strict mode at the window edge leaves an empty range.
      if (c.kind() == ConceptKind::AlwaysF) {
        return make_conjunction(parts);
      }
      return make_disjunction(parts);
    }
  }
  throw TranslateError("unreachable concept kind");
}

GroundKb translate_tbox(const TemporalKb& kb, const Horizon& horizon,
                        const TranslateOptions& options) {
  GroundKb out;
  out.horizon = horizon;
  for (const Gci& gci : kb.gcis) {
    for (unsigned i = horizon.l; i <= horizon.H; ++i) {
      out.gcis.push_back({translate_concept(gci.lhs, i, horizon, options),
                          translate_concept(gci.rhs, i, horizon, options)});
    }
  }
  for (const auto& [name, decl] : kb.symbols.roles) {
    if (!decl.global) continue;
    for (unsigned i = horizon.l; i <= horizon.H; ++i) {
      for (unsigned k = i; k <= horizon.H; ++k) {
        out.role_inclusions.push_back({{name, i}, {name, k}});
      }
    }
  }
  for (const FunctDecl& funct : kb.funct_decls()) {
    for (unsigned i = horizon.l; i <= horizon.H; ++i) {
      out.functionality.push_back({{funct.role, i}, funct.inverse});
    }
  }
  return out;
}

std::vector<GroundAssertion> translate_abox(const std::vector<Assertion>& abox,
                                            const Horizon& horizon) {
  std::vector<GroundAssertion> out;
  out.reserve(abox.size());
  for (const Assertion& a : abox) {
    if (a.timestamp < horizon.l || a.timestamp > horizon.n) {
      throw TranslateError("assertion timestamp " + std::to_string(a.timestamp) +
                           " outside [" + std::to_string(horizon.l) + ", " +
                           std::to_string(horizon.n) + "]: " + to_string(a));
    }
    GroundAssertion g;
    g.positive = a.positive;
    g.is_role = a.is_role;
    g.predicate = {a.predicate, a.timestamp};
    g.subject = a.subject;
    g.object = a.object;
    out.push_back(std::move(g));
  }
  return out;
}

GroundKb translate_kb(const TemporalKb& kb, const TranslateOptions& options) {
  const TemporalKb expanded = expand_rigid_concepts(kb);
  const Horizon horizon = compute_horizon(expanded);
  GroundKb out = translate_tbox(expanded, horizon, options);
  out.abox = translate_abox(expanded.abox, horizon);
  return out;
}

namespace {

bool ground_concept_well_formed(const Concept& c, const Horizon& horizon) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return true;
    case ConceptKind::Name:
      return c.time_index().has_value() && *c.time_index() >= horizon.l &&
             *c.time_index() <= horizon.H;
    case ConceptKind::Exists:
      return c.role().index.has_value() && *c.role().index >= horizon.l &&
             *c.role().index <= horizon.H;
    case ConceptKind::Not:
      return ground_concept_well_formed(c.operand(), horizon);
    case ConceptKind::And:
    case ConceptKind::Or:
      return ground_concept_well_formed(c.lhs(), horizon) &&
             ground_concept_well_formed(c.rhs(), horizon);
    case ConceptKind::SometimeF:
    case ConceptKind::AlwaysF:
      return false;
  }
  return false;
}

bool index_in_window(unsigned index, const Horizon& horizon) {
  return index >= horizon.l && index <= horizon.H;
}

}  // namespace

bool ground_kb_well_formed(const GroundKb& kb) {
  for (const GroundGci& gci : kb.gcis) {
    if (!ground_concept_well_formed(gci.lhs, kb.horizon)) return false;
    if (!ground_concept_well_formed(gci.rhs, kb.horizon)) return false;
  }
  for (const RoleInclusion& inc : kb.role_inclusions) {
    if (inc.sub.base != inc.super.base) return false;
    if (!index_in_window(inc.sub.index, kb.horizon)) return false;
    if (!index_in_window(inc.super.index, kb.horizon)) return false;
    if (inc.sub.index > inc.super.index) return false;
  }
  for (const GroundFunct& funct : kb.functionality) {
    if (!index_in_window(funct.role.index, kb.horizon)) return false;
  }
  for (const GroundAssertion& a : kb.abox) {
    if (!index_in_window(a.predicate.index, kb.horizon)) return false;
  }
  return true;
}

namespace {

void collect_ground_names(const Concept& c, std::set<TimeIndexedName>& concepts,
                          std::set<TimeIndexedName>& roles) {
  switch (c.kind()) {
    case ConceptKind::Name:
      if (c.time_index().has_value()) {
        concepts.insert({c.base(), *c.time_index()});
      }
      break;
    case ConceptKind::Exists:
      if (c.role().index.has_value()) {
        roles.insert({c.role().name, *c.role().index});
      }
      break;
    case ConceptKind::Not:
    case ConceptKind::SometimeF:
    case ConceptKind::AlwaysF:
      collect_ground_names(c.operand(), concepts, roles);
      break;
    case ConceptKind::And:
    case ConceptKind::Or:
      collect_ground_names(c.lhs(), concepts, roles);
      collect_ground_names(c.rhs(), concepts, roles);
      break;
    default:
      break;
  }
}

}  // namespace

std::string serialize_ground_kb(const GroundKb& kb) {
  std::set<TimeIndexedName> concepts;
  std::set<TimeIndexedName> roles;
  for (const GroundGci& gci : kb.gcis) {
    collect_ground_names(gci.lhs, concepts, roles);
    collect_ground_names(gci.rhs, concepts, roles);
  }
  for (const RoleInclusion& inc : kb.role_inclusions) {
    roles.insert(inc.sub);
    roles.insert(inc.super);
  }
  std::map<TimeIndexedName, std::pair<bool, bool>> funct_flags;
  for (const GroundFunct& funct : kb.functionality) {
    roles.insert(funct.role);
    auto& flags = funct_flags[funct.role];
    (funct.inverse ? flags.second : flags.first) = true;
  }
  for (const GroundAssertion& a : kb.abox) {
    (a.is_role ? roles : concepts).insert(a.predicate);
  }

  std::ostringstream out;
  out << "# horizon: l=" << kb.horizon.l << " n=" << kb.horizon.n
      << " m=" << kb.horizon.m << " H=" << kb.horizon.H << '\n';
  for (const TimeIndexedName& name : concepts) {
    out << "concept " << to_string(name) << '\n';
  }
  for (const TimeIndexedName& name : roles) {
    out << "role " << to_string(name);
    auto it = funct_flags.find(name);
    if (it != funct_flags.end()) {
      if (it->second.first) out << " functional";
      if (it->second.second) out << " inverse-functional";
    }
    out << '\n';
  }
  out << "\ntbox:\n";
  for (const GroundGci& gci : kb.gcis) {
    out << to_string(gci.lhs) << " <= " << to_string(gci.rhs) << '\n';
  }
  for (const RoleInclusion& inc : kb.role_inclusions) {
    out << "roleinc " << to_string(inc.sub) << " <= " << to_string(inc.super)
        << '\n';
  }
  out << "\nabox:\n";
  for (const GroundAssertion& a : kb.abox) {
    out << to_string(a) << '\n';
  }
  return out.str();
}

}  // namespace temporepair
