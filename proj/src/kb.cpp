#include "temporepair/kb.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace temporepair {

// ── Concept construction ─────────────────────────────────────────────────

Concept::Concept() {
  static const auto top = std::make_shared<Node>();
  node_ = top;
}

Concept Concept::top() { return Concept(); }

Concept Concept::bottom() {
  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::Bottom;
  return Concept(std::move(n));
}

Concept Concept::name(std::string base, std::optional<unsigned> index) {
  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::Name;
  n->base = std::move(base);
  n->index = index;
  return Concept(std::move(n));
}

Concept Concept::exists(RoleExpr role) {
  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::Exists;
  n->role = std::move(role);
  return Concept(std::move(n));
}

Concept Concept::negation(Concept operand) {
  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::Not;
  n->a = std::move(operand.node_);
  return Concept(std::move(n));
}

Concept Concept::conj(Concept lhs, Concept rhs) {
  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::And;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Concept(std::move(n));
}

Concept Concept::disj(Concept lhs, Concept rhs) {
  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::Or;
  n->a = std::move(lhs.node_);
  n->b = std::move(rhs.node_);
  return Concept(std::move(n));
}

Concept Concept::sometime(Concept operand) {
  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::SometimeF;
  n->a = std::move(operand.node_);
  return Concept(std::move(n));
}

Concept Concept::always(Concept operand) {
  auto n = std::make_shared<Node>();
  n->kind = ConceptKind::AlwaysF;
  n->a = std::move(operand.node_);
  return Concept(std::move(n));
}

bool Concept::operator==(const Concept& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return true;
    case ConceptKind::Name:
      return node_->base == other.node_->base &&
             node_->index == other.node_->index;
    case ConceptKind::Exists:
      return node_->role == other.node_->role;
    case ConceptKind::Not:
    case ConceptKind::SometimeF:
    case ConceptKind::AlwaysF:
      return operand() == other.operand();
    case ConceptKind::And:
    case ConceptKind::Or:
      return lhs() == other.lhs() && rhs() == other.rhs();
  }
  return false;
}

// ── Rendering ────────────────────────────────────────────────────────────

std::string to_string(const RoleExpr& role) {
  std::string out = role.name;
  if (role.index.has_value()) {
    out += '@';
    out += std::to_string(*role.index);
  }
  if (role.inverted) out += "^-";
  return out;
}

namespace {

// Precedence levels: | = 1, & = 2, unary = 3, atoms = 4.
int precedence(ConceptKind kind) {
  switch (kind) {
    case ConceptKind::Or:
      return 1;
    case ConceptKind::And:
      return 2;
    case ConceptKind::Not:
    case ConceptKind::SometimeF:
    case ConceptKind::AlwaysF:
      return 3;
    default:
      return 4;
  }
}

void print_concept(const Concept& c, int min_prec, std::string& out) {
  const int prec = precedence(c.kind());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (c.kind()) {
    case ConceptKind::Top:
      out += "Top";
      break;
    case ConceptKind::Bottom:
      out += "Bot";
      break;
    case ConceptKind::Name:
      out += c.base();
      if (c.time_index().has_value()) {
        out += '@';
        out += std::to_string(*c.time_index());
      }
      break;
    case ConceptKind::Exists:
      out += "exists ";
      out += to_string(c.role());
      break;
    case ConceptKind::Not:
      out += '!';
      print_concept(c.operand(), 3, out);
      break;
    case ConceptKind::SometimeF:
      out += "F ";
      print_concept(c.operand(), 3, out);
      break;
    case ConceptKind::AlwaysF:
      out += "G ";
      print_concept(c.operand(), 3, out);
      break;
    case ConceptKind::And:
      // Left-associative: the right child needs strictly higher precedence.
      print_concept(c.lhs(), 2, out);
      out += " & ";
      print_concept(c.rhs(), 3, out);
      break;
    case ConceptKind::Or:
      print_concept(c.lhs(), 1, out);
      out += " | ";
      print_concept(c.rhs(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string to_string(const Concept& c) {
  std::string out;
  print_concept(c, 0, out);
  return out;
}

std::string to_string(const Gci& gci) {
  return to_string(gci.lhs) + " <= " + to_string(gci.rhs);
}

std::string to_string(const FunctDecl& funct) {
  return "funct(" + funct.role + (funct.inverse ? "^-" : "") + ")";
}

std::string to_string(const Assertion& assertion) {
  std::string out;
  if (!assertion.positive) out += '-';
  out += assertion.predicate;
  out += '(';
  out += assertion.subject;
  if (assertion.is_role) {
    out += ',';
    out += assertion.object;
  }
  out += ")@";
  out += std::to_string(assertion.timestamp);
  return out;
}

// ── Concept inspection ───────────────────────────────────────────────────

bool contains_temporal(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::SometimeF:
    case ConceptKind::AlwaysF:
      return true;
    case ConceptKind::Not:
      return contains_temporal(c.operand());
    case ConceptKind::And:
    case ConceptKind::Or:
      return contains_temporal(c.lhs()) || contains_temporal(c.rhs());
    default:
      return false;
  }
}

unsigned temporal_nesting(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::SometimeF:
    case ConceptKind::AlwaysF:
      return 1 + temporal_nesting(c.operand());
    case ConceptKind::Not:
      return temporal_nesting(c.operand());
    case ConceptKind::And:
    case ConceptKind::Or:
      return std::max(temporal_nesting(c.lhs()),
                      temporal_nesting(c.rhs()));
    default:
      return 0;
  }
}

unsigned concept_length(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Not:
    case ConceptKind::SometimeF:
    case ConceptKind::AlwaysF:
      return 1 + concept_length(c.operand());
    case ConceptKind::And:
    case ConceptKind::Or:
      return 1 + concept_length(c.lhs()) + concept_length(c.rhs());
    default:
      return 1;
  }
}

std::vector<Concept> flatten_and(const Concept& c) {
  std::vector<Concept> parts;
  if (c.kind() == ConceptKind::And) {
    auto left = flatten_and(c.lhs());
    auto right = flatten_and(c.rhs());
    parts.reserve(left.size() + right.size());
    parts.insert(parts.end(), left.begin(), left.end());
    parts.insert(parts.end(), right.begin(), right.end());
  } else {
    parts.push_back(c);
  }
  return parts;
}

std::vector<Concept> flatten_or(const Concept& c) {
  std::vector<Concept> parts;
  if (c.kind() == ConceptKind::Or) {
    auto left = flatten_or(c.lhs());
    auto right = flatten_or(c.rhs());
    parts.reserve(left.size() + right.size());
    parts.insert(parts.end(), left.begin(), left.end());
    parts.insert(parts.end(), right.begin(), right.end());
  } else {
    parts.push_back(c);
  }
  return parts;
}

namespace {

std::vector<Concept> dedup_parts(std::span<const Concept> parts) {
  std::vector<Concept> unique;
  for (const Concept& part : parts) {
    bool seen = false;
    for (const Concept& kept : unique) {
      if (kept == part) {
        seen = true;
        break;
      }
    }
    if (!seen) unique.push_back(part);
  }
  return unique;
}

}  // namespace

Concept make_conjunction(std::span<const Concept> parts) {
  std::vector<Concept> unique = dedup_parts(parts);
  if (unique.empty()) return Concept::top();
  Concept acc = unique.back();
  for (std::size_t i = unique.size() - 1; i-- > 0;) {
    acc = Concept::conj(unique[i], std::move(acc));
  }
  return acc;
}

Concept make_disjunction(std::span<const Concept> parts) {
  std::vector<Concept> unique = dedup_parts(parts);
  if (unique.empty()) return Concept::bottom();
  Concept acc = unique.back();
  for (std::size_t i = unique.size() - 1; i-- > 0;) {
    acc = Concept::disj(unique[i], std::move(acc));
  }
  return acc;
}

// ── Assertion orders ─────────────────────────────────────────────────────

bool time_order_less(const Assertion& a, const Assertion& b) {
  return std::tie(a.timestamp, a.predicate, a.subject, a.object, a.positive) <
         std::tie(b.timestamp, b.predicate, b.subject, b.object, b.positive);
}

bool symbol_order_less(const Assertion& a, const Assertion& b) {
  return std::tie(a.predicate, a.subject, a.object, a.timestamp, a.positive) <
         std::tie(b.predicate, b.subject, b.object, b.timestamp, b.positive);
}

// ── Symbols ──────────────────────────────────────────────────────────────

bool Symbols::has_concept(const std::string& name) const {
  return concepts.count(name) != 0;
}

bool Symbols::has_role(const std::string& name) const {
  return roles.count(name) != 0;
}

bool Symbols::is_rigid_concept(const std::string& name) const {
  auto it = concepts.find(name);
  return it != concepts.end() && it->second.rigid;
}

bool Symbols::is_global_role(const std::string& name) const {
  auto it = roles.find(name);
  return it != roles.end() && it->second.global;
}

bool Symbols::is_rigid_predicate(const std::string& name, bool is_role) const {
  return is_role ? is_global_role(name) : is_rigid_concept(name);
}

// ── TemporalKb ───────────────────────────────────────────────────────────

std::vector<FunctDecl> TemporalKb::funct_decls() const {
  std::vector<FunctDecl> out;
  for (const auto& [name, decl] : symbols.roles) {
    if (decl.functional) out.push_back({name, false});
    if (decl.inverse_functional) out.push_back({name, true});
  }
  return out;
}

std::size_t TemporalKb::tbox_entry_count() const {
  return gcis.size() + funct_decls().size();
}

// ── Validation ───────────────────────────────────────────────────────────

const char* to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::TemporalLhs:
      return "TEMPORAL_LHS";
    case ViolationCode::UndeclaredConcept:
      return "UNDECLARED_CONCEPT";
    case ViolationCode::UndeclaredRole:
      return "UNDECLARED_ROLE";
    case ViolationCode::UndeclaredIndividual:
      return "UNDECLARED_INDIVIDUAL";
    case ViolationCode::DuplicateAssertion:
      return "DUPLICATE_ASSERTION";
    case ViolationCode::DisjunctionForbidden:
      return "DISJUNCTION_FORBIDDEN";
  }
  return "UNKNOWN";
}

namespace {

void collect_concept_violations(const Concept& c, const Symbols& symbols,
                                const ValidateOptions& options,
                                const std::string& where,
                                std::vector<Violation>& out) {
  switch (c.kind()) {
    case ConceptKind::Name:
      if (!symbols.has_concept(c.base())) {
        out.push_back({ViolationCode::UndeclaredConcept,
                       "undeclared concept '" + c.base() + "' in " + where});
      }
      break;
    case ConceptKind::Exists:
      if (!symbols.has_role(c.role().name)) {
        out.push_back({ViolationCode::UndeclaredRole,
                       "undeclared role '" + c.role().name + "' in " + where});
      }
      break;
    case ConceptKind::Not:
    case ConceptKind::SometimeF:
    case ConceptKind::AlwaysF:
      collect_concept_violations(c.operand(), symbols, options, where, out);
      break;
    case ConceptKind::Or:
      if (options.strict_grammar) {
        out.push_back({ViolationCode::DisjunctionForbidden,
                       "disjunction not allowed in strict grammar: " + where});
      }
      collect_concept_violations(c.lhs(), symbols, options, where, out);
      collect_concept_violations(c.rhs(), symbols, options, where, out);
      break;
    case ConceptKind::And:
      collect_concept_violations(c.lhs(), symbols, options, where, out);
      collect_concept_violations(c.rhs(), symbols, options, where, out);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<Violation> validate_kb(const TemporalKb& kb,
                                   const ValidateOptions& options) {
  std::vector<Violation> out;
  for (const Gci& gci : kb.gcis) {
    const std::string where = "'" + to_string(gci) + "'";
    if (contains_temporal(gci.lhs)) {
      out.push_back({ViolationCode::TemporalLhs,
                     "future-time operator on GCI left-hand side in " + where});
    }
    collect_concept_violations(gci.lhs, kb.symbols, options, where, out);
    collect_concept_violations(gci.rhs, kb.symbols, options, where, out);
  }
  std::set<std::string> seen_assertions;
  for (const Assertion& a : kb.abox) {
    const std::string text = to_string(a);
    if (a.is_role) {
      if (!kb.symbols.has_role(a.predicate)) {
        out.push_back({ViolationCode::UndeclaredRole,
                       "undeclared role '" + a.predicate + "' in '" + text + "'"});
      }
    } else {
      if (!kb.symbols.has_concept(a.predicate)) {
        out.push_back({ViolationCode::UndeclaredConcept, "undeclared concept '" +
                                                             a.predicate +
                                                             "' in '" + text + "'"});
      }
    }
    if (options.strict_declarations) {
      if (kb.symbols.individuals.count(a.subject) == 0) {
        out.push_back({ViolationCode::UndeclaredIndividual,
                       "undeclared individual '" + a.subject + "' in '" + text +
                           "'"});
      }
      if (a.is_role && kb.symbols.individuals.count(a.object) == 0) {
        out.push_back({ViolationCode::UndeclaredIndividual,
                       "undeclared individual '" + a.object + "' in '" + text +
                           "'"});
      }
    }
    if (!seen_assertions.insert(text).second) {
      out.push_back(
          {ViolationCode::DuplicateAssertion, "duplicate assertion '" + text + "'"});
    }
  }
  return out;
}

// ── Derived quantities ───────────────────────────────────────────────────

unsigned temporal_depth(const std::vector<Gci>& gcis) {
  unsigned depth = 0;
  for (const Gci& gci : gcis) {
    depth = std::max(depth, temporal_nesting(gci.lhs));
    depth = std::max(depth, temporal_nesting(gci.rhs));
  }
  return depth;
}

TemporalKb expand_rigid_concepts(const TemporalKb& kb) {
  TemporalKb out = kb;
  for (const auto& [name, decl] : kb.symbols.concepts) {
    if (!decl.rigid) continue;
    const Gci persistence{Concept::name(name),
                          Concept::always(Concept::name(name))};
    if (std::find(out.gcis.begin(), out.gcis.end(), persistence) ==
        out.gcis.end()) {
      out.gcis.push_back(persistence);
    }
  }
  return out;
}

// ── Serialization ────────────────────────────────────────────────────────

std::string serialize_kb(const TemporalKb& kb) {
  std::ostringstream out;
  for (const auto& [name, decl] : kb.symbols.concepts) {
    out << "concept " << name;
    if (decl.rigid) out << " rigid";
    out << '\n';
  }
  for (const auto& [name, decl] : kb.symbols.roles) {
    out << "role " << name;
    if (decl.global) out << " global";
    if (decl.functional) out << " functional";
    if (decl.inverse_functional) out << " inverse-functional";
    out << '\n';
  }
  for (const std::string& name : kb.symbols.individuals) {
    out << "individual " << name << '\n';
  }
  out << "\ntbox:\n";
  for (const Gci& gci : kb.gcis) out << to_string(gci) << '\n';
  out << "\nabox:\n";
  for (const Assertion& a : kb.abox) out << to_string(a) << '\n';
  return out.str();
}

}  // namespace temporepair
