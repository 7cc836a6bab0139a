#ifndef TEMPOREPAIR_KB_HPP
#define TEMPOREPAIR_KB_HPP

// Core knowledge-base model: concept expressions with optional future-time
// operators, role expressions, timestamped assertions, symbol declarations.
//
// Design notes
//  - Concept values are immutable trees behind shared pointers; copying is
//    cheap and sharing subtrees is safe. Equality is structural.
//  - The same tree type serves both the temporal KB and its time-grounded
//    image: a Name or role leaf optionally carries a time index. Untimed
//    trees never set it; grounded trees always do.
//  - Assertions order canonically by (timestamp, predicate, arguments,
//    polarity); a second comparator ordering by (predicate, arguments,
//    timestamp) exists for tie-breaking in the repair engine.
//  - Symbol tables are ordered maps so serialization is deterministic and
//    round-trips structurally.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace temporepair {

// ── Role expressions ─────────────────────────────────────────────────────

struct RoleExpr {
  std::string name;
  bool inverted = false;
  std::optional<unsigned> index;  // set only in time-grounded trees

  friend bool operator==(const RoleExpr&, const RoleExpr&) = default;
};

std::string to_string(const RoleExpr& role);

// ── Concept expressions ──────────────────────────────────────────────────

enum class ConceptKind : std::uint8_t {
  Top,
  Bottom,
  Name,
  Exists,
  Not,
  And,
  Or,
  SometimeF,  // "eventually" over future time points
  AlwaysF,    // "always" over future time points
};

class Concept {
 public:
  /// Default-constructed value is Top.
  Concept();

  static Concept top();
  static Concept bottom();
  static Concept name(std::string base, std::optional<unsigned> index = {});
  static Concept exists(RoleExpr role);
  static Concept negation(Concept operand);
  static Concept conj(Concept lhs, Concept rhs);
  static Concept disj(Concept lhs, Concept rhs);
  static Concept sometime(Concept operand);
  static Concept always(Concept operand);

  ConceptKind kind() const { return node_->kind; }
  const std::string& base() const { return node_->base; }          // Name
  std::optional<unsigned> time_index() const { return node_->index; }  // Name
  const RoleExpr& role() const { return node_->role; }             // Exists
  Concept lhs() const { return Concept(node_->a); }                // And/Or
  Concept rhs() const { return Concept(node_->b); }                // And/Or
  Concept operand() const { return Concept(node_->a); }  // Not/SometimeF/AlwaysF

  bool operator==(const Concept& other) const;
  bool operator!=(const Concept& other) const { return !(*this == other); }

 private:
  struct Node {
    ConceptKind kind = ConceptKind::Top;
    std::string base;
    std::optional<unsigned> index;
    RoleExpr role;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
  };

  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Surface-syntax rendering with minimal parentheses
/// (unary binds tighter than `&`, which binds tighter than `|`).
std::string to_string(const Concept& c);

/// True when any future-time operator occurs in the tree.
bool contains_temporal(const Concept& c);

/// Maximum nesting of future-time operators along any root-to-leaf path.
unsigned temporal_nesting(const Concept& c);

/// Number of length units: every operator and every basic leaf counts one;
/// the role under an existential does not add a unit.
unsigned concept_length(const Concept& c);

/// Flattens a (possibly nested) conjunction/disjunction spine into its
/// conjuncts/disjuncts; a non-matching node yields a single-element list.
std::vector<Concept> flatten_and(const Concept& c);
std::vector<Concept> flatten_or(const Concept& c);

/// Right-nested fold with structural deduplication (first occurrence wins).
/// Empty input yields Top for conjunction, Bottom for disjunction.
Concept make_conjunction(std::span<const Concept> parts);
Concept make_disjunction(std::span<const Concept> parts);

// ── Axioms and assertions ────────────────────────────────────────────────

struct Gci {
  Concept lhs;
  Concept rhs;

  friend bool operator==(const Gci&, const Gci&) = default;
};

std::string to_string(const Gci& gci);

/// Functionality of a role or of its inverse.
struct FunctDecl {
  std::string role;
  bool inverse = false;

  friend bool operator==(const FunctDecl&, const FunctDecl&) = default;
  friend auto operator<=>(const FunctDecl&, const FunctDecl&) = default;
};

std::string to_string(const FunctDecl& funct);

struct Assertion {
  bool positive = true;
  bool is_role = false;
  std::string predicate;
  std::string subject;
  std::string object;  // empty for concept assertions
  unsigned timestamp = 0;

  friend bool operator==(const Assertion&, const Assertion&) = default;
};

std::string to_string(const Assertion& assertion);

/// Canonical order: (timestamp, predicate, subject, object, polarity).
bool time_order_less(const Assertion& a, const Assertion& b);
/// Tie-break order: (predicate, subject, object, timestamp, polarity).
bool symbol_order_less(const Assertion& a, const Assertion& b);

/// operator< is the canonical time order, so ordered containers and sorts
/// agree with the documented deterministic iteration order.
inline bool operator<(const Assertion& a, const Assertion& b) {
  return time_order_less(a, b);
}

// ── Symbol declarations ──────────────────────────────────────────────────

struct ConceptDecl {
  bool rigid = false;

  friend bool operator==(const ConceptDecl&, const ConceptDecl&) = default;
};

struct RoleDecl {
  bool global = false;  // a role is either global (rigid) or local
  bool functional = false;
  bool inverse_functional = false;

  friend bool operator==(const RoleDecl&, const RoleDecl&) = default;
};

struct Symbols {
  std::map<std::string, ConceptDecl> concepts;
  std::map<std::string, RoleDecl> roles;
  std::set<std::string> individuals;

  bool has_concept(const std::string& name) const;
  bool has_role(const std::string& name) const;
  bool is_rigid_concept(const std::string& name) const;
  bool is_global_role(const std::string& name) const;
  /// Rigid predicate = rigid concept or global role, by assertion kind.
  bool is_rigid_predicate(const std::string& name, bool is_role) const;

  friend bool operator==(const Symbols&, const Symbols&) = default;
};

// ── Knowledge base ───────────────────────────────────────────────────────

struct TemporalKb {
  Symbols symbols;
  std::vector<Gci> gcis;        // file order
  std::vector<Assertion> abox;  // file order, duplicate-free

  /// Functionality entries derived from role declarations, sorted by role
  /// name with direct before inverse.
  std::vector<FunctDecl> funct_decls() const;

  /// GCIs plus functionality entries.
  std::size_t tbox_entry_count() const;

  friend bool operator==(const TemporalKb&, const TemporalKb&) = default;
};

// ── Validation ───────────────────────────────────────────────────────────

enum class ViolationCode : std::uint8_t {
  TemporalLhs,           // future-time operator on a GCI left-hand side
  UndeclaredConcept,
  UndeclaredRole,
  UndeclaredIndividual,  // strict-declaration mode only
  DuplicateAssertion,
  DisjunctionForbidden,  // strict-grammar mode only
};

const char* to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidateOptions {
  bool strict_grammar = false;       // reject disjunction nodes
  bool strict_declarations = false;  // individuals must be declared
};

std::vector<Violation> validate_kb(const TemporalKb& kb,
                                   const ValidateOptions& options = {});

// ── Derived quantities and transforms ────────────────────────────────────

/// Maximum temporal nesting over all GCI sides; 0 for an atemporal TBox.
unsigned temporal_depth(const std::vector<Gci>& gcis);

/// Appends `A <= G A` for every rigid concept A whose persistence GCI is not
/// already present (structural comparison). Run before translation.
TemporalKb expand_rigid_concepts(const TemporalKb& kb);

/// Deterministic canonical text: sorted declarations, axioms and assertions
/// in stored order. parse_kb(serialize_kb(kb)) == kb for valid inputs.
std::string serialize_kb(const TemporalKb& kb);

}  // namespace temporepair

#endif  // TEMPOREPAIR_KB_HPP
