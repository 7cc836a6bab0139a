#ifndef TEMPOREPAIR_TRANSLATE_HPP
#define TEMPOREPAIR_TRANSLATE_HPP

// Reduction of a temporal KB to a time-indexed atemporal KB over a finite
// window [l, H]:
//  - every GCI is grounded at every index in the window, with future-time
//    operators expanded to conjunctions/disjunctions over the remaining
//    window (reflexive ranges by default, strict ranges behind an option);
//  - global roles become forward role inclusions R@i <= R@k for i <= k;
//  - functionality declarations are stamped at every index;
//  - ABox assertions map each predicate P at timestamp n to P@n.

#include <stdexcept>
#include <string>
#include <vector>

#include "temporepair/kb.hpp"

namespace temporepair {

struct TranslateOptions {
  /// Future operators range over k in [i, H] when false (the default,
  /// matching the translation's worked behavior) and k in [i+1, H] when
  /// true. An empty strict range collapses: always -> Top, eventually -> Bot.
  bool strict_future = false;
};

/// Time window of the grounding.
struct Horizon {
  unsigned l = 0;  // earliest ABox timestamp (0 when the ABox is empty)
  unsigned n = 0;  // latest ABox timestamp (0 when the ABox is empty)
  unsigned m = 0;  // temporal depth of the TBox
  unsigned H = 0;  // n + m

  unsigned width() const { return H - l + 1; }

  friend bool operator==(const Horizon&, const Horizon&) = default;
};

/// A predicate name paired with a time index, rendered "Base@i".
struct TimeIndexedName {
  std::string base;
  unsigned index = 0;

  friend bool operator==(const TimeIndexedName&, const TimeIndexedName&) = default;
  friend auto operator<=>(const TimeIndexedName&, const TimeIndexedName&) = default;
};

std::string to_string(const TimeIndexedName& name);

struct GroundGci {
  Concept lhs;  // all names time-indexed, no future-time operators
  Concept rhs;

  friend bool operator==(const GroundGci&, const GroundGci&) = default;
};

struct RoleInclusion {
  TimeIndexedName sub;    // same base
  TimeIndexedName super;

  friend bool operator==(const RoleInclusion&, const RoleInclusion&) = default;
};

struct GroundFunct {
  TimeIndexedName role;
  bool inverse = false;

  friend bool operator==(const GroundFunct&, const GroundFunct&) = default;
};

struct GroundAssertion {
  bool positive = true;
  bool is_role = false;
  TimeIndexedName predicate;
  std::string subject;
  std::string object;  // empty for concept assertions

  friend bool operator==(const GroundAssertion&, const GroundAssertion&) = default;
};

std::string to_string(const GroundAssertion& assertion);

struct GroundKb {
  Horizon horizon;
  std::vector<GroundGci> gcis;
  std::vector<RoleInclusion> role_inclusions;
  std::vector<GroundFunct> functionality;
  std::vector<GroundAssertion> abox;  // same order as the source ABox
};

class TranslateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// l/n from the ABox timestamps, m = temporal_depth(kb.gcis), H = n + m.
/// Callers that rely on rigid-concept persistence must expand first.
Horizon compute_horizon(const TemporalKb& kb);

/// Grounds one concept at index i. Throws TranslateError unless
/// l <= i <= H. Expanded conjunctions/disjunctions are right-nested and
/// structurally deduplicated.
Concept translate_concept(const Concept& c, unsigned index,
                          const Horizon& horizon,
                          const TranslateOptions& options = {});

/// Grounds the TBox side: GCI instances at every window index, forward
/// inclusions for every global role, functionality at every index. The
/// result's ABox is left empty.
GroundKb translate_tbox(const TemporalKb& kb, const Horizon& horizon,
                        const TranslateOptions& options = {});

/// Maps assertions to their time-indexed image, preserving order. Throws
/// TranslateError when a timestamp falls outside [l, n].
std::vector<GroundAssertion> translate_abox(const std::vector<Assertion>& abox,
                                            const Horizon& horizon);

/// expand_rigid_concepts, then compute_horizon, then both halves.
GroundKb translate_kb(const TemporalKb& kb, const TranslateOptions& options = {});

/// True when no future-time operator survives anywhere in the grounding and
/// every time index lies inside the window. The grounding must satisfy this
/// by construction; exposed for property checks.
bool ground_kb_well_formed(const GroundKb& kb);

/// Text rendering: declarations for every time-indexed name in use, then
/// grounded GCIs, `roleinc` lines, and the grounded ABox.
std::string serialize_ground_kb(const GroundKb& kb);

}  // namespace temporepair

#endif  // TEMPOREPAIR_TRANSLATE_HPP
