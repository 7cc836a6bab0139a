#ifndef TEMPOREPAIR_JSON_IO_HPP
#define TEMPOREPAIR_JSON_IO_HPP

// JSON renderings of results and reports. Key names are a scripting
// interface; the shipped files under schemas/ pin them. Assertions appear
// as their canonical text form, time-indexed names as {base, index} pairs
// (string concatenation could collide with user names containing '@').

#include <string>
#include <vector>

#include "json.hpp"
#include "temporepair/explain.hpp"
#include "temporepair/gen.hpp"
#include "temporepair/kb.hpp"
#include "temporepair/oracle.hpp"
#include "temporepair/reason.hpp"
#include "temporepair/repair.hpp"
#include "temporepair/translate.hpp"

namespace temporepair {

/// Insertion-ordered so reports read in the documented key order; the
/// rendering is deterministic either way.
using Json = nlohmann::ordered_json;

Json stats_json(const SolveStats& stats);

/// {verdict, stats}
Json check_report(const CheckResult& result);

/// {verdict, domain_size, stats}
Json oracle_report(const OracleResult& result);

/// {horizon: {l, n, m, H}, counts per section}
Json translate_report(const GroundKb& kb);

/// Full structural rendering of a grounding.
Json ground_kb_json(const GroundKb& kb);

/// {muses: [{members, label}], graph: {vertices: [{assertion, I_d, w_t}],
///  edges: [{members, label}]}, complete}. Weights use the default
/// configuration (observed-span bonus for rigid predicates).
Json explain_report(const TemporalKb& kb, const MusEnumeration& enumeration,
                    const InconsistencyGraph& graph);

/// {removed: [{assertion, I_d, w_t, step, round, edges_covered}],
///  repaired: [...], iterations, maximal}
Json repair_report(const RepairResult& result);

/// {config, files}
Json gen_report(const GenConfig& config,
                const std::vector<std::string>& files);

/// 2-space indent and a trailing newline.
std::string to_text(const Json& value);

}  // namespace temporepair

#endif  // TEMPOREPAIR_JSON_IO_HPP
