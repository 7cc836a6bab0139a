#ifndef TEMPOREPAIR_GEN_HPP
#define TEMPOREPAIR_GEN_HPP

// Random knowledge-base generator for benchmark corpora.
//
// Sampling scheme
//  - Length-1 concepts pick a bare name or an existential restriction with
//    equal probability; the role direction under the existential is uniform.
//  - Length-2 concepts apply F or G with probability temporal_prob / 2 each
//    and negation with the remaining mass.
//  - Longer concepts either apply one of those unary operators (same split,
//    with conjunction taking negation's share alongside it) or split into a
//    conjunction with a uniformly chosen left length.
//  - Left-hand sides of inclusions never receive temporal operators; the
//    remaining operator weights are renormalized.
//  - A role name must be global or local consistently across the whole KB,
//    so globality is drawn once per name, not per occurrence.
//
// Determinism: std::mt19937_64 has a fully specified output sequence and
// the helpers below avoid the standard distribution templates (whose
// algorithms differ between library vendors), so one seed reproduces the
// same corpus on every platform.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "temporepair/kb.hpp"

namespace temporepair {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0. Rejection sampling, no
  /// modulo bias.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) built from the top 53 bits of one draw.
  double unit();

  bool chance(double probability) { return unit() < probability; }

 private:
  std::mt19937_64 engine_;
};

struct GenConfig {
  std::uint64_t seed = 0;
  unsigned name_count = 4;      // concept names A1.. and role names R1..
  unsigned gci_count = 8;       // inclusions per TBox
  unsigned concept_length = 3;  // exact length of every inclusion side
  double temporal_prob = 0.5;   // mass on {F, G} at unary operator picks
  double global_prob = 0.5;     // chance each role name is global
  std::size_t abox_size = 16;
  unsigned max_time = 4;
  double negative_prob = 0.0;   // chance an assertion is negated
  std::size_t batch = 1;
};

/// Concept and role names with the per-name globality pre-drawn.
struct GenVocabulary {
  std::vector<std::string> concepts;
  std::vector<std::string> roles;
  std::vector<bool> role_global;  // parallel to roles
};

GenVocabulary make_vocabulary(const GenConfig& config, Rng& rng);

/// One concept expression with exactly `length` units (operators and basic
/// leaves count one each; the role under an existential is free). Temporal
/// operators are suppressed when `allow_temporal` is false.
Concept random_concept(unsigned length, const GenVocabulary& vocab,
                       const GenConfig& config, Rng& rng,
                       bool allow_temporal = true);

/// Exactly config.gci_count inclusions; left sides atemporal.
std::vector<Gci> random_tbox(const GenVocabulary& vocab,
                             const GenConfig& config, Rng& rng);

/// config.abox_size distinct assertions over the names that occur in
/// `gcis`, predicates uniform, individuals from a pool of ceil(sqrt(size))
/// fresh names, timestamps uniform in [0, config.max_time]. Throws
/// std::invalid_argument when no name occurs or the requested size exceeds
/// the number of distinct assertions that exist.
std::vector<Assertion> random_abox(const std::vector<Gci>& gcis,
                                   const GenConfig& config, Rng& rng);

/// Full KB from config.seed: vocabulary, TBox, ABox, declarations.
TemporalKb generate_kb(const GenConfig& config);

/// config.batch KBs; member i uses seed + i * 0x9E3779B97F4A7C15 so batches
/// can grow without reshuffling earlier members.
std::vector<TemporalKb> generate_batch(const GenConfig& config);

}  // namespace temporepair

#endif  // TEMPOREPAIR_GEN_HPP
