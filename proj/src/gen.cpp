#include "temporepair/gen.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "temporepair/log.hpp"

namespace temporepair {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty sampling range");
  // Largest multiple of bound that fits; draws above it would be biased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t draw = engine_();
    if (draw < limit) return draw % bound;
  }
}

double Rng::unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

GenVocabulary make_vocabulary(const GenConfig& config, Rng& rng) {
  GenVocabulary vocab;
  vocab.concepts.reserve(config.name_count);
  vocab.roles.reserve(config.name_count);
  for (unsigned i = 1; i <= config.name_count; ++i) {
    vocab.concepts.push_back("A" + std::to_string(i));
    vocab.roles.push_back("R" + std::to_string(i));
    vocab.role_global.push_back(rng.chance(config.global_prob));
  }
  return vocab;
}

namespace {

Concept random_basic(const GenVocabulary& vocab, Rng& rng) {
  if (vocab.concepts.empty() && vocab.roles.empty())
    throw std::invalid_argument("the vocabulary is empty");
  const bool existential =
      !vocab.roles.empty() && (vocab.concepts.empty() || rng.below(2) == 1);
  if (!existential)
    return Concept::name(vocab.concepts[rng.below(vocab.concepts.size())]);
  RoleExpr role;
  role.name = vocab.roles[rng.below(vocab.roles.size())];
  role.inverted = rng.below(2) == 1;
  return Concept::exists(std::move(role));
}

enum class UnaryOp { Negation, Sometime, Always };

UnaryOp random_unary(const GenConfig& config, Rng& rng, bool allow_temporal) {
  if (!allow_temporal) return UnaryOp::Negation;
  const double draw = rng.unit();
  if (draw < config.temporal_prob / 2) return UnaryOp::Sometime;
  if (draw < config.temporal_prob) return UnaryOp::Always;
  return UnaryOp::Negation;
}

Concept apply_unary(UnaryOp op, Concept operand) {
  switch (op) {
    case UnaryOp::Negation: return Concept::negation(std::move(operand));
    case UnaryOp::Sometime: return Concept::sometime(std::move(operand));
    case UnaryOp::Always: return Concept::always(std::move(operand));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Concept random_concept(unsigned length, const GenVocabulary& vocab,
                       const GenConfig& config, Rng& rng,
                       bool allow_temporal) {
  if (length == 0)
    throw std::invalid_argument("a concept needs at least one unit");
  if (length == 1) return random_basic(vocab, rng);
  if (length == 2)
    return apply_unary(random_unary(config, rng, allow_temporal),
                       random_concept(1, vocab, config, rng, allow_temporal));

  // Unary application or a conjunction split. Temporal operators keep the
  // temporal_prob mass split in half; negation and conjunction share the
  // rest. Without temporal operators the two survivors split evenly.
  bool conjunction;
  UnaryOp op = UnaryOp::Negation;
  if (allow_temporal) {
    const double draw = rng.unit();
    if (draw < config.temporal_prob / 2) {
      conjunction = false;
      op = UnaryOp::Sometime;
    } else if (draw < config.temporal_prob) {
      conjunction = false;
      op = UnaryOp::Always;
    } else {
      conjunction =
          draw >= config.temporal_prob + (1.0 - config.temporal_prob) / 2;
    }
  } else {
    conjunction = rng.below(2) == 1;
  }

  if (!conjunction)
    return apply_unary(
        op, random_concept(length - 1, vocab, config, rng, allow_temporal));

  // K uniform in [1, length - 2]; both operands stay nonempty.
  const unsigned left =
      1 + static_cast<unsigned>(rng.below(length - 2));
  Concept lhs = random_concept(left, vocab, config, rng, allow_temporal);
  Concept rhs =
      random_concept(length - 1 - left, vocab, config, rng, allow_temporal);
  return Concept::conj(std::move(lhs), std::move(rhs));
}

std::vector<Gci> random_tbox(const GenVocabulary& vocab,
                             const GenConfig& config, Rng& rng) {
  std::vector<Gci> gcis;
  gcis.reserve(config.gci_count);
  for (unsigned i = 0; i < config.gci_count; ++i) {
    Concept lhs = random_concept(config.concept_length, vocab, config, rng,
                                 /*allow_temporal=*/false);
    Concept rhs = random_concept(config.concept_length, vocab, config, rng,
                                 /*allow_temporal=*/true);
    gcis.push_back(Gci{std::move(lhs), std::move(rhs)});
  }
  return gcis;
}

namespace {

void collect_names(const Concept& c, std::set<std::string>& concepts,
                   std::set<std::string>& roles) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bottom:
      return;
    case ConceptKind::Name:
      concepts.insert(c.base());
      return;
    case ConceptKind::Exists:
      roles.insert(c.role().name);
      return;
    case ConceptKind::Not:
    case ConceptKind::SometimeF:
    case ConceptKind::AlwaysF:
      collect_names(c.operand(), concepts, roles);
      return;
    case ConceptKind::And:
    case ConceptKind::Or:
      collect_names(c.lhs(), concepts, roles);
      collect_names(c.rhs(), concepts, roles);
      return;
  }
}

}  // namespace

std::vector<Assertion> random_abox(const std::vector<Gci>& gcis,
                                   const GenConfig& config, Rng& rng) {
  if (config.abox_size == 0) return {};

  std::set<std::string> concept_set;
  std::set<std::string> role_set;
  for (const Gci& gci : gcis) {
    collect_names(gci.lhs, concept_set, role_set);
    collect_names(gci.rhs, concept_set, role_set);
  }
  std::vector<std::string> concepts(concept_set.begin(), concept_set.end());
  std::vector<std::string> roles(role_set.begin(), role_set.end());
  if (concepts.empty() && roles.empty())
    throw std::invalid_argument(
        "no concept or role name occurs in the terminology");

  const auto pool_size = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(config.abox_size))));
  std::vector<std::string> pool;
  pool.reserve(pool_size);
  for (std::size_t i = 0; i < pool_size; ++i)
    pool.push_back("ind" + std::to_string(i));

  const std::size_t polarities = config.negative_prob > 0.0 ? 2 : 1;
  const std::size_t times = static_cast<std::size_t>(config.max_time) + 1;
  const std::size_t space =
      polarities * times *
      (concepts.size() * pool.size() + roles.size() * pool.size() * pool.size());
  if (config.abox_size > space)
    throw std::invalid_argument(
        "the requested assertion count exceeds the distinct assertions "
        "available; increase max_time or the vocabulary");

  std::set<Assertion> seen;
  std::vector<Assertion> abox;
  abox.reserve(config.abox_size);
  const std::size_t predicates = concepts.size() + roles.size();
  while (abox.size() < config.abox_size) {
    Assertion a;
    const std::size_t pick = rng.below(predicates);
    if (pick < concepts.size()) {
      a.predicate = concepts[pick];
      a.subject = pool[rng.below(pool.size())];
    } else {
      a.is_role = true;
      a.predicate = roles[pick - concepts.size()];
      a.subject = pool[rng.below(pool.size())];
      a.object = pool[rng.below(pool.size())];
    }
    a.timestamp = static_cast<unsigned>(
        rng.below(static_cast<std::uint64_t>(config.max_time) + 1));
    if (config.negative_prob > 0.0 && rng.chance(config.negative_prob))
      a.positive = false;
    if (seen.insert(a).second) abox.push_back(std::move(a));
  }
  return abox;
}

TemporalKb generate_kb(const GenConfig& config) {
  Rng rng(config.seed);
  const GenVocabulary vocab = make_vocabulary(config, rng);

  TemporalKb kb;
  kb.gcis = random_tbox(vocab, config, rng);
  kb.abox = random_abox(kb.gcis, config, rng);

  for (const std::string& name : vocab.concepts)
    kb.symbols.concepts.emplace(name, ConceptDecl{});
  for (std::size_t i = 0; i < vocab.roles.size(); ++i) {
    RoleDecl decl;
    decl.global = vocab.role_global[i];
    kb.symbols.roles.emplace(vocab.roles[i], decl);
  }
  for (const Assertion& a : kb.abox) {
    kb.symbols.individuals.insert(a.subject);
    if (a.is_role) kb.symbols.individuals.insert(a.object);
  }

  log(LogLevel::Debug, "generated KB with " + std::to_string(kb.gcis.size()) +
                           " inclusions and " + std::to_string(kb.abox.size()) +
                           " assertions from seed " +
                           std::to_string(config.seed));
  return kb;
}

std::vector<TemporalKb> generate_batch(const GenConfig& config) {
  std::vector<TemporalKb> batch;
  batch.reserve(config.batch);
  for (std::size_t i = 0; i < config.batch; ++i) {
    GenConfig member = config;
    member.seed =
        config.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(i);
    member.batch = 1;
    batch.push_back(generate_kb(member));
  }
  return batch;
}

}  // namespace temporepair
