#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "hopgraph/corpus.hpp"
#include "hopgraph/relevance.hpp"
#include "json.hpp"

namespace hopgraph {

/// Planted corpus: every question owns a disjoint block of vocabulary terms,
/// so facts of different questions never interact. Each question is resampled
/// until, under theta_star, the correct hypothesis selects exactly its gold
/// facts and beats every other choice by at least `margin`.
struct SyntheticSpec {
  std::size_t n_questions = 250;
  std::size_t n_choices = 4;
  std::size_t vocab_size = 0;  // 0 = the minimum needed, n_questions * block_size()
  std::size_t facts_per_kind = 2;
  std::size_t distractor_count = 14;
  std::uint64_t seed = 42;

  ThetaParams theta_star = default_theta_star();
  std::size_t abstract_cap = 2;
  double margin = 0.02;
  /// Gold facts must rank within this many facts for the correct hypothesis.
  std::size_t gold_rank_limit = 10;
  /// Non-gold facts required in that same pool (capped by distractor_count).
  std::size_t min_pool_distractors = 5;
  /// Reject questions that the uniform 0.5 parameters already answer.
  bool require_hard = true;
  /// Question i must also be missed when coefficient probe_dims[i % size] of
  /// theta_star is replaced by probe_value, so every listed coefficient
  /// matters for some questions. The probe is dropped for a question after
  /// max_resamples / 2 failed drafts.
  std::vector<std::size_t> probe_dims = {ThetaParams::kGG,  ThetaParams::kAA,  ThetaParams::kGA,
                                         ThetaParams::kQGL, ThetaParams::kQGS, ThetaParams::kQAS};
  double probe_value = 0.5;
  std::size_t max_resamples = 5000;

  static ThetaParams default_theta_star();
  std::size_t block_size() const;
  std::size_t effective_vocab_size() const { return vocab_size ? vocab_size : n_questions * block_size(); }
  void validate() const;

  nlohmann::ordered_json to_json() const;
  static SyntheticSpec from_json(const nlohmann::json& j);
};

struct SyntheticCorpus {
  std::vector<QuestionInstance> questions;
  FactBank facts;
  EmbeddingStore embeddings;
  std::size_t resamples = 0;  // rejected drafts over the whole corpus
  std::size_t probe_fallbacks = 0;  // questions accepted without their probe
};

/// Pure function of the spec. Throws Error when a question cannot be
/// verified within max_resamples drafts.
SyntheticCorpus generate_synthetic(const SyntheticSpec& spec);

struct SyntheticPaths {
  std::filesystem::path questions;
  std::filesystem::path facts;
  std::filesystem::path embeddings;
};

SyntheticPaths synthetic_paths(const std::filesystem::path& dir);
void write_synthetic(const std::filesystem::path& dir, const SyntheticCorpus& corpus);

/// Term token used in synthetic texts, e.g. "t0042".
std::string synthetic_term(std::size_t id);

}  // namespace hopgraph
