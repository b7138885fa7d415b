#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "hopgraph/evaluation.hpp"
#include "hopgraph/pipeline.hpp"
#include "hopgraph/synthetic.hpp"
#include "hopgraph/training.hpp"
#include "json.hpp"

namespace hopgraph {

struct RunPaths {
  std::filesystem::path questions;
  std::filesystem::path dev_questions;  // optional; otherwise a tail split of `questions`
  std::filesystem::path facts;
  std::filesystem::path embeddings;
  std::filesystem::path lemma_map;  // optional
  std::filesystem::path stopwords;  // optional
  std::filesystem::path checkpoint;
  std::filesystem::path report;
  std::filesystem::path train_log;    // defaults next to the checkpoint
  std::filesystem::path predictions;  // optional per-question CSV
  std::filesystem::path synthetic_dir;
};

enum class EvalSplit { Dev, All };

/// Everything a command needs. Relative paths in the file resolve against the
/// file's directory.
struct RunConfig {
  RunPaths paths;
  GraphSettings graph;
  TrainConfig train;
  MetricsOptions metrics;
  SyntheticSpec synthetic;
  double dev_fraction = 0.2;
  EvalSplit eval_split = EvalSplit::Dev;
  std::uint64_t seed = 42;
  std::size_t threads = 1;
  std::size_t trials = 200;

  /// Numeric range checks; throws ValidationError.
  void validate() const;
  nlohmann::ordered_json to_json() const;
  static RunConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
};

/// Throws ValidationError for a missing or malformed file.
RunConfig load_run_config(const std::filesystem::path& path);

/// Command-line values; each one set wins over the file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
  std::optional<std::size_t> epochs;
  std::optional<std::size_t> k;
  std::optional<double> lambda;
  std::optional<double> temperature;
  std::optional<std::filesystem::path> checkpoint;
};

void apply_overrides(RunConfig& config, const Overrides& overrides);

/// Throws ValidationError naming the first required path that does not exist.
void require_existing(const std::filesystem::path& path, const std::string& what);

}  // namespace hopgraph
