#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hopgraph/corpus.hpp"
#include "hopgraph/pipeline.hpp"
#include "json.hpp"

namespace hopgraph {

/// A ratio with its denominator; value is empty when the denominator is 0.
struct Ratio {
  std::optional<double> value;
  std::size_t denominator = 0;
};

enum class PrecisionDenominator { K, MinKSelected };

/// Throws Error when a gold question has no prediction.
Ratio accuracy(std::span<const PredictionRecord> preds, std::span<const QuestionInstance> golds);

/// |top-K ∩ gold| / K, or / min(K, |selected|) with MinKSelected (0 when
/// nothing is selected).
double precision_at_k(const PredictionRecord& pred, const std::set<std::string>& gold, std::size_t k,
                      PrecisionDenominator denom = PrecisionDenominator::K);

/// Mean P@K over questions with a non-empty gold explanation set.
Ratio mean_precision_at_k(std::span<const PredictionRecord> preds, std::span<const QuestionInstance> golds,
                          std::size_t k, PrecisionDenominator denom = PrecisionDenominator::K);

/// For each question t, the others sharing at least K gold facts form S_t;
/// score_t = Σ_{u∈S_t} |E_u ∩ E_t| / Σ_{u∈S_t} |E_u|. Mean over questions with
/// a defined score; the denominator is that count.
Ratio explanatory_consistency(std::span<const PredictionRecord> preds, std::span<const QuestionInstance> golds,
                              std::size_t k);

/// (|wrong ∩ no-gold-retrieved| + |correct ∩ gold-retrieved|) / |questions|.
/// Throws Error on an empty evaluation set.
double faithfulness(std::span<const PredictionRecord> preds, std::span<const QuestionInstance> golds);

struct MetricsReport {
  Ratio accuracy;
  std::map<std::size_t, Ratio> precision_at;
  std::map<std::size_t, Ratio> precision_adjusted_at;  // min(K, |selected|) denominator, optional
  std::map<std::size_t, Ratio> consistency_at;
  Ratio faithfulness;

  nlohmann::ordered_json to_json() const;
};

struct MetricsOptions {
  std::vector<std::size_t> precision_ks = {1, 2};
  std::vector<std::size_t> consistency_ks = {1, 2, 3};
  bool report_adjusted_precision = false;
};

/// Explanation metrics are null when no question carries gold explanations.
MetricsReport evaluate(std::span<const PredictionRecord> preds, std::span<const QuestionInstance> golds,
                       const MetricsOptions& options = {});

/// Aligned text table of the report.
std::string format_report(const MetricsReport& report);

/// One row per question for auditing.
void write_prediction_csv(const std::filesystem::path& path, std::span<const PredictionRecord> preds,
                          std::span<const QuestionInstance> golds);

}  // namespace hopgraph
