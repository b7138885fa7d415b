#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopgraph/corpus.hpp"
#include "hopgraph/dbcs.hpp"
#include "hopgraph/matrix.hpp"
#include "hopgraph/relevance.hpp"
#include "hopgraph/retrieval.hpp"
#include "hopgraph/solver.hpp"

namespace hopgraph {

/// Residual adapter on frozen embeddings: e' = e + P·e.
struct AdapterParams {
  std::size_t dim = 0;
  std::vector<double> p;  // row-major dim x dim, starts at zero

  static AdapterParams zeros(std::size_t dim) { return {dim, std::vector<double>(dim * dim, 0.0)}; }
  std::vector<double> apply(std::span<const float> e) const;
};

struct ModelParams {
  ThetaParams theta = ThetaParams::uniform(0.5);
  std::optional<AdapterParams> adapter;
};

/// Settings shared by inference and training.
struct GraphSettings {
  std::size_t k = 10;
  std::optional<KindQuota> quota;
  std::size_t abstract_cap = 2;
  std::optional<std::size_t> grounding_cap;
  RelevanceOptions relevance;
  double temperature = 8.77;
};

/// The parameter-independent part of one hypothesis graph: retrieved pool,
/// lexical scores and frozen semantic scores.
struct CandidateGraph {
  Hypothesis hypothesis;
  std::vector<std::size_t> fact_indices;  // bank positions, pool order
  std::vector<NodeKind> kinds;            // kinds[0] == Hypothesis
  RelevanceScores scores;
  std::span<const float> hypothesis_vector;
  std::vector<std::span<const float>> fact_vectors;

  std::size_t fact_count() const { return fact_indices.size(); }
};

struct QuestionGraphs {
  const QuestionInstance* question = nullptr;
  std::vector<CandidateGraph> candidates;
};

/// Builds candidate graphs from read-only corpus data.
class GraphBuilder {
 public:
  GraphBuilder(const FactBank& bank, const EmbeddingStore& store, TermExtractor extractor, GraphSettings settings);

  CandidateGraph build(const QuestionInstance& q, std::size_t choice) const;
  QuestionGraphs build_question(const QuestionInstance& q) const;
  std::vector<QuestionGraphs> build_all(std::span<const QuestionInstance> questions, std::size_t threads = 1) const;

  const GraphSettings& settings() const { return settings_; }
  const FactBank& bank() const { return *bank_; }

 private:
  const FactBank* bank_;
  const EmbeddingStore* store_;
  TermExtractor extractor_;
  GraphSettings settings_;
  FactIndex index_;
  std::vector<TermSet> fact_terms_;
};

/// Forward state of one candidate under the current parameters.
struct CandidateTrace {
  const CandidateGraph* graph = nullptr;
  RelevanceScores scores;  // semantic recomputed when the adapter is active
  WeightMatrix weights;
  Solution solution;
  SolveContext context;
  double gamma = 0.0;
  // Adapted embeddings, only filled when the adapter is active.
  std::vector<double> adapted_hypothesis;
  std::vector<std::vector<double>> adapted_facts;
};

CandidateTrace forward_candidate(const CandidateGraph& graph, const ModelParams& params, const GraphSettings& settings);
std::vector<CandidateTrace> forward_question(const QuestionGraphs& graphs, const ModelParams& params,
                                             const GraphSettings& settings);

/// γ = T · objective.
double candidate_gamma(const Solution& sol, double temperature);

struct PredictionRecord {
  std::string question_id;
  std::size_t predicted_index = 0;
  std::vector<std::string> explanation_ranked;
  std::vector<double> gammas;
};

/// Argmax γ (lowest index on ties). Explanations are the selected facts of the
/// predicted candidate ordered by hypothesis-edge weight, ties by fact id.
PredictionRecord make_prediction(const QuestionInstance& q, std::span<const CandidateTrace> traces, const FactBank& bank);

std::vector<PredictionRecord> predict_all(std::span<const QuestionGraphs> graphs, const ModelParams& params,
                                          const GraphSettings& settings, const FactBank& bank,
                                          std::size_t threads = 1);

}  // namespace hopgraph
