#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopgraph/dbcs.hpp"
#include "hopgraph/pipeline.hpp"
#include "json.hpp"

namespace hopgraph {

struct TrainConfig {
  double temperature = 8.77;
  double lambda_ans = 0.99;
  double lambda_exp = 0.72;
  double learning_rate = 1e-5;
  double weight_decay = 0.0;
  double adam_epsilon = 1e-8;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double max_grad_norm = 1.0;
  std::size_t max_epochs = 8;
  std::uint64_t seed = 42;
  double bce_epsilon = 1e-3;
  bool adapter_enabled = false;
  double theta_init = 0.5;
  DbcsConfig dbcs;

  /// Throws ValidationError on out-of-range values.
  void validate() const;
};

struct LossAndGrad {
  double loss = 0.0;
  std::vector<double> grad;
};

/// -log softmax(gammas)[ans] and its gradient softmax - onehot.
LossAndGrad answer_loss(std::span<const double> gammas, std::size_t ans);

/// Mean binary cross entropy between the clamped fact diagonal of the solution
/// and gold membership. grad[j] is dL/dy[j+1, j+1].
LossAndGrad explanation_loss(const Solution& sol, std::span<const std::uint8_t> is_gold, double eps);

/// λ_ans·L_ans + λ_exp·L_exp, or plain L_ans without explanation supervision.
double total_loss(double l_ans, std::optional<double> l_exp, const TrainConfig& cfg);

struct CosineGrad {
  std::vector<double> du;
  std::vector<double> dv;
};

/// Gradient of d_s · cos(u, v). Throws Error on zero norm.
CosineGrad cosine_backward(std::span<const double> u, std::span<const double> v, double d_s);

struct QuestionGradient {
  ThetaParams theta;
  std::optional<AdapterParams> adapter;
  double loss = 0.0;
  ThetaParams theta_direct;  // product-rule term only
  ThetaParams theta_solver;  // blackbox resolve term only
  std::size_t dbcs_calls = 0;
  std::size_t dbcs_nonzero = 0;
};

/// Gold-membership mask over the facts of a candidate graph.
std::vector<std::uint8_t> gold_mask(const CandidateGraph& graph, const FactBank& bank,
                                    const std::set<std::string>& gold);

/// End-to-end gradient for one question. `gold_mask` covers the facts of the
/// answer candidate's graph; pass nullopt when explanations are unavailable.
QuestionGradient backward_question(std::span<const CandidateTrace> traces, std::size_t ans,
                                   const std::optional<std::vector<std::uint8_t>>& gold_mask,
                                   const ModelParams& params, const TrainConfig& cfg,
                                   const RelevanceOptions& relevance);

/// L2 norm over all gradient components; scales in place when above max_norm.
/// Returns the norm before clipping.
double clip_grad_norm(std::span<double> grads, double max_norm);

struct AdamWState {
  std::vector<double> m;
  std::vector<double> v;
  std::uint64_t step = 0;
};

/// Clips, applies one decoupled-weight-decay Adam update, then projects θ
/// (the first ThetaParams::kCount entries) back to [0, 1].
void adamw_step(std::span<double> params, std::span<double> grads, AdamWState& state, const TrainConfig& cfg);

std::vector<double> flatten(const ModelParams& params);
void unflatten(std::span<const double> flat, ModelParams& params);
std::vector<double> flatten(const QuestionGradient& grad);

struct EpochLog {
  std::size_t epoch = 0;
  double train_loss = 0.0;
  double train_accuracy = 0.0;
  double dev_accuracy = 0.0;
  double grad_informativeness = 0.0;  // fraction of backward resolves with a nonzero gradient
  double direct_grad_norm = 0.0;
  double solver_grad_norm = 0.0;
  ThetaParams theta;

  nlohmann::ordered_json to_json() const;
};

struct TrainResult {
  ModelParams best;
  std::size_t best_epoch = 0;
  double best_dev_accuracy = 0.0;
  ModelParams last;
  std::vector<EpochLog> log;
};

struct StepInfo {
  std::size_t epoch;
  std::size_t step;
  const ModelParams& params;
};

struct TrainData {
  std::span<const QuestionGraphs> train;
  std::span<const QuestionGraphs> dev;
  const FactBank* bank = nullptr;
};

/// Algorithm: per epoch, shuffle the training questions with the seeded
/// generator, forward every candidate, backpropagate through the solver and
/// take one AdamW step per question. Keeps the parameters with the best dev
/// accuracy (epoch 0 = initial parameters; ties keep the earlier epoch).
/// Throws Error if any θ leaves [0, 1] after a step.
TrainResult train(const TrainData& data, const GraphSettings& settings, const TrainConfig& cfg,
                  ModelParams init, std::size_t threads = 1,
                  const std::function<void(const StepInfo&)>& on_step = {});

double accuracy_of(std::span<const QuestionGraphs> graphs, const ModelParams& params, const GraphSettings& settings,
                   const FactBank& bank, std::size_t threads = 1);

ModelParams initial_params(const TrainConfig& cfg, std::size_t embedding_dim);

struct RandomSearchResult {
  ThetaParams theta;
  double accuracy = -1.0;
  std::size_t best_trial = 0;
};

/// Gradient-free baseline: samples θ uniformly in [0, 1]^7 and keeps the
/// first draw with the highest accuracy on `graphs`.
RandomSearchResult random_search(std::span<const QuestionGraphs> graphs, const GraphSettings& settings,
                                 const FactBank& bank, std::size_t trials, std::uint64_t seed,
                                 std::size_t threads = 1);

struct Checkpoint {
  ModelParams params;
  nlohmann::ordered_json config;
  std::size_t epoch = 0;
  double dev_accuracy = 0.0;
};

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint read_checkpoint(const std::filesystem::path& path);
nlohmann::ordered_json theta_to_json(const ThetaParams& theta);
ThetaParams theta_from_json(const nlohmann::json& j);

}  // namespace hopgraph
