#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hopgraph/corpus.hpp"
#include "hopgraph/matrix.hpp"

namespace hopgraph {

enum class NodeKind : std::uint8_t { Hypothesis, Abstract, Grounding };

inline NodeKind node_kind(FactKind kind) {
  return kind == FactKind::Abstract ? NodeKind::Abstract : NodeKind::Grounding;
}

/// Edge-weight coefficients, each kept in [0, 1].
struct ThetaParams {
  enum Index : std::size_t { kGG, kAA, kGA, kQGL, kQGS, kQAL, kQAS, kCount };
  static constexpr std::array<std::string_view, kCount> kNames = {
      "theta_gg", "theta_aa", "theta_ga", "theta_qgl", "theta_qgs", "theta_qal", "theta_qas"};

  std::array<double, kCount> values{};

  static ThetaParams uniform(double v) {
    ThetaParams t;
    t.values.fill(v);
    return t;
  }

  double& operator[](std::size_t i) { return values[i]; }
  double operator[](std::size_t i) const { return values[i]; }

  void clamp_unit();
  bool in_unit_range() const;
  bool operator==(const ThetaParams&) const = default;
};

struct RelevanceOptions {
  bool clamp_semantic = true;
  /// Reuse theta_qal for the semantic hypothesis-abstract term (five-coefficient form).
  bool tie_qal = false;
};

/// Lowercase, punctuation-as-separator, stopword filter, optional lemma map.
class TermExtractor {
 public:
  TermExtractor() = default;
  TermExtractor(std::unordered_map<std::string, std::string> lemmas, std::unordered_set<std::string> stopwords)
      : lemmas_(std::move(lemmas)), stopwords_(std::move(stopwords)) {}

  /// Lemma map: "term<TAB>lemma" per line. Stopwords: one term per line.
  static TermExtractor from_files(const std::filesystem::path& lemma_map, const std::filesystem::path& stopwords);

  std::set<std::string> terms(std::string_view text) const;

 private:
  std::unordered_map<std::string, std::string> lemmas_;
  std::unordered_set<std::string> stopwords_;
};

using TermSet = std::set<std::string>;

/// |a ∩ b| / max(|a|, |b|); 0 when both are empty.
double lexical_relevance(const TermSet& a, const TermSet& b);

/// Cosine similarity. Throws Error on dimension mismatch or zero norm.
double semantic_relevance(std::span<const double> u, std::span<const double> v);
double semantic_relevance(std::span<const float> u, std::span<const float> v);

/// Node 0 is the hypothesis, nodes 1..n the candidate facts.
struct RelevanceScores {
  Matrix lexical;                 // (n+1)x(n+1), symmetric, zero diagonal
  std::vector<double> semantic;   // hypothesis-to-fact cosine, length n, unclamped

  std::size_t fact_count() const { return semantic.size(); }
};

RelevanceScores score_candidate(const TermSet& hypothesis_terms, std::span<const TermSet> fact_terms,
                                std::vector<double> semantic);

struct WeightMatrix {
  Matrix weights;
  std::vector<NodeKind> kinds;  // kinds[0] == Hypothesis

  std::size_t size() const { return kinds.size(); }
};

std::vector<NodeKind> node_kinds(std::span<const FactKind> fact_kinds);

/// Semantic score as it enters the weight matrix (floored at 0 when clamping).
double effective_semantic(double raw, const RelevanceOptions& options);

WeightMatrix build_weight_matrix(std::span<const NodeKind> kinds, const RelevanceScores& scores,
                                 const ThetaParams& theta, const RelevanceOptions& options = {});

/// Chain rule through the (linear) weight map. dL_dW holds the derivative with
/// respect to each unordered pair weight in both mirrored slots.
ThetaParams weight_matrix_theta_gradient(const Matrix& dL_dW, const RelevanceScores& scores,
                                         std::span<const NodeKind> kinds, const RelevanceOptions& options = {});

/// Coefficient multiplying the semantic score on the hypothesis edge of a fact.
double semantic_coefficient(NodeKind kind, const ThetaParams& theta, const RelevanceOptions& options);

}  // namespace hopgraph
