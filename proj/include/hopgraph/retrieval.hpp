#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hopgraph/corpus.hpp"

namespace hopgraph {

struct PoolEntry {
  std::size_t fact_index;  // position in the FactBank
  double score;            // cosine similarity to the query
};

/// Retrieved candidate facts, descending by score, ties by ascending fact id.
/// Facts with non-positive similarity are never retrieved.
struct FactPool {
  std::vector<PoolEntry> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

struct KindQuota {
  std::size_t abstract_count = 0;
  std::size_t grounding_count = 0;
};

/// Exact cosine scan over every fact embedding. Vectors are kept sparse when
/// most components are zero (indicator vectors), dense otherwise.
class FactIndex {
 public:
  /// Throws Error naming the first fact without an embedding.
  FactIndex(const FactBank& bank, const EmbeddingStore& store);

  FactPool query(std::span<const float> query, std::size_t k, std::optional<KindQuota> quota = std::nullopt) const;

  /// Cosine of the query with every fact, in bank order.
  std::vector<double> scores(std::span<const float> query) const;

 private:
  struct Row {
    std::vector<std::uint32_t> positions;  // empty when dense
    std::vector<double> values;
    double norm = 0.0;
  };

  const FactBank* bank_;
  std::size_t dim_;
  std::vector<Row> rows_;
};

FactPool knn_facts(std::span<const float> query, const EmbeddingStore& store, const FactBank& bank, std::size_t k,
                   std::optional<KindQuota> quota = std::nullopt);

}  // namespace hopgraph
