#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hopgraph {

enum class FactKind : std::uint8_t { Abstract, Grounding };

std::string_view to_string(FactKind kind);
/// Parses "abstract" / "grounding"; throws Error on anything else.
FactKind parse_fact_kind(std::string_view text);

struct QuestionInstance {
  std::string id;
  std::string question_text;
  std::vector<std::string> choices;
  std::size_t gold_answer_index = 0;
  std::optional<std::set<std::string>> gold_explanation_ids;

  bool has_gold_explanations() const {
    return gold_explanation_ids.has_value() && !gold_explanation_ids->empty();
  }
};

struct FactRecord {
  std::string id;
  std::string text;
  FactKind kind = FactKind::Grounding;
};

/// Candidate explanatory facts, in file order, indexed by id.
class FactBank {
 public:
  void add(FactRecord fact);

  const FactRecord* find(std::string_view id) const;
  const FactRecord& at(std::size_t index) const { return facts_.at(index); }
  std::span<const FactRecord> facts() const noexcept { return facts_; }
  std::size_t size() const noexcept { return facts_.size(); }
  std::size_t abstract_count() const noexcept { return abstract_count_; }
  std::size_t grounding_count() const noexcept { return facts_.size() - abstract_count_; }

 private:
  std::vector<FactRecord> facts_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t abstract_count_ = 0;
};

struct Hypothesis {
  std::string question_id;
  std::size_t choice_index = 0;
  std::string text;
};

/// Question text and choice joined by a single space, no other normalization.
Hypothesis build_hypothesis(const QuestionInstance& q, std::size_t choice_index);

/// Embedding lookup key for a hypothesis: "questionid#choiceindex".
std::string hypothesis_key(std::string_view question_id, std::size_t choice_index);

/// Fixed-dimension float vectors keyed by id. Insertion order is kept so that
/// serialization is byte-stable.
class EmbeddingStore {
 public:
  explicit EmbeddingStore(std::size_t dim = 0) : dim_(dim) {}

  /// Rejects wrong length, non-finite components, zero norm and duplicate ids.
  void add(std::string id, std::vector<float> vector);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool contains(std::string_view id) const { return index_.contains(std::string(id)); }
  /// Throws Error naming the id when absent.
  std::span<const float> at(std::string_view id) const;
  const std::vector<std::string>& ids() const noexcept { return ids_; }

 private:
  std::size_t dim_;
  std::vector<std::string> ids_;
  std::vector<std::vector<float>> vectors_;
  std::unordered_map<std::string, std::size_t> index_;
};

std::vector<QuestionInstance> load_questions(const std::filesystem::path& path);
void write_questions(const std::filesystem::path& path, std::span<const QuestionInstance> questions);

FactBank load_facts(const std::filesystem::path& path);
void write_facts(const std::filesystem::path& path, const FactBank& bank);

/// Binary "CEMB" format, or the JSONL fallback when the file does not start
/// with the magic and looks like JSON.
EmbeddingStore load_embeddings(const std::filesystem::path& path);
void write_embeddings(const std::filesystem::path& path, const EmbeddingStore& store);
void write_embeddings_jsonl(const std::filesystem::path& path, const EmbeddingStore& store);

/// Throws Error listing the first gold explanation id absent from the bank.
void validate_gold_explanations(std::span<const QuestionInstance> questions, const FactBank& bank);

}  // namespace hopgraph
