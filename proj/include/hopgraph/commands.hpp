#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hopgraph/config.hpp"

namespace hopgraph {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitRuntime = 2;

/// Loaded corpus with the train/dev split applied.
struct Workspace {
  std::vector<QuestionInstance> train;
  std::vector<QuestionInstance> dev;
  FactBank bank;
  EmbeddingStore store;
  TermExtractor extractor;
};

/// Checks paths, loads every input and resolves gold explanation ids.
Workspace load_workspace(const RunConfig& config);

/// Each command reports errors on `err` and returns an exit code; `out`
/// only carries the command's table or JSON artifact.
int cmd_train(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_solve_one(const RunConfig& config, const std::string& question_id, std::ostream& out, std::ostream& err);
int cmd_baseline_random_search(const RunConfig& config, std::size_t trials, const std::filesystem::path& result_path,
                               std::ostream& out, std::ostream& err);
int cmd_gen_synthetic(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses arguments and dispatches to a command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopgraph
