#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopgraph/matrix.hpp"
#include "hopgraph/relevance.hpp"

namespace hopgraph {

/// Subgraph-selection problem over {hypothesis} ∪ facts. Node 0 is the
/// hypothesis. Diagonal weights act as per-node rewards; graphs built from
/// relevance scores have a zero diagonal, perturbed instances may not.
struct IlpInstance {
  Matrix weights;
  std::vector<NodeKind> kinds;
  std::size_t abstract_cap = 2;
  std::optional<std::size_t> grounding_cap;

  std::size_t size() const { return kinds.size(); }
  /// Throws Error when weights are not square/symmetric or node 0 is not the
  /// unique hypothesis.
  void validate() const;
};

IlpInstance make_instance(const WeightMatrix& w, std::size_t abstract_cap,
                          std::optional<std::size_t> grounding_cap = std::nullopt);

/// Binary selection matrix: diagonal = node selection, off-diagonal = edges.
struct Solution {
  std::size_t size = 0;
  std::vector<std::uint8_t> y;  // row-major size x size
  double objective = 0.0;

  std::uint8_t at(std::size_t j, std::size_t k) const { return y[j * size + k]; }
  std::uint8_t& at(std::size_t j, std::size_t k) { return y[j * size + k]; }
  bool selected(std::size_t node) const { return at(node, node) != 0; }
  std::vector<std::size_t> selected_nodes() const;
  Matrix as_matrix() const;

  bool operator==(const Solution&) const = default;
};

/// Builds the consistent selection matrix for a node set (edges = products)
/// and its objective.
Solution solution_from_nodes(const IlpInstance& inst, const std::vector<std::uint8_t>& nodes);

/// Σ_j W[j,j] y_j + Σ_{j<k} W[j,k] y_j y_k, accumulated in a fixed order so
/// every caller gets bit-identical values for the same node set.
double selection_objective(const Matrix& weights, const std::vector<std::uint8_t>& nodes);

/// Depth-first branch and bound over node bits. Returns the global optimum;
/// among optima, the lexicographically smallest node vector.
Solution solve(const IlpInstance& inst);

inline constexpr std::size_t kExhaustiveMaxFacts = 22;

/// Enumerates every node subset containing the hypothesis. Test oracle.
/// Throws Error when the instance has more than kExhaustiveMaxFacts facts.
Solution solve_exhaustive(const IlpInstance& inst);

enum class Constraint { HypothesisSelected, EdgeNodeConsistency, AbstractCap, GroundingCap };

std::string_view to_string(Constraint c);

struct Violation {
  Constraint constraint;
  std::string detail;
};

struct FeasibilityReport {
  std::vector<Violation> violations;

  bool feasible() const { return violations.empty(); }
  bool violates(Constraint c) const;
  explicit operator bool() const { return feasible(); }
};

/// Re-checks every constraint literally on the selection matrix.
FeasibilityReport check_feasible(const Solution& sol, const IlpInstance& inst);

}  // namespace hopgraph
