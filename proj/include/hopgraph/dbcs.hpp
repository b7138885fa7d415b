#pragma once

#include "hopgraph/matrix.hpp"
#include "hopgraph/solver.hpp"

namespace hopgraph {

struct DbcsConfig {
  /// Interpolation strength.
  double lambda = 152.0;
};

/// Everything the backward pass needs from the forward solve. The solver
/// minimizes cost·Y with cost = -W.
struct SolveContext {
  Matrix cost;
  Solution solution;
  IlpInstance instance;
};

struct DbcsForward {
  Solution solution;
  SolveContext context;
};

DbcsForward dbcs_forward(const IlpInstance& inst);

/// Perturb-and-difference gradient of the linearized loss through the exact
/// solver: resolve with cost' = cost + λ·dL/dY and return
/// dL/dW = (Ŷ − Y') / λ. Every entry is −1/λ, 0 or +1/λ.
///
/// dL_dY holds the derivative with respect to each node reward (diagonal) and
/// each unordered edge (both mirrored slots); an asymmetric input is averaged
/// with its transpose. Throws Error when λ <= 0.
Matrix dbcs_backward(const SolveContext& ctx, const Matrix& dL_dY, const DbcsConfig& cfg);

/// Same as dbcs_backward but also hands back the perturbed solution.
Matrix dbcs_backward(const SolveContext& ctx, const Matrix& dL_dY, const DbcsConfig& cfg, Solution* perturbed);

}  // namespace hopgraph
