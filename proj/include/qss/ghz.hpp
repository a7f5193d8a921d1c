#pragma once

#include <cstddef>
#include <vector>

#include "qss/linalg.hpp"

namespace qss {

/// Hard cap on the number of qubits handled by the dense routines
/// (2^12 x 2^12 complex is the largest matrix we are willing to build).
inline constexpr int kMaxPlayers = 12;

/// Diagonal coefficients of an N-qubit GHZ-diagonal state:
/// weights lambda0_plus / lambda0_minus on the two maximally correlated
/// basis states and a single weight lambda_j shared by each +/- pair,
/// j = 1 .. 2^(N-1)-1.  Normalization:
///   lambda0_plus + lambda0_minus + 2 * sum_j lambda_j = 1.
struct GhzSpectrum {
  int n_players = 0;
  double lambda0_plus = 0.0;
  double lambda0_minus = 0.0;
  std::vector<double> lambda;  // lambda[j-1] holds the pair weight for index j

  Eigen::Index dim() const { return Eigen::Index(1) << n_players; }
  std::size_t pair_count() const { return lambda.size(); }  // 2^(N-1)-1

  /// Pair weight for j >= 1.
  double lambda_at(std::size_t j) const { return lambda.at(j - 1); }

  /// lambda0_plus - lambda0_minus, the quantity the security check estimates.
  double delta() const { return lambda0_plus - lambda0_minus; }

  /// Throws std::invalid_argument if sizes, signs or normalization are off.
  void validate(double tol = 1e-12) const;
};

/// |Psi_j^sign> = (|j> + sign * |2^N-1-j>) / sqrt(2), with player 1 holding
/// the most significant bit of j.  Requires 0 <= j <= 2^(N-1)-1.
VectorXcd ghz_basis_vector(int n_players, std::size_t j, int sign);

/// Dense density matrix of the GHZ-diagonal state with the given spectrum.
MatrixXcd ghz_diagonal_density(const GhzSpectrum& spectrum);

/// Purification of the GHZ-diagonal state on players tensor a flag register E
/// of dimension 2^N.  Flag basis index: 2*j + (sign < 0).  Tracing out E
/// recovers ghz_diagonal_density(spectrum).
VectorXcd purify(const GhzSpectrum& spectrum);

/// Subsystem layout of purify(): N qubit factors followed by the flag factor.
std::vector<Eigen::Index> purified_dims(int n_players);

}  // namespace qss
