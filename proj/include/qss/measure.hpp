#pragma once

#include <cstdint>
#include <vector>

#include "qss/ghz.hpp"
#include "qss/rng.hpp"

namespace qss {

enum class Basis : std::uint8_t { X, Y };

/// Per-player basis choice for one round, length n_players.
using BasisChoice = std::vector<Basis>;

/// One protocol round: who measured in which basis, and the outcome bits.
struct RoundRecord {
  BasisChoice bases;
  std::vector<std::uint8_t> outcomes;
};

int y_count(const BasisChoice& bases);

/// Outcome-bit parity of a record.
int outcome_parity(const std::vector<std::uint8_t>& outcomes);

/// Single-qubit measurement bases as 2x2 matrices whose columns are the
/// eigenvectors indexed by the outcome bit.
/// X: outcome b -> (|0> + (-1)^b |1>)/sqrt(2)
/// Y: outcome b -> (|0> + i(-1)^b |1>)/sqrt(2)
Eigen::Matrix2cd basis_matrix(Basis b);

/// The {mu|0> + nu|1>, nu|0> - mu|1>} basis with real mu = sqrt(mu_sq).
Eigen::Matrix2cd rotated_basis(double mu_sq);

/// Exact probability table over the 2^N outcome strings (player 1 holds the
/// most significant bit) when each player measures in the given basis.
VectorXd joint_outcome_distribution(const GhzSpectrum& spectrum, const BasisChoice& bases);

/// Same, with arbitrary per-player product measurements.
VectorXd joint_outcome_distribution(const GhzSpectrum& spectrum,
                                    const std::vector<Eigen::Matrix2cd>& bases);

/// Same, evaluated on a dense state: diag of (U rho U^dagger).
VectorXd joint_outcome_distribution(const MatrixXcd& rho,
                                    const std::vector<Eigen::Matrix2cd>& bases);
VectorXd joint_outcome_distribution(const MatrixXcd& rho, const BasisChoice& bases);

/// Draw one round: bases uniform over {X, Y} per player, outcomes sampled by
/// inverse CDF over the exact joint table.
RoundRecord sample_round(const GhzSpectrum& spectrum, RngStream& rng);

/// Same with the basis choice forced.
RoundRecord sample_round(const GhzSpectrum& spectrum, const BasisChoice& bases,
                         RngStream& rng);

/// Outcome string sampled from an explicit probability table.
std::size_t sample_outcome_index(const VectorXd& probs, RngStream& rng);

/// Unpack a flat outcome index into per-player bits (player 1 first).
std::vector<std::uint8_t> unpack_outcomes(std::size_t index, int n_players);

/// Joint draw of (GHZ sector, outcomes): the sector (j, sign) is sampled with
/// its spectral weight, then outcomes from the pure state |Psi_j^sign> under
/// the given product bases.  Marginalizing the sector reproduces
/// joint_outcome_distribution exactly; the sector is what a purifying
/// environment would learn from a flag-basis measurement.
struct SectorSample {
  std::size_t j = 0;
  int sign = +1;
  std::vector<std::uint8_t> outcomes;
};
SectorSample sample_round_with_sector(const GhzSpectrum& spectrum,
                                      const std::vector<Eigen::Matrix2cd>& bases,
                                      RngStream& rng);

/// Probability table on a single GHZ basis state under product bases.
VectorXd sector_outcome_distribution(int n_players, std::size_t j, int sign,
                                     const std::vector<Eigen::Matrix2cd>& bases);

}  // namespace qss
