#include "qss/depolarize.hpp"

#include <stdexcept>

namespace qss {

GhzSpectrum ghz_project(const MatrixXcd& rho, int n_players) {
  if (n_players < 3 || n_players > kMaxPlayers)
    throw std::invalid_argument("ghz_project: bad player count");
  const Eigen::Index dim = Eigen::Index(1) << n_players;
  if (rho.rows() != dim || rho.cols() != dim)
    throw std::invalid_argument("ghz_project: dimension mismatch");

  // <Psi_j^s| rho |Psi_j^s> = (rho_jj + rho_kk)/2 + s Re(rho_jk), k = ~j.
  // Roundoff can leave these a hair negative on valid states; snap that to 0.
  auto weight = [&](Eigen::Index j, int sign) {
    const Eigen::Index k = dim - 1 - j;
    double w = 0.5 * (rho(j, j).real() + rho(k, k).real()) + sign * rho(j, k).real();
    if (w < 0.0 && w > -1e-10) w = 0.0;
    return w;
  };

  GhzSpectrum s;
  s.n_players = n_players;
  s.lambda0_plus = weight(0, +1);
  s.lambda0_minus = weight(0, -1);
  s.lambda.resize(static_cast<std::size_t>(dim / 2 - 1));
  for (Eigen::Index j = 1; j < dim / 2; ++j)
    s.lambda[static_cast<std::size_t>(j - 1)] =
        0.5 * (weight(j, +1) + weight(j, -1));
  return s;
}

MatrixXcd depolarize_channel(const MatrixXcd& rho, int n_players) {
  return ghz_diagonal_density(ghz_project(rho, n_players));
}

}  // namespace qss
