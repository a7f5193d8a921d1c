#include "qss/ghz.hpp"

#include <cmath>
#include <stdexcept>

namespace qss {

void GhzSpectrum::validate(double tol) const {
  if (n_players < 3) throw std::invalid_argument("GhzSpectrum: need at least 3 players");
  if (n_players > kMaxPlayers)
    throw std::invalid_argument("GhzSpectrum: exceeds dense dimension cap");
  const std::size_t expected = (std::size_t(1) << (n_players - 1)) - 1;
  if (lambda.size() != expected)
    throw std::invalid_argument("GhzSpectrum: lambda must have 2^(N-1)-1 entries");
  if (lambda0_plus < 0.0 || lambda0_minus < 0.0)
    throw std::invalid_argument("GhzSpectrum: negative coefficient");
  double sum = lambda0_plus + lambda0_minus;
  for (double l : lambda) {
    if (l < 0.0) throw std::invalid_argument("GhzSpectrum: negative coefficient");
    sum += 2.0 * l;
  }
  if (std::abs(sum - 1.0) > tol)
    throw std::invalid_argument("GhzSpectrum: coefficients do not sum to 1");
}

VectorXcd ghz_basis_vector(int n_players, std::size_t j, int sign) {
  if (n_players < 3 || n_players > kMaxPlayers)
    throw std::invalid_argument("ghz_basis_vector: bad player count");
  if (sign != +1 && sign != -1)
    throw std::invalid_argument("ghz_basis_vector: sign must be +1 or -1");
  const std::size_t dim = std::size_t(1) << n_players;
  if (j >= dim / 2) throw std::out_of_range("ghz_basis_vector: index out of range");
  VectorXcd v = VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  const double amp = 1.0 / std::sqrt(2.0);
  v(static_cast<Eigen::Index>(j)) = amp;
  v(static_cast<Eigen::Index>(dim - 1 - j)) = sign * amp;
  return v;
}

MatrixXcd ghz_diagonal_density(const GhzSpectrum& spectrum) {
  spectrum.validate();
  const Eigen::Index dim = spectrum.dim();
  MatrixXcd rho = MatrixXcd::Zero(dim, dim);
  auto add_projector = [&](std::size_t j, int sign, double weight) {
    if (weight == 0.0) return;
    // (|j> + s|jbar>)(<j| + s<jbar|) / 2 touches only four entries.
    const auto a = static_cast<Eigen::Index>(j);
    const auto b = static_cast<Eigen::Index>(dim - 1 - j);
    const double half = 0.5 * weight;
    rho(a, a) += half;
    rho(b, b) += half;
    rho(a, b) += sign * half;
    rho(b, a) += sign * half;
  };
  add_projector(0, +1, spectrum.lambda0_plus);
  add_projector(0, -1, spectrum.lambda0_minus);
  for (std::size_t j = 1; j <= spectrum.pair_count(); ++j) {
    add_projector(j, +1, spectrum.lambda_at(j));
    add_projector(j, -1, spectrum.lambda_at(j));
  }
  return rho;
}

VectorXcd purify(const GhzSpectrum& spectrum) {
  spectrum.validate();
  const Eigen::Index dim = spectrum.dim();  // players and flag register alike
  VectorXcd psi = VectorXcd::Zero(dim * dim);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  auto add_branch = [&](std::size_t j, int sign, double weight) {
    if (weight == 0.0) return;
    const double c = std::sqrt(weight) * inv_sqrt2;
    const Eigen::Index flag = 2 * static_cast<Eigen::Index>(j) + (sign < 0 ? 1 : 0);
    psi(static_cast<Eigen::Index>(j) * dim + flag) += c;
    psi((dim - 1 - static_cast<Eigen::Index>(j)) * dim + flag) += sign * c;
  };
  add_branch(0, +1, spectrum.lambda0_plus);
  add_branch(0, -1, spectrum.lambda0_minus);
  for (std::size_t j = 1; j <= spectrum.pair_count(); ++j) {
    add_branch(j, +1, spectrum.lambda_at(j));
    add_branch(j, -1, spectrum.lambda_at(j));
  }
  return psi;
}

std::vector<Eigen::Index> purified_dims(int n_players) {
  std::vector<Eigen::Index> dims(static_cast<std::size_t>(n_players) + 1, 2);
  dims.back() = Eigen::Index(1) << n_players;
  return dims;
}

}  // namespace qss
