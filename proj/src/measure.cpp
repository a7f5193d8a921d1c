#include "qss/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace qss {
namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

std::vector<Eigen::Matrix2cd> to_matrices(const BasisChoice& bases) {
  std::vector<Eigen::Matrix2cd> out;
  out.reserve(bases.size());
  for (Basis b : bases) out.push_back(basis_matrix(b));
  return out;
}

/// Tensor vector u with u[m] = prod_i <v_{m_i} | x_i> for the computational
/// index x, all outcome strings m at once.
VectorXcd bra_tensor(const std::vector<Eigen::Matrix2cd>& bases, std::size_t x) {
  const int n = static_cast<int>(bases.size());
  VectorXcd u(1);
  u(0) = 1.0;
  for (int i = 0; i < n; ++i) {
    const int bit = static_cast<int>((x >> (n - 1 - i)) & 1u);
    const Complex c0 = std::conj(bases[i](bit, 0));
    const Complex c1 = std::conj(bases[i](bit, 1));
    VectorXcd next(u.size() * 2);
    for (Eigen::Index m = 0; m < u.size(); ++m) {
      next(2 * m) = u(m) * c0;
      next(2 * m + 1) = u(m) * c1;
    }
    u.swap(next);
  }
  return u;
}

void check_bases(const std::vector<Eigen::Matrix2cd>& bases, int n_players) {
  if (static_cast<int>(bases.size()) != n_players)
    throw std::invalid_argument("basis choice length must equal n_players");
}

}  // namespace

int y_count(const BasisChoice& bases) {
  int k = 0;
  for (Basis b : bases) k += (b == Basis::Y);
  return k;
}

int outcome_parity(const std::vector<std::uint8_t>& outcomes) {
  int p = 0;
  for (auto m : outcomes) p ^= (m & 1);
  return p;
}

Eigen::Matrix2cd basis_matrix(Basis b) {
  Eigen::Matrix2cd m;
  if (b == Basis::X) {
    m << Complex(kInvSqrt2), Complex(kInvSqrt2), Complex(kInvSqrt2), Complex(-kInvSqrt2);
  } else {
    m << Complex(kInvSqrt2), Complex(kInvSqrt2), Complex(0.0, kInvSqrt2),
        Complex(0.0, -kInvSqrt2);
  }
  return m;
}

Eigen::Matrix2cd rotated_basis(double mu_sq) {
  if (mu_sq < 0.0 || mu_sq > 1.0)
    throw std::invalid_argument("rotated_basis: mu_sq outside [0,1]");
  const double mu = std::sqrt(mu_sq);
  const double nu = std::sqrt(1.0 - mu_sq);
  Eigen::Matrix2cd m;
  m << Complex(mu), Complex(nu), Complex(nu), Complex(-mu);
  return m;
}

VectorXd joint_outcome_distribution(const GhzSpectrum& spectrum,
                                    const std::vector<Eigen::Matrix2cd>& bases) {
  spectrum.validate();
  check_bases(bases, spectrum.n_players);
  const std::size_t dim = static_cast<std::size_t>(spectrum.dim());
  VectorXd probs = VectorXd::Zero(static_cast<Eigen::Index>(dim));

  const VectorXcd u0 = bra_tensor(bases, 0);
  const VectorXcd u0bar = bra_tensor(bases, dim - 1);
  for (Eigen::Index m = 0; m < probs.size(); ++m) {
    probs(m) += spectrum.lambda0_plus * 0.5 * std::norm(u0(m) + u0bar(m));
    probs(m) += spectrum.lambda0_minus * 0.5 * std::norm(u0(m) - u0bar(m));
  }
  for (std::size_t j = 1; j <= spectrum.pair_count(); ++j) {
    const double w = spectrum.lambda_at(j);
    if (w == 0.0) continue;
    // Summed over the +/- pair the cross terms cancel:
    // |a+|^2 + |a-|^2 = |u_j|^2 + |u_jbar|^2.
    const VectorXcd uj = bra_tensor(bases, j);
    const VectorXcd ujbar = bra_tensor(bases, dim - 1 - j);
    for (Eigen::Index m = 0; m < probs.size(); ++m)
      probs(m) += w * (std::norm(uj(m)) + std::norm(ujbar(m)));
  }
  return probs;
}

VectorXd joint_outcome_distribution(const GhzSpectrum& spectrum, const BasisChoice& bases) {
  return joint_outcome_distribution(spectrum, to_matrices(bases));
}

VectorXd joint_outcome_distribution(const MatrixXcd& rho,
                                    const std::vector<Eigen::Matrix2cd>& bases) {
  const int n = static_cast<int>(bases.size());
  if (rho.rows() != rho.cols() || rho.rows() != (Eigen::Index(1) << n))
    throw std::invalid_argument("joint_outcome_distribution: dimension mismatch");
  MatrixXcd u = MatrixXcd::Identity(1, 1);
  for (int i = 0; i < n; ++i) u = kron(u, MatrixXcd(bases[i].adjoint()));
  return (u * rho * u.adjoint()).diagonal().real();
}

VectorXd joint_outcome_distribution(const MatrixXcd& rho, const BasisChoice& bases) {
  return joint_outcome_distribution(rho, to_matrices(bases));
}

std::size_t sample_outcome_index(const VectorXd& probs, RngStream& rng) {
  const double u = rng.next_double();
  double acc = 0.0;
  for (Eigen::Index m = 0; m < probs.size(); ++m) {
    acc += probs(m);
    if (u < acc) return static_cast<std::size_t>(m);
  }
  return static_cast<std::size_t>(probs.size() - 1);  // u landed in rounding slack
}

std::vector<std::uint8_t> unpack_outcomes(std::size_t index, int n_players) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n_players));
  for (int i = 0; i < n_players; ++i)
    bits[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((index >> (n_players - 1 - i)) & 1u);
  return bits;
}

RoundRecord sample_round(const GhzSpectrum& spectrum, RngStream& rng) {
  BasisChoice bases(static_cast<std::size_t>(spectrum.n_players));
  for (auto& b : bases) b = rng.next_bool(0.5) ? Basis::Y : Basis::X;
  return sample_round(spectrum, bases, rng);
}

RoundRecord sample_round(const GhzSpectrum& spectrum, const BasisChoice& bases,
                         RngStream& rng) {
  const VectorXd probs = joint_outcome_distribution(spectrum, bases);
  const std::size_t m = sample_outcome_index(probs, rng);
  return RoundRecord{bases, unpack_outcomes(m, spectrum.n_players)};
}

VectorXd sector_outcome_distribution(int n_players, std::size_t j, int sign,
                                     const std::vector<Eigen::Matrix2cd>& bases) {
  check_bases(bases, n_players);
  const std::size_t dim = std::size_t(1) << n_players;
  if (j >= dim / 2) throw std::out_of_range("sector_outcome_distribution: bad index");
  const VectorXcd uj = bra_tensor(bases, j);
  const VectorXcd ujbar = bra_tensor(bases, dim - 1 - j);
  VectorXd probs(static_cast<Eigen::Index>(dim));
  for (Eigen::Index m = 0; m < probs.size(); ++m)
    probs(m) = 0.5 * std::norm(uj(m) + static_cast<double>(sign) * ujbar(m));
  return probs;
}

SectorSample sample_round_with_sector(const GhzSpectrum& spectrum,
                                      const std::vector<Eigen::Matrix2cd>& bases,
                                      RngStream& rng) {
  spectrum.validate();
  check_bases(bases, spectrum.n_players);
  // Sector CDF: (0,+), (0,-), then (j,+), (j,-) for j >= 1.
  const double u = rng.next_double();
  std::size_t j = 0;
  int sign = +1;
  double acc = spectrum.lambda0_plus;
  if (u >= acc) {
    acc += spectrum.lambda0_minus;
    if (u < acc) {
      sign = -1;
    } else {
      bool found = false;
      for (std::size_t jj = 1; jj <= spectrum.pair_count() && !found; ++jj)
        for (int s : {+1, -1}) {
          acc += spectrum.lambda_at(jj);
          if (u < acc) {
            j = jj;
            sign = s;
            found = true;
            break;
          }
        }
      if (!found) {  // rounding slack: last nonzero sector
        j = spectrum.pair_count();
        sign = -1;
      }
    }
  }
  const VectorXd probs = sector_outcome_distribution(spectrum.n_players, j, sign, bases);
  const std::size_t m = sample_outcome_index(probs, rng);
  return SectorSample{j, sign, unpack_outcomes(m, spectrum.n_players)};
}

}  // namespace qss
