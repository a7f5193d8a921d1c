#include "qss/mermin.hpp"

#include <bit>
#include <stdexcept>

namespace qss {

MatrixXcd mermin_operator(int n_players) {
  if (n_players < 3) throw std::invalid_argument("mermin_operator: need N >= 3");
  if (n_players > kMaxPlayers)
    throw std::invalid_argument("mermin_operator: exceeds dense dimension cap");
  const std::size_t dim = std::size_t(1) << n_players;
  MatrixXcd b = MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                static_cast<Eigen::Index>(dim));
  const Complex i_unit(0.0, 1.0);
  // Each X/Y string maps |m> to a phase times |~m>, so only anti-diagonal
  // entries (complement pairs) are ever touched.
  for (std::size_t ybits = 0; ybits < dim; ++ybits) {
    const int l = std::popcount(ybits);
    if (l % 2 != 0) continue;
    const double string_sign = (l / 2) % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t m = 0; m < dim; ++m) {
      // X|m_k> = |1-m_k>;  Y|m_k> = i(-1)^(m_k) |1-m_k>.
      const int y_on_ones = std::popcount(ybits & m);
      Complex phase = 1.0;
      for (int t = 0; t < l % 4; ++t) phase *= i_unit;
      if (y_on_ones % 2 != 0) phase = -phase;
      b(static_cast<Eigen::Index>(dim - 1 - m), static_cast<Eigen::Index>(m)) +=
          string_sign * phase;
    }
  }
  return b;
}

double mermin_expectation(const GhzSpectrum& spectrum) {
  spectrum.validate();
  return spectrum.lambda0_plus - spectrum.lambda0_minus;
}

}  // namespace qss
