#pragma once

#include "qss/ghz.hpp"

namespace qss {

/// Mermin operator: the sum of all N-fold X/Y tensor strings with an even
/// number of Y factors, each weighted by (-1)^(y_count/2).  Hermitian,
/// 2^N x 2^N.  Requires 3 <= N <= kMaxPlayers.
MatrixXcd mermin_operator(int n_players);

/// lambda0_plus - lambda0_minus; equals tr(rho * B_M) / 2^(N-1) for the
/// GHZ-diagonal state of the spectrum.
double mermin_expectation(const GhzSpectrum& spectrum);

}  // namespace qss
