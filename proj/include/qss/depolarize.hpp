#pragma once

#include "qss/ghz.hpp"

namespace qss {

/// GHZ-basis weights of a dense N-qubit state:
///   lambda0_plus  = <Psi_0^+| rho |Psi_0^+>
///   lambda0_minus = <Psi_0^-| rho |Psi_0^->
///   lambda_j      = (<Psi_j^+| rho |Psi_j^+> + <Psi_j^-| rho |Psi_j^->) / 2
/// The result is the spectrum the twirl below maps rho onto.
GhzSpectrum ghz_project(const MatrixXcd& rho, int n_players);

/// The twirl: GHZ-basis dephasing plus symmetrization of each j >= 1 sign
/// pair, leaving lambda0_plus and lambda0_minus untouched.  Idempotent,
/// trace preserving, and it preserves
///   Delta = tr(rho (|Psi_0^+><Psi_0^+| - |Psi_0^-><Psi_0^-|)) exactly.
MatrixXcd depolarize_channel(const MatrixXcd& rho, int n_players);

}  // namespace qss
