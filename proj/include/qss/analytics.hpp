#pragma once

#include "qss/ghz.hpp"
#include "qss/rng.hpp"

namespace qss {

/// Binary entropy in bits; x must lie in [0, 1].
double binary_entropy(double x);

/// Left-hand side of the threshold equation minus 2:
///   (1-q)^2 log(1-q) + (1+q)^2 log(1+q) + (1-q^2) log(1-q^2) - 2.
double q_equation_residual(double x);

/// Security threshold: unique root of the equation above in [0.5, 1],
/// located by bracketed bisection to residual < 1e-12 and cached.
/// Also the unique zero of dw_lower_bound on that interval.
double solve_q();

/// I(m_1 : m_2 xor ... xor m_N) on a GHZ-diagonal state with
/// delta = lambda0_plus - lambda0_minus = p, for any even-Y basis choice:
///   1 - h((1 - p)/2).
double mutual_info_key(double p);

/// Exact Holevo information of the purifying environment about the dealer's
/// outcome, chi(m_1 : E), as a closed form in the spectrum.
double holevo_trusted_exact(const GhzSpectrum& spectrum);

/// Spectrum-free upper bound on chi(m_1 : E) valid for p > q:
///   -a^2 log a^2 - b^2 log b^2 - 2ab log(ab) - h(a),
/// a = (1-p)/2, b = (1+p)/2.  Throws std::domain_error for p <= q.
double holevo_upper_bound(double p);

/// The comparison function tau(x, y) on
///   C = { x >= 0, y >= 0, x + y <= (1-p)/2 },
/// whose maximum over C (attained at (a^2, a - a^2)) equals
/// holevo_upper_bound(p).
double tau(double x, double y, double p);

/// Analytic partial derivatives of tau (log-ratio forms), interior points.
double tau_partial_x(double x, double y, double p);
double tau_partial_y(double x, double y, double p);

struct TauMax {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

/// Exhaustive scan of tau over the triangular grid with `subdivisions` steps
/// of size (1-p)/2 / subdivisions along each axis, boundary included.
TauMax tau_grid_max(double p, int subdivisions = 1000);

/// Spectrum regrouped for a coalition of k dishonest players seated next to
/// the dealer: zeta0^± collapse the coalition index t at s = 0, zeta(s) sums
/// the coalition index at s >= 1.
struct ZetaProfile {
  int n_players = 0;
  int k_dishonest = 0;
  double zeta0_plus = 0.0;
  double zeta0_minus = 0.0;
  std::vector<double> zeta;  // zeta[s-1], s = 1 .. 2^(N-k-1)-1

  void validate(double tol = 1e-12) const;
};

/// Reindex lambda_j with j = t * 2^(N-k-1) + s and form the zeta sums.
/// Requires 1 <= k <= N-2.
ZetaProfile regroup_for_dishonest(const GhzSpectrum& spectrum, int k);

/// Exact Holevo information of the coalition (their qubits plus the
/// environment) about the dealer's outcome, chi(m_1 : m_2..m_{k+1} E),
/// evaluated on the zeta profile.
double holevo_dishonest_exact(const ZetaProfile& profile);

/// Devetak-Winter lower bound
///   tau~(p) = 1 + a^2 log a^2 + b^2 log b^2 + 2ab log(ab),
/// strictly increasing on [0.5, 1] with tau~(q) = 0.  Domain: p in [0.5, 1].
double dw_lower_bound(double p);

/// Spectrum of the Werner state p |Psi_0^+><Psi_0^+| + (1-p) I / 2^N.
GhzSpectrum werner_spectrum(int n_players, double p);

/// Dense Werner state, constructed directly from its definition.
MatrixXcd werner_density(int n_players, double p);

/// Devetak-Winter rate on the Werner state with m >= 2 trusted players:
///   1 - h((1-p)/2) - h(T_m) - (1-T_m) log(2^m - 1)
///     + h(T_{m-1}) + (1-T_{m-1}) log(2^{m-1} - 1),
/// T_j = (1 + (2^j - 1) p) / 2^j.  At m = 2 the trailing log term is
/// log(1) = 0, so no special casing is needed.
double werner_dw_rate(double p, int m);

/// Large-m limit of werner_dw_rate, evaluated at m = 40 (converges to the
/// limit like m 2^-m).
double werner_dw_rate_limit(double p);

/// The three-qubit state p P_0^+ + (1-p) P_2^+ + sqrt(p(1-p)) (cross terms):
/// a coherent superposition the twirl is needed for.
MatrixXcd rho_tilde_density(double p);

/// Average mutual information between the first and third player's outcomes
/// on rho_tilde under random X/Y measurements:
///   1/2 - 1/2 h(1/2 + sqrt(p(1-p))).
double rho_tilde_mutual_info(double p);

/// Spectrum of the three-qubit state p P_0^+ + (1-p)/2 (P_1^+ + P_1^-).
GhzSpectrum rho_bar_spectrum(double p);

/// Upper bound lambda0_plus + lambda0_minus + 2 lambda_2 on what a middle
/// player colluding with the environment can learn about the parity of the
/// other two players' outcomes (N = 3 only).
double sifting1_attack_bound(const GhzSpectrum& spectrum);

/// chi(m_A : m_B E) when the middle player of rho_bar measures in the
/// {mu|0> + nu|1>, nu|0> - mu|1>} basis, as a closed form in p and mu^2:
///   -p log p - (1-p)mu^2 log((1-p)mu^2) - (1-p)nu^2 log((1-p)nu^2)
///   - h((1 + sqrt(T))/2),  T = 1 - 4(1-p)(p + (1-3p) mu^2 nu^2).
/// Throws std::domain_error if T falls below -1e-12 (formula misuse).
double basis_attack_holevo(double p, double mu_sq);

/// Bundle of the per-spectrum key-rate quantities.  holevo_bound is NaN for
/// p <= q, dw_lower is NaN for p < 0.5 (outside their stated domains).
struct KeyRateReport {
  double p = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double mutual_info = 0.0;
  double holevo_exact = 0.0;
  double holevo_bound = 0.0;
  double dw_exact = 0.0;
  double dw_lower = 0.0;
};

KeyRateReport make_key_rate_report(const GhzSpectrum& spectrum);

/// Symmetric-Dirichlet draw over the 2^(N-1)+1 free weights.
GhzSpectrum random_spectrum(int n_players, RngStream& rng);

/// Dirichlet draw convexly mixed with the pure GHZ spectrum so that
/// delta() equals the target exactly.
GhzSpectrum random_spectrum_with_delta(int n_players, double target_delta,
                                       RngStream& rng);

}  // namespace qss
