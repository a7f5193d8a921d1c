#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <vector>

namespace qss {

using Complex = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

/// -x log2 x with the 0 log 0 = 0 convention.
inline double neg_xlog2x(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

/// Kronecker product, written against expressions so mixed dense types work.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                            a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Trace out every subsystem not listed in `keep`.
///
/// `dims` declares the tensor factorization of the state (row-major order,
/// first factor slowest).  `keep` holds indices into `dims`, strictly
/// increasing order of the retained factors is preserved.
MatrixXcd partial_trace(const MatrixXcd& rho, const std::vector<Eigen::Index>& dims,
                        const std::vector<int>& keep);

/// Contract one subsystem of a pure state with a bra, returning the
/// (unnormalized) state on the remaining factors.
VectorXcd contract_bra(const VectorXcd& state, const std::vector<Eigen::Index>& dims,
                       int subsystem, const VectorXcd& bra_of);

/// Eigenvalues of a Hermitian matrix, ascending.
VectorXd hermitian_eigenvalues(const MatrixXcd& m);

/// Von Neumann entropy in bits.  Eigenvalues in [-1e-10, 0] are treated as
/// exact zeros; anything more negative is rejected as a non-state.
double von_neumann_entropy(const MatrixXcd& rho);

/// Diagnostics for the density-matrix contract.
bool is_hermitian(const MatrixXcd& m, double tol = 1e-12);
bool is_density_matrix(const MatrixXcd& m, double tol = 1e-10);
bool is_unit_vector(const VectorXcd& v, double tol = 1e-12);

}  // namespace qss
