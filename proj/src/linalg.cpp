#include "qss/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <numeric>
#include <stdexcept>

namespace qss {
namespace {

Eigen::Index dims_product(const std::vector<Eigen::Index>& dims) {
  Eigen::Index p = 1;
  for (auto d : dims) {
    if (d <= 0) throw std::invalid_argument("subsystem dimension must be positive");
    p *= d;
  }
  return p;
}

}  // namespace

MatrixXcd partial_trace(const MatrixXcd& rho, const std::vector<Eigen::Index>& dims,
                        const std::vector<int>& keep) {
  const auto n = static_cast<int>(dims.size());
  if (rho.rows() != rho.cols() || rho.rows() != dims_product(dims))
    throw std::invalid_argument("partial_trace: dims do not factorize the matrix");
  std::vector<bool> kept(n, false);
  for (int s : keep) {
    if (s < 0 || s >= n) throw std::invalid_argument("partial_trace: bad subsystem index");
    if (kept[s]) throw std::invalid_argument("partial_trace: repeated subsystem index");
    kept[s] = true;
  }

  // Row-major strides of each factor in the flat index.
  std::vector<Eigen::Index> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  std::vector<int> kept_sys, traced_sys;
  for (int s = 0; s < n; ++s) (kept[s] ? kept_sys : traced_sys).push_back(s);

  Eigen::Index dim_keep = 1, dim_trace = 1;
  for (int s : kept_sys) dim_keep *= dims[s];
  for (int s : traced_sys) dim_trace *= dims[s];

  // Flat offsets of every kept / traced multi-index.
  auto offsets = [&](const std::vector<int>& sys, Eigen::Index count) {
    std::vector<Eigen::Index> off(count, 0);
    Eigen::Index reps = 1;
    for (auto it = sys.rbegin(); it != sys.rend(); ++it) {
      const Eigen::Index d = dims[*it];
      for (Eigen::Index i = 0; i < count; ++i)
        off[i] += ((i / reps) % d) * stride[*it];
      reps *= d;
    }
    return off;
  };
  const auto keep_off = offsets(kept_sys, dim_keep);
  const auto trace_off = offsets(traced_sys, dim_trace);

  MatrixXcd out = MatrixXcd::Zero(dim_keep, dim_keep);
  for (Eigen::Index r = 0; r < dim_keep; ++r)
    for (Eigen::Index c = 0; c < dim_keep; ++c) {
      Complex acc = 0.0;
      for (Eigen::Index t = 0; t < dim_trace; ++t)
        acc += rho(keep_off[r] + trace_off[t], keep_off[c] + trace_off[t]);
      out(r, c) = acc;
    }
  return out;
}

VectorXcd contract_bra(const VectorXcd& state, const std::vector<Eigen::Index>& dims,
                       int subsystem, const VectorXcd& bra_of) {
  const auto n = static_cast<int>(dims.size());
  if (subsystem < 0 || subsystem >= n)
    throw std::invalid_argument("contract_bra: bad subsystem index");
  if (state.size() != dims_product(dims))
    throw std::invalid_argument("contract_bra: dims do not factorize the state");
  if (bra_of.size() != dims[subsystem])
    throw std::invalid_argument("contract_bra: bra dimension mismatch");

  Eigen::Index right = 1;
  for (int s = subsystem + 1; s < n; ++s) right *= dims[s];
  const Eigen::Index d = dims[subsystem];
  const Eigen::Index left = state.size() / (right * d);

  VectorXcd out = VectorXcd::Zero(left * right);
  for (Eigen::Index l = 0; l < left; ++l)
    for (Eigen::Index x = 0; x < d; ++x) {
      const Complex coeff = std::conj(bra_of(x));
      if (coeff == Complex(0.0)) continue;
      const Eigen::Index base_in = (l * d + x) * right;
      const Eigen::Index base_out = l * right;
      for (Eigen::Index r = 0; r < right; ++r)
        out(base_out + r) += coeff * state(base_in + r);
    }
  return out;
}

VectorXd hermitian_eigenvalues(const MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigenvalues: eigensolver failed");
  return solver.eigenvalues();
}

double von_neumann_entropy(const MatrixXcd& rho) {
  const VectorXd mu = hermitian_eigenvalues(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < mu.size(); ++i) {
    double v = mu(i);
    if (v < -1e-10)
      throw std::domain_error("von_neumann_entropy: eigenvalue below -1e-10");
    if (v < 0.0) v = 0.0;
    s += neg_xlog2x(v);
  }
  return s;
}

bool is_hermitian(const MatrixXcd& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_density_matrix(const MatrixXcd& m, double tol) {
  if (!is_hermitian(m, 1e-12)) return false;
  if (std::abs(m.trace().real() - 1.0) > 1e-12 || std::abs(m.trace().imag()) > 1e-12)
    return false;
  return hermitian_eigenvalues(m).minCoeff() >= -tol;
}

bool is_unit_vector(const VectorXcd& v, double tol) {
  return std::abs(v.squaredNorm() - 1.0) <= tol;
}

}  // namespace qss
