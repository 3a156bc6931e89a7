#pragma once
// Two-qubit mixed-state concurrence (spin-flip construction). Used as an
// independent check of the decomposition bound for the two-spin models.

#include "symcon/core.hpp"

#include <Eigen/Eigenvalues>

namespace symcon {

namespace detail {

inline Matrix sigma_y_sigma_y() {
  Matrix yy = Matrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  return yy;
}

inline void require_two_qubit(const DensityMatrix& rho) {
  if (rho.n_sites() != 2) throw std::invalid_argument("concurrence_wootters: state is not two-qubit");
}

}  // namespace detail

// rho~ = (sy x sy) rho* (sy x sy)
inline Matrix spin_flip(const DensityMatrix& rho) {
  detail::require_two_qubit(rho);
  const Matrix yy = detail::sigma_y_sigma_y();
  return yy * rho.matrix().conjugate() * yy;
}

namespace detail {

inline double wootters_from(RealVector lam) {
  std::sort(lam.data(), lam.data() + lam.size(), std::greater<>());
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

}  // namespace detail

// Primary route. The eigenvalues of R = sqrt(sqrt(rho) rho~ sqrt(rho)) are the
// singular values of sqrt(rho) sqrt(rho~); taking those avoids a third square
// root, which costs several digits when rho is rank deficient.
inline double concurrence_wootters(const DensityMatrix& rho) {
  detail::require_two_qubit(rho);
  const Matrix s = psd_matrix_sqrt(rho.matrix());
  const Matrix st = psd_matrix_sqrt(spin_flip(rho));
  return detail::wootters_from(singular_values(s * st));
}

// Cross-check route: square roots of the eigenvalues of rho rho~ (general
// eigenproblem), real parts below 1e-12 clamped to zero.
inline double concurrence_wootters_product_route(const DensityMatrix& rho) {
  detail::require_two_qubit(rho);
  const Matrix prod = rho.matrix() * spin_flip(rho);
  Eigen::ComplexEigenSolver<Matrix> solver(prod, false);
  if (solver.info() != Eigen::Success) throw NumericalError("concurrence_wootters_product_route: eigensolver failed");
  RealVector lam(4);
  for (int i = 0; i < 4; ++i) {
    const double re = solver.eigenvalues()(i).real();
    lam(i) = re < 1e-12 ? 0.0 : std::sqrt(re);
  }
  return detail::wootters_from(lam);
}

}  // namespace symcon
