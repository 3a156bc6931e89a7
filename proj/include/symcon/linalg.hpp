#pragma once
// Dense complex linear algebra used throughout: a deterministic cyclic Jacobi
// eigensolver for Hermitian matrices and the helpers built on it.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace symcon {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Raised when an iterative or tolerance-guarded computation cannot produce a
// trustworthy answer (non-convergence, significantly negative radicand, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EigenSystem {
  RealVector values;  // ascending
  Matrix vectors;     // columns, orthonormal
};

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

namespace detail {

// Multiply column j by the phase that makes its first largest-magnitude
// component real and positive.
inline void fix_phase(Matrix& v, Eigen::Index j) {
  double best = 0.0;
  for (Eigen::Index i = 0; i < v.rows(); ++i) best = std::max(best, std::abs(v(i, j)));
  if (best == 0.0) return;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const double a = std::abs(v(i, j));
    if (a >= best - 1e-12) {
      v.col(j) *= std::conj(v(i, j)) / a;
      v(i, j) = Complex(std::abs(v(i, j)), 0.0);
      return;
    }
  }
}

// Modified Gram-Schmidt on columns [first, last) in index order.
inline void orthonormalize(Matrix& v, Eigen::Index first, Eigen::Index last) {
  for (Eigen::Index j = first; j < last; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index k = first; k < j; ++k) v.col(j) -= v.col(k).dot(v.col(j)) * v.col(k);
    const double nrm = v.col(j).norm();
    if (nrm < 1e-300) throw NumericalError("orthonormalize: degenerate column");
    v.col(j) /= nrm;
  }
}

}  // namespace detail

// Cyclic complex Jacobi. Eigenvalues ascending; every eigenvector column has
// its first largest-magnitude component real positive; within degenerate
// clusters (|dλ| <= 1e-10 max(1,|M|)) columns are re-orthonormalized in index
// order. Deterministic for identical input.
inline EigenSystem hermitian_eigensystem(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eigensystem: matrix not square");
  const Eigen::Index n = m.rows();
  const double scale = std::max(1.0, max_abs(m));
  if (!is_hermitian(m, 1e-10 * scale))
    throw std::invalid_argument("hermitian_eigensystem: matrix not Hermitian within 1e-10");

  Matrix a = (m + m.adjoint()) * 0.5;
  Matrix v = Matrix::Identity(n, n);
  const double frob2 = std::max(a.squaredNorm(), 1e-300);

  bool converged = n <= 1;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off <= 1e-32 * frob2) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double b = std::abs(apq);
        if (b <= 1e-300) continue;
        const Complex ph = apq / b;
        const Complex phc = std::conj(ph);
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * b);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G restricted to (p,q): [[c, s], [-s conj(ph), c conj(ph)]]
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * phc * akq;
          a(k, q) = s * akp + c * phc * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * ph * aqk;
          a(q, k) = s * apk + c * ph * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * phc * vkq;
          v(k, q) = s * vkp + c * phc * vkq;
        }
      }
    }
  }
  if (!converged) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off > 1e-28 * frob2) throw NumericalError("hermitian_eigensystem: Jacobi did not converge");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem es;
  es.values.resize(n);
  es.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    es.values(k) = a(order[k], order[k]).real();
    es.vectors.col(k) = v.col(order[k]);
  }

  const double tol = 1e-10 * scale;
  for (Eigen::Index start = 0; start < n;) {
    Eigen::Index end = start + 1;
    while (end < n && es.values(end) - es.values(end - 1) <= tol) ++end;
    if (end - start > 1) detail::orthonormalize(es.vectors, start, end);
    for (Eigen::Index j = start; j < end; ++j) detail::fix_phase(es.vectors, j);
    start = end;
  }
  return es;
}

// Principal square root of a positive semidefinite matrix. Eigenvalues below
// -1e-8 are an error; tiny negative ones are clamped to zero.
inline Matrix psd_matrix_sqrt(const Matrix& m) {
  const EigenSystem es = hermitian_eigensystem(m);
  RealVector r(es.values.size());
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (es.values(i) < -1e-8)
      throw NumericalError("psd_matrix_sqrt: eigenvalue " + std::to_string(es.values(i)) + " below -1e-8");
    r(i) = std::sqrt(std::max(0.0, es.values(i)));
  }
  return es.vectors * r.asDiagonal() * es.vectors.adjoint();
}

// Singular values (descending) from the Hermitian dilation [[0, X], [X^H, 0]].
inline RealVector singular_values(const Matrix& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("singular_values: matrix not square");
  const Eigen::Index n = x.rows();
  Matrix d = Matrix::Zero(2 * n, 2 * n);
  d.topRightCorner(n, n) = x;
  d.bottomLeftCorner(n, n) = x.adjoint();
  const EigenSystem es = hermitian_eigensystem(d);
  RealVector s(n);
  for (Eigen::Index i = 0; i < n; ++i) s(i) = std::max(0.0, es.values(2 * n - 1 - i));
  return s;
}

}  // namespace symcon
