#pragma once
// Symmetry groups of spin clusters: elements, closure, action on states and
// densities, twirling and the invariant-subspace parameterization.

#include "symcon/core.hpp"

#include <Eigen/Geometry>

#include <deque>
#include <optional>

namespace symcon {

using Rotation3 = Eigen::Matrix3d;
using Frame = Eigen::Matrix3d;  // columns: local x, y, z axes in global coordinates

// Site i is carried to site perm[i]. Acting on psi: conjugate (if
// antiunitary), apply local[i] on each site i, permute, multiply by phase.
struct GroupElement {
  std::vector<int> perm;
  std::vector<Eigen::Matrix2cd> local;
  bool antiunitary = false;
  Complex phase{1.0, 0.0};

  int n_sites() const { return static_cast<int>(perm.size()); }

  static GroupElement identity(int n) {
    GroupElement g;
    g.perm.resize(static_cast<std::size_t>(n));
    std::iota(g.perm.begin(), g.perm.end(), 0);
    g.local.assign(static_cast<std::size_t>(n), Eigen::Matrix2cd::Identity());
    return g;
  }

  // Full 2^n x 2^n operator U, so that g(psi) = U psi (or U conj(psi)).
  Matrix operator_matrix() const {
    const int n = n_sites();
    Matrix l(1, 1);
    l(0, 0) = 1.0;
    for (int k = 0; k < n; ++k) {
      Matrix next(l.rows() * 2, l.cols() * 2);
      for (Eigen::Index i = 0; i < l.rows(); ++i)
        for (Eigen::Index j = 0; j < l.cols(); ++j)
          next.block<2, 2>(2 * i, 2 * j) = l(i, j) * local[static_cast<std::size_t>(k)];
      l = std::move(next);
    }
    const Eigen::Index d = Eigen::Index{1} << n;
    Matrix u(d, d);
    for (Eigen::Index b = 0; b < d; ++b) {
      Eigen::Index t = 0;
      for (int i = 0; i < n; ++i)
        if (b >> (n - 1 - i) & 1) t |= Eigen::Index{1} << (n - 1 - perm[static_cast<std::size_t>(i)]);
      u.row(t) = l.row(b);
    }
    return phase * u;
  }
};

// (g o h)(psi) = g(h(psi))
inline GroupElement compose(const GroupElement& g, const GroupElement& h) {
  if (g.n_sites() != h.n_sites()) throw std::invalid_argument("compose: site count mismatch");
  GroupElement r;
  const auto n = static_cast<std::size_t>(g.n_sites());
  r.perm.resize(n);
  r.local.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto hp = static_cast<std::size_t>(h.perm[i]);
    r.perm[i] = g.perm[hp];
    r.local[i] = g.local[hp] * (g.antiunitary ? Eigen::Matrix2cd(h.local[i].conjugate()) : h.local[i]);
  }
  r.antiunitary = g.antiunitary != h.antiunitary;
  r.phase = g.phase * (g.antiunitary ? std::conj(h.phase) : h.phase);
  return r;
}

inline StateVector apply(const GroupElement& g, const StateVector& psi) {
  if (g.n_sites() != psi.n_sites()) throw std::invalid_argument("apply: site count mismatch");
  const Vector v = g.antiunitary ? Vector(psi.amplitudes().conjugate()) : psi.amplitudes();
  return {psi.n_sites(), g.operator_matrix() * v};
}

namespace detail {

inline Matrix conjugate_by(const Matrix& u, bool antiunitary, const Matrix& m) {
  return antiunitary ? Matrix(u * m.conjugate() * u.adjoint()) : Matrix(u * m * u.adjoint());
}

}  // namespace detail

inline DensityMatrix apply_density(const GroupElement& g, const DensityMatrix& rho) {
  if (g.n_sites() != rho.n_sites()) throw std::invalid_argument("apply_density: site count mismatch");
  return {rho.n_sites(), detail::conjugate_by(g.operator_matrix(), g.antiunitary, rho.matrix()),
          DensityMatrix::Unchecked{}};
}

// --- building elements from geometry ------------------------------------

inline Rotation3 rotation(const Eigen::Vector3d& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

// SO(3) -> SU(2): U = w I - i (x sx + y sy + z sz) for the unit quaternion of R.
// Eigen's matrix-to-quaternion conversion is the branch-selecting (Shepperd)
// one, stable near rotation angle pi.
inline Eigen::Matrix2cd su2_lift(const Rotation3& r) {
  Eigen::Quaterniond q(r);
  q.normalize();
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd u;
  u << q.w() - i * q.z(), -i * q.x() - q.y(), -i * q.x() + q.y(), q.w() + i * q.z();
  return u;
}

// Element induced by a global orthogonal map g (proper or improper). Sites at
// `positions` are permuted accordingly (none given: sites stay put); spins are
// axial vectors, so they transform with det(g) g.
inline GroupElement geometric_element(const Rotation3& g, const std::vector<Frame>& frames,
                                      const std::vector<Eigen::Vector3d>& positions = {}) {
  const int n = static_cast<int>(frames.size());
  GroupElement e = GroupElement::identity(n);
  if (!positions.empty()) {
    if (static_cast<int>(positions.size()) != n) throw std::invalid_argument("geometric_element: positions/frames mismatch");
    for (int i = 0; i < n; ++i) {
      const Eigen::Vector3d p = g * positions[static_cast<std::size_t>(i)];
      int hit = -1;
      for (int j = 0; j < n; ++j)
        if ((positions[static_cast<std::size_t>(j)] - p).norm() < 1e-9) hit = j;
      if (hit < 0) throw std::invalid_argument("geometric_element: map does not preserve the site set");
      e.perm[static_cast<std::size_t>(i)] = hit;
    }
  }
  const Rotation3 r = g.determinant() * g;
  for (int i = 0; i < n; ++i) {
    const auto& fi = frames[static_cast<std::size_t>(i)];
    const auto& fj = frames[static_cast<std::size_t>(e.perm[static_cast<std::size_t>(i)])];
    e.local[static_cast<std::size_t>(i)] = su2_lift(fj.transpose() * r * fi);
  }
  return e;
}

// Time reversal: conjugate, then [[0,-1],[1,0]] on every site.
inline GroupElement time_reversal(int n) {
  GroupElement e = GroupElement::identity(n);
  Eigen::Matrix2cd k;
  k << 0.0, -1.0, 1.0, 0.0;
  e.local.assign(static_cast<std::size_t>(n), k);
  e.antiunitary = true;
  return e;
}

inline GroupElement site_permutation(std::vector<int> perm) {
  GroupElement e = GroupElement::identity(static_cast<int>(perm.size()));
  e.perm = std::move(perm);
  return e;
}

// exp(-i theta S_z) on every site (local z).
inline GroupElement z_rotation(int n, double theta) {
  GroupElement e = GroupElement::identity(n);
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Zero();
  u(0, 0) = std::polar(1.0, -theta / 2);
  u(1, 1) = std::polar(1.0, theta / 2);
  e.local.assign(static_cast<std::size_t>(n), u);
  return e;
}

// Twice the total local S_z of basis index b.
inline int twice_sz(int n, Eigen::Index b) {
  int ones = 0;
  for (int k = 0; k < n; ++k) ones += static_cast<int>(b >> k & 1);
  return n - 2 * ones;
}

// --- groups ---------------------------------------------------------------

class SymmetryGroup {
 public:
  // Closure of the generators under composition, deduplicated up to phase.
  static SymmetryGroup generate(int n_sites, const std::vector<GroupElement>& generators, bool has_u1_z) {
    check_sites(n_sites);
    SymmetryGroup grp;
    grp.n_ = n_sites;
    grp.u1_ = has_u1_z;
    grp.add(GroupElement::identity(n_sites));
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const std::size_t at = queue.front();
      queue.pop_front();
      for (const auto& gen : generators) {
        if (gen.n_sites() != n_sites) throw std::invalid_argument("SymmetryGroup: generator site count mismatch");
        GroupElement c = compose(gen, grp.elements_[at]);
        if (!grp.find(c)) {
          grp.add(std::move(c));
          queue.push_back(grp.elements_.size() - 1);
          if (grp.elements_.size() > 4096) throw NumericalError("SymmetryGroup: closure exceeded 4096 elements");
        }
      }
    }
    return grp;
  }

  int n_sites() const { return n_; }
  bool has_u1_z() const { return u1_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const Matrix& operator_of(std::size_t k) const { return ops_[k]; }

  // Index of the element equal to g up to a global phase.
  std::optional<std::size_t> find(const GroupElement& g) const {
    const Matrix u = g.operator_matrix();
    const double d = static_cast<double>(u.rows());
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      if (elements_[k].antiunitary != g.antiunitary || elements_[k].perm != g.perm) continue;
      if (std::abs((ops_[k].adjoint() * u).trace()) >= d * (1.0 - 1e-10)) return k;
    }
    return std::nullopt;
  }

  // Group average of a Hermitian matrix (plus the exact U(1)_z sector mask).
  Matrix twirl_matrix(const Matrix& m) const {
    Matrix acc = Matrix::Zero(m.rows(), m.cols());
    for (std::size_t k = 0; k < elements_.size(); ++k)
      acc += detail::conjugate_by(ops_[k], elements_[k].antiunitary, m);
    acc /= static_cast<double>(elements_.size());
    if (u1_)
      for (Eigen::Index i = 0; i < acc.rows(); ++i)
        for (Eigen::Index j = 0; j < acc.cols(); ++j)
          if (twice_sz(n_, i) != twice_sz(n_, j)) acc(i, j) = 0.0;
    return acc;
  }

 private:
  void add(GroupElement g) {
    ops_.push_back(g.operator_matrix());
    elements_.push_back(std::move(g));
  }

  int n_ = 0;
  bool u1_ = false;
  std::vector<GroupElement> elements_;
  std::vector<Matrix> ops_;
};

inline DensityMatrix twirl(const SymmetryGroup& g, const DensityMatrix& rho) {
  if (g.n_sites() != rho.n_sites()) throw std::invalid_argument("twirl: site count mismatch");
  return {rho.n_sites(), g.twirl_matrix(rho.matrix()), DensityMatrix::Unchecked{}};
}

// Orthonormal (trace inner product) basis of the group-invariant Hermitian
// matrices.
struct InvariantBasis {
  int n_sites = 0;
  std::vector<Matrix> elements;

  std::size_t dim() const { return elements.size(); }

  RealVector coordinates(const Matrix& m) const {
    RealVector c(static_cast<Eigen::Index>(elements.size()));
    for (std::size_t k = 0; k < elements.size(); ++k)
      c(static_cast<Eigen::Index>(k)) = (elements[k].adjoint() * m).trace().real();
    return c;
  }
  Matrix reconstruct(const RealVector& c) const {
    if (c.size() != static_cast<Eigen::Index>(elements.size()))
      throw std::invalid_argument("InvariantBasis: coordinate count mismatch");
    const Eigen::Index d = Eigen::Index{1} << n_sites;
    Matrix m = Matrix::Zero(d, d);
    for (std::size_t k = 0; k < elements.size(); ++k) m += c(static_cast<Eigen::Index>(k)) * elements[k];
    return m;
  }
};

inline InvariantBasis invariant_basis(const SymmetryGroup& g, int n_sites) {
  if (g.n_sites() != n_sites) throw std::invalid_argument("invariant_basis: site count mismatch");
  const Eigen::Index d = Eigen::Index{1} << n_sites;
  InvariantBasis basis;
  basis.n_sites = n_sites;
  const auto consider = [&](Matrix e) {
    Matrix t = g.twirl_matrix(e);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis.elements) t -= (b.adjoint() * t).trace().real() * b;
    const double nrm = t.norm();
    if (nrm > 1e-9) basis.elements.push_back(t / nrm);
  };
  const double r = 1.0 / std::sqrt(2.0);
  for (Eigen::Index j = 0; j < d; ++j) {
    Matrix e = Matrix::Zero(d, d);
    e(j, j) = 1.0;
    consider(e);
  }
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = j + 1; k < d; ++k) {
      Matrix s = Matrix::Zero(d, d), a = Matrix::Zero(d, d);
      s(j, k) = s(k, j) = r;
      a(j, k) = Complex(0.0, r);
      a(k, j) = Complex(0.0, -r);
      consider(s);
      consider(a);
    }
  return basis;
}

inline RealVector to_params(const SymmetryGroup& g, const InvariantBasis& basis, const DensityMatrix& rho) {
  const double dev = (g.twirl_matrix(rho.matrix()) - rho.matrix()).norm();
  if (dev > 1e-9) throw std::invalid_argument("to_params: density is not group invariant (deviation " + std::to_string(dev) + ")");
  return basis.coordinates(rho.matrix());
}

inline DensityMatrix from_params(const InvariantBasis& basis, const RealVector& coords) {
  return {basis.n_sites, basis.reconstruct(coords), DensityMatrix::Unchecked{}};
}

}  // namespace symcon
