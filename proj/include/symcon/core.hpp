#pragma once
// Multi-qubit pure and mixed states, partial traces, and the N-partite
// pure-state concurrence.
//
// Basis convention: basis index b, site k (0-based) is bit (n-1-k) of b, so
// site 0 is the most significant bit. Bit value 0 is the local |+> (spin up
// along the site's local z axis).

#include "symcon/linalg.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace symcon {

inline constexpr int kMaxSites = 10;

enum class Axis { x = 0, y = 1, z = 2 };
enum class Sign { plus = 0, minus = 1 };

struct LocalSpinState {
  Axis axis = Axis::z;
  Sign sign = Sign::plus;
  auto operator<=>(const LocalSpinState&) const = default;
};

inline char axis_char(Axis a) { return "xyz"[static_cast<int>(a)]; }

inline Eigen::Vector2cd local_ket(LocalSpinState s) {
  const double r = 1.0 / std::sqrt(2.0);
  const bool plus = s.sign == Sign::plus;
  switch (s.axis) {
    case Axis::z:
      return plus ? Eigen::Vector2cd(1.0, 0.0) : Eigen::Vector2cd(0.0, 1.0);
    case Axis::x:
      return Eigen::Vector2cd(r, plus ? r : -r);
    case Axis::y:
      return Eigen::Vector2cd(Complex(r, 0.0), plus ? Complex(0.0, r) : Complex(0.0, -r));
  }
  return {};
}

// "|++->_xzx"
inline std::string product_label(const std::vector<LocalSpinState>& sites) {
  std::string signs, axes;
  for (const auto& s : sites) {
    signs += s.sign == Sign::plus ? '+' : '-';
    axes += axis_char(s.axis);
  }
  return "|" + signs + ">_" + axes;
}

inline void check_sites(int n) {
  if (n < 1 || n > kMaxSites)
    throw std::invalid_argument("number of sites must be in [1, " + std::to_string(kMaxSites) + "]");
}

class StateVector {
 public:
  StateVector() = default;
  // Normalizes; throws on dimension mismatch or zero norm.
  StateVector(int n_sites, Vector amplitudes) : n_(n_sites), amps_(std::move(amplitudes)) {
    check_sites(n_);
    if (amps_.size() != (Eigen::Index{1} << n_))
      throw std::invalid_argument("StateVector: amplitude count is not 2^n");
    const double nrm = amps_.norm();
    if (!(nrm > 1e-300)) throw std::invalid_argument("StateVector: zero vector");
    amps_ /= nrm;
  }

  int n_sites() const { return n_; }
  Eigen::Index dim() const { return amps_.size(); }
  const Vector& amplitudes() const { return amps_; }
  Complex operator[](Eigen::Index i) const { return amps_(i); }

 private:
  int n_ = 0;
  Vector amps_;
};

class DensityMatrix {
 public:
  struct Unchecked {};

  DensityMatrix() = default;
  // Validates: Hermitian within 1e-12, trace 1 within 1e-12, PSD within -1e-10.
  DensityMatrix(int n_sites, Matrix m) : n_(n_sites), m_(std::move(m)) { validate(); }
  DensityMatrix(int n_sites, Matrix m, Unchecked) : n_(n_sites), m_(std::move(m)) {}

  static DensityMatrix pure(const StateVector& psi) {
    return {psi.n_sites(), psi.amplitudes() * psi.amplitudes().adjoint(), Unchecked{}};
  }
  static DensityMatrix maximally_mixed(int n_sites) {
    check_sites(n_sites);
    const Eigen::Index d = Eigen::Index{1} << n_sites;
    return {n_sites, Matrix::Identity(d, d) / static_cast<double>(d), Unchecked{}};
  }

  int n_sites() const { return n_; }
  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  void validate() const {
    check_sites(n_);
    const Eigen::Index d = Eigen::Index{1} << n_;
    if (m_.rows() != d || m_.cols() != d) throw std::invalid_argument("DensityMatrix: shape is not 2^n x 2^n");
    if (!is_hermitian(m_, 1e-12)) throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
    if (std::abs(m_.trace() - Complex(1.0, 0.0)) > 1e-12)
      throw std::invalid_argument("DensityMatrix: trace differs from 1 by more than 1e-12");
    if (hermitian_eigensystem(m_).values(0) < -1e-10)
      throw std::invalid_argument("DensityMatrix: eigenvalue below -1e-10");
  }

 private:
  int n_ = 0;
  Matrix m_;
};

// Ordered subset A of sites (0-based); 1 <= |A| <= n-1.
class Bipartition {
 public:
  Bipartition(int n_sites, std::vector<int> subset) : n_(n_sites), a_(std::move(subset)) {
    check_sites(n_);
    std::sort(a_.begin(), a_.end());
    if (std::adjacent_find(a_.begin(), a_.end()) != a_.end())
      throw std::invalid_argument("Bipartition: repeated site");
    if (a_.empty() || static_cast<int>(a_.size()) >= n_)
      throw std::invalid_argument("Bipartition: subset must be nonempty and proper");
    for (int s : a_)
      if (s < 0 || s >= n_) throw std::invalid_argument("Bipartition: site out of range");
  }
  static Bipartition from_mask(int n_sites, unsigned mask) {
    std::vector<int> s;
    for (int k = 0; k < n_sites; ++k)
      if (mask >> k & 1u) s.push_back(k);
    return {n_sites, s};
  }

  int n_sites() const { return n_; }
  const std::vector<int>& sites() const { return a_; }
  Bipartition complement() const {
    std::vector<int> c;
    for (int k = 0; k < n_; ++k)
      if (!std::binary_search(a_.begin(), a_.end(), k)) c.push_back(k);
    return {n_, c};
  }

 private:
  int n_;
  std::vector<int> a_;
};

namespace detail {

// index[a * n_rest + t] = full basis index for kept configuration a and traced t.
inline std::vector<Eigen::Index> split_index_table(int n, const std::vector<int>& kept) {
  std::vector<int> rest;
  for (int k = 0; k < n; ++k)
    if (!std::binary_search(kept.begin(), kept.end(), k)) rest.push_back(k);
  const Eigen::Index na = Eigen::Index{1} << kept.size(), nr = Eigen::Index{1} << rest.size();
  std::vector<Eigen::Index> table(static_cast<std::size_t>(na * nr));
  for (Eigen::Index a = 0; a < na; ++a)
    for (Eigen::Index t = 0; t < nr; ++t) {
      Eigen::Index full = 0;
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (a >> (kept.size() - 1 - j) & 1) full |= Eigen::Index{1} << (n - 1 - kept[j]);
      for (std::size_t j = 0; j < rest.size(); ++j)
        if (t >> (rest.size() - 1 - j) & 1) full |= Eigen::Index{1} << (n - 1 - rest[j]);
      table[static_cast<std::size_t>(a * nr + t)] = full;
    }
  return table;
}

}  // namespace detail

inline StateVector product_state(const std::vector<LocalSpinState>& sites) {
  const int n = static_cast<int>(sites.size());
  check_sites(n);
  Vector v(1);
  v(0) = 1.0;
  for (const auto& s : sites) {
    const Eigen::Vector2cd k = local_ket(s);
    Vector w(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      w(2 * i) = v(i) * k(0);
      w(2 * i + 1) = v(i) * k(1);
    }
    v = std::move(w);
  }
  return {n, v};
}

// Reduced state on the sites of `keep`, in their ascending order.
inline DensityMatrix partial_trace(const DensityMatrix& rho, const Bipartition& keep) {
  if (keep.n_sites() != rho.n_sites()) throw std::invalid_argument("partial_trace: site count mismatch");
  const int n = rho.n_sites();
  const auto table = detail::split_index_table(n, keep.sites());
  const Eigen::Index na = Eigen::Index{1} << keep.sites().size();
  const Eigen::Index nr = Eigen::Index{1} << (n - static_cast<int>(keep.sites().size()));
  Matrix r = Matrix::Zero(na, na);
  for (Eigen::Index a = 0; a < na; ++a)
    for (Eigen::Index b = 0; b < na; ++b) {
      Complex s = 0.0;
      for (Eigen::Index t = 0; t < nr; ++t)
        s += rho(table[static_cast<std::size_t>(a * nr + t)], table[static_cast<std::size_t>(b * nr + t)]);
      r(a, b) = s;
    }
  return {static_cast<int>(keep.sites().size()), r, DensityMatrix::Unchecked{}};
}

inline double purity(const DensityMatrix& rho) { return rho.matrix().squaredNorm(); }

namespace detail {

// 1 - Tr(rho_A^2) for a pure state, as 2 * sum of |2x2 minors|^2 of the
// reshaped amplitude matrix M (rho_A = M M^H). Exact zeros for product states,
// where the direct 1 - purity form leaves sqrt(eps)-sized residue.
inline double pure_linear_entropy(const StateVector& psi, const std::vector<int>& kept) {
  const int n = psi.n_sites();
  const auto table = split_index_table(n, kept);
  const Eigen::Index na = Eigen::Index{1} << kept.size();
  const Eigen::Index nr = psi.dim() / na;
  Matrix m(na, nr);
  for (Eigen::Index a = 0; a < na; ++a)
    for (Eigen::Index t = 0; t < nr; ++t) m(a, t) = psi[table[static_cast<std::size_t>(a * nr + t)]];
  if (na > nr) m.adjointInPlace();
  double s = 0.0;
  for (Eigen::Index a = 0; a < m.rows(); ++a)
    for (Eigen::Index b = a + 1; b < m.rows(); ++b)
      for (Eigen::Index t = 0; t < m.cols(); ++t)
        for (Eigen::Index u = t + 1; u < m.cols(); ++u) s += std::norm(m(a, t) * m(b, u) - m(a, u) * m(b, t));
  return 2.0 * s;
}

}  // namespace detail

// C_N = 2^(1-N/2) sqrt(sum_A (1 - Tr rho_A^2)), A over all nonempty proper
// subsets.
inline double concurrence_pure(const StateVector& psi) {
  const int n = psi.n_sites();
  if (n < 2) throw std::invalid_argument("concurrence_pure: need at least two sites");
  const unsigned full = (1u << n) - 1u;
  double radicand = 0.0;
  for (unsigned mask = 1; mask < full; ++mask) {
    std::vector<int> kept;
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1u) kept.push_back(k);
    radicand += detail::pure_linear_entropy(psi, kept);
  }
  return std::pow(2.0, 1.0 - n / 2.0) * std::sqrt(radicand);
}

// 2|ad - bc| for a two-qubit pure state.
inline double concurrence_bipartite_pure(const StateVector& psi) {
  if (psi.n_sites() != 2) throw std::invalid_argument("concurrence_bipartite_pure: state is not two-qubit");
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

}  // namespace symcon
