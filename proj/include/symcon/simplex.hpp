#pragma once
// Dense two-phase simplex for  min c.x  s.t.  A x = b, x >= 0.
// Bland's rule throughout (no cycling); problems here are tiny (<= ~20 rows,
// a few hundred columns), so clarity wins over speed.

#include "symcon/linalg.hpp"

namespace symcon {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    case LpStatus::IterationLimit: return "iteration-limit";
  }
  return "?";
}

struct SimplexTolerances {
  double pivot = 1e-11;       // smallest usable pivot element
  double optimality = 1e-11;  // reduced cost considered negative below -optimality
  double feasibility = 1e-9;  // phase-1 objective accepted as zero
  int max_iterations = 100000;
};

class Simplex {
 public:
  Simplex(const RealMatrix& a, const RealVector& b, SimplexTolerances tol = {})
      : m_(a.rows()), n_(a.cols()), tol_(tol), t_(RealMatrix::Zero(a.rows(), a.cols() + a.rows() + 1)) {
    if (b.size() != m_) throw std::invalid_argument("Simplex: rhs size mismatch");
    for (Eigen::Index i = 0; i < m_; ++i) {
      const double sgn = b(i) < 0 ? -1.0 : 1.0;
      t_.row(i).head(n_) = sgn * a.row(i);
      t_(i, n_ + i) = 1.0;
      t_(i, n_ + m_) = sgn * b(i);
    }
    basis_.resize(static_cast<std::size_t>(m_));
    for (Eigen::Index i = 0; i < m_; ++i) basis_[static_cast<std::size_t>(i)] = n_ + i;
    allowed_.assign(static_cast<std::size_t>(n_ + m_), true);
  }

  // Phase 1: find a basic feasible point. Afterwards artificial columns never
  // re-enter.
  LpStatus find_feasible() {
    RealVector c = RealVector::Zero(n_ + m_);
    c.tail(m_).setOnes();
    const LpStatus s = iterate(c);
    if (s != LpStatus::Optimal) return s;
    phase1_objective_ = 0.0;
    for (Eigen::Index i = 0; i < m_; ++i)
      if (is_artificial(basis_[static_cast<std::size_t>(i)])) phase1_objective_ += t_(i, n_ + m_);
    if (phase1_objective_ > tol_.feasibility) return LpStatus::Infeasible;
    // Drive zero-level artificials out of the basis where possible; rows where
    // that is impossible are redundant and stay inert.
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[static_cast<std::size_t>(i)])) continue;
      t_(i, n_ + m_) = 0.0;
      for (Eigen::Index j = 0; j < n_; ++j)
        if (std::abs(t_(i, j)) > tol_.pivot) {
          pivot(i, j);
          break;
        }
    }
    for (Eigen::Index j = n_; j < n_ + m_; ++j) allowed_[static_cast<std::size_t>(j)] = false;
    feasible_ = true;
    return LpStatus::Optimal;
  }

  // Minimize c.x from the current feasible basis over the allowed columns.
  LpStatus minimize(const RealVector& c) {
    if (!feasible_) throw std::logic_error("Simplex::minimize before find_feasible");
    if (c.size() != n_) throw std::invalid_argument("Simplex: cost size mismatch");
    RealVector full = RealVector::Zero(n_ + m_);
    full.head(n_) = c;
    return iterate(full);
  }

  // After an optimal minimize(c): forbid every nonbasic column with strictly
  // positive reduced cost, which confines later objectives to the optimal face.
  void restrict_to_optimal_face(const RealVector& c) {
    RealVector full = RealVector::Zero(n_ + m_);
    full.head(n_) = c;
    const RealVector r = reduced_costs(full);
    for (Eigen::Index j = 0; j < n_; ++j)
      if (r(j) > tol_.optimality) allowed_[static_cast<std::size_t>(j)] = false;
  }

  RealVector solution() const {
    RealVector x = RealVector::Zero(n_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Eigen::Index bj = basis_[static_cast<std::size_t>(i)];
      if (bj < n_) x(bj) = t_(i, n_ + m_);
    }
    return x;
  }

  double phase1_objective() const { return phase1_objective_; }
  int iterations() const { return iterations_; }

 private:
  bool is_artificial(Eigen::Index j) const { return j >= n_; }

  RealVector reduced_costs(const RealVector& c) const {
    RealVector cb(m_);
    for (Eigen::Index i = 0; i < m_; ++i) cb(i) = c(basis_[static_cast<std::size_t>(i)]);
    return c - t_.leftCols(n_ + m_).transpose() * cb;
  }

  void pivot(Eigen::Index r, Eigen::Index s) {
    t_.row(r) /= t_(r, s);
    for (Eigen::Index i = 0; i < m_; ++i)
      if (i != r && t_(i, s) != 0.0) t_.row(i) -= t_(i, s) * t_.row(r);
    t_.col(s).setZero();
    t_(r, s) = 1.0;
    basis_[static_cast<std::size_t>(r)] = s;
  }

  LpStatus iterate(const RealVector& c) {
    for (;;) {
      if (++iterations_ > tol_.max_iterations) return LpStatus::IterationLimit;
      const RealVector r = reduced_costs(c);
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < n_ + m_; ++j)
        if (allowed_[static_cast<std::size_t>(j)] && r(j) < -tol_.optimality) {
          enter = j;
          break;
        }
      if (enter < 0) return LpStatus::Optimal;
      Eigen::Index leave = -1;
      double best = 0.0;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (t_(i, enter) <= tol_.pivot) continue;
        const double ratio = std::max(0.0, t_(i, n_ + m_)) / t_(i, enter);
        if (leave < 0 || ratio < best - 1e-14 ||
            (ratio <= best + 1e-14 && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  Eigen::Index m_, n_;
  SimplexTolerances tol_;
  RealMatrix t_;  // [A | I | b]
  std::vector<Eigen::Index> basis_;
  std::vector<bool> allowed_;
  bool feasible_ = false;
  double phase1_objective_ = 0.0;
  int iterations_ = 0;
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RealVector x;
  double objective = 0.0;
};

// Convenience: one-shot min c.x, Ax = b, x >= 0.
inline LpResult solve_lp(const RealMatrix& a, const RealVector& b, const RealVector& c, SimplexTolerances tol = {}) {
  Simplex s(a, b, tol);
  LpResult r;
  r.status = s.find_feasible();
  if (r.status != LpStatus::Optimal) return r;
  r.status = s.minimize(c);
  r.x = s.solution();
  r.objective = c.dot(r.x);
  return r;
}

// Feasibility of A x = b, x >= 0 with |Ax - b| <= tol.
inline bool lp_feasible(const RealMatrix& a, const RealVector& b, double tol = 1e-9) {
  if (a.cols() == 0) return b.norm() <= tol;
  SimplexTolerances t;
  t.feasibility = tol;
  Simplex s(a, b, t);
  if (s.find_feasible() != LpStatus::Optimal) return false;
  return (a * s.solution() - b).norm() <= tol;
}

}  // namespace symcon
