#pragma once
// Symmetry-guided concurrence bound: re-weight a thermal density over its
// multiplet densities and the separable catalog so that the weighted
// eigenstate concurrence is minimal.
//
//   min  sum_i p'_i C_i
//   s.t. sum_i p'_i rho_i + sum_j q_j eta_j = rho,   p', q >= 0
//
// Equality is imposed on invariant-basis coordinates; the identity lies in the
// invariant span, so the trace (and with it sum p' + sum q = 1) is implied.

#include "symcon/catalog.hpp"

namespace symcon {

struct DecompositionProblem {
  RealVector target;
  std::vector<RealVector> multiplet_coords;
  std::vector<double> concurrences;
  std::vector<double> weights;  // thermal p_i
  std::vector<RealVector> catalog_coords;

  double upper_bound() const {
    double s = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) s += weights[i] * concurrences[i];
    return s;
  }

  void check() const {
    const std::size_t k = multiplet_coords.size();
    if (concurrences.size() != k || weights.size() != k)
      throw std::invalid_argument("DecompositionProblem: multiplet arrays differ in length");
    RealVector s = RealVector::Zero(target.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (multiplet_coords[i].size() != target.size()) throw std::invalid_argument("DecompositionProblem: coordinate size mismatch");
      s += weights[i] * multiplet_coords[i];
    }
    for (const auto& c : catalog_coords)
      if (c.size() != target.size()) throw std::invalid_argument("DecompositionProblem: coordinate size mismatch");
    if ((s - target).norm() > 1e-10)
      throw std::invalid_argument("DecompositionProblem: target is not the weighted sum of multiplet coordinates");
  }
};

enum class SolveStatus { Optimal, InfeasibleNumerics };

struct DecompositionResult {
  std::vector<double> p_prime;
  std::vector<double> q;
  double c_s = 0.0;
  double residual = 0.0;
  SolveStatus status = SolveStatus::InfeasibleNumerics;
};

inline DecompositionProblem make_problem(const ThermalEnsemble& ens, const std::vector<CatalogEntry>& catalog) {
  DecompositionProblem p;
  p.target = ens.params;
  for (std::size_t i = 0; i < ens.multiplets.size(); ++i) {
    p.multiplet_coords.push_back(ens.multiplets[i].params);
    p.concurrences.push_back(ens.multiplets[i].concurrence);
    p.weights.push_back(ens.weights[i]);
  }
  for (const auto& e : catalog) p.catalog_coords.push_back(e.coords);
  return p;
}

namespace detail {

inline RealMatrix constraint_matrix(const DecompositionProblem& pb) {
  const std::size_t k = pb.multiplet_coords.size(), m = pb.catalog_coords.size();
  RealMatrix a(pb.target.size(), static_cast<Eigen::Index>(k + m));
  for (std::size_t i = 0; i < k; ++i) a.col(static_cast<Eigen::Index>(i)) = pb.multiplet_coords[i];
  for (std::size_t j = 0; j < m; ++j) a.col(static_cast<Eigen::Index>(k + j)) = pb.catalog_coords[j];
  return a;
}

}  // namespace detail

// Vertex optimum of the LP. Ties in the objective are broken on the optimal
// face by maximizing sum(q), then q_1, q_2, ... in turn, so the reported
// decomposition is reproducible.
inline DecompositionResult solve_cs(const DecompositionProblem& pb) {
  pb.check();
  const std::size_t k = pb.multiplet_coords.size(), m = pb.catalog_coords.size();
  const RealMatrix a = detail::constraint_matrix(pb);
  Simplex lp(a, pb.target);

  DecompositionResult res;
  if (lp.find_feasible() != LpStatus::Optimal) return res;

  const auto stage = [&](const RealVector& c) {
    if (lp.minimize(c) != LpStatus::Optimal) return false;
    lp.restrict_to_optimal_face(c);
    return true;
  };
  RealVector c = RealVector::Zero(a.cols());
  for (std::size_t i = 0; i < k; ++i) c(static_cast<Eigen::Index>(i)) = pb.concurrences[i];
  if (!stage(c)) return res;
  if (m > 0) {
    c.setZero();
    c.tail(static_cast<Eigen::Index>(m)).setConstant(-1.0);
    if (!stage(c)) return res;
    for (std::size_t j = 0; j < m; ++j) {
      c.setZero();
      c(static_cast<Eigen::Index>(k + j)) = -1.0;
      if (!stage(c)) return res;
    }
  }

  const RealVector x = lp.solution();
  res.p_prime.assign(x.data(), x.data() + k);
  res.q.assign(x.data() + k, x.data() + k + m);
  for (std::size_t i = 0; i < k; ++i) res.c_s += res.p_prime[i] * pb.concurrences[i];
  res.residual = (a * x - pb.target).norm();
  res.status = res.residual <= 1e-9 ? SolveStatus::Optimal : SolveStatus::InfeasibleNumerics;
  return res;
}

struct VerificationReport {
  double residual = 0.0;
  double bound_violation = 0.0;  // largest excursion of a weight outside [0,1]
  double weight_sum_error = 0.0;
  double objective = 0.0;
  double upper_bound = 0.0;
  double gap = 0.0;  // upper_bound - objective
  bool ok = false;
};

// `trace_coords` maps invariant coordinates to the trace; for an orthonormal
// basis B_k this is (Tr B_k)_k. Without it the weight-sum check is skipped.
inline VerificationReport verify(const DecompositionResult& r, const DecompositionProblem& pb,
                                 const RealVector& trace_coords = {}) {
  VerificationReport v;
  const std::size_t k = pb.multiplet_coords.size();
  RealVector x(static_cast<Eigen::Index>(r.p_prime.size() + r.q.size()));
  for (std::size_t i = 0; i < r.p_prime.size(); ++i) x(static_cast<Eigen::Index>(i)) = r.p_prime[i];
  for (std::size_t j = 0; j < r.q.size(); ++j) x(static_cast<Eigen::Index>(k + j)) = r.q[j];
  const RealMatrix a = detail::constraint_matrix(pb);
  v.residual = (a * x - pb.target).norm();
  for (Eigen::Index i = 0; i < x.size(); ++i) v.bound_violation = std::max({v.bound_violation, -x(i), x(i) - 1.0});
  if (trace_coords.size() == pb.target.size()) {
    double s = 0.0;
    for (std::size_t i = 0; i < k; ++i) s += r.p_prime[i] * trace_coords.dot(pb.multiplet_coords[i]);
    for (std::size_t j = 0; j < r.q.size(); ++j) s += r.q[j] * trace_coords.dot(pb.catalog_coords[j]);
    v.weight_sum_error = std::abs(x.sum() - 1.0);
    v.weight_sum_error = std::max(v.weight_sum_error, std::abs(s - 1.0));
  }
  for (std::size_t i = 0; i < k; ++i) v.objective += r.p_prime[i] * pb.concurrences[i];
  v.upper_bound = pb.upper_bound();
  v.gap = v.upper_bound - v.objective;
  v.ok = r.status == SolveStatus::Optimal && v.residual <= 1e-9 && v.bound_violation <= 1e-10 &&
         v.weight_sum_error <= 1e-9 && v.objective >= -1e-10 && v.gap >= -1e-10;
  return v;
}

// Trace functional in invariant coordinates.
inline RealVector trace_coordinates(const InvariantBasis& basis) {
  RealVector t(static_cast<Eigen::Index>(basis.dim()));
  for (std::size_t k = 0; k < basis.dim(); ++k) t(static_cast<Eigen::Index>(k)) = basis.elements[k].trace().real();
  return t;
}

// Everything computed for one (couplings, T) point.
struct PointResult {
  ThermalEnsemble ensemble;
  DecompositionProblem problem;
  DecompositionResult result;
};

inline PointResult evaluate_point(const ModelSpec& spec, double temperature) {
  PointResult p;
  p.ensemble = thermal_ensemble(spec, temperature);
  p.problem = make_problem(p.ensemble, model_catalog(spec.kind));
  p.result = solve_cs(p.problem);
  return p;
}

inline double compute_cs(const ModelSpec& spec, double temperature) {
  const PointResult p = evaluate_point(spec, temperature);
  if (p.result.status != SolveStatus::Optimal) throw NumericalError("compute_cs: decomposition infeasible");
  return p.result.c_s;
}

}  // namespace symcon
